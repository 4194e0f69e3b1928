"""Instance-level checks of the delta-Jordan-Lie axioms on structure-constant algebras.

Every check is a brute-force scan over basis tuples. That is exact because all
products involved are multilinear.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Union

from .algebra import AlgebraTable, Element, binary_product, parity_of
from .report import AxiomReport, AxiomResult

Tree = Union[int, tuple]


def _check_delta(delta: int) -> int:
    if delta not in (1, -1):
        raise ValueError(f"delta must be +1 or -1, got {delta!r}")
    return delta


def _names(alg: AlgebraTable, idx) -> list[str]:
    return [alg.generators[i].name for i in idx]


# -- associativity -----------------------------------------------------------


def check_delta_assoc(alg: AlgebraTable, delta: int) -> AxiomReport:
    """(xy)z == delta * x(yz) over all basis triples."""
    _check_delta(delta)
    B = alg.basis()
    witnesses = []
    for i, j, k in product(range(alg.dim), repeat=3):
        lhs = (B[i] * B[j]) * B[k]
        rhs = (B[i] * (B[j] * B[k])).scale(delta)
        if lhs != rhs:
            witnesses.append({"args": _names(alg, (i, j, k)), "lhs": lhs, "rhs": rhs})
    return AxiomReport(alg.name, {"delta_assoc": AxiomResult.from_witnesses(witnesses)}, {"delta": delta})


ASSOCIATIVE, ANTIASSOCIATIVE, BOTH, NEITHER = "associative", "antiassociative", "both", "neither"


def classify_assoc(alg: AlgebraTable) -> AxiomReport:
    plus = check_delta_assoc(alg, 1)["delta_assoc"]
    minus = check_delta_assoc(alg, -1)["delta_assoc"]
    kind = {
        (True, True): BOTH,
        (True, False): ASSOCIATIVE,
        (False, True): ANTIASSOCIATIVE,
        (False, False): NEITHER,
    }[(plus.passed, minus.passed)]
    return AxiomReport(alg.name, {"associative": plus, "antiassociative": minus}, {"class": kind})


# -- graded bracket ----------------------------------------------------------


def graded_bracket(x: Element, y: Element, delta: int) -> Element:
    """<x,y> = xy - delta (-1)^(p(x)p(y)) yx, extended bilinearly over the basis."""
    alg = x.algebra
    x._check(y)
    out = alg.zero()
    for i, xi in x.coeffs:
        for j, yj in y.coeffs:
            s = -1 if alg.generators[i].parity and alg.generators[j].parity else 1
            term = alg.entry(i, j) - alg.entry(j, i).scale(delta * s)
            out = out + term.scale(xi * yj)
    return out


def check_graded_bracket_axioms(alg: AlgebraTable, delta: int) -> AxiomReport:
    """Parity closure, graded antisymmetry and both graded Jacobi forms."""
    _check_delta(delta)
    B = alg.basis()
    p = alg.parities
    n = alg.dim

    def br(x, y):
        return graded_bracket(x, y, delta)

    def sgn(i, j):
        return -1 if p[i] and p[j] else 1

    closure, antisym = [], []
    for i, j in product(range(n), repeat=2):
        v = br(B[i], B[j])
        want = "even" if (p[i] + p[j]) % 2 == 0 else "odd"
        got = parity_of(v)
        if got not in ("zero", want):
            closure.append({"args": _names(alg, (i, j)), "value": v, "parity": got})
        other = br(B[j], B[i]).scale(-delta * sgn(i, j))
        if v != other:
            antisym.append({"args": _names(alg, (i, j)), "lhs": v, "rhs": other})

    left, right = [], []
    disagree = 0
    for i, j, k in product(range(n), repeat=3):
        x, y, z = B[i], B[j], B[k]
        jl = (
            br(br(x, y), z).scale(sgn(i, k))
            + br(br(y, z), x).scale(sgn(j, i))
            + br(br(z, x), y).scale(sgn(k, j))
        )
        jr = (
            br(x, br(y, z)).scale(sgn(i, k))
            + br(y, br(z, x)).scale(sgn(j, i))
            + br(z, br(x, y)).scale(sgn(k, j))
        )
        args = _names(alg, (i, j, k))
        if jl:
            left.append({"args": args, "value": jl})
        if jr:
            right.append({"args": args, "value": jr})
        if jl.is_zero() != jr.is_zero():
            disagree += 1
    return AxiomReport(
        alg.name,
        {
            "parity_closure": AxiomResult.from_witnesses(closure),
            "graded_antisymmetry": AxiomResult.from_witnesses(antisym),
            "jacobi_outer": AxiomResult.from_witnesses(left),
            "jacobi_inner": AxiomResult.from_witnesses(right),
        },
        {"delta": delta, "jacobi_forms_disagree_on": disagree},
    )


# -- long products -----------------------------------------------------------


@lru_cache(maxsize=None)
def bracketings(n: int) -> tuple[Tree, ...]:
    """All full binary bracketings of positions 0..n-1 (Catalan many)."""
    return tuple(_brackets(0, n))


def _brackets(lo: int, hi: int) -> list[Tree]:
    if hi - lo == 1:
        return [lo]
    out = []
    for mid in range(lo + 1, hi):
        for left in _brackets(lo, mid):
            for right in _brackets(mid, hi):
                out.append((left, right))
    return out


def nested(n: int, side: str) -> Tree:
    t: Tree = 0 if side == "left" else n - 1
    if side == "left":
        for i in range(1, n):
            t = (t, i)
    else:
        for i in range(n - 2, -1, -1):
            t = (i, t)
    return t


def eval_tree(tree: Tree, factors: list[Element]) -> Element:
    if isinstance(tree, int):
        return factors[tree]
    return binary_product(eval_tree(tree[0], factors), eval_tree(tree[1], factors))


def tree_str(tree: Tree, names: list[str]) -> str:
    if isinstance(tree, int):
        return names[tree]
    return f"({tree_str(tree[0], names)}{tree_str(tree[1], names)})"


def _vanish_scan(alg: AlgebraTable, k: int, trees, stop_early: bool) -> list[dict]:
    B = alg.basis()
    out = []
    for idx in product(range(alg.dim), repeat=k):
        factors = [B[i] for i in idx]
        for t in trees:
            v = eval_tree(t, factors)
            if v:
                out.append({"args": _names(alg, idx), "bracketing": tree_str(t, _names(alg, idx)), "value": v})
                if stop_early:
                    return out
    return out


def check_length4_vanish(alg: AlgebraTable) -> AxiomReport:
    """Every product of four basis elements, under all five bracketings, is zero."""
    ws = _vanish_scan(alg, 4, bracketings(4), stop_early=False)
    return AxiomReport(alg.name, {"length4_vanish": AxiomResult.from_witnesses(ws)}, {"nonzero_products": len(ws)})


def check_nilpotency(alg: AlgebraTable, max_k: int = 6) -> int | None:
    """Smallest k <= max_k with every k-fold product zero, else None.

    k <= 4 scans all bracketings; longer products only left- and right-nested.
    """
    if max_k < 2:
        raise ValueError("max_k must be at least 2")
    for k in range(2, max_k + 1):
        trees = bracketings(k) if k <= 4 else (nested(k, "left"), nested(k, "right"))
        if not _vanish_scan(alg, k, trees, stop_early=True):
            return k
    return None


# -- idempotents and identities ---------------------------------------------


def check_idempotents_and_units(alg: AlgebraTable) -> AxiomReport:
    """Search +-basis elements for idempotents and basis elements for identities."""
    B = alg.basis()
    idem = []
    for i, x in enumerate(B):
        sq = x * x
        if sq == x:
            idem.append({"element": alg.generators[i].name, "square": sq})
        elif sq == -x:
            idem.append({"element": "-" + alg.generators[i].name, "square": -sq})

    left = [g.name for e, g in zip(B, alg.generators) if all(e * y == y for y in B)]
    right = [g.name for e, g in zip(B, alg.generators) if all(y * e == y for y in B)]
    both = sorted(set(left) & set(right))
    return AxiomReport(
        alg.name,
        {
            "no_idempotents": AxiomResult.from_witnesses(idem),
            "no_two_sided_identity": AxiomResult.from_witnesses([{"identity": e} for e in both]),
        },
        {
            "search_scope": "idempotents among +-basis elements; identities among basis elements",
            "idempotents": sorted(w["element"] for w in idem),
            "left_identities": left,
            "right_identities": right,
            "two_sided_identities": both,
        },
    )
