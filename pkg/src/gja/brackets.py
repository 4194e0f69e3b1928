"""Parity-dispatched brackets on ``A`` and the eight super-Jacobi identities.

Each identity is stored as a bracket tree and evaluated two ways:

* inside-out ("fito"): inner brackets are computed with the binary table,
  then the outer ones;
* outside-in ("foti"): both layers are expanded formally into length-3 words,
  which are then totally contracted by the word engine.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Union

from .algebra import A, AlgebraTable, Element, binary_product, parity_bit, parity_of
from .axioms import check_idempotents_and_units, check_nilpotency, classify_assoc
from .errors import InhomogeneousOperand
from .report import AxiomReport, AxiomResult
from .words import Superposition, Word, contract, contract_superposition, contract_traced


class BracketKind(enum.Enum):
    COMMUTATOR = "commutator"
    ANTICOMMUTATOR = "anticommutator"

    @property
    def sign(self) -> int:
        return -1 if self is BracketKind.COMMUTATOR else 1

    @property
    def delims(self) -> tuple[str, str]:
        return ("[", "]") if self is BracketKind.COMMUTATOR else ("{", "}")


def bracket_kind(px: int, py: int) -> BracketKind:
    """Commutator for two even operands, anticommutator otherwise."""
    return BracketKind.COMMUTATOR if px == 0 and py == 0 else BracketKind.ANTICOMMUTATOR


def bracket(x: Element, y: Element, kind: BracketKind | None = None) -> Element:
    """``xy - yx`` or ``xy + yx``; the kind follows operand parities unless forced."""
    x._check(y)
    if kind is None:
        for v in (x, y):
            if parity_of(v) == "inhomogeneous":
                raise InhomogeneousOperand(f"bracket operand {v} mixes even and odd parts")
        if x.is_zero() or y.is_zero():
            return x.algebra.zero()
        kind = bracket_kind(parity_bit(x), parity_bit(y))
    return binary_product(x, y) + binary_product(y, x).scale(kind.sign)


def bracket_parity_check(alg: AlgebraTable) -> AxiomReport:
    """Parity of <g_i, g_j> must be p_i + p_j (mod 2), or the bracket vanishes."""
    B = alg.basis()
    ws = []
    for i, j in product(range(alg.dim), repeat=2):
        v = bracket(B[i], B[j])
        want = "even" if (alg.generators[i].parity + alg.generators[j].parity) % 2 == 0 else "odd"
        if parity_of(v) not in ("zero", want):
            ws.append({"args": [alg.generators[i].name, alg.generators[j].name], "value": v})
    return AxiomReport(alg.name, {"bracket_parity": AxiomResult.from_witnesses(ws)})


# -- bracket trees -----------------------------------------------------------


@dataclass(frozen=True)
class Br:
    kind: BracketKind
    left: "Node"
    right: "Node"

    def __str__(self):
        o, c = self.kind.delims
        return f"{o}{self.left},{self.right}{c}"


Node = Union[str, Br]


def com(x: Node, y: Node) -> Br:
    return Br(BracketKind.COMMUTATOR, x, y)


def anti(x: Node, y: Node) -> Br:
    return Br(BracketKind.ANTICOMMUTATOR, x, y)


def node_parity(n: Node, alg: AlgebraTable = A) -> int:
    if isinstance(n, str):
        return alg.generators[alg.index(n)].parity
    return (node_parity(n.left, alg) + node_parity(n.right, alg)) % 2


def derived(n: Node, alg: AlgebraTable = A) -> Node:
    """Same tree with every bracket kind re-derived from operand parities."""
    if isinstance(n, str):
        return n
    kind = bracket_kind(node_parity(n.left, alg), node_parity(n.right, alg))
    return Br(kind, derived(n.left, alg), derived(n.right, alg))


def mixed_to_commutator(n: Node, alg: AlgebraTable = A) -> Node:
    """Replace every even-odd anticommutator by a commutator."""
    if isinstance(n, str):
        return n
    left, right = mixed_to_commutator(n.left, alg), mixed_to_commutator(n.right, alg)
    kind = n.kind
    if node_parity(n.left, alg) != node_parity(n.right, alg):
        kind = BracketKind.COMMUTATOR
    return Br(kind, left, right)


def cyclic_terms(x: str, y: str, z: str, form: str) -> tuple[Br, Br, Br]:
    """The three cyclic terms, with parity-derived kinds.

    ``outer``: <<x,y>,z> + <<y,z>,x> + <<z,x>,y>;
    ``inner``: <x,<y,z>> + <y,<z,x>> + <z,<x,y>>.
    """
    def b(u: Node, v: Node) -> Br:
        return Br(bracket_kind(node_parity(u), node_parity(v)), u, v)

    if form == "outer":
        return (b(b(x, y), z), b(b(y, z), x), b(b(z, x), y))
    if form == "inner":
        return (b(x, b(y, z)), b(y, b(z, x)), b(z, b(x, y)))
    raise ValueError(form)


@dataclass(frozen=True)
class JacobiInstance:
    """One super-Jacobi expression over ``A`` with its printed bracket kinds."""

    name: str
    triple: tuple[str, str, str]
    form: str  # "outer" (bracket first) or "inner" (generator first)
    terms: tuple[Br, Br, Br]
    check_kinds: bool = field(default=True, compare=False)

    def __post_init__(self):
        if self.check_kinds:
            expected = cyclic_terms(*self.triple, self.form)
            if self.terms != expected:
                raise ValueError(f"{self.name}: printed terms {self} disagree with parity-derived {expected}")

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


def _inst(name, triple, form, terms):
    return JacobiInstance(name, tuple(triple), form, tuple(terms))


JACOBI_INSTANCES: tuple[JacobiInstance, ...] = (
    _inst("outer-1", "dca", "outer", [com(anti("d", "c"), "a"), anti(anti("c", "a"), "d"), anti(anti("a", "d"), "c")]),
    _inst("outer-2", "dcb", "outer", [com(anti("d", "c"), "b"), anti(anti("c", "b"), "d"), anti(anti("b", "d"), "c")]),
    _inst("outer-3", "abd", "outer", [anti(com("a", "b"), "d"), anti(anti("b", "d"), "a"), anti(anti("d", "a"), "b")]),
    _inst("outer-4", "abc", "outer", [anti(com("a", "b"), "c"), anti(anti("b", "c"), "a"), anti(anti("c", "a"), "b")]),
    _inst("inner-1", "dca", "inner", [anti("d", anti("c", "a")), anti("c", anti("a", "d")), com("a", anti("d", "c"))]),
    _inst("inner-2", "dcb", "inner", [anti("d", anti("c", "b")), anti("c", anti("b", "d")), com("b", anti("d", "c"))]),
    _inst("inner-3", "abd", "inner", [anti("a", anti("b", "d")), anti("b", anti("d", "a")), anti("d", com("a", "b"))]),
    _inst("inner-4", "abc", "inner", [anti("a", anti("b", "c")), anti("b", anti("c", "a")), anti("c", com("a", "b"))]),
)

INSTANCES_BY_NAME = {inst.name: inst for inst in JACOBI_INSTANCES}


def _fito_node(n: Node, alg: AlgebraTable, scale: int) -> Element:
    if isinstance(n, str):
        return alg.gen(n).scale(scale)
    left, right = _fito_node(n.left, alg, scale), _fito_node(n.right, alg, scale)
    for v in (left, right):
        if parity_of(v) == "inhomogeneous":
            raise InhomogeneousOperand(f"intermediate {v} in {n} is not parity-homogeneous")
    return bracket(left, right, n.kind)


def jacobi_fito(inst: JacobiInstance, scale: int = 1) -> Element:
    """Inner brackets first via the binary table, then the outer ones."""
    total = A.zero()
    for t in inst.terms:
        total = total + _fito_node(t, A, scale)
    return total


def expand(n: Node) -> Superposition:
    """Formal expansion of a bracket tree into words; nothing is contracted."""
    if isinstance(n, str):
        return Superposition([Word(1, (A.index(n),))])
    left, right = expand(n.left), expand(n.right)

    def concat(u: Superposition, v: Superposition) -> Superposition:
        return Superposition(Word(p.coeff * q.coeff, p.letters + q.letters) for p in u for q in v)

    return concat(left, right) + concat(right, left).scale(n.kind.sign)


def foti_expansion(inst: JacobiInstance) -> Superposition:
    total = Superposition()
    for t in inst.terms:
        total = total + expand(t)
    return total


def jacobi_foti(inst: JacobiInstance) -> Element:
    """Expand both bracket layers into length-3 words, then contract each word."""
    return contract_superposition(foti_expansion(inst))


def commutator_variant(inst: JacobiInstance) -> JacobiInstance:
    terms = tuple(mixed_to_commutator(t) for t in inst.terms)
    return JacobiInstance(inst.name + "/commutator", inst.triple, inst.form, terms, check_kinds=False)


def jacobi_commutator_variant(scale: int = 1) -> Element:
    """First outer-form identity with even-odd anticommutators swapped for commutators."""
    return jacobi_fito(commutator_variant(INSTANCES_BY_NAME["outer-1"]), scale)


def prefactored_jacobi(inst: JacobiInstance) -> Element:
    """The same identity with graded external signs (-1)^(xz), (-1)^(yx), (-1)^(zy)."""
    x, y, z = (node_parity(g) for g in inst.triple)
    signs = ((-1) ** (x * z), (-1) ** (y * x), (-1) ** (z * y))
    total = A.zero()
    for s, t in zip(signs, inst.terms):
        total = total + _fito_node(t, A, 1).scale(s)
    return total


# -- structural comparison ---------------------------------------------------


# Published value for the outside-in evaluation of inner-3.
PRINTED_FOTI_INNER3 = A.element({"c": 2})


@dataclass
class Finding:
    item: str
    claim: str
    holds: bool
    expected: bool
    witness: Any

    @property
    def as_expected(self) -> bool:
        return self.holds == self.expected


@dataclass
class ComparisonReport:
    findings: list[Finding]

    def __getitem__(self, item: str) -> Finding:
        for f in self.findings:
            if f.item == item:
                return f
        raise KeyError(item)

    @property
    def ok(self) -> bool:
        return all(f.as_expected for f in self.findings)


def compare_structures() -> ComparisonReport:
    a, b, c, d = A.basis()
    out: list[Finding] = []

    out.append(Finding(
        "i.grading",
        "A is graded as span{a,b} + span{c,d}",
        A.parities == [0, 0, 1, 1],
        True,
        {g.name: g.parity for g in A.generators},
    ))

    cls = classify_assoc(A)
    out.append(Finding(
        "ii.associativity",
        "A is neither associative nor antiassociative",
        cls.summary["class"] == "neither",
        True,
        {"args": ["a", "b", "c"], "a(bc)": a * (b * c), "(ab)c": (a * b) * c, "-(ab)c": -((a * b) * c)},
    ))

    kinds = {}
    for x, y in product(A.names, repeat=2):
        kinds[f"{x}{y}"] = bracket_kind(node_parity(x), node_parity(y)).value
    pc = bracket_parity_check(A)["bracket_parity"]
    homogeneous = all(kinds[k] == "commutator" for k in ("aa", "ab", "ba", "bb"))
    odd = all(kinds[k] == "anticommutator" for k in ("cc", "cd", "dc", "dd"))
    mixed = all(kinds[x + y] == "anticommutator" for x in "ab" for y in "cd")
    out.append(Finding(
        "iii.brackets",
        "even pairs commute, odd and mixed pairs anticommute, and brackets close by parity",
        homogeneous and odd and mixed and pc.passed,
        True,
        {"kinds": kinds, "parity_violations": pc.witnesses},
    ))

    fito = {inst.name: jacobi_fito(inst) for inst in JACOBI_INSTANCES}
    graded = {inst.name: prefactored_jacobi(inst) for inst in JACOBI_INSTANCES}
    out.append(Finding(
        "iv.ungraded_jacobi",
        "the eight identities hold without external grade signs",
        all(v.is_zero() for v in fito.values()),
        True,
        {"with_grade_signs": {k: v for k, v in graded.items() if v}},
    ))

    foti = {inst.name: jacobi_foti(inst) for inst in JACOBI_INSTANCES}
    engine = foti["inner-3"]
    out.append(Finding(
        "v.fito_vs_foti",
        "inside-out contraction satisfies the identities, outside-in does not",
        all(v.is_zero() for v in fito.values()) and any(v for v in foti.values()),
        True,
        {
            "foti_nonzero": {k: v for k, v in foti.items() if v},
            "inner-3": {"engine": engine, "printed": PRINTED_FOTI_INNER3, "agree": engine == PRINTED_FOTI_INNER3},
            "dab": contract(Word.of("dab")),
        },
    ))

    val, steps = contract_traced(Word.of("cbcb"))
    nest = ((c * b) * c) * b
    out.append(Finding(
        "vi.alpha.length4",
        "words of length four do not vanish identically",
        bool(val) and bool(nest),
        True,
        {"word": "cbcb", "contracted": val, "((cb)c)b": nest},
    ))

    units = check_idempotents_and_units(A).summary
    out.append(Finding(
        "vi.beta.right_identity",
        "a is a right identity but not a left identity; no two-sided identity",
        units["right_identities"] == ["a"] and not units["left_identities"] and not units["two_sided_identities"],
        True,
        {"right": units["right_identities"], "left": units["left_identities"], "a*c": a * c},
    ))
    out.append(Finding(
        "vi.beta.no_idempotents",
        "A has no idempotents",
        not units["idempotents"],
        False,  # a*a = a in the multiplication table
        {"idempotents": units["idempotents"], "a*a": a * a},
    ))

    out.append(Finding(
        "vi.gamma.not_nilpotent",
        "A is not nilpotent of small length",
        check_nilpotency(A, 6) is None,
        True,
        {"max_k": 6, "a^k": "a"},
    ))

    variant = jacobi_commutator_variant()
    out.append(Finding(
        "vii.commutator_variant",
        "with commutators for even-odd pairs the first identity fails",
        bool(variant),
        True,
        {"expression": str(commutator_variant(INSTANCES_BY_NAME["outer-1"])), "value": variant},
    ))
    return ComparisonReport(out)
