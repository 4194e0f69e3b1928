"""Left/right regular (self-)representations and related diagnostics.

Column vectors, matrices act on the left: column j of L(x) holds the
coordinates of x*g_j, and column j of R(x) those of g_j*x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import A, C, H, AlgebraTable, Element, format_scalar
from .errors import UndefinedSignature
from .report import AxiomReport, AxiomResult


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Fraction]]):
        self.rows = tuple(tuple(Fraction(v) for v in r) for r in rows)

    @classmethod
    def zeros(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Fraction]]) -> "Matrix":
        return cls(list(zip(*cols)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            cols = list(zip(*other.rows))
            return Matrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        return [sum(a * b for a, b in zip(r, other)) for r in self.rows]

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, q) -> "Matrix":
        return Matrix([[q * a for a in r] for r in self.rows])

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.rows for v in r)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(v) for v in r] for r in self.rows]

    def __str__(self):
        cells = self.to_json()
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)


def left_matrix(x: Element) -> Matrix:
    return Matrix.from_columns([(x * g).vector() for g in x.algebra.basis()])


def right_matrix(x: Element) -> Matrix:
    return Matrix.from_columns([(g * x).vector() for g in x.algebra.basis()])


def commutator(m: Matrix, n: Matrix) -> Matrix:
    return m @ n - n @ m


def anticommutator(m: Matrix, n: Matrix) -> Matrix:
    return m @ n + n @ m


def check_LR_commutation(alg: AlgebraTable) -> AxiomReport:
    """Whether L(x) and R(y) commute, or anticommute, for every basis pair."""
    B = alg.basis()
    com_w, anti_w = [], []
    for i, j in product(range(alg.dim), repeat=2):
        L, R = left_matrix(B[i]), right_matrix(B[j])
        args = [alg.generators[i].name, alg.generators[j].name]
        cm = commutator(L, R)
        if not cm.is_zero():
            com_w.append({"L": args[0], "R": args[1], "commutator": cm.to_json()})
        am = anticommutator(L, R)
        if not am.is_zero():
            anti_w.append({"L": args[0], "R": args[1], "anticommutator": am.to_json()})
    return AxiomReport(
        alg.name,
        {"LR_commute": AxiomResult.from_witnesses(com_w), "LR_anticommute": AxiomResult.from_witnesses(anti_w)},
    )


def check_left_homomorphism(alg: AlgebraTable) -> AxiomReport:
    """L(x*y) == L(x) L(y) for every basis pair."""
    B = alg.basis()
    ws = []
    for i, j in product(range(alg.dim), repeat=2):
        lhs = left_matrix(B[i] * B[j])
        rhs = left_matrix(B[i]) @ left_matrix(B[j])
        if lhs != rhs:
            ws.append({"args": [alg.generators[i].name, alg.generators[j].name], "L(xy)": lhs.to_json(), "L(x)L(y)": rhs.to_json()})
    return AxiomReport(alg.name, {"left_homomorphism": AxiomResult.from_witnesses(ws)})


def check_right_antihomomorphism(alg: AlgebraTable) -> AxiomReport:
    """R(x*y) == R(y) R(x) for every basis pair."""
    B = alg.basis()
    ws = []
    for i, j in product(range(alg.dim), repeat=2):
        lhs = right_matrix(B[i] * B[j])
        rhs = right_matrix(B[j]) @ right_matrix(B[i])
        if lhs != rhs:
            ws.append({"args": [alg.generators[i].name, alg.generators[j].name], "R(xy)": lhs.to_json(), "R(y)R(x)": rhs.to_json()})
    return AxiomReport(alg.name, {"right_antihomomorphism": AxiomResult.from_witnesses(ws)})


@dataclass(frozen=True)
class SignatureProfile:
    signs: tuple[int, ...]
    trace: int


def signature(alg: AlgebraTable) -> SignatureProfile:
    """Signs of the diagonal self-products g*g = +-g_0."""
    unit = alg.gen(0)
    signs = []
    for g in alg.basis():
        sq = g * g
        if sq == unit:
            signs.append(1)
        elif sq == -unit:
            signs.append(-1)
        else:
            raise UndefinedSignature(f"{g}*{g} = {sq} is not +-{unit}")
    return SignatureProfile(tuple(signs), sum(signs))


def check_even_subalgebra_iso_C(alg: AlgebraTable = A) -> AxiomReport:
    """The map a -> 1, b -> i carries the even products of ``alg`` onto the complex table."""
    to_c = {0: 0, 1: 1}  # basis index in alg -> basis index in C
    ws = []
    for i, j in product(range(2), repeat=2):
        got = alg.entry(i, j)
        if any(k not in to_c for k, _ in got):
            ws.append({"args": [alg.generators[i].name, alg.generators[j].name], "value": got, "image": None})
            continue
        image = C.element({to_c[k]: q for k, q in got})
        want = C.entry(to_c[i], to_c[j])
        if image != want:
            ws.append({"args": [alg.generators[i].name, alg.generators[j].name], "value": got, "image": image, "expected": want})
    return AxiomReport(alg.name, {"even_iso_C": AxiomResult.from_witnesses(ws)})


def table_diff(first: AlgebraTable = A, second: AlgebraTable = H) -> list[dict]:
    """Cells where the tables differ under the positional map g_i -> h_i."""
    if first.dim != second.dim:
        raise ValueError("tables must have equal dimension")
    out = []
    for i, j in product(range(first.dim), repeat=2):
        u = first.entry(i, j)
        v = second.entry(i, j)
        if u.coeffs != v.coeffs:
            out.append({
                "row": first.generators[i].name,
                "col": first.generators[j].name,
                first.name: str(u),
                second.name: str(v),
            })
    return out
