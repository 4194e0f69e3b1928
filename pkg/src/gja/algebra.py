"""Structure-constant algebras with exact rational coefficients.

An :class:`AlgebraTable` stores, for every ordered pair of basis generators,
the product ``g_i * g_j`` as a list of ``(coefficient, index)`` terms.
:class:`Element` is an immutable sparse linear combination over one table.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Mapping, Sequence, Union

from .errors import (
    BadIndex,
    BadParity,
    DimensionMismatch,
    MixedAlgebra,
    ParseError,
)

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]
Term = tuple[Fraction, int]

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def to_scalar(value: ScalarLike) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if not m:
            raise ParseError(f"not a rational: {value!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den) if den else 1)
    raise ParseError(f"not a rational: {value!r}")


def format_scalar(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Generator:
    name: str
    index: int
    parity: int

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise BadParity(f"parity of {self.name!r} must be 0 or 1, got {self.parity!r}")


@dataclass(frozen=True, eq=False)
class AlgebraTable:
    """Finite-dimensional algebra given by its multiplication table.

    ``table[i][j]`` holds the terms of ``g_i * g_j``; rows are left factors.
    Equality is identity: two separately loaded copies are different algebras.
    """

    name: str
    generators: tuple[Generator, ...]
    table: tuple[tuple[tuple[Term, ...], ...], ...]
    _by_name: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.generators)
        if n == 0:
            raise DimensionMismatch("an algebra needs at least one generator")
        for i, g in enumerate(self.generators):
            if g.index != i:
                raise BadIndex(f"generator {g.name!r} has index {g.index}, expected {i}")
        names = [g.name for g in self.generators]
        if len(set(names)) != n:
            raise ParseError(f"duplicate generator names in {names}")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise DimensionMismatch(f"table must be {n}x{n}")
        for row in self.table:
            for terms in row:
                for c, k in terms:
                    if not isinstance(k, int) or not 0 <= k < n:
                        raise BadIndex(f"basis index {k!r} out of range 0..{n - 1}")
        object.__setattr__(self, "_by_name", {g.name: g for g in self.generators})

    @property
    def dim(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    @property
    def parities(self) -> list[int]:
        return [g.parity for g in self.generators]

    def index(self, name: str) -> int:
        try:
            return self._by_name[name].index
        except KeyError:
            raise KeyError(f"{self.name} has no generator {name!r}") from None

    def gen(self, name_or_index: Union[str, int]) -> "Element":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        return Element(self, {i: Fraction(1)})

    def basis(self) -> list["Element"]:
        return [self.gen(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, {})

    def element(self, coeffs: Mapping[Union[str, int], ScalarLike]) -> "Element":
        out: dict[int, Fraction] = {}
        for key, c in coeffs.items():
            i = key if isinstance(key, int) else self.index(key)
            out[i] = out.get(i, Fraction(0)) + to_scalar(c)
        return Element(self, out)

    def entry(self, i: int, j: int) -> "Element":
        """The product of basis generators ``g_i * g_j`` as an Element."""
        return _entry(self, i, j)

    def __repr__(self):
        return f"AlgebraTable({self.name!r}, dim={self.dim})"


@lru_cache(maxsize=None)
def _entry(alg: AlgebraTable, i: int, j: int) -> "Element":
    out: dict[int, Fraction] = {}
    for c, k in alg.table[i][j]:
        out[k] = out.get(k, Fraction(0)) + c
    return Element(alg, out)


class Element:
    """Exact sparse linear combination of basis generators.

    ``x * y`` is the bilinear table product when both sides are Elements and
    scalar multiplication otherwise.
    """

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: AlgebraTable, coeffs: Mapping[int, ScalarLike] = ()):
        items = dict(coeffs)
        canon = []
        for i in sorted(items):
            if not 0 <= i < algebra.dim:
                raise BadIndex(f"basis index {i} out of range for {algebra.name}")
            c = to_scalar(items[i])
            if c != 0:
                canon.append((i, c))
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coeffs", tuple(canon))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    def __getitem__(self, i: Union[int, str]) -> Fraction:
        if isinstance(i, str):
            i = self.algebra.index(i)
        for k, c in self.coeffs:
            if k == i:
                return c
        return Fraction(0)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.coeffs)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def vector(self) -> list[Fraction]:
        v = [Fraction(0)] * self.algebra.dim
        for i, c in self.coeffs:
            v[i] = c
        return v

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other: "Element"):
        if other.algebra is not self.algebra:
            raise MixedAlgebra(f"cannot combine elements of {self.algebra.name} and {other.algebra.name}")

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra is other.algebra and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((id(self.algebra), self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        out = self.as_dict()
        for i, c in other.coeffs:
            out[i] = out.get(i, Fraction(0)) + c
        return Element(self.algebra, out)

    def __neg__(self):
        return Element(self.algebra, {i: -c for i, c in self.coeffs})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def scale(self, q: ScalarLike) -> "Element":
        q = to_scalar(q)
        return Element(self.algebra, {i: q * c for i, c in self.coeffs})

    def __mul__(self, other):
        if isinstance(other, Element):
            return binary_product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"<{self.algebra.name}: {format_element(self)}>"


def format_element(x: Element) -> str:
    """Canonical text form, e.g. ``2c - 2d``, ``-a``, ``0``, ``3/2 b``.

    The output is accepted back by the expression parser.
    """
    if x.is_zero():
        return "0"
    parts = []
    for n, (i, c) in enumerate(x.coeffs):
        name = x.algebra.generators[i].name
        mag = abs(c)
        if mag == 1:
            body = name
        else:
            sep = "" if name[0].isalpha() and mag.denominator == 1 else " "
            body = f"{format_scalar(mag)}{sep}{name}"
        if n == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def format_table(alg: AlgebraTable) -> str:
    """Multiplication table as text; row x, column y holds x*y."""
    cells = [["*"] + alg.names]
    for i, g in enumerate(alg.generators):
        cells.append([g.name] + [format_element(alg.entry(i, j)) for j in range(alg.dim)])
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def binary_product(x: Element, y: Element) -> Element:
    """Bilinear extension of the multiplication table."""
    x._check(y)
    alg = x.algebra
    out: dict[int, Fraction] = {}
    for i, xi in x.coeffs:
        row = alg.table[i]
        for j, yj in y.coeffs:
            w = xi * yj
            for c, k in row[j]:
                out[k] = out.get(k, Fraction(0)) + w * c
    return Element(alg, out)


EVEN, ODD, INHOMOGENEOUS, ZERO = "even", "odd", "inhomogeneous", "zero"


def parity_of(x: Element) -> str:
    if x.is_zero():
        return ZERO
    ps = {x.algebra.generators[i].parity for i, _ in x.coeffs}
    if ps == {0}:
        return EVEN
    if ps == {1}:
        return ODD
    return INHOMOGENEOUS


def parity_bit(x: Element) -> int | None:
    """0 or 1 for homogeneous nonzero x, None for zero or mixed elements."""
    return {EVEN: 0, ODD: 1}.get(parity_of(x))


# -- construction ----------------------------------------------------------


def make_algebra(
    name: str,
    generators: Sequence[str],
    parity: Sequence[int],
    products: Mapping[tuple[str, str], Union[str, Sequence[tuple[ScalarLike, str]]]],
) -> AlgebraTable:
    """Build a table from named products.

    ``products[(x, y)]`` is either a signed generator name such as ``"-d"``
    or a list of ``(coefficient, name)`` pairs. Missing pairs are zero.
    """
    if len(parity) != len(generators):
        raise DimensionMismatch("parity vector length differs from generator count")
    gens = tuple(Generator(n, i, p) for i, (n, p) in enumerate(zip(generators, parity)))
    idx = {g.name: g.index for g in gens}
    rows = []
    for x in generators:
        row = []
        for y in generators:
            cell = products.get((x, y), ())
            if isinstance(cell, str):
                sign = -1 if cell.startswith("-") else 1
                cell = [(sign, cell.lstrip("+-"))]
            row.append(tuple((to_scalar(c), idx[g]) for c, g in cell))
        rows.append(tuple(row))
    return AlgebraTable(name, gens, tuple(rows))


def _square(name: str, names: list[str], parity: list[int], rows: list[str]) -> AlgebraTable:
    products = {}
    for x, line in zip(names, rows):
        for y, cell in zip(names, line.split()):
            products[(x, y)] = cell
    return make_algebra(name, names, parity, products)


# Rows are left factors: row b, column c reads b*c = -d.
A = _square(
    "A",
    ["a", "b", "c", "d"],
    [0, 0, 1, 1],
    [
        "a  b -d -c",
        "b -a -d  c",
        "c  d  a -b",
        "d -c  b -a",
    ],
)

H = _square(
    "H",
    ["1", "i", "j", "k"],
    [0, 0, 0, 0],
    [
        "1  i  j  k",
        "i -1  k -j",
        "j -k -1  i",
        "k  j -i -1",
    ],
)

C = _square("C", ["1", "i"], [0, 0], ["1 i", "i -1"])

BUILTINS = {"A": A, "H": H, "C": C}


# -- documents ---------------------------------------------------------------


def from_document(doc: Mapping) -> AlgebraTable:
    if not isinstance(doc, Mapping):
        raise ParseError("algebra document must be a JSON object")
    missing = {"name", "dim", "generators", "parity", "table"} - set(doc)
    if missing:
        raise ParseError(f"algebra document is missing {sorted(missing)}")
    name, dim, names, parity, table = (doc[k] for k in ("name", "dim", "generators", "parity", "table"))
    if not isinstance(name, str):
        raise ParseError("'name' must be a string")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise DimensionMismatch(f"'dim' must be a positive integer, got {dim!r}")
    if not isinstance(names, list) or not all(isinstance(n, str) and n for n in names):
        raise ParseError("'generators' must be a list of non-empty strings")
    if not isinstance(parity, list) or not isinstance(table, list):
        raise ParseError("'parity' and 'table' must be lists")
    if len(names) != dim or len(parity) != dim:
        raise DimensionMismatch(f"expected {dim} generators and parities")
    for p in parity:
        if p not in (0, 1) or isinstance(p, bool):
            raise BadParity(f"parity values must be 0 or 1, got {p!r}")
    if len(table) != dim or any(not isinstance(row, list) or len(row) != dim for row in table):
        raise DimensionMismatch(f"'table' must be {dim}x{dim}")
    rows = []
    for row in table:
        out_row = []
        for cell in row:
            if not isinstance(cell, list):
                raise ParseError("each table cell must be a list of terms")
            terms = []
            for t in cell:
                if not isinstance(t, Mapping) or set(t) != {"c", "i"}:
                    raise ParseError(f"bad term {t!r}; expected {{'c': rational, 'i': index}}")
                k = t["i"]
                if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k < dim:
                    raise BadIndex(f"term index {k!r} out of range 0..{dim - 1}")
                if not isinstance(t["c"], (str, int)) or isinstance(t["c"], bool):
                    raise ParseError(f"coefficient {t['c']!r} must be a rational string")
                terms.append((to_scalar(t["c"]), k))
            out_row.append(tuple(terms))
        rows.append(tuple(out_row))
    gens = tuple(Generator(n, i, p) for i, (n, p) in enumerate(zip(names, parity)))
    return AlgebraTable(name, gens, tuple(rows))


def to_document(alg: AlgebraTable) -> dict:
    return {
        "name": alg.name,
        "dim": alg.dim,
        "generators": alg.names,
        "parity": alg.parities,
        "table": [
            [[{"c": format_scalar(c), "i": k} for c, k in cell] for cell in row]
            for row in alg.table
        ],
    }


def load_algebra(source: Union[str, Path, Mapping]) -> AlgebraTable:
    """Resolve a built-in name (``"A"``, ``"H"``, ``"C"``), a document, or a JSON file path."""
    if isinstance(source, Mapping):
        return from_document(source)
    if isinstance(source, str) and source in BUILTINS:
        return BUILTINS[source]
    text = Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{source}: invalid JSON ({e})") from e
    return from_document(doc)


def zero_algebra(dim: int = 2, name: str = "Z") -> AlgebraTable:
    names = [f"z{i + 1}" for i in range(dim)]
    return make_algebra(name, names, [0] * dim, {})


def t2_algebra() -> AlgebraTable:
    """Two-dimensional nilpotent toy: e1*e1 = e2, every other product zero.

    All triple products vanish, so it is associative and antiassociative at once.
    """
    return make_algebra("T2", ["e1", "e2"], [0, 0], {("e1", "e1"): "e2"})


def t3_algebra() -> AlgebraTable:
    """Three-dimensional antiassociative toy that is not associative.

    e1*e1 = e2, e1*e2 = e3, e2*e1 = -e3; (e1 e1) e1 = -e3 = -(e1 (e1 e1)).
    """
    return make_algebra(
        "T3",
        ["e1", "e2", "e3"],
        [0, 0, 0],
        {("e1", "e1"): "e2", ("e1", "e2"): "e3", ("e2", "e1"): "-e3"},
    )
