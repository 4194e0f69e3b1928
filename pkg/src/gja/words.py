"""Normal ordering and ordered graded contraction of words over ``A``.

A word is a signed string of generators. Normal ordering absorbs every
non-final ``a`` into its right neighbour and then sorts the remaining letters
into the order d > c > b, tracking the permutation sign. Total contraction
then folds the word pairwise from the right, with an extra minus sign for each
mixed-parity pair while three or more letters remain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import A, AlgebraTable, Element, ScalarLike, format_scalar, to_scalar
from .errors import EmptyWord, MixedAlgebra, WrongAlgebra

# Basis indices already follow a < b < c < d; normal order is descending.
_A = A.index("a")


def _signed_entry(p: int, q: int) -> tuple[int, int]:
    """Table lookup for a pair of A generators as ``(sign, letter)``."""
    ((c, k),) = A.table[p][q]
    return int(c), k


@dataclass(frozen=True)
class Word:
    coeff: Fraction
    letters: tuple[int, ...]
    algebra: AlgebraTable = A

    def __post_init__(self):
        object.__setattr__(self, "coeff", to_scalar(self.coeff))
        object.__setattr__(self, "letters", tuple(self.letters))
        for k in self.letters:
            if not 0 <= k < self.algebra.dim:
                raise IndexError(f"letter index {k} out of range for {self.algebra.name}")

    @classmethod
    def of(cls, text: str, coeff: ScalarLike = 1, algebra: AlgebraTable = A) -> "Word":
        """Build from single-character letter names, e.g. ``Word.of("cbcb")``."""
        return cls(to_scalar(coeff), tuple(algebra.index(ch) for ch in text if not ch.isspace()), algebra)

    def __len__(self):
        return len(self.letters)

    @property
    def text(self) -> str:
        return "".join(self.algebra.generators[k].name for k in self.letters)

    def is_zero(self) -> bool:
        return self.coeff == 0

    def __neg__(self):
        return Word(-self.coeff, self.letters, self.algebra)

    def scale(self, q: ScalarLike) -> "Word":
        return Word(self.coeff * to_scalar(q), self.letters, self.algebra)

    def __str__(self):
        body = self.text or "()"
        if self.coeff == 1:
            return body
        if self.coeff == -1:
            return "-" + body
        return f"{format_scalar(self.coeff)} {body}"


@dataclass(frozen=True)
class NormalForm:
    """Exponents of ``coeff * d^s c^r b^q a^p``."""

    coeff: Fraction
    s: int
    r: int
    q: int
    p: int

    def to_word(self) -> Word:
        d, c, b, a = (A.index(n) for n in "dcba")
        return Word(self.coeff, (d,) * self.s + (c,) * self.r + (b,) * self.q + (a,) * self.p)


class Superposition:
    """Formal linear combination of words, merged by letter sequence."""

    __slots__ = ("terms",)

    def __init__(self, words: Iterable[Word] = ()):
        acc: dict[tuple[int, ...], Fraction] = {}
        alg = None
        for w in words:
            if alg is None:
                alg = w.algebra
            elif w.algebra is not alg:
                raise MixedAlgebra("superposition mixes algebras")
            acc[w.letters] = acc.get(w.letters, Fraction(0)) + w.coeff
        algebra = alg or A
        self.terms = tuple(Word(c, k, algebra) for k, c in sorted(acc.items()) if c != 0)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "Superposition") -> "Superposition":
        return Superposition(self.terms + other.terms)

    def __neg__(self):
        return Superposition(-w for w in self.terms)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, q: ScalarLike) -> "Superposition":
        return Superposition(w.scale(q) for w in self.terms)

    def __eq__(self, other):
        return isinstance(other, Superposition) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for n, w in enumerate(self.terms):
            s = str(w)
            if n and s.startswith("-"):
                out.append("- " + s[1:])
            elif n:
                out.append("+ " + s)
            else:
                out.append(s)
        return " ".join(out)

    def __repr__(self):
        return f"Superposition({self})"


def _require_A(w: Word):
    if w.algebra is not A:
        raise WrongAlgebra(f"word rules are defined only over A, not {w.algebra.name}")


def inversions(letters: Sequence[int]) -> int:
    """Pairs i < j whose letters are strictly out of descending order."""
    n = 0
    for i in range(len(letters)):
        for j in range(i + 1, len(letters)):
            if letters[i] < letters[j]:
                n += 1
    return n


def absorb_a(w: Word) -> Word:
    """Contract every non-final ``a`` with its right neighbour, leftmost first.

    These contractions use the bare table product; no grade sign is applied.
    """
    _require_A(w)
    coeff = w.coeff
    letters = list(w.letters)
    while True:
        pos = next((i for i in range(len(letters) - 1) if letters[i] == _A), None)
        if pos is None:
            return Word(coeff, tuple(letters))
        sign, k = _signed_entry(letters[pos], letters[pos + 1])
        coeff *= sign
        letters[pos : pos + 2] = [k]


def normalize(w: Word) -> Word:
    w = absorb_a(w)
    if w.coeff == 0:
        return w
    sign = -1 if inversions(w.letters) % 2 else 1
    letters = tuple(sorted(w.letters, reverse=True))
    return Word(w.coeff * sign, letters)


def normal_form(w: Word) -> NormalForm:
    n = normalize(w)
    count = {k: n.letters.count(A.index(k)) for k in "dcba"}
    return NormalForm(n.coeff, count["d"], count["c"], count["b"], count["a"])


@dataclass(frozen=True)
class Step:
    """One pairwise contraction inside :func:`contract_traced`."""

    before: Word
    pair: tuple[int, int]
    table_sign: int
    grade_sign: int
    after: Word


def contract_traced(w: Word) -> tuple[Element, list[Step]]:
    """Total contraction with the list of individual pair steps."""
    _require_A(w)
    if not w.letters:
        raise EmptyWord("the empty word has no value in A")
    cur = normalize(w)
    steps: list[Step] = []
    while len(cur.letters) >= 2:
        p, q = cur.letters[-2:]
        sign, k = _signed_entry(p, q)
        grade = 1
        if len(cur.letters) >= 3 and A.generators[p].parity != A.generators[q].parity:
            grade = -1
        nxt = Word(cur.coeff * sign * grade, cur.letters[:-2] + (k,))
        steps.append(Step(cur, (p, q), sign, grade, nxt))
        cur = nxt
    (k,) = cur.letters
    return Element(A, {k: cur.coeff}), steps


def contract(w: Word) -> Element:
    return contract_traced(w)[0]


def contract_superposition(s: Superposition | Iterable[Word]) -> Element:
    total = A.zero()
    for w in s:
        total = total + contract(w)
    return total


def sort_sign_bruteforce(letters: Sequence[int]) -> int:
    """Sign of sorting into descending order by adjacent swaps (bubble sort)."""
    xs = list(letters)
    swaps = 0
    for end in range(len(xs) - 1, 0, -1):
        for i in range(end):
            if xs[i] < xs[i + 1]:
                xs[i], xs[i + 1] = xs[i + 1], xs[i]
                swaps += 1
    return -1 if swaps % 2 else 1
