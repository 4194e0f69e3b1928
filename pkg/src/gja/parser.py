"""Recursive-descent parser and evaluator for element expressions.

Grammar::

    expr    := ['+'|'-'] product (('+'|'-') product)*
    product := [rational] factor ['*' factor]
    factor  := letter+ | bracket | '(' expr ')'
    bracket := ('['|'{'|'<') expr ',' expr (']'|'}'|'>')
    rational:= int ['/' posint]

A run of two or more letters is a word and is evaluated by total contraction.
``x*y*z`` is rejected: the product is not associative, so the grouping must be
written out. ``∘`` is accepted for ``*``.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .algebra import A, AlgebraTable, Element, binary_product, format_scalar, parity_bit, parity_of
from .brackets import BracketKind, bracket, bracket_kind
from .errors import (
    BracketKindMismatch,
    ExprSyntaxError,
    GJAError,
    UnknownLetter,
    UnparenthesizedProductChain,
    WrongAlgebra,
)
from .words import Word, contract

Span = tuple[int, int]


@dataclass(frozen=True)
class GeneratorRef:
    name: str
    index: int
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ScalarLiteral:
    value: Fraction
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class WordLiteral:
    letters: tuple[int, ...]
    names: tuple[str, ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ScaledTerm:
    coeff: Fraction
    expr: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Sum:
    terms: tuple["Expr", ...]
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinaryProduct:
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Bracket:
    kind: str  # "square" | "brace" | "angle"
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[GeneratorRef, ScalarLiteral, WordLiteral, ScaledTerm, Sum, BinaryProduct, Bracket]

_OPEN = {"[": "square", "{": "brace", "<": "angle"}
_CLOSE = {"square": "]", "brace": "}", "angle": ">"}
_PUNCT = set("+-*/(),[]{}<>")


@dataclass(frozen=True)
class Token:
    kind: str  # "num" | "name" | punctuation character | "end"
    text: str
    pos: int


def tokenize(text: str, alg: AlgebraTable) -> list[Token]:
    alpha_names = sorted((n for n in alg.names if not n.isdigit()), key=len, reverse=True)
    name_re = re.compile("|".join(re.escape(n) for n in alpha_names)) if alpha_names else None
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if name_re is not None:
            m = name_re.match(text, i)
            if m:
                toks.append(Token("name", m.group(), i))
                i = m.end()
                continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(Token("num", text[i:j], i))
            i = j
            continue
        if ch == "∘":
            toks.append(Token("*", ch, i))
            i += 1
            continue
        if ch in _PUNCT:
            toks.append(Token(ch, ch, i))
            i += 1
            continue
        if ch.isalnum() or ch == "_":
            raise UnknownLetter(f"unknown letter {ch!r} for algebra {alg.name}", i, text)
        raise ExprSyntaxError(f"unexpected character {ch!r}", i, text)
    toks.append(Token("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, alg: AlgebraTable):
        self.text = text
        self.alg = alg
        self.toks = tokenize(text, alg)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        return ExprSyntaxError(msg, tok.pos, self.text)

    def take(self, kind: str) -> Token:
        if self.tok.kind != kind:
            what = "end of input" if self.tok.kind == "end" else repr(self.tok.text)
            raise self.error(f"expected {kind!r}, found {what}")
        t = self.tok
        self.i += 1
        return t

    def _is_gen_num(self, tok: Token) -> bool:
        return tok.kind == "num" and tok.text in self.alg.names

    def _starts_factor(self, tok: Token) -> bool:
        return tok.kind in ("name", "(") or tok.kind in _OPEN or self._is_gen_num(tok)

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return e

    def expr(self) -> Expr:
        start = self.tok.pos
        sign = 1
        if self.tok.kind in ("+", "-"):
            sign = -1 if self.take(self.tok.kind).kind == "-" else 1
        terms = [_negate(self.product()) if sign < 0 else self.product()]
        while self.tok.kind in ("+", "-"):
            op = self.take(self.tok.kind).kind
            t = self.product()
            terms.append(_negate(t) if op == "-" else t)
        if len(terms) == 1:
            return terms[0]
        return Sum(tuple(terms), (start, self.tok.pos))

    def rational(self) -> Fraction:
        num = self.take("num")
        if self.tok.kind == "/":
            self.take("/")
            den = self.take("num")
            if int(den.text) == 0:
                raise self.error("zero denominator", den)
            return Fraction(int(num.text), int(den.text))
        return Fraction(int(num.text))

    def _coefficient_ahead(self) -> bool:
        if self.tok.kind != "num":
            return False
        k = 1
        if self.peek(1).kind == "/":
            k = 3
        return self._starts_factor(self.peek(k))

    def product(self) -> Expr:
        start = self.tok.pos
        coeff = None
        if self._coefficient_ahead():
            coeff = self.rational()
        elif self.tok.kind == "num" and not self._is_gen_num(self.tok):
            value = self.rational()
            return ScalarLiteral(value, (start, self.tok.pos))
        left = self.factor()
        if self.tok.kind == "*":
            self.take("*")
            right = self.factor()
            if self.tok.kind == "*":
                raise UnparenthesizedProductChain(
                    "ambiguous non-associative product; parenthesize", self.tok.pos, self.text
                )
            left = BinaryProduct(left, right, (start, self.tok.pos))
        if coeff is not None:
            return ScaledTerm(coeff, left, (start, self.tok.pos))
        return left

    def factor(self) -> Expr:
        tok = self.tok
        if tok.kind == "(":
            self.take("(")
            e = self.expr()
            self.take(")")
            return e
        if tok.kind in _OPEN:
            kind = _OPEN[tok.kind]
            self.take(tok.kind)
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take(_CLOSE[kind])
            return Bracket(kind, left, right, (tok.pos, self.tok.pos))
        if tok.kind == "name" or self._is_gen_num(tok):
            letters = []
            while self.tok.kind == "name" or (self._is_gen_num(self.tok) and not self._coefficient_ahead()):
                letters.append(self.tok.text)
                self.i += 1
            span = (tok.pos, self.toks[self.i - 1].pos + len(self.toks[self.i - 1].text))
            if len(letters) == 1:
                return GeneratorRef(letters[0], self.alg.index(letters[0]), span)
            return WordLiteral(tuple(self.alg.index(n) for n in letters), tuple(letters), span)
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        raise self.error(f"expected a generator, word, bracket or '(', found {what}")


def _negate(e: Expr) -> Expr:
    if isinstance(e, ScaledTerm):
        return ScaledTerm(-e.coeff, e.expr, e.span)
    if isinstance(e, ScalarLiteral):
        return ScalarLiteral(-e.value, e.span)
    return ScaledTerm(Fraction(-1), e, e.span)


def parse(text: str, alg: AlgebraTable = A) -> Expr:
    return _Parser(text, alg).parse()


# -- printing ----------------------------------------------------------------


def to_text(e: Expr) -> str:
    """Canonical text; ``parse(to_text(parse(s)))`` equals ``parse(s)``."""
    if isinstance(e, GeneratorRef):
        return e.name
    if isinstance(e, ScalarLiteral):
        return format_scalar(e.value)
    if isinstance(e, WordLiteral):
        sep = "" if all(len(n) == 1 and n.isalpha() for n in e.names) else " "
        return sep.join(e.names)
    if isinstance(e, ScaledTerm):
        inner = _atom(e.expr)
        # A bare minus would be folded into an inner scaled term on re-parse.
        if e.coeff == -1 and not isinstance(e.expr, (ScaledTerm, ScalarLiteral)):
            return "-" + inner
        return f"{format_scalar(e.coeff)} {inner}"
    if isinstance(e, Sum):
        out = []
        for n, t in enumerate(e.terms):
            s = to_text(t)
            if n == 0:
                out.append(s)
            elif s.startswith("-"):
                out.append("- " + s[1:])
            else:
                out.append("+ " + s)
        return " ".join(out)
    if isinstance(e, BinaryProduct):
        return f"{_atom(e.left)}*{_atom(e.right)}"
    if isinstance(e, Bracket):
        o = {"square": "[", "brace": "{", "angle": "<"}[e.kind]
        return f"{o}{to_text(e.left)},{to_text(e.right)}{_CLOSE[e.kind]}"
    raise TypeError(e)


def _atom(e: Expr) -> str:
    if isinstance(e, (Sum, ScaledTerm, BinaryProduct, ScalarLiteral)):
        return f"({to_text(e)})"
    return to_text(e)


# -- evaluation --------------------------------------------------------------


def evaluate(e: Expr, alg: AlgebraTable = A) -> Element:
    if isinstance(e, GeneratorRef):
        return alg.gen(e.index)
    if isinstance(e, ScalarLiteral):
        if e.value == 0:
            return alg.zero()
        raise GJAError(f"the scalar {format_scalar(e.value)} is not an element of {alg.name}")
    if isinstance(e, WordLiteral):
        if alg is not A:
            raise WrongAlgebra(f"word literals are contracted only over A, not {alg.name}")
        return contract(Word(1, e.letters))
    if isinstance(e, ScaledTerm):
        return evaluate(e.expr, alg).scale(e.coeff)
    if isinstance(e, Sum):
        total = alg.zero()
        for t in e.terms:
            total = total + evaluate(t, alg)
        return total
    if isinstance(e, BinaryProduct):
        return binary_product(evaluate(e.left, alg), evaluate(e.right, alg))
    if isinstance(e, Bracket):
        x, y = evaluate(e.left, alg), evaluate(e.right, alg)
        if e.kind == "angle":
            return bracket(x, y)
        forced = BracketKind.COMMUTATOR if e.kind == "square" else BracketKind.ANTICOMMUTATOR
        px, py = parity_bit(x), parity_bit(y)
        if px is not None and py is not None and bracket_kind(px, py) is not forced:
            warnings.warn(
                BracketKindMismatch(
                    f"{to_text(e)}: operands of parity {parity_of(x)}/{parity_of(y)} call for the "
                    f"{bracket_kind(px, py).value}, evaluating the forced {forced.value}"
                ),
                stacklevel=2,
            )
        return bracket(x, y, forced)
    raise TypeError(e)


def eval_text(text: str, alg: AlgebraTable = A) -> Element:
    return evaluate(parse(text, alg), alg)


def parse_word(text: str, alg: AlgebraTable = A) -> Word:
    """Read ``[sign] [rational] letters``, e.g. ``-3/2 cbcb``."""
    e = parse(text, alg)
    coeff = Fraction(1)
    if isinstance(e, ScaledTerm):
        coeff, e = e.coeff, e.expr
    if isinstance(e, GeneratorRef):
        return Word(coeff, (e.index,), alg)
    if isinstance(e, WordLiteral):
        return Word(coeff, e.letters, alg)
    raise ExprSyntaxError("expected a word such as '-3/2 cbcb'", 0, text)
