from fractions import Fraction
from itertools import product

import pytest

from gja.algebra import A, H
from gja.errors import EmptyWord, MixedAlgebra, WrongAlgebra
from gja.words import (
    Superposition,
    Word,
    absorb_a,
    contract,
    contract_superposition,
    contract_traced,
    inversions,
    normal_form,
    normalize,
    sort_sign_bruteforce,
)

# Plain-string oracle for the rules, written against the printed table only.
ROWS = {"a": "a b -d -c", "b": "b -a -d c", "c": "c d a -b", "d": "d -c b -a"}
TABLE = {(x, y): cell for x, row in ROWS.items() for y, cell in zip("abcd", row.split())}
ODD = set("cd")


def oracle(word: str) -> tuple[int, str]:
    sign = 1
    while "a" in word[:-1]:
        i = word.index("a")
        cell = TABLE[(word[i], word[i + 1])]
        sign *= -1 if cell[0] == "-" else 1
        word = word[:i] + cell[-1] + word[i + 2 :]
    order = "dcba"
    swaps = 0
    w = list(word)
    for i in range(len(w)):
        for j in range(len(w) - 1 - i):
            if order.index(w[j]) > order.index(w[j + 1]):
                w[j], w[j + 1] = w[j + 1], w[j]
                swaps += 1
    sign *= (-1) ** swaps
    while len(w) > 1:
        p, q = w[-2], w[-1]
        cell = TABLE[(p, q)]
        sign *= -1 if cell[0] == "-" else 1
        if len(w) >= 3 and (p in ODD) != (q in ODD):
            sign = -sign
        w[-2:] = [cell[-1]]
    return sign, w[0]


def test_cbcb_chain():
    x, steps = contract_traced(Word.of("cbcb"))
    assert x == -A.gen("a")
    chain = [str(s.before) for s in steps] + [str(x)]
    assert chain == ["-ccbb", "cca", "-cc", "-a"]
    assert [s.grade_sign for s in steps] == [1, -1, 1]


def test_bdbd():
    assert contract(Word.of("bdbd")) == A.gen("a")


def test_normalize_examples():
    assert str(normalize(Word.of("cbcb"))) == "-ccbb"
    assert str(normalize(Word.of("bdbd"))) == "-ddbb"
    # Leading a is absorbed before sorting: a*c = -d.
    assert str(normalize(Word.of("acb"))) == "-db"
    assert str(normalize(Word.of("ba"))) == "ba"


def test_normal_form_exponents():
    nf = normal_form(Word.of("cbcba", 2))
    assert (nf.coeff, nf.s, nf.r, nf.q, nf.p) == (-2, 0, 2, 2, 1)
    assert nf.to_word() == normalize(Word.of("cbcba", 2))


def test_absorb_a_leaves_final_a():
    assert absorb_a(Word.of("aaa")).text == "a"
    assert absorb_a(Word.of("ba")).text == "ba"


def test_length_one_and_empty():
    assert contract(Word.of("c", Fraction(-2, 3))) == A.gen("c").scale(Fraction(-2, 3))
    with pytest.raises(EmptyWord):
        contract(Word(1, ()))


def test_only_over_A():
    with pytest.raises(WrongAlgebra):
        contract(Word(1, (1, 2), H))
    with pytest.raises(MixedAlgebra):
        Superposition([Word(1, (0,)), Word(1, (0,), H)])


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_exhaustive_against_oracle(n):
    for letters in product("abcd", repeat=n):
        w = "".join(letters)
        sign, g = oracle(w)
        assert contract(Word.of(w)) == A.gen(g).scale(sign), w


def test_inversions_match_bubble_sort():
    for letters in product(range(4), repeat=5):
        assert (-1) ** inversions(letters) == sort_sign_bruteforce(letters)


def test_superposition_merges_and_cancels():
    s = Superposition([Word.of("cb"), Word.of("cb", -1), Word.of("dab", 2)])
    assert [w.text for w in s] == ["dab"]
    assert contract_superposition(s) == contract(Word.of("dab")).scale(2)
    assert str(Superposition()) == "0"


def test_dab_value():
    # The term behind the outside-in discrepancy for inner-3.
    assert contract(Word.of("dab")) == -A.gen("c")


def test_absorption_is_leftmost_first():
    # The order matters here: absorbing the rightmost a first would give c.
    assert contract(Word.of("aac")) == -A.gen("d")
    assert contract(Word.of("aad")) == -A.gen("c")
