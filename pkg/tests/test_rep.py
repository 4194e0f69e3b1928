from itertools import product

import pytest

from gja.algebra import A, C, H, make_algebra
from gja.errors import UndefinedSignature
from gja.rep import (
    Matrix,
    anticommutator,
    check_even_subalgebra_iso_C,
    check_left_homomorphism,
    check_LR_commutation,
    check_right_antihomomorphism,
    commutator,
    left_matrix,
    right_matrix,
    signature,
    table_diff,
)


def test_matrix_basics():
    m = Matrix([[1, 2], [3, 4]])
    assert m @ Matrix.identity(2) == m
    assert m @ [1, 0] == [1, 3]
    assert (m - m).is_zero() and (m + m) == m.scale(2)
    assert Matrix.from_columns([[1, 3], [2, 4]]) == m


def test_columns_are_images():
    a, b, c, d = A.basis()
    L, R = left_matrix(b), right_matrix(b)
    for j, g in enumerate(A.basis()):
        assert [row[j] for row in L.rows] == (b * g).vector()
        assert [row[j] for row in R.rows] == (g * b).vector()


def test_H_left_right_commute():
    r = check_LR_commutation(H)
    assert r["LR_commute"].passed and not r["LR_anticommute"].passed


def test_t2_left_right_anticommute(t2):
    assert check_LR_commutation(t2)["LR_anticommute"].passed


def test_t3_left_right_anticommute_only(t3):
    r = check_LR_commutation(t3)
    assert r["LR_anticommute"].passed and not r["LR_commute"].passed


def test_A_neither():
    r = check_LR_commutation(A)
    assert not r["LR_commute"].passed and not r["LR_anticommute"].passed


def test_homomorphisms():
    assert check_left_homomorphism(H).passed
    assert check_right_antihomomorphism(H).passed
    r = check_left_homomorphism(A)["left_homomorphism"]
    assert not r.passed
    assert r.witnesses[0]["args"] == ["b", "b"]


def test_commutator_helpers():
    for x, y in product(H.basis(), repeat=2):
        assert commutator(left_matrix(x), right_matrix(y)).is_zero()
    i = left_matrix(H.gen("i"))
    assert anticommutator(i, i) == Matrix.identity(4).scale(-2)


def test_signatures():
    assert signature(H).signs == (1, -1, -1, -1) and signature(H).trace == -2
    assert signature(A).signs == (1, -1, 1, -1) and signature(A).trace == 0
    assert signature(C).signs == (1, -1)
    with pytest.raises(UndefinedSignature):
        signature(make_algebra("N", ["x", "y"], [0, 0], {("x", "x"): "x"}))


def test_even_subalgebra_iso_C():
    assert check_even_subalgebra_iso_C(A).passed


def test_corrupted_even_subalgebra_is_caught():
    # Same as A except a*b = -b.
    rows = {("a", "a"): "a", ("a", "b"): "-b", ("b", "a"): "b", ("b", "b"): "-a"}
    broken = make_algebra("A'", ["a", "b"], [0, 0], rows)
    r = check_even_subalgebra_iso_C(broken)["even_iso_C"]
    assert not r.passed and r.witnesses[0]["args"] == ["a", "b"]


def test_table_diff():
    cells = [w["row"] + w["col"] for w in table_diff(A, H)]
    assert cells == ["ac", "ad", "bc", "bd", "cb", "cc", "cd", "db", "dc"]
    with pytest.raises(ValueError):
        table_diff(A, C)
