import pytest

from gja.algebra import A, C, H, make_algebra, zero_algebra
from gja.axioms import (
    bracketings,
    check_delta_assoc,
    check_graded_bracket_axioms,
    check_idempotents_and_units,
    check_length4_vanish,
    check_nilpotency,
    classify_assoc,
    eval_tree,
    graded_bracket,
    nested,
    tree_str,
)


def test_catalan_counts():
    assert [len(bracketings(n)) for n in range(1, 7)] == [1, 1, 2, 5, 14, 42]
    assert tree_str(nested(4, "left"), list("wxyz")) == "(((wx)y)z)"
    assert tree_str(nested(4, "right"), list("wxyz")) == "(w(x(yz)))"


def test_eval_tree_on_H():
    i, j, k = (H.gen(n) for n in "ijk")
    assert eval_tree(nested(3, "left"), [i, j, k]) == -H.gen("1")


@pytest.mark.parametrize(
    "alg,kind",
    [(A, "neither"), (H, "associative"), (C, "associative")],
    ids=["A", "H", "C"],
)
def test_builtin_classes(alg, kind):
    assert classify_assoc(alg).summary["class"] == kind


def test_fixture_classes(t2, t3):
    assert classify_assoc(t2).summary["class"] == "both"
    assert classify_assoc(t3).summary["class"] == "antiassociative"
    assert classify_assoc(zero_algebra()).summary["class"] == "both"


def test_A_abc_witness_for_both_deltas():
    for delta, rhs in ((1, "c"), (-1, "-c")):
        r = check_delta_assoc(A, delta)["delta_assoc"]
        w = next(w for w in r.witnesses if w["args"] == ["a", "b", "c"])
        assert (w["lhs"], w["rhs"]) == ("-d", rhs)


def test_bad_delta():
    with pytest.raises(ValueError):
        check_delta_assoc(A, 0)


def test_H_is_a_graded_lie_algebra():
    r = check_graded_bracket_axioms(H, 1)
    assert r.passed, r.failing()


def test_A_graded_jacobi_fails_both_deltas():
    for delta in (1, -1):
        r = check_graded_bracket_axioms(A, delta)
        assert r["graded_antisymmetry"].passed
        assert not r["jacobi_outer"].passed and not r["jacobi_inner"].passed


def test_graded_bracket_formula():
    a, b, c, d = A.basis()
    assert graded_bracket(c, d, 1) == c * d + d * c
    assert graded_bracket(c, d, -1) == c * d - d * c
    assert graded_bracket(a, c, -1) == a * c + c * a


def test_t2_lemma_and_nilpotency(t2):
    assert check_length4_vanish(t2).passed
    assert check_nilpotency(t2) == 3
    assert check_graded_bracket_axioms(t2, -1).passed


def test_t3(t3):
    assert check_length4_vanish(t3).passed
    assert check_nilpotency(t3) == 4
    assert check_graded_bracket_axioms(t3, -1).passed


def test_nilpotency_of_unital_algebras_is_none():
    assert check_nilpotency(H, 5) is None
    assert check_nilpotency(zero_algebra()) == 2
    with pytest.raises(ValueError):
        check_nilpotency(H, 1)


def test_A_identities_and_idempotents():
    r = check_idempotents_and_units(A)
    assert r.summary["right_identities"] == ["a"]
    assert r.summary["left_identities"] == []
    assert r["no_two_sided_identity"].passed
    # a*a = a, so a is idempotent.
    assert r.summary["idempotents"] == ["a"]


def test_antiassociative_has_no_units(t3):
    r = check_idempotents_and_units(t3)
    assert r.passed


def test_non_homogeneous_products_flag_parity_closure():
    bad = make_algebra("P", ["x", "y"], [0, 1], {("x", "y"): "x"})
    assert not check_graded_bracket_axioms(bad, 1)["parity_closure"].passed
