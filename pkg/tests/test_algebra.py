import json
from fractions import Fraction

import pytest

from gja.algebra import (
    A,
    C,
    H,
    Element,
    format_element,
    format_table,
    from_document,
    load_algebra,
    make_algebra,
    parity_of,
    to_document,
    to_scalar,
    zero_algebra,
)
from gja.errors import BadIndex, BadParity, DimensionMismatch, MixedAlgebra, ParseError


def test_basis_and_parities():
    assert A.names == ["a", "b", "c", "d"]
    assert A.parities == [0, 0, 1, 1]
    assert H.parities == [0, 0, 0, 0]
    assert C.dim == 2


@pytest.mark.parametrize(
    "x,y,want",
    [("a", "c", "-d"), ("c", "a", "c"), ("b", "c", "-d"), ("c", "b", "d"), ("d", "d", "-a"), ("c", "d", "-b")],
)
def test_rows_are_left_factors(x, y, want):
    sign = -1 if want[0] == "-" else 1
    assert A.gen(x) * A.gen(y) == A.gen(want.lstrip("-")).scale(sign)


def test_element_arithmetic_is_exact():
    a, b, c, d = A.basis()
    x = a.scale(Fraction(1, 3)) + b.scale(2)
    assert x["a"] == Fraction(1, 3)
    assert (x - x).is_zero() and (x - x) == 0
    assert 3 * x == x * 3 == a + b.scale(6)
    assert (a + c) * (b - d) == a * b - a * d + c * b - c * d


def test_element_is_immutable():
    with pytest.raises(AttributeError):
        A.gen("a").coeffs = ()


def test_mixing_algebras_is_rejected():
    with pytest.raises(MixedAlgebra):
        A.gen("a") + H.gen("1")
    with pytest.raises(MixedAlgebra):
        A.gen("a") * H.gen("i")


def test_parity_of():
    a, b, c, d = A.basis()
    assert parity_of(a + b) == "even"
    assert parity_of(c - d) == "odd"
    assert parity_of(a + c) == "inhomogeneous"
    assert parity_of(A.zero()) == "zero"


@pytest.mark.parametrize(
    "coeffs,text",
    [({"c": 2, "d": -2}, "2c - 2d"), ({"a": -1}, "-a"), ({}, "0"), ({"b": Fraction(3, 2)}, "3/2 b")],
)
def test_format_element(coeffs, text):
    assert format_element(A.element(coeffs)) == text


def test_format_element_spaces_digit_generators():
    assert format_element(H.gen("1").scale(2) - H.gen("i")) == "2 1 - i"


def test_format_table_orientation():
    rows = [line.split() for line in format_table(A).splitlines()]
    header = rows[0]
    assert header == ["*", "a", "b", "c", "d"]
    row_b = next(r for r in rows if r[0] == "b")
    row_c = next(r for r in rows if r[0] == "c")
    # Row b, column c holds b*c = -d; the transpose cell holds c*b = d.
    assert row_b[header.index("c")] == "-d"
    assert row_c[header.index("b")] == "d"


def test_to_scalar_is_strict():
    assert to_scalar("-3/4") == Fraction(-3, 4)
    assert to_scalar(" 5 ") == 5
    for bad in ("1.5", "1/0", "x", "1//2"):
        with pytest.raises((ValueError, ZeroDivisionError)):
            to_scalar(bad)


def test_document_round_trip(tmp_path):
    doc = to_document(A)
    back = from_document(json.loads(json.dumps(doc)))
    assert back.names == A.names and back.parities == A.parities
    for i in range(4):
        for j in range(4):
            assert back.entry(i, j).coeffs == A.entry(i, j).coeffs
    path = tmp_path / "a.json"
    path.write_text(json.dumps(doc))
    assert load_algebra(str(path)).table == A.table


def _doc(**over):
    doc = to_document(make_algebra("T", ["x", "y"], [0, 1], {("x", "x"): "x", ("x", "y"): "y"}))
    doc.update(over)
    return doc


@pytest.mark.parametrize(
    "over,exc",
    [
        ({"dim": 3}, DimensionMismatch),
        ({"dim": 0}, DimensionMismatch),
        ({"parity": [0, 2]}, BadParity),
        ({"parity": [0, True]}, BadParity),
        ({"table": [[[{"c": "1", "i": 5}], []], [[], []]]}, BadIndex),
        ({"table": [[[{"c": "1.5", "i": 0}], []], [[], []]]}, ValueError),
        ({"table": [[[{"c": "1"}], []], [[], []]]}, ParseError),
        ({"generators": "xy"}, ParseError),
        ({"table": [[[], []]]}, DimensionMismatch),
    ],
)
def test_load_errors(over, exc):
    with pytest.raises(exc):
        from_document(_doc(**over))


def test_missing_key_and_bad_json(tmp_path):
    doc = _doc()
    del doc["table"]
    with pytest.raises(ParseError):
        from_document(doc)
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_algebra(str(p))
    with pytest.raises(OSError):
        load_algebra(str(tmp_path / "absent.json"))


def test_element_rejects_bad_index():
    with pytest.raises(BadIndex):
        Element(A, {7: 1})


def test_zero_algebra():
    Z = zero_algebra(3)
    x, y, z = Z.basis()
    assert (x * y).is_zero() and Z.names == ["z1", "z2", "z3"]
