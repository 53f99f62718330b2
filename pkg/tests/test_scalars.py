from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from findet.scalars import GF, QQ, Field, FieldElem, FieldMismatchError, characteristic, inv, is_prime

F5, F7, F101 = GF(5), GF(7), GF(101)


def test_examples():
    assert F5(2) + F5(4) == F5(1)
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == QQ(Fraction(5, 6))
    assert F101(17) + F101(0) == F101(17)
    assert inv(F7(3)) == F7(5)
    assert inv(QQ("-2/3")) == QQ("-3/2")
    assert F5(2) * F5(3) == F5(1)


def test_characteristic():
    assert characteristic(QQ) == 0
    assert characteristic(GF(5)) == 5
    assert characteristic(GF(101)) == 101


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        inv(F7(0))
    with pytest.raises(ZeroDivisionError):
        inv(QQ(0))


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatchError):
        F5(1) + F7(1)


@pytest.mark.parametrize("p", [0, 1, 4, 9, 91, 2**31 - 3])
def test_bad_modulus(p):
    if p == 0:
        assert Field(0).kind == "Q"
        return
    with pytest.raises(ValueError):
        Field(p)


def test_prime_test_small():
    naive = [n for n in range(2, 400) if all(n % d for d in range(2, n))]
    assert [n for n in range(400) if is_prime(n)] == naive
    assert is_prime(2**31 - 1)


def test_canonical_forms():
    assert F5.convert(-1) == 4
    assert F5.convert(Fraction(1, 2)) == 3
    a = QQ(Fraction(6, -4))
    assert a.value.denominator > 0 and a.value == Fraction(-3, 2)
    assert (a + (-a)).value == 0
    with pytest.raises(ZeroDivisionError):
        F5.convert(Fraction(1, 5))


def test_field_axioms_exhaustive_f5():
    els = [F5(v) for v in range(5)]
    zero, one = F5(0), F5(1)
    for a, b, c in product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in product(els, repeat=2):
        assert a + b == b + a and a * b == b * a
    for a in els:
        assert a + zero == a and a * one == a
        assert a + (-a) == zero
        if a:
            assert a * a.inverse() == one


rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)


@given(rationals, rationals, rationals)
def test_field_axioms_q(a, b, c):
    a, b, c = QQ(a), QQ(b), QQ(c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a:
        assert a * a.inverse() == QQ(1)


@given(st.integers(), st.integers(), st.integers())
def test_field_axioms_f101(a, b, c):
    a, b, c = F101(a), F101(b), F101(c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert 0 <= (a - b).value < 101
    if a:
        assert a * a.inverse() == F101(1)


def test_json_round_trip():
    for f in (QQ, F101):
        assert Field.from_json(f.to_json()) == f
    assert QQ.to_json() == "Q" and F101.to_json() == {"Fp": 101}
    assert Field.parse("Fp:7") == GF(7) and Field.parse("Q") == QQ
    with pytest.raises(ValueError):
        Field.from_json({"Fp": 8})
    with pytest.raises(ValueError):
        Field.parse("F7")


def test_field_elem_is_hashable_and_immutable():
    a = F7(3)
    assert hash(a) == hash(F7(10))
    with pytest.raises(AttributeError):
        a.value = 4
    assert isinstance(a, FieldElem)
