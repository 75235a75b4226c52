"""Field axioms and conjugation laws of the exact Gaussian rationals."""

from fractions import Fraction

from hypothesis import given, strategies as st

from superreal.scalars import GaussianRational as QI, i_power


def small_rationals():
    return st.fractions(
        min_value=-4, max_value=4, max_denominator=6
    )


def qi_values():
    return st.builds(QI, small_rationals(), small_rationals())


@given(qi_values(), qi_values(), qi_values())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a + QI(0) == a
    assert a * QI(1) == a


@given(qi_values())
def test_inverse(a):
    if not a.is_zero():
        assert a * a.inverse() == QI(1)


@given(qi_values(), qi_values())
def test_conjugation(a, b):
    assert a.conjugate().conjugate() == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a + b).conjugate() == a.conjugate() + b.conjugate()


def test_is_real():
    assert QI(Fraction(3, 2)).is_real()
    assert not QI(0, 1).is_real()
    assert QI(0, 1) * QI(0, 1) == QI(-1)


def test_pair_round_trip():
    z = QI(Fraction(-7, 3), Fraction(5, 11))
    re, im = z.to_pair()
    assert QI.from_pair(re, im) == z


def test_i_power():
    assert i_power(0) == QI(1)
    assert i_power(1) == QI(0, 1)
    assert i_power(2) == QI(-1)
    assert i_power(3) == QI(0, -1)
    assert i_power(5) == QI(0, 1)
