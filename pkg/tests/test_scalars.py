import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weylccr import ExactScalar, PhaseAngle, TAU, scalar
from weylccr.errors import NotDecomposable

rationals = st.fractions(min_value=-30, max_value=30, max_denominator=12)


def poly_scalars(max_deg=2):
    return st.lists(rationals, min_size=1, max_size=max_deg + 1).map(
        lambda cs: ExactScalar(tuple(cs)))


@given(poly_scalars(), poly_scalars(), poly_scalars())
def test_field_laws(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ExactScalar(()) == x
    assert x * 1 == x


@given(poly_scalars())
def test_subtraction_and_division_invert(x):
    assert x - x == ExactScalar(())
    if not x.is_zero():
        assert x / x == ExactScalar((Fraction(1),))
        assert (1 / x) * x == ExactScalar((Fraction(1),))


def test_canonical_form_reduction():
    assert TAU / TAU == scalar(1)
    assert (TAU * TAU) / TAU == TAU
    # denominator made monic: (2 tau) / (2) reduces to tau
    x = ExactScalar((Fraction(0), Fraction(2)), (Fraction(2),))
    assert x == TAU
    # common polynomial factor cancelled
    y = (TAU + 1) * (TAU - 1) / (TAU - 1)
    assert y == TAU + 1


def test_rational_detection_and_conversion():
    assert scalar(Fraction(3, 4)).is_rational()
    assert scalar(Fraction(3, 4)).as_fraction() == Fraction(3, 4)
    assert not TAU.is_rational()
    with pytest.raises(NotDecomposable):
        TAU.as_fraction()
    assert (TAU / TAU).as_fraction() == 1


def test_evaluate_substitutes_two_pi():
    assert TAU.evaluate() == 2.0 * math.pi
    x = TAU * Fraction(1, 2) + 3
    assert abs(x.evaluate() - (math.pi + 3)) < 1e-15
    assert abs((1 / TAU).evaluate() - 1 / (2 * math.pi)) < 1e-17


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError):
        ExactScalar((Fraction(1),), ())
    with pytest.raises(ZeroDivisionError):
        scalar(1) / ExactScalar(())


class TestPhaseAngle:
    def test_linear_coefficient_canonicalized(self):
        a = PhaseAngle(-TAU * Fraction(1, 4))
        assert a.value == TAU * Fraction(3, 4)
        b = PhaseAngle(TAU * Fraction(9, 4))
        assert b.value == TAU * Fraction(1, 4)

    def test_constant_and_quadratic_parts_kept(self):
        v = TAU * TAU * Fraction(1, 3) + TAU * Fraction(5, 4) - 2
        a = PhaseAngle(v)
        assert a.value == TAU * TAU * Fraction(1, 3) + TAU * Fraction(1, 4) - 2

    @given(st.fractions(min_value=-40, max_value=40, max_denominator=12),
           st.integers(min_value=-5, max_value=5))
    def test_full_turns_are_invisible(self, c, k):
        a = PhaseAngle(TAU * c)
        b = PhaseAngle(TAU * (c + k))
        assert a == b
        assert a.is_same_rotation(b)
        assert abs(a.to_complex() - b.to_complex()) == 0.0

    def test_same_rotation_is_exact(self):
        a = PhaseAngle(TAU * Fraction(1, 3))
        b = PhaseAngle(TAU * Fraction(1, 3) + 1)  # differs by 1 radian
        assert not a.is_same_rotation(b)
        c = PhaseAngle(scalar(1))
        d = PhaseAngle(scalar(1) + TAU * 7)
        assert c.is_same_rotation(d)

    def test_to_complex_quarter_turns(self):
        assert PhaseAngle(TAU * 0).to_complex() == 1.0 + 0.0j
        assert abs(PhaseAngle(TAU * Fraction(1, 4)).to_complex() - 1j) < 1e-15
        assert abs(PhaseAngle(TAU * Fraction(1, 2)).to_complex() + 1) < 1e-15
        assert abs(PhaseAngle(-TAU * Fraction(1, 4)).to_complex() + 1j) < 1e-15

    def test_to_complex_large_angle_precision(self):
        # tau-quadratic angles reach thousands of radians; whole turns are
        # removed exactly before conversion so precision stays ~1e-15
        v = TAU * TAU * Fraction(144 * 6)  # about 34k radians
        z = PhaseAngle(v).to_complex()
        frac = Fraction(144 * 6) * 2 * Fraction(
            31415926535897932384626433832795028841971693993751, 10**49) % 1
        import cmath

        assert abs(z - cmath.exp(2j * math.pi * float(frac))) < 1e-14
        assert abs(abs(z) - 1.0) < 1e-15

    def test_angle_arithmetic(self):
        a = PhaseAngle(TAU * Fraction(1, 3))
        b = PhaseAngle(TAU * Fraction(2, 3))
        assert (a + b).is_same_rotation(PhaseAngle(TAU * 0))
        assert (-a).is_same_rotation(b)
        assert (a - a).value.is_zero()
