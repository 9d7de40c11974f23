"""Sparse Laurent polynomials in z and the alpha-coefficient ring."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kostka_forge.errors import DimensionMismatch
from kostka_forge.qt import ExactScalar
from kostka_forge.zpoly import AlphaPolynomial, ZPolynomial


def z(n, i):
    return ZPolynomial.variable(n, i)


class TestArithmetic:
    def test_monomial_product(self):
        assert z(2, 1) * z(2, 2) == ZPolynomial.monomial(2, (1, 1))

    def test_monomial_mul_shift(self):
        f = ZPolynomial.one(3).monomial_mul((0, 0, 1))
        assert f == z(3, 3)

    def test_binomial_square(self):
        lhs = (z(2, 1) + z(2, 2)) ** 2
        two = ExactScalar.from_int(2)
        rhs = (
            ZPolynomial.monomial(2, (2, 0))
            + ZPolynomial.monomial(2, (1, 1), two)
            + ZPolynomial.monomial(2, (0, 2))
        )
        assert lhs == rhs

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            z(2, 1) + z(3, 1)

    def test_laurent_exponents(self):
        f = z(2, 1).monomial_mul((-2, 0))
        assert f == ZPolynomial.monomial(2, (-1, 0))


class TestSubstitution:
    def test_rotation_image(self):
        # z1 -> q^{-1} z2 (the n=2 rotation)
        images = [(ExactScalar.q(-1), (0, 1)), (None, (1, 0))]
        assert z(2, 1).substitute(images) == ZPolynomial.monomial(
            2, (0, 1), ExactScalar.q(-1)
        )

    def test_swap(self):
        images = [(None, (0, 1)), (None, (1, 0))]
        assert z(2, 2).substitute(images) == z(2, 1)

    def test_symmetric_fixed_point(self):
        f = z(2, 1) * z(2, 2)
        images = [(None, (0, 1)), (None, (1, 0))]
        assert f.substitute(images) == f

    def test_permute(self):
        f = ZPolynomial.monomial(3, (2, 1, 0))
        assert f.permute((2, 0, 1)) == ZPolynomial.monomial(3, (1, 0, 2))


class TestEvaluation:
    def test_single_variable(self):
        assert z(2, 1).eval_float(0.3, 0.7, (2.0, 5.0)) == 2.0

    def test_coefficient_specialization(self):
        c = ExactScalar(
            ExactScalar.one().num - ExactScalar.t().num,
            ExactScalar.one().num - (ExactScalar.q() * ExactScalar.t()).num,
        )
        f = ZPolynomial.monomial(2, (0, 1), c)
        assert f.eval_float(0.0, 0.0, (1.0, 3.0)) == 3.0

    def test_vanishing_factor(self):
        c = ExactScalar.one() - ExactScalar.q() * ExactScalar.t()
        f = ZPolynomial.monomial(2, (1, 0), c)
        assert f.eval_float(1.0, 1.0, (7.0, 0.0)) == 0.0


def test_json_round_trip():
    c = ExactScalar(
        (ExactScalar.one() - ExactScalar.t()).num,
        (ExactScalar.one() - ExactScalar.q() * ExactScalar.t()).num,
    )
    f = ZPolynomial(2, {(1, 0): ExactScalar.one(), (0, 1): c})
    assert ZPolynomial.from_json_dict(f.to_json_dict()) == f


# ---------------------------------------------------------------------------
# property tests
# ---------------------------------------------------------------------------

coeffs = st.integers(-5, 5).filter(bool).map(ExactScalar.from_int)
exps3 = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
zpolys = st.dictionaries(exps3, coeffs, max_size=4).map(lambda t: ZPolynomial(3, t))


@settings(deadline=None, max_examples=80)
@given(zpolys, zpolys, zpolys)
def test_ring_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@settings(deadline=None, max_examples=80)
@given(zpolys, zpolys)
def test_eval_float_homomorphism(f, g):
    point = (0.37, 0.61, (1.3, 0.8, 1.9))
    lhs = (f * g).eval_float(point[0], point[1], point[2])
    rhs = f.eval_float(*point) * g.eval_float(*point)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(lhs), abs(rhs))


class TestAlphaPolynomial:
    def test_arithmetic(self):
        a = AlphaPolynomial.alpha()
        one = AlphaPolynomial.one()
        assert (a + one) * (a - one) == AlphaPolynomial((-1, 0, 1))

    def test_trailing_zeros_trimmed(self):
        assert AlphaPolynomial((1, 2, 0, 0)) == AlphaPolynomial((1, 2))

    def test_evaluate(self):
        p = AlphaPolynomial((1, 2, 3))  # 1 + 2a + 3a^2
        assert p.evaluate(2) == 17
        assert p.evaluate(Fraction(1, 2)) == Fraction(11, 4)

    def test_is_natural(self):
        assert AlphaPolynomial((0, 2, 1)).is_natural()
        assert not AlphaPolynomial((-1, 2)).is_natural()
        assert not AlphaPolynomial((Fraction(1, 2),)).is_natural()
