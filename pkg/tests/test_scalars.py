from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopext.scalars import (CycScalar, LaurentPoly, RingAut, Window, cyc, format_poly, format_scalar,
                             parse_poly, parse_scalar, totient, zeta)

from conftest import cyc_scalars, fractions, laurent_polys, to_complex


def test_zeta4_squared():
    assert zeta(4) * zeta(4) == -1


def test_zeta3_minimal_polynomial():
    z = zeta(3)
    assert z + z ** 2 == -1


def test_rational_inverse():
    assert cyc(Fraction(2, 3)).inverse() == Fraction(3, 2)
    assert Fraction(1) / cyc(Fraction(2, 3)) == Fraction(3, 2)


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        CycScalar.rational(0).inverse()


def test_conductor_demotes_to_rational():
    x = zeta(4) ** 2
    assert x.is_rational() and x.to_fraction() == -1


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 12])
def test_root_order(n):
    assert zeta(n).root_order() == n


@pytest.mark.parametrize("n,phi", [(1, 1), (4, 2), (5, 4), (12, 4), (9, 6)])
def test_totient(n, phi):
    assert totient(n) == phi


@given(cyc_scalars(), cyc_scalars(), cyc_scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0


@given(cyc_scalars(nonzero=True))
def test_inverse(a):
    assert a * a.inverse() == 1


@given(cyc_scalars(), cyc_scalars())
def test_numeric_oracle(a, b):
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-9
    assert abs(to_complex(a + b) - to_complex(a) - to_complex(b)) < 1e-9


@given(cyc_scalars(), cyc_scalars())
def test_equality_and_hash_across_conductors(a, b):
    big = a.promote(24 if 24 % a.conductor == 0 else a.conductor * 24)
    assert big == a and hash(big) == hash(a)
    if a == b:
        assert hash(a) == hash(b)


@given(cyc_scalars(conductors=(5,)), cyc_scalars(conductors=(5,)), st.sampled_from([1, 2, 3, 4]))
def test_galois_is_ring_hom(a, b, k):
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)


@given(cyc_scalars())
def test_scalar_format_parse_roundtrip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_parse_scalar_aliases():
    assert parse_scalar("i") == zeta(4)
    assert parse_scalar("-1/2") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        parse_scalar("0.5")


# -- Laurent polynomials -----------------------------------------------------

def test_laurent_examples():
    t1, t2 = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    assert t1 * t1 ** -1 == LaurentPoly.const(2)
    t = LaurentPoly.var(1, 0)
    assert (t + 1) * (t - 1) == t ** 2 - 1
    assert (t1 * zeta(4)) * (t2 * zeta(4)) == -(t1 * t2)


def test_nonmonomial_negative_power_rejected():
    t = LaurentPoly.var(1, 0)
    with pytest.raises(ValueError):
        (t + 1) ** -1


@given(laurent_polys(2), laurent_polys(2), laurent_polys(2))
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(laurent_polys(2, scalars=cyc_scalars(conductors=(1, 4))))
def test_poly_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p), 2) == p


def test_parse_poly_example():
    p = parse_poly("3*z4*t1^2*t2^-1 - 1/2", 2)
    assert p.coeff((2, -1)) == 3 * zeta(4)
    assert p.coeff((0, 0)) == Fraction(-1, 2)


# -- ring automorphisms --------------------------------------------------------

SIGMA = RingAut(((0, -1), (1, 0)), ())


def test_sigma_images():
    t1, t2 = LaurentPoly.var(2, 0), LaurentPoly.var(2, 1)
    assert SIGMA(t1) == t2
    assert SIGMA(t2) == t1 ** -1
    assert SIGMA.order() == 4


def test_from_rows_matches_sigma():
    assert RingAut.from_rows([[0, 1], [-1, 0]]) == SIGMA


def test_non_unimodular_rejected():
    with pytest.raises(ValueError):
        RingAut(((2, 0), (0, 1)), ())


@given(laurent_polys(2))
def test_identity_aut(p):
    assert RingAut.identity(2)(p) == p


ring_auts = st.builds(
    lambda rows, s: RingAut.from_rows(rows, s),
    st.sampled_from([[[1, 0], [0, 1]], [[0, 1], [-1, 0]], [[1, 1], [0, 1]], [[0, 1], [1, 0]], [[-1, 0], [2, 1]]]),
    st.tuples(cyc_scalars(conductors=(1, 4), nonzero=True), cyc_scalars(conductors=(1, 3), nonzero=True)),
)


@given(ring_auts, laurent_polys(2), laurent_polys(2))
def test_aut_is_ring_hom(theta, p, q):
    assert theta(p * q) == theta(p) * theta(q)
    assert theta(p + q) == theta(p) + theta(q)


@given(ring_auts, ring_auts, laurent_polys(2))
def test_compose_and_inverse(a, b, p):
    assert a.compose(b)(p) == a(b(p))
    assert a.inverse()(a(p)) == p


def test_scaling_has_finite_order():
    assert RingAut.scaling([zeta(3), -1]).order() == 6
    assert RingAut.scaling([2]).order() is None
    assert RingAut.from_rows([[1, 1], [0, 1]]).order() is None


def test_window():
    w = Window.box(2, 1)
    assert len(w.degrees()) == 9 and (1, -1) in w and (2, 0) not in w
    assert w.scaled(2).radius == 2
