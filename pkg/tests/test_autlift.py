import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopext.autlift import (UNSUPPORTED, LiftCertificate, LiftedAut, LoopAut, NoLift, NotScalar, ScalarAction,
                             base_lift, build_lifted, certificate_residual, check_lifted_automorphism,
                             check_loop_automorphism, gl2z_zeta_enumerate, gl2z_zeta_test, group_check,
                             parse_theta, scalar_centre_action, solve_lift)
from loopext.extension import EFCocycle, ExtElement, KasselCocycle, ResidueCocycle, make_cocycle
from loopext.kahler import DifferentialClass
from loopext.lie_core import LoopElement, build_split_simple, torus_aut
from loopext.scalars import LaurentPoly, RingAut, Window, zeta

from conftest import cyc_scalars, fractions

A1 = build_split_simple("A", 1)
A2 = build_split_simple("A", 2)
W1 = Window.box(1, 2)
SIGMA = RingAut.from_rows([[0, 1], [-1, 0]])


def lift(theta_text, P, window, table=A1):
    theta = parse_theta(theta_text, table, P.nvars)
    cert = solve_lift(theta, P, window)
    return theta, cert


@pytest.mark.parametrize("P", [KasselCocycle(A1, 1), ResidueCocycle(A1), EFCocycle(A1, zeta(4))])
def test_identity_lift(P):
    w = Window.box(P.nvars, 1 if P.nvars == 2 else 2)
    _, cert = lift("id", P, w)
    assert isinstance(cert, LiftCertificate)
    assert cert.mu_scalar() == 1
    assert not any(cert.gamma.values())


R_LINEAR = ["weyl:e,f", "exp:e", "exp:f:-2", "torus:2", "torus:z3", "weyl:e,f * torus:-1/3",
            "exp:e:1/2 * exp:f:3"]


@pytest.mark.parametrize("word", R_LINEAR)
def test_r_linear_lifts_fix_centre(word):
    P = KasselCocycle(A1, 1)
    theta, cert = lift(word, P, W1)
    assert theta.is_r_linear()
    assert isinstance(cert, LiftCertificate) and cert.mu_scalar() == 1
    lifted = build_lifted(theta, cert)
    assert check_lifted_automorphism(lifted, W1)[1] is None
    assert scalar_centre_action(lifted, W1) == ScalarAction(1)


def test_r_linear_two_variables():
    P = KasselCocycle(A2, 2)
    w = Window.box(2, 1)
    theta, cert = lift("diagram:diagram-swap * torus:2,3", P, w, A2)
    assert cert.mu_scalar() == 1
    assert scalar_centre_action(build_lifted(theta, cert), w) == ScalarAction(1)


def test_shift_needs_gamma():
    P = KasselCocycle(A1, 1)
    theta, cert = lift("shift:1", P, W1)
    assert check_loop_automorphism(theta, W1)[1] is None
    assert isinstance(cert, LiftCertificate) and cert.mu_scalar() == 1
    assert any(cert.gamma.values())
    assert check_lifted_automorphism(build_lifted(theta, cert), W1)[1] is None


def test_residue_scaling():
    _, cert = lift("base:scale:2", ResidueCocycle(A1), W1)
    assert cert.mu_scalar() == 1


def test_base_lift_of_scaling_fixes_dlog():
    lifted = base_lift(A1, RingAut.scaling([7]), KasselCocycle(A1, 1), W1)
    z = ExtElement(LoopElement(1), DifferentialClass.dlog((0,), 0).coeffs)
    assert lifted(z) == z
    assert scalar_centre_action(lifted, W1) == ScalarAction(1)


def test_base_lift_sigma_not_scalar():
    w = Window.box(2, 1)
    lifted = base_lift(A1, SIGMA, KasselCocycle(A1, 2), w)
    assert check_lifted_automorphism(lifted, w)[1] is None
    res = scalar_centre_action(lifted, w)
    assert isinstance(res, NotScalar)
    assert res.element == DifferentialClass.dlog((0, 0), 0).coeffs
    assert res.image == DifferentialClass.dlog((0, 0), 1).coeffs


def test_ef_sigma_and_powers():
    P = EFCocycle(A1, zeta(4))
    w = Window.box(2, 1)
    mus = []
    for k in range(1, 5):
        theta = LoopAut.base(A1, RingAut.identity(2))
        for _ in range(k):
            theta = theta.compose(LoopAut.base(A1, SIGMA))
        cert = solve_lift(theta, P, w)
        mus.append(cert.mu_scalar())
    assert mus == [zeta(4), -1, -zeta(4), 1]


def test_unipotent_has_no_lift():
    _, cert = lift("base:matrix:1,1;0,1", EFCocycle(A1, zeta(4)), Window.box(2, 1))
    assert isinstance(cert, NoLift)
    assert cert.to_report()["status"] == "no_lift"


def test_certificate_residual():
    _, cert = lift("weyl:e,f * shift:2", KasselCocycle(A1, 1), W1)
    n, wit = certificate_residual(cert)
    assert wit is None and n > 0


@settings(max_examples=15)
@given(st.lists(cyc_scalars(conductors=(1, 3, 4), nonzero=True), min_size=2, max_size=2))
def test_random_torus_lifts(scal):
    P = KasselCocycle(A2, 1)
    w = Window.box(1, 1)
    theta = LoopAut.linear(torus_aut(A2, scal), 1)
    cert = solve_lift(theta, P, w)
    assert cert.mu_scalar() == 1
    assert scalar_centre_action(build_lifted(theta, cert), w) == ScalarAction(1)


def ext_elements(nvars=1, radius=2):
    key = st.tuples(st.integers(0, 2), st.tuples(*[st.integers(-radius, radius)] * nvars))
    loops = st.dictionaries(key, fractions, max_size=3).map(lambda d: LoopElement(nvars, d))
    cen = st.dictionaries(st.just(((0,) * nvars, 0)), fractions, max_size=1)
    return st.builds(ExtElement, loops, cen)


_SHIFT = lift("weyl:e,f * shift:1", KasselCocycle(A1, 1), Window.box(1, 3))


@given(ext_elements())
def test_lifted_inverse_roundtrip(x):
    theta, cert = _SHIFT
    lifted = build_lifted(theta, cert)
    assert lifted.inverse(lifted(x)) == x


def test_stale_certificate():
    theta, cert = lift("weyl:e,f", KasselCocycle(A1, 1), W1)
    other = parse_theta("torus:2", A1, 1)
    with pytest.raises(ValueError, match="stale"):
        LiftedAut(other, cert)


def test_gamma_outside_window():
    _, cert = lift("shift:1", KasselCocycle(A1, 1), W1)
    with pytest.raises(ValueError, match="outside"):
        cert.gamma_of({(1, (9,)): 1})


def test_twist_shapes():
    t = LaurentPoly.var(1, 0)
    ok = LoopAut.twist(A1, {"e": {"e": t}, "f": {"f": t ** -1}})
    assert check_loop_automorphism(ok, W1)[1] is None
    with pytest.raises(ValueError, match=UNSUPPORTED):
        LoopAut.twist(A1, {"e": {"e": t + 1}})


@pytest.mark.parametrize("text", ["bogus", "weyl:e", "base:matrix:2,0;0,1", "torus:1,2", "shift:1,1"])
def test_parse_errors(text):
    with pytest.raises((ValueError, KeyError)):
        parse_theta(text, A1, 1)


# -- GL2(Z) and the line through (1, zeta) -------------------------------------

def test_gl2z_point_values():
    assert gl2z_zeta_test([[0, 1], [-1, 0]], zeta(4)) == zeta(4)
    assert gl2z_zeta_test([[1, 0], [0, 1]], zeta(5)) == 1
    assert gl2z_zeta_test([[1, 1], [0, 1]], zeta(4)) is None


def brute_line(z: complex, bound: int):
    out = set()
    rng = range(-bound, bound + 1)
    for p1, p2, q1, q2 in itertools.product(rng, repeat=4):
        if p1 * q2 - p2 * q1 in (1, -1) and abs((p1 + p2 * z) * z - (q1 + q2 * z)) < 1e-9:
            out.add(((p1, p2), (q1, q2)))
    return out


@pytest.mark.parametrize("bound", [1, 2, 3])
def test_gl2z_i(bound):
    found = gl2z_zeta_enumerate(zeta(4), bound)
    assert {M for M, _ in found} == brute_line(1j, bound)
    assert len(found) == 4
    mats = {M: mu for M, mu in found}
    g = ((0, 1), (-1, 0))
    assert mats[g] == zeta(4)
    assert all(group_check(found, bound).values())


def test_gl2z_zero():
    found = gl2z_zeta_enumerate(0, 2)
    assert {M for M, _ in found} == brute_line(0, 2)
    assert len(found) == 20 and all(M[1][0] == 0 for M, _ in found)
    assert all(mu == M[0][0] for M, mu in found)


def test_gl2z_bound_validation():
    with pytest.raises(ValueError):
        gl2z_zeta_enumerate(zeta(4), 0)
