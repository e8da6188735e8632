import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loopext.extension import (EFCocycle, ExtElement, KasselCocycle, ResidueCocycle, TabulatedCocycle,
                               ZeroCocycle, cocycle_verify, corrupt, ext_bracket, load_tabulated,
                               make_cocycle, tabulated_from_dict, tabulated_to_dict)
from loopext.kahler import DifferentialClass, class_of
from loopext.lie_core import LoopElement, bracket_loop, build_split_simple
from loopext.scalars import LaurentPoly, Window, zeta

from conftest import fractions

A1 = build_split_simple("A", 1)
A2 = build_split_simple("A", 2)


def B(label, *m, coef=1, table=A1):
    return LoopElement.basis(table, label, m, coef)


def dclass(m, i=0, coef=1):
    return DifferentialClass.dlog(m, i, coef).coeffs


def test_zero_cocycle_bracket():
    P = ZeroCocycle(A1, 1)
    x = ExtElement(B("e", 1), dclass((0,)))
    y = ExtElement(B("f", 2))
    assert ext_bracket(P, x, y) == ExtElement(bracket_loop(A1, x.loop, y.loop))


def test_kassel_bracket_examples():
    P = KasselCocycle(A1, 1)
    out = ext_bracket(P, ExtElement(B("e", 1)), ExtElement(B("f", -1)))
    assert out == ExtElement(B("h", 0), dclass((0,), coef=-4))
    assert out.format(A1) == "h1 - 4 * dlog(t)"
    out = ext_bracket(P, ExtElement(B("h", 1)), ExtElement(B("h", -1)))
    assert out == ExtElement(LoopElement(1), dclass((0,), coef=-8))


def test_kassel_values():
    P = KasselCocycle(A1, 1)
    for i in range(3):
        for j in range(3):
            assert P.pair(i, (0,), j, (0,)) == {}
    assert P(B("e", 1), B("f", -1)) == dclass((0,), coef=-4)


@given(st.integers(0, 2), st.integers(-4, 4), st.integers(0, 2), st.integers(-4, 4))
def test_kassel_one_variable_support(i, a, j, b):
    P = KasselCocycle(A1, 1)
    if a + b:
        assert P.pair(i, (a,), j, (b,)) == {}


def loop_elements(table, nvars, radius=2):
    key = st.tuples(st.integers(0, table.dim - 1), st.tuples(*[st.integers(-radius, radius)] * nvars))
    return st.dictionaries(key, fractions, max_size=3).map(lambda d: LoopElement(nvars, d))


@given(loop_elements(A2, 2), loop_elements(A2, 2))
def test_kassel_matches_kahler_oracle(x, y):
    """Sum of (x_i|y_j) bar(t^a d t^b), computed with the Kähler module directly."""
    P = KasselCocycle(A2, 2)
    expect = DifferentialClass.zero(2)
    for (i, a), u in x.coeffs.items():
        for (j, b), v in y.coeffs.items():
            k = A2.killing_matrix[i][j]
            if k:
                expect = expect + class_of(LaurentPoly.monomial(a), LaurentPoly.monomial(b)).scale(u * v * k)
    assert DifferentialClass(2, P(x, y), True) == expect


@given(loop_elements(A1, 2), loop_elements(A1, 2), loop_elements(A1, 2))
def test_extension_jacobi(x, y, z):
    P = KasselCocycle(A1, 2)
    X, Y, Z = ExtElement(x), ExtElement(y), ExtElement(z)
    br = lambda a, b: ext_bracket(P, a, b)
    total = br(X, br(Y, Z)) + br(Y, br(Z, X)) + br(Z, br(X, Y))
    assert total == ExtElement.zero(2)
    assert br(X, Y) == -br(Y, X)


def test_ef_values():
    P = EFCocycle(A1, zeta(4))
    assert P(B("e", 1, 0), B("f", -1, 0)) == {"c": 4}
    assert P(B("e", 0, 1), B("f", 0, -1)) == {"c": 4 * zeta(4)}
    assert P(B("e", 1, 0), B("f", 1, 0)) == {}


def test_normalized_form():
    P = KasselCocycle(A1, 1, normalized=True)
    assert P(B("e", 1), B("f", -1)) == dclass((0,), coef=-1)


def test_residue_values():
    P = ResidueCocycle(A1)
    assert P(B("e", 2), B("f", -2)) == {"c": -8}
    assert P(B("e", 1), B("f", 1)) == {}
    with pytest.raises(ValueError):
        ResidueCocycle(A1, 2)


@pytest.mark.parametrize("kind,table,nvars,z", [
    ("kassel", A1, 1, None), ("kassel", A1, 2, None), ("residue", A1, 1, None),
    ("ef", A2, 2, zeta(4)), ("ef", A1, 2, zeta(3)),
])
def test_cocycle_verify_passes(kind, table, nvars, z):
    P = make_cocycle(kind, table, nvars, z)
    rep = cocycle_verify(P, table, Window.box(nvars, 2 if nvars == 1 else 1))
    assert rep["status"] == "pass", rep
    assert rep["checks_run"]["identity_triples"] > 0


def test_corruption_is_detected():
    P = KasselCocycle(A1, 1)
    bad = corrupt(P, "e", (1,), "f", (-1,), dclass((0,)))
    rep = cocycle_verify(bad, A1, Window.box(1, 2))
    assert rep["status"] == "fail"
    assert rep["witness"]["check"] == "cyclic"


def test_non_alternating_is_detected():
    P = KasselCocycle(A1, 1)

    class Skewed(TabulatedCocycle):
        def _block(self, a, b):
            out = super()._block(a, b)
            if a == b == (1,):
                out[(1, 1)] = dclass((0,))
            return out

    rep = cocycle_verify(Skewed(P, {}), A1, Window.box(1, 1))
    assert rep["status"] == "fail" and rep["witness"]["check"] == "alternating"


def test_tabulated_roundtrip():
    P = KasselCocycle(A1, 2)
    T = corrupt(P, "e", (1, 0), "f", (0, -1), dclass((1, -1), 1, Fraction(1, 3)))
    U = tabulated_from_dict(json.loads(json.dumps(tabulated_to_dict(T))))
    for a in Window.box(2, 1).degrees():
        for b in Window.box(2, 1).degrees():
            assert U.block(a, b) == T.block(a, b)


def test_tabulated_format_errors():
    with pytest.raises(ValueError):
        tabulated_from_dict({"format": "other", "version": 1})
    with pytest.raises(ValueError):
        tabulated_from_dict({"format": "loopext-cocycle", "version": 99})


def test_corpus_files(root_dir):
    bad = load_tabulated(root_dir / "corpus/v1/data/bad.coc")
    assert cocycle_verify(bad, bad.table, Window.box(1, 2))["status"] == "fail"
    good = load_tabulated(root_dir / "corpus/v1/data/kassel-a1.coc")
    assert cocycle_verify(good, good.table, Window.box(1, 2))["status"] == "pass"


def test_nvars_mismatch():
    with pytest.raises(ValueError):
        KasselCocycle(A1, 1)(B("e", 1, 0), B("f", -1, 0))
