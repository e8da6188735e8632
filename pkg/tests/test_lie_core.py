import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from loopext.lie_core import (SUPPORTED, GAut, LoopElement, bracket_loop, build_split_simple, cartan_matrix,
                              check_jacobi, diagram_aut, exp_ad, killing, named_aut, parse_type,
                              positive_roots, table_from_text, table_to_text, torus_aut, verify_table,
                              weyl_representative)
from loopext.scalars import LaurentPoly, cyc, zeta

from conftest import cyc_scalars, fractions

DIMS = {"A1": 3, "A2": 8, "A3": 15, "B2": 10, "C3": 21, "D4": 28, "G2": 14}


def orbit_roots(cartan):
    """All roots as the Weyl orbit of the simple roots (no positivity pruning)."""
    r = len(cartan)
    found = {tuple(int(i == j) for j in range(r)) for i in range(r)}
    frontier = list(found)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                pairing = sum(beta[j] * cartan[i][j] for j in range(r))
                img = tuple(b - (pairing if k == i else 0) for k, b in enumerate(beta))
                if img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    return found


@pytest.mark.parametrize("name", SUPPORTED)
def test_root_enumeration_oracle(name):
    cartan = cartan_matrix(*parse_type(name))
    roots = orbit_roots(cartan)
    assert sorted(r for r in roots if all(c >= 0 for c in r)) == sorted(positive_roots(cartan))
    assert len(roots) == 2 * len(positive_roots(cartan))


@pytest.mark.parametrize("name", SUPPORTED)
def test_verify_table(name):
    t = build_split_simple(*parse_type(name))
    assert t.dim == DIMS[name]
    rep = verify_table(t)
    assert rep["status"] == "pass", rep
    assert rep["jacobi"]["checks_run"] == t.dim ** 3


def test_a1_relations(a1):
    e, f, h = (a1.index(x) for x in "efh")
    assert a1.bracket({e: 1}, {f: 1}) == {h: 1}
    assert a1.bracket({h: 1}, {e: 1}) == {e: 2}
    assert a1.bracket({h: 1}, {f: 1}) == {f: -2}


def test_a2_dimension_and_roots(a2):
    assert a2.dim == 8 and len(a2.roots) == 6


def test_killing_values(a1):
    assert killing(a1, "e", "f") == 4
    assert killing(a1, "h", "h") == 8


@pytest.mark.parametrize("name", ["A1", "A2", "B2", "G2"])
def test_killing_trace_oracle(name):
    t = build_split_simple(*parse_type(name))
    n = t.dim

    def ad(i):
        cols = t.ad_matrix({i: 1})
        return sympy.Matrix(n, n, lambda r, c: cols[c].get(r, 0))

    mats = [ad(i) for i in range(n)]
    for i, j in itertools.combinations_with_replacement(range(n), 2):
        assert (mats[i] * mats[j]).trace() == t.killing_matrix[i][j]


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_killing_respects_root_grading(name):
    t = build_split_simple(*parse_type(name))
    for i in range(t.dim):
        for j in range(t.dim):
            wsum = tuple(a + b for a, b in zip(t.weight(i), t.weight(j)))
            if any(wsum):
                assert t.killing_matrix[i][j] == 0


def test_unsupported_type():
    with pytest.raises(ValueError, match="unsupported"):
        build_split_simple("H", 3)
    with pytest.raises(ValueError, match="unsupported"):
        parse_type("E8") and cartan_matrix("E", 8)


@pytest.mark.parametrize("name", SUPPORTED)
def test_table_text_roundtrip_and_golden(name, root_dir):
    t = build_split_simple(*parse_type(name))
    text = table_to_text(t)
    assert table_from_text(text).brackets == t.brackets
    assert (root_dir / "corpus" / "v1" / "tables" / f"{name}.txt").read_text() == text


def vectors(table, scalars=fractions):
    return st.dictionaries(st.integers(0, table.dim - 1), scalars, max_size=4)


A2 = build_split_simple("A", 2)
G2 = build_split_simple("G", 2)


@given(vectors(A2), vectors(A2), vectors(A2))
def test_bracket_properties_a2(x, y, z):
    br = A2.bracket
    neg = {k: -v for k, v in br(y, x).items()}
    assert br(x, y) == neg
    total: dict = {}
    for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
        for k, v in br(a, br(b, c)).items():
            total[k] = total.get(k, 0) + v
    assert not any(total.values())
    assert A2.form(br(x, y), z) == A2.form(x, br(y, z))


@given(vectors(G2), vectors(G2), vectors(G2))
def test_form_invariance_g2(x, y, z):
    assert G2.form(G2.bracket(x, y), z) == G2.form(x, G2.bracket(y, z))


# -- automorphisms -------------------------------------------------------------

def sympy_fixed_dim(aut: GAut) -> int:
    n = aut.table.dim
    M = sympy.Matrix(n, n, lambda r, c: sympy.Rational(aut.columns[c].get(r, 0)))
    return n - (M - sympy.eye(n)).rank()


def test_a2_swap():
    aut = named_aut(A2, "diagram-swap")
    assert aut.find_order() == 2 and aut.preserves_brackets()
    assert aut.fixed_dim() == 3 == sympy_fixed_dim(aut)
    assert len(aut.eigenspace(-1)) == 5


def test_a1_identity_permutation(a1):
    assert diagram_aut(a1, (0,)).is_identity()
    assert named_aut(a1, "id").is_identity()


def test_d4_triality():
    d4 = build_split_simple("D", 4)
    aut = named_aut(d4, "triality")
    assert aut.find_order() == 3 and aut.preserves_brackets()
    assert aut.fixed_dim() == 14 == sympy_fixed_dim(aut)
    assert len(aut.eigenspace(zeta(3))) == 7 and len(aut.eigenspace(zeta(3, 2))) == 7


def test_non_symmetry_rejected():
    with pytest.raises(ValueError):
        diagram_aut(build_split_simple("B", 2), (1, 0))


def test_weyl_representative(a1):
    w = weyl_representative(a1, "e", "f")
    assert w.preserves_brackets()
    assert w.find_order() == 2
    assert w({a1.index("e"): 1}) == {a1.index("f"): -1}


@given(st.lists(cyc_scalars(conductors=(1, 3, 4), nonzero=True), min_size=2, max_size=2),
       vectors(A2), vectors(A2))
def test_torus_is_automorphism(scal, x, y):
    aut = torus_aut(A2, scal)
    assert aut(A2.bracket(x, y)) == A2.bracket(aut(x), aut(y))
    assert A2.form(aut(x), aut(y)) == A2.form(x, y)


@given(fractions, vectors(A2), vectors(A2))
def test_exp_ad_is_automorphism(c, x, y):
    aut = exp_ad(A2, {A2.index("e10"): 1, A2.index("f01"): 2}, c)
    assert aut(A2.bracket(x, y)) == A2.bracket(aut(x), aut(y))
    assert aut.inverse()(aut(x)) == {k: v for k, v in x.items() if v}


# -- loop algebra --------------------------------------------------------------

def test_loop_bracket_examples(a1):
    e1 = LoopElement.basis(a1, "e", (1,))
    assert bracket_loop(a1, e1, LoopElement.basis(a1, "f", (1,))) == LoopElement.basis(a1, "h", (2,))
    assert bracket_loop(a1, LoopElement.basis(a1, "h", (0,)), LoopElement.basis(a1, "e", (5,))) \
        == LoopElement.basis(a1, "e", (5,), 2)
    assert not bracket_loop(a1, e1, LoopElement.basis(a1, "e", (-1,)))


def loop_elements(table, nvars):
    key = st.tuples(st.integers(0, table.dim - 1), st.tuples(*[st.integers(-2, 2)] * nvars))
    return st.dictionaries(key, fractions, max_size=4).map(lambda d: LoopElement(nvars, d))


@given(loop_elements(A2, 2), loop_elements(A2, 2), loop_elements(A2, 2))
def test_loop_jacobi(x, y, z):
    br = lambda a, b: bracket_loop(A2, a, b)
    assert not (br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)))
    assert br(x, y) == -br(y, x)


def test_from_terms(a1):
    t = LaurentPoly.var(1, 0)
    x = LoopElement.from_terms(a1, {"e": t + 3})
    assert x == LoopElement.basis(a1, "e", (1,)) + LoopElement.basis(a1, "e", (0,), 3)
