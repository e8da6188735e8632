from fractions import Fraction
from itertools import permutations

from hypothesis import given
from hypothesis import strategies as st

from loopext import linalg

entries = st.integers(-4, 4).map(Fraction)


def dense(n, m):
    return st.lists(st.lists(entries, min_size=m, max_size=m), min_size=n, max_size=n)


def sparse(rows):
    return [{j: x for j, x in enumerate(r) if x} for r in rows]


def leibniz_det(M):
    n = len(M)
    total = Fraction(0)
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        prod = Fraction(sign)
        for i in range(n):
            prod *= M[i][p[i]]
        total += prod
    return total


@given(dense(3, 3))
def test_det_matches_leibniz(M):
    assert linalg.det(M) == leibniz_det(M)


@given(dense(3, 3))
def test_inverse(M):
    if linalg.det(M) == 0:
        return
    inv = linalg.inverse(M)
    for i in range(3):
        for j in range(3):
            assert sum(M[i][k] * inv[k][j] for k in range(3)) == (1 if i == j else 0)
            assert isinstance(inv[i][j], Fraction)


@given(dense(3, 5))
def test_rank_nullity(M):
    rows = sparse(M)
    cols = list(range(5))
    ns = linalg.nullspace(rows, cols)
    assert linalg.rank(rows) + len(ns) == 5
    for v in ns:
        for r in rows:
            assert sum(r.get(j, 0) * v.get(j, 0) for j in cols) == 0


@given(dense(4, 3), st.lists(entries, min_size=3, max_size=3))
def test_solve_finds_preimage(M, x):
    rows = sparse(M)
    rhs = [sum(r.get(j, 0) * x[j] for j in range(3)) for r in rows]
    sol = linalg.solve(rows, rhs, [0, 1, 2])
    assert sol is not None
    for r, b in zip(rows, rhs):
        assert sum(r.get(j, 0) * sol.get(j, 0) for j in range(3)) == b


@given(dense(3, 4), st.lists(entries, min_size=3, max_size=3))
def test_span_membership(M, coeffs):
    rows = sparse(M)
    v: dict = {}
    for c, r in zip(coeffs, rows):
        linalg.axpy(v, c, r)
    assert linalg.in_span(rows, v)
    ech = linalg.Echelon()
    for r in rows:
        ech.add(r)
    assert ech.contains(v)
