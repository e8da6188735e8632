"""Exact sparse linear algebra over any field whose elements support
``+ - * /`` and truthiness (``Fraction``, :class:`~loopext.scalars.CycScalar`).

Rows and vectors are plain ``dict`` objects mapping a column key to a
nonzero field element.  Column keys only need to be sortable when a
deterministic pivot order is requested.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable, Mapping, Optional

Row = dict


def axpy(target: dict, coef, source: Mapping) -> None:
    """In place ``target += coef * source``, dropping cancelled entries."""
    if not coef:
        return
    for k, v in source.items():
        s = target.get(k, 0) + coef * v
        if s:
            target[k] = s
        else:
            target.pop(k, None)


def scale(row: Mapping, coef) -> dict:
    if not coef:
        return {}
    return {k: coef * v for k, v in row.items()}


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``priority`` orders candidate pivot columns (smallest first); columns in
    ``late`` are only chosen as pivots when nothing else is left in a row, and
    the ``rhs`` column never is.
    """

    def __init__(self, priority: Optional[Callable[[Any], Any]] = None,
                 late: Iterable[Hashable] = (), rhs: Hashable = None):
        self.rows: dict[Hashable, dict] = {}   # pivot column -> row, pivot entry 1
        self._priority = priority
        self._late = frozenset(late)
        self._rhs = rhs

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: Mapping) -> dict:
        r = dict(row)
        for col in [c for c in r if c in self.rows]:
            coef = r.get(col)
            if coef:
                axpy(r, -coef, self.rows[col])
        return r

    def _pick(self, r: Mapping):
        cands = [c for c in r if c != self._rhs]
        if not cands:
            return None
        early = [c for c in cands if c not in self._late]
        pool = early or cands
        if self._priority is None:
            try:
                return min(pool)
            except TypeError:
                return pool[0]
        return min(pool, key=self._priority)

    def add(self, row: Mapping) -> Optional[dict]:
        """Add a row; return the reduced remainder when it adds no pivot.

        A returned remainder is ``{}`` for a dependent row, or ``{rhs: v}``
        when the row is inconsistent with the system (only possible when an
        ``rhs`` column is in use).
        """
        r = self.reduce(row)
        col = self._pick(r)
        if col is None:
            return r
        inv = Fraction(1) / r[col]
        r = {k: v * inv for k, v in r.items()}
        for other in self.rows.values():
            coef = other.get(col)
            if coef:
                axpy(other, -coef, r)
        self.rows[col] = r
        return None

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)


def rref(rows: Iterable[Mapping], priority=None) -> tuple[list[dict], list]:
    ech = Echelon(priority)
    for r in rows:
        ech.add(r)
    pivots = sorted(ech.rows, key=priority) if priority else _sorted(ech.rows)
    return [ech.rows[p] for p in pivots], pivots


def _sorted(keys):
    try:
        return sorted(keys)
    except TypeError:
        return list(keys)


def rank(rows: Iterable[Mapping]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def nullspace(rows: Iterable[Mapping], columns: list) -> list[dict]:
    """Basis of ``{x : sum_c row[c] * x[c] == 0 for every row}``.

    One basis vector per free column, in the order of ``columns``.
    """
    order = {c: i for i, c in enumerate(columns)}
    ech = Echelon(priority=order.__getitem__)
    for r in rows:
        ech.add(r)
    basis = []
    for free in columns:
        if free in ech.rows:
            continue
        v = {free: Fraction(1)}
        for piv, r in ech.rows.items():
            c = r.get(free)
            if c:
                v[piv] = -c
        basis.append(v)
    return basis


def solve(rows: Iterable[Mapping], rhs: list, columns: list) -> Optional[dict]:
    """Particular solution of ``A x = b`` with all free variables set to zero."""
    RHS = object()
    order = {c: i for i, c in enumerate(columns)}
    ech = Echelon(priority=lambda c: order.get(c, len(order)), rhs=RHS)
    for r, b in zip(rows, rhs):
        full = dict(r)
        if b:
            full[RHS] = b
        rem = ech.add(full)
        if rem and RHS in rem:
            return None
    return {piv: r[RHS] for piv, r in ech.rows.items() if r.get(RHS)}


def in_span(basis: Iterable[Mapping], v: Mapping) -> bool:
    ech = Echelon()
    for b in basis:
        ech.add(b)
    return ech.contains(v)


def coordinates(basis: list[Mapping], v: Mapping) -> Optional[list]:
    """Coefficients of ``v`` in terms of linearly independent ``basis``."""
    cols = list(range(len(basis)))
    keys = set()
    for b in basis:
        keys.update(b)
    keys.update(v)
    rows, rhs = [], []
    for k in _sorted(keys):
        rows.append({i: b[k] for i, b in enumerate(basis) if k in b})
        rhs.append(v.get(k, 0))
    sol = solve(rows, rhs, cols)
    if sol is None:
        return None
    return [sol.get(i, 0) for i in cols]


def det(matrix: list[list]) -> Any:
    """Determinant of a small dense square matrix by fraction-free elimination."""
    n = len(matrix)
    a = [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]
    d = Fraction(1)
    for i in range(n):
        piv = next((r for r in range(i, n) if a[r][i]), None)
        if piv is None:
            return Fraction(0)
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            d = -d
        d = d * a[i][i]
        inv = 1 / a[i][i]
        for r in range(i + 1, n):
            f = a[r][i] * inv
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[i])]
    return d


def inverse(matrix: list[list]) -> list[list]:
    """Inverse of a dense square matrix by Gauss-Jordan on ``[M | I]``."""
    n = len(matrix)
    ech = Echelon(priority=lambda c: (c[0], c[1]))
    for i in range(n):
        row = {(0, j): matrix[i][j] for j in range(n) if matrix[i][j]}
        row[(1, i)] = Fraction(1)
        ech.add(row)
    if any((0, j) not in ech.rows for j in range(n)):
        raise ZeroDivisionError("singular matrix")
    return [[ech.rows[(0, j)].get((1, k), Fraction(0)) for k in range(n)] for j in range(n)]
