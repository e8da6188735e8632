"""Split simple Lie algebras in a Chevalley basis, their automorphisms, and
loop algebras ``g (x) k[t_1^{+-1}, ..., t_n^{+-1}]``.

Basis order is ``h_1..h_r``, then positive root vectors, then negative root
vectors, roots sorted by height and then by reversed coefficient vector.
Structure-constant signs come from the extraspecial-pair recursion, so they
are deterministic; every table is checked against the Lie axioms by the
test-suite rather than trusted.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .scalars import CycScalar, LaurentPoly, Window, cyc, format_term

SUPPORTED = ("A1", "A2", "A3", "B2", "C3", "D4", "G2")
TABLE_FORMAT = "loopext-structure-table"
TABLE_VERSION = 1

Vec = dict  # sparse vector: basis index -> scalar


def cartan_matrix(series: str, rank: int) -> list[list[int]]:
    """Cartan matrix ``a_ij = <alpha_i^vee, alpha_j>`` in Bourbaki numbering."""
    name = f"{series}{rank}"
    if name not in SUPPORTED:
        raise ValueError(f"unsupported type {name}; supported types: {', '.join(SUPPORTED)}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if series == "A":
        for i in range(rank - 1):
            a[i][i + 1] = a[i + 1][i] = -1
    elif series == "B":
        a[0][1], a[1][0] = -1, -2
    elif series == "C":
        a[0][1] = a[1][0] = -1
        a[1][2], a[2][1] = -2, -1
    elif series == "D":
        for leaf in (0, 2, 3):
            a[1][leaf] = a[leaf][1] = -1
    elif series == "G":
        a[0][1], a[1][0] = -3, -1
    return a


def parse_type(text: str) -> tuple[str, int]:
    text = text.strip().upper()
    if len(text) < 2 or not text[1:].isdigit():
        raise ValueError(f"unsupported type {text}; supported types: {', '.join(SUPPORTED)}")
    return text[0], int(text[1:])


def symmetrizer(cartan: Sequence[Sequence[int]]) -> list[Fraction]:
    """``d_i`` with ``d_i a_ij = d_j a_ji``, normalised so min d_i = 1."""
    r = len(cartan)
    d: list = [None] * r
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(r):
            if j != i and cartan[i][j] and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    low = min(d)
    return [x / low for x in d]


def positive_roots(cartan: Sequence[Sequence[int]]) -> list[tuple]:
    """Positive roots as coefficient tuples, by closure under simple reflections."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(r):
                pairing = sum(beta[j] * cartan[i][j] for j in range(r))
                img = tuple(b - (pairing if k == i else 0) for k, b in enumerate(beta))
                if all(x >= 0 for x in img) and any(img) and img not in found:
                    found.add(img)
                    nxt.append(img)
        frontier = nxt
    return sorted(found, key=root_key)


def root_key(root: Sequence[int]):
    return (sum(root), tuple(-c for c in root))


def _neg(a):
    return tuple(-x for x in a)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _structure_constants(cartan, d, pos):
    """N[(a, b)] with [e_a, e_b] = N e_{a+b} for all root pairs summing to a root."""
    r = len(cartan)
    posset = set(pos)
    roots = posset | {_neg(a) for a in pos}

    def ip(a, b):
        return sum(a[i] * b[j] * d[i] * cartan[i][j] for i in range(r) for j in range(r))

    def string_p(a, b):
        p = 0
        cur = tuple(x - y for x, y in zip(b, a))
        while cur in roots:
            p += 1
            cur = tuple(x - y for x, y in zip(cur, a))
        return p

    extra = {}
    for xi in pos:
        if sum(xi) < 2:
            continue
        alpha = min((a for a in pos if tuple(x - y for x, y in zip(xi, a)) in posset), key=root_key)
        extra[xi] = alpha

    memo: dict = {}

    def N(a, b):
        key = (a, b)
        if key in memo:
            return memo[key]
        s = _add(a, b)
        if s not in roots:
            val = Fraction(0)
        elif a in posset and b in posset:
            if root_key(a) > root_key(b):
                val = -N(b, a)
            else:
                g = extra[s]
                dd = tuple(x - y for x, y in zip(s, g))
                if a == g:
                    val = Fraction(string_p(a, b) + 1)
                else:
                    bg = tuple(x - y for x, y in zip(b, g))
                    ag = tuple(x - y for x, y in zip(a, g))
                    t1 = N(b, _neg(g)) * N(a, _neg(dd)) / ip(bg, bg) if bg in roots else 0
                    t2 = N(_neg(g), a) * N(b, _neg(dd)) / ip(ag, ag) if ag in roots else 0
                    val = (t1 + t2) * ip(s, s) / N(g, dd)
        elif a not in posset and b not in posset:
            val = -N(_neg(a), _neg(b))
        elif a in posset:
            if s in posset:
                val = N(b, _neg(s)) * ip(s, s) / ip(a, a)
            else:
                val = N(_neg(s), a) * ip(s, s) / ip(b, b)
        else:
            val = -N(b, a)
        memo[key] = val
        return val

    out = {}
    for a in roots:
        for b in roots:
            if _add(a, b) in roots:
                v = N(a, b)
                if v.denominator != 1 or v == 0:
                    raise ArithmeticError(f"non-integral structure constant N({a},{b}) = {v}")
                out[(a, b)] = int(v)
    return out, ip


def add_into(target: dict, coef, source: Mapping) -> None:
    linalg.axpy(target, coef, source)


@dataclass
class StructureTable:
    """Chevalley basis data of a split simple Lie algebra."""

    series: str
    rank: int
    cartan: list
    labels: list
    roots: list                      # root (coefficient tuple) per basis index >= rank
    brackets: dict                   # (i, j) -> {k: int}, only nonzero entries
    symm: list = field(default_factory=list)
    aliases: dict = field(default_factory=dict)

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def dim(self) -> int:
        return len(self.labels)

    @cached_property
    def root_index(self) -> dict:
        return {rt: self.rank + k for k, rt in enumerate(self.roots)}

    def weight(self, i: int) -> tuple:
        """Root of basis element i (zero vector for the Cartan part)."""
        if i < self.rank:
            return (0,) * self.rank
        return self.roots[i - self.rank]

    def index(self, label) -> int:
        if isinstance(label, int):
            if not 0 <= label < self.dim:
                raise IndexError(f"basis index {label} out of range")
            return label
        if label in self.aliases:
            return self.aliases[label]
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r} for {self.name}") from None

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.brackets.get((i, j), {})

    def bracket(self, x: Mapping, y: Mapping) -> Vec:
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                br = self.brackets.get((i, j))
                if br:
                    linalg.axpy(out, a * b, br)
        return out

    def ad_matrix(self, x: Mapping) -> list[dict]:
        """Columns of ad(x): column j is [x, b_j]."""
        return [self.bracket(x, {j: 1}) for j in range(self.dim)]

    @cached_property
    def killing_matrix(self) -> list[list[Fraction]]:
        n = self.dim
        ads = [self.ad_matrix({i: 1}) for i in range(n)]
        out = [[Fraction(0)] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                tr = Fraction(0)
                for k in range(n):
                    for l, c in ads[y][k].items():
                        v = ads[x][l].get(k)
                        if v:
                            tr += v * c
                out[x][y] = out[y][x] = tr
        return out

    @cached_property
    def killing_pairs(self) -> dict:
        """Sparse Killing form: i -> {j: (b_i | b_j)} for nonzero values."""
        km = self.killing_matrix
        return {i: {j: v for j, v in enumerate(row) if v} for i, row in enumerate(km)}

    @cached_property
    def normalized_scale(self) -> Fraction:
        """Factor turning the Killing form into the form with (h|h) = 2 for long coroots h."""
        long_d = max(self.symm)
        i = self.symm.index(long_d)
        return 2 / self.killing_matrix[i][i]

    def form(self, x: Mapping, y: Mapping, normalized: bool = False):
        tot = Fraction(0)
        kp = self.killing_pairs
        for i, a in x.items():
            row = kp.get(i, {})
            for j, b in y.items():
                v = row.get(j)
                if v:
                    tot = a * b * v + tot
        return tot * self.normalized_scale if normalized else tot

    def vec(self, spec) -> Vec:
        """Basis vector from a label, index or {label: coefficient} mapping."""
        if isinstance(spec, Mapping):
            out: dict = {}
            for k, c in spec.items():
                linalg.axpy(out, cyc(c) if isinstance(c, str) else c, {self.index(k): 1})
            return out
        return {self.index(spec): 1}

    def format_vec(self, v: Mapping) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            parts.append(format_term((), v[i]) + "*" + self.labels[i] if v[i] != 1 else self.labels[i])
        return " + ".join(parts).replace("+ -", "- ")


def killing(table: StructureTable, x, y) -> Fraction:
    return table.killing_matrix[table.index(x)][table.index(y)]


_TABLE_CACHE: dict = {}


def build_split_simple(series: str, rank: Optional[int] = None) -> StructureTable:
    """Chevalley-basis structure table of the split simple algebra of the given type."""
    if rank is None:
        series, rank = parse_type(series)
    series = series.upper()
    key = (series, rank)
    if key in _TABLE_CACHE:
        return _TABLE_CACHE[key]
    cartan = cartan_matrix(series, rank)
    d = symmetrizer(cartan)
    pos = positive_roots(cartan)
    consts, ip = _structure_constants(cartan, d, pos)
    roots = pos + [_neg(a) for a in pos]
    labels = [f"h{i + 1}" for i in range(rank)]
    labels += ["e" + "".join(map(str, a)) for a in pos]
    labels += ["f" + "".join(map(str, a)) for a in pos]
    index = {rt: rank + k for k, rt in enumerate(roots)}
    brackets: dict = {}

    def put(i, j, vec):
        vec = {k: v for k, v in vec.items() if v}
        if vec:
            brackets[(i, j)] = vec

    for k, a in enumerate(roots):
        ia = rank + k
        for i in range(rank):
            w = sum(a[j] * cartan[i][j] for j in range(rank))
            put(i, ia, {ia: w})
            put(ia, i, {ia: -w})
        for b in roots:
            s = _add(a, b)
            ib = index[b]
            if not any(s):
                # coroot of a in terms of simple coroots
                da = ip(a, a) / 2
                coroot = {i: a[i] * d[i] / da for i in range(rank)}
                if any(c.denominator != 1 for c in coroot.values()):
                    raise ArithmeticError("non-integral coroot")
                put(ia, ib, {i: int(c) for i, c in coroot.items()})
            elif s in index:
                put(ia, ib, {index[s]: consts[(a, b)]})
    aliases = {}
    if rank == 1:
        aliases = {"h": 0, "e": 1, "f": 2}
    table = StructureTable(series, rank, cartan, labels, roots, brackets, [Fraction(x) for x in d], aliases)
    _TABLE_CACHE[key] = table
    return table


# ---------------------------------------------------------------------------
# exhaustive checks


def check_antisymmetry(table: StructureTable) -> tuple[int, Optional[tuple]]:
    n = table.dim
    checks = 0
    for i in range(n):
        for j in range(n):
            checks += 1
            s = dict(table.bracket_basis(i, j))
            linalg.axpy(s, 1, table.bracket_basis(j, i))
            if s:
                return checks, (table.labels[i], table.labels[j])
    return checks, None


def check_jacobi(table: StructureTable) -> tuple[int, Optional[tuple]]:
    n = table.dim
    checks = 0
    for i in range(n):
        for j in range(n):
            bij = table.bracket_basis(i, j)
            for k in range(n):
                checks += 1
                tot = table.bracket(bij, {k: 1})
                linalg.axpy(tot, 1, table.bracket(table.bracket_basis(j, k), {i: 1}))
                linalg.axpy(tot, 1, table.bracket(table.bracket_basis(k, i), {j: 1}))
                if tot:
                    return checks, (table.labels[i], table.labels[j], table.labels[k])
    return checks, None


def check_invariance(table: StructureTable) -> tuple[int, Optional[tuple]]:
    n = table.dim
    checks = 0
    for i in range(n):
        for j in range(n):
            bij = table.bracket_basis(i, j)
            for k in range(n):
                checks += 1
                lhs = table.form(bij, {k: 1})
                rhs = table.form({i: 1}, table.bracket_basis(j, k))
                if lhs != rhs:
                    return checks, (table.labels[i], table.labels[j], table.labels[k])
    return checks, None


def check_killing_trace(table: StructureTable) -> tuple[int, Optional[tuple]]:
    """Recompute the Killing form from dense ad matrices."""
    n = table.dim
    dense = []
    for x in range(n):
        m = [[0] * n for _ in range(n)]
        for j in range(n):
            for k, c in table.bracket_basis(x, j).items():
                m[k][j] = c
        dense.append(m)
    checks = 0
    for x in range(n):
        for y in range(n):
            checks += 1
            tr = sum(dense[x][k][l] * dense[y][l][k] for k in range(n) for l in range(n))
            if tr != table.killing_matrix[x][y]:
                return checks, (table.labels[x], table.labels[y])
    return checks, None


def verify_table(table: StructureTable) -> dict:
    out = {"algebra": table.name, "dim": table.dim, "roots": len(table.roots)}
    ok = table.dim == table.rank + len(table.roots)
    for name, fn in (("antisymmetry", check_antisymmetry), ("jacobi", check_jacobi),
                     ("killing_trace", check_killing_trace), ("invariance", check_invariance)):
        n, wit = fn(table)
        out[name] = {"checks_run": n, "status": "pass" if wit is None else "fail"}
        if wit is not None:
            out[name]["witness"] = list(wit)
            ok = False
    out["status"] = "pass" if ok else "fail"
    return out


# ---------------------------------------------------------------------------
# textual serialisation


def table_to_text(table: StructureTable) -> str:
    lines = [f"{TABLE_FORMAT} {TABLE_VERSION}", f"type {table.name}", "cartan"]
    lines += ["  " + " ".join(str(x) for x in row) for row in table.cartan]
    lines.append("labels " + " ".join(table.labels))
    lines.append("brackets")
    for (i, j), vec in sorted(table.brackets.items()):
        if i < j:
            rhs = " ".join(f"{c}*{table.labels[k]}" for k, c in sorted(vec.items()))
            lines.append(f"  [{table.labels[i]},{table.labels[j]}] = {rhs}")
    return "\n".join(lines) + "\n"


def table_from_text(text: str) -> StructureTable:
    """Parse the textual form and rebuild a table; the result is checked against a fresh build."""
    lines = [ln.rstrip() for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if head[0] != TABLE_FORMAT or int(head[1]) != TABLE_VERSION:
        raise ValueError(f"unrecognised structure table header {lines[0]!r}")
    name = lines[1].split()[1]
    rank = int(name[1:])
    cartan = [[int(x) for x in ln.split()] for ln in lines[3:3 + rank]]
    labels = lines[3 + rank].split()[1:]
    pos = {lab: k for k, lab in enumerate(labels)}
    brackets: dict = {}
    for ln in lines[5 + rank:]:
        lhs, rhs = ln.split("=")
        a, b = lhs.strip()[1:-1].split(",")
        vec = {}
        for term in rhs.split():
            c, lab = term.split("*")
            vec[pos[lab]] = int(c)
        i, j = pos[a], pos[b]
        brackets[(i, j)] = vec
        brackets[(j, i)] = {k: -c for k, c in vec.items()}
    fresh = build_split_simple(name[0], rank)
    table = StructureTable(name[0], rank, cartan, labels, list(fresh.roots), brackets,
                           list(fresh.symm), dict(fresh.aliases))
    return table


# ---------------------------------------------------------------------------
# automorphisms of g


class GAut:
    """Linear automorphism of g given by its columns on the Chevalley basis."""

    def __init__(self, table: StructureTable, columns: Sequence[Mapping], order: Optional[int] = None,
                 name: str = ""):
        self.table = table
        self.columns = [dict((k, v) for k, v in col.items() if v) for col in columns]
        if len(self.columns) != table.dim:
            raise ValueError("need one column per basis element")
        self.order = order
        self.name = name

    @classmethod
    def identity(cls, table: StructureTable) -> "GAut":
        return cls(table, [{j: Fraction(1)} for j in range(table.dim)], 1, "id")

    def __call__(self, v: Mapping) -> Vec:
        out: dict = {}
        for j, c in v.items():
            linalg.axpy(out, c, self.columns[j])
        return out

    apply = __call__

    def compose(self, other: "GAut") -> "GAut":
        """self o other."""
        return GAut(self.table, [self(col) for col in other.columns])

    def __mul__(self, other: "GAut") -> "GAut":
        return self.compose(other)

    def __eq__(self, other):
        if not isinstance(other, GAut):
            return NotImplemented
        return self.table is other.table and all(
            _vec_eq(a, b) for a, b in zip(self.columns, other.columns))

    __hash__ = None

    def power(self, k: int) -> "GAut":
        if k < 0:
            return self.inverse().power(-k)
        out = GAut.identity(self.table)
        base = self
        while k:
            if k & 1:
                out = out.compose(base)
            base = base.compose(base)
            k >>= 1
        return out

    def dense(self) -> list[list]:
        n = self.table.dim
        return [[self.columns[j].get(i, 0) for j in range(n)] for i in range(n)]

    def inverse(self) -> "GAut":
        if self.order:
            return GAut(self.table, self.power(self.order - 1).columns, self.order)
        inv = linalg.inverse(self.dense())
        n = self.table.dim
        return GAut(self.table, [{i: inv[i][j] for i in range(n) if inv[i][j]} for j in range(n)])

    def is_identity(self) -> bool:
        return all(col == {j: 1} for j, col in enumerate(self.columns))

    def bracket_violation(self) -> Optional[tuple]:
        t = self.table
        for i in range(t.dim):
            for j in range(i + 1, t.dim):
                lhs = self(t.bracket_basis(i, j))
                rhs = t.bracket(self.columns[i], self.columns[j])
                if not _vec_eq(lhs, rhs):
                    return (t.labels[i], t.labels[j])
        return None

    def preserves_brackets(self) -> bool:
        return self.bracket_violation() is None

    def find_order(self, limit: int = 24) -> Optional[int]:
        p = self
        for k in range(1, limit + 1):
            if p.is_identity():
                return k
            p = p.compose(self)
        return None

    def verify_order(self) -> bool:
        return self.order is None or (self.power(self.order).is_identity()
                                      and self.find_order(self.order) == self.order)

    def eigenspace(self, value) -> list[Vec]:
        """Basis of ker(self - value)."""
        n = self.table.dim
        value = cyc(value)
        rows = []
        for i in range(n):
            row = {j: self.columns[j][i] for j in range(n) if i in self.columns[j]}
            row[i] = row.get(i, 0) - value
            rows.append({k: v for k, v in row.items() if v})
        return linalg.nullspace(rows, list(range(n)))

    def fixed_dim(self) -> int:
        return len(self.eigenspace(1))

    def __repr__(self):
        return f"GAut({self.table.name}, {self.name or 'matrix'})"


def _vec_eq(a: Mapping, b: Mapping) -> bool:
    d = dict(a)
    linalg.axpy(d, -1, b)
    return not d


def _simple_decomposition(table: StructureTable):
    """For each non-simple positive root a: (simple index i, root b) with a = alpha_i + b."""
    r = table.rank
    out = {}
    roots = set(table.roots)
    for a in table.roots[: len(table.roots) // 2]:
        if sum(a) == 1:
            continue
        for i in range(r):
            b = tuple(x - (k == i) for k, x in enumerate(a))
            if b in roots and all(x >= 0 for x in b):
                out[a] = (i, b)
                break
    return out


def from_generator_images(table: StructureTable, e_images: Sequence[Mapping],
                          f_images: Sequence[Mapping], order: Optional[int] = None,
                          name: str = "") -> GAut:
    """Extend images of the simple e_i, f_i to an automorphism, checking the brackets."""
    r = table.rank
    ri = table.root_index
    cols: list = [None] * table.dim
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    for i, a in enumerate(simple):
        cols[ri[a]] = dict(e_images[i])
        cols[ri[_neg(a)]] = dict(f_images[i])
        cols[i] = table.bracket(e_images[i], f_images[i])
    dec = _simple_decomposition(table)
    for a in table.roots[: len(table.roots) // 2]:
        if a not in dec:
            continue
        i, b = dec[a]
        for sign in (1, -1):
            ai, bb, aa = simple[i], b, a
            if sign < 0:
                ai, bb, aa = _neg(ai), _neg(b), _neg(a)
            coef = table.bracket_basis(ri[ai], ri[bb])[ri[aa]]
            img = table.bracket(cols[ri[ai]], cols[ri[bb]])
            cols[ri[aa]] = {k: v / coef for k, v in img.items()}
    aut = GAut(table, cols, order, name)
    wit = aut.bracket_violation()
    if wit is not None:
        raise ValueError(f"generator images do not define an automorphism (fails on {wit})")
    return aut


def _is_diagram_symmetry(cartan, perm) -> bool:
    r = len(cartan)
    return sorted(perm) == list(range(r)) and all(
        cartan[perm[i]][perm[j]] == cartan[i][j] for i in range(r) for j in range(r))


def diagram_aut(table: StructureTable, perm: Sequence[int], name: str = "") -> GAut:
    """Automorphism sending e_i, f_i, h_i to e_perm(i), f_perm(i), h_perm(i)."""
    perm = list(perm)
    if not _is_diagram_symmetry(table.cartan, perm):
        raise ValueError(f"permutation {perm} is not a symmetry of the {table.name} Dynkin diagram")
    r = table.rank
    ri = table.root_index
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    e_img = [{ri[simple[perm[i]]]: Fraction(1)} for i in range(r)]
    f_img = [{ri[_neg(simple[perm[i]])]: Fraction(1)} for i in range(r)]
    order = 1
    p = list(range(r))
    while True:
        p = [perm[x] for x in p]
        if p == list(range(r)):
            break
        order += 1
    aut = from_generator_images(table, e_img, f_img, None, name or f"diagram{perm}")
    aut.order = aut.find_order(max(order * 2, 2))
    return aut


NAMED_DIAGRAM = {
    "A2": {"diagram-swap": (1, 0)},
    "A3": {"diagram-swap": (2, 1, 0)},
    "D4": {"triality": (2, 1, 3, 0), "swap": (0, 1, 3, 2)},
}


def named_aut(table: StructureTable, name: str) -> GAut:
    if name in ("id", "identity", "trivial"):
        return GAut.identity(table)
    perms = NAMED_DIAGRAM.get(table.name, {})
    if name not in perms:
        avail = ", ".join(sorted(perms)) or "none"
        raise ValueError(f"no automorphism named {name!r} for {table.name} (available: {avail})")
    return diagram_aut(table, perms[name], name)


def torus_aut(table: StructureTable, scalars: Sequence) -> GAut:
    """Constant torus element: e_a -> prod_i c_i^{a_i} e_a, Cartan fixed."""
    scalars = [cyc(c) for c in scalars]
    cols = []
    for j in range(table.dim):
        w = table.weight(j)
        c = CycScalar.rational(1)
        for ci, ai in zip(scalars, w):
            if ai:
                c = c * ci ** ai
        cols.append({j: c})
    return GAut(table, cols, name="torus")


def exp_ad(table: StructureTable, x: Mapping, coef=1) -> GAut:
    """exp(ad(coef * x)) for ad-nilpotent x."""
    x = {k: v * coef for k, v in x.items()}
    cols = []
    for j in range(table.dim):
        total = {j: Fraction(1)}
        term = {j: Fraction(1)}
        k = 0
        while True:
            k += 1
            term = table.bracket(x, term)
            if not term:
                break
            if k > 2 * table.dim:
                raise ValueError("element is not ad-nilpotent")
            term = {i: v / k for i, v in term.items()}
            linalg.axpy(total, 1, term)
        cols.append(total)
    return GAut(table, cols, name="exp")


def weyl_representative(table: StructureTable, e, f) -> GAut:
    """exp(ad e) exp(-ad f) exp(ad e)."""
    ev, fv = table.vec(e), table.vec(f)
    a = exp_ad(table, ev)
    b = exp_ad(table, fv, -1)
    out = a.compose(b).compose(a)
    out.name = "weyl"
    return out


# ---------------------------------------------------------------------------
# loop algebra


class LoopElement:
    """Element of g (x) k[t^{+-1}] stored by (basis index, exponent)."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Optional[Mapping] = None):
        self.nvars = nvars
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    @classmethod
    def from_terms(cls, table: StructureTable, terms: Mapping, nvars: Optional[int] = None) -> "LoopElement":
        """From {basis label or index: LaurentPoly}."""
        out: dict = {}
        for lab, poly in terms.items():
            i = table.index(lab)
            if nvars is None:
                nvars = poly.nvars
            for m, c in poly.terms.items():
                linalg.axpy(out, 1, {(i, m): c})
        return cls(nvars or 0, out)

    @classmethod
    def basis(cls, table: StructureTable, label, m: Sequence[int], coef=1) -> "LoopElement":
        return cls(len(m), {(table.index(label), tuple(m)): cyc(coef)})

    @property
    def terms(self) -> dict:
        by_index: dict = {}
        for (i, m), c in self.coeffs.items():
            by_index.setdefault(i, {})[m] = c
        return {i: LaurentPoly(self.nvars, d) for i, d in sorted(by_index.items())}

    def degrees(self) -> set:
        return {m for (_, m) in self.coeffs}

    def __add__(self, other: "LoopElement") -> "LoopElement":
        out = dict(self.coeffs)
        linalg.axpy(out, 1, other.coeffs)
        return LoopElement(self.nvars, out)

    def __sub__(self, other: "LoopElement") -> "LoopElement":
        out = dict(self.coeffs)
        linalg.axpy(out, -1, other.coeffs)
        return LoopElement(self.nvars, out)

    def __neg__(self):
        return LoopElement(self.nvars, {k: -v for k, v in self.coeffs.items()})

    def scale(self, c) -> "LoopElement":
        return LoopElement(self.nvars, linalg.scale(self.coeffs, c))

    __rmul__ = scale

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self.nvars == other.nvars and _vec_eq(self.coeffs, other.coeffs)

    __hash__ = None

    def format(self, table: StructureTable, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, m), c in sorted(self.coeffs.items()):
            s = format_term(m, c, var)
            s = table.labels[i] if s == "1" else ("-" + table.labels[i] if s == "-1" else f"{s}*{table.labels[i]}")
            parts.append(s)
        out = parts[0]
        for s in parts[1:]:
            out += " - " + s[1:] if s.startswith("-") else " + " + s
        return out

    def __repr__(self):
        return f"LoopElement({self.nvars}, {self.coeffs!r})"


def bracket_graded(table: StructureTable, x: Mapping, y: Mapping) -> dict:
    """Bracket of graded coefficient maps {(i, m): c}."""
    out: dict = {}
    for (i, a), u in x.items():
        for (j, b), v in y.items():
            br = table.brackets.get((i, j))
            if br:
                m = tuple(p + q for p, q in zip(a, b))
                uv = u * v
                for k, c in br.items():
                    key = (k, m)
                    s = out.get(key, 0) + uv * c
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
    return out


def bracket_loop(table: StructureTable, x: LoopElement, y: LoopElement) -> LoopElement:
    if x.nvars != y.nvars:
        raise ValueError(f"variable count mismatch: {x.nvars} vs {y.nvars}")
    return LoopElement(x.nvars, bracket_graded(table, x.coeffs, y.coeffs))
