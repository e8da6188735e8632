"""Lifting automorphisms of a loop algebra to a central extension.

An automorphism theta of ``L = g (x) R`` lifts to ``L_P = L + V`` exactly when
there are an invertible ``mu`` on ``V`` and a linear ``gamma: L -> V`` with

    mu(P(x, y)) - P(theta x, theta y) = -gamma([x, y]),

and then ``x + v -> theta(x) + gamma(x) + mu(v)`` is the lift.  The solver
looks for ``mu`` in the family ``c * (action induced by the ring part of
theta)`` and solves for ``c`` and ``gamma`` jointly by exact elimination.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from . import linalg
from .extension import OMEGA, Cocycle, ExtElement, ext_bracket, format_central
from .kahler import act_coeffs, window_keys
from .lie_core import (GAut, LoopElement, StructureTable, bracket_graded, exp_ad, named_aut,
                       torus_aut, weyl_representative)
from .scalars import CycScalar, LaurentPoly, RingAut, Window, cyc, format_scalar, parse_scalar

UNSUPPORTED = "unsupported automorphism shape"


# ---------------------------------------------------------------------------
# automorphisms of the loop algebra


@dataclass(frozen=True)
class LinearFactor:
    """A constant automorphism of g, extended R-linearly."""

    aut: GAut

    def apply(self, coeffs: Mapping) -> dict:
        out: dict = {}
        cols = self.aut.columns
        for (i, m), c in coeffs.items():
            for j, v in cols[i].items():
                _acc(out, (j, m), c * v)
        return out

    def inverse(self) -> "LinearFactor":
        return LinearFactor(self.aut.inverse())

    def describe(self) -> str:
        return self.aut.name or "linear"


@dataclass(frozen=True)
class MonomialTwist:
    """R-linear map b_i t^m -> coef_i b_{target_i} t^{m + shift_i}."""

    images: tuple  # per basis index: (target, coefficient, shift)
    name: str = "twist"

    def apply(self, coeffs: Mapping) -> dict:
        out: dict = {}
        for (i, m), c in coeffs.items():
            j, coef, shift = self.images[i]
            _acc(out, (j, tuple(x + y for x, y in zip(m, shift))), c * coef)
        return out

    def inverse(self) -> "MonomialTwist":
        inv: list = [None] * len(self.images)
        for i, (j, coef, shift) in enumerate(self.images):
            inv[j] = (i, cyc(coef).inverse(), tuple(-x for x in shift))
        return MonomialTwist(tuple(inv), self.name + "^-1")

    def describe(self) -> str:
        return self.name


@dataclass(frozen=True)
class BaseFactor:
    """Ring automorphism acting on the coefficients: b t^m -> lambda^m b t^{Am}."""

    ring: RingAut

    def apply(self, coeffs: Mapping) -> dict:
        out: dict = {}
        for (i, m), c in coeffs.items():
            _acc(out, (i, self.ring.exponent_image(m)), c * self.ring.monomial_scale(m))
        return out

    def inverse(self) -> "BaseFactor":
        return BaseFactor(self.ring.inverse())

    def describe(self) -> str:
        r = self.ring
        rows = [[r.matrix[j][i] for j in range(r.nvars)] for i in range(r.nvars)]
        return f"base(rows={rows}, scales=[{', '.join(format_scalar(s) for s in r.scales)}])"


def _acc(d: dict, key, val):
    s = d.get(key, 0) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


class LoopAut:
    """Composition ``factors[0] o factors[1] o ...`` of loop-algebra automorphisms."""

    def __init__(self, table: StructureTable, nvars: int, factors: Sequence = (), label: str = ""):
        self.table = table
        self.nvars = nvars
        self.factors = tuple(factors)
        for f in self.factors:
            if isinstance(f, BaseFactor) and f.ring.nvars != nvars:
                raise ValueError("ring automorphism has the wrong number of variables")
            if not isinstance(f, (LinearFactor, MonomialTwist, BaseFactor)):
                raise ValueError(UNSUPPORTED)
        self.label = label or " * ".join(f.describe() for f in self.factors) or "id"

    @classmethod
    def identity(cls, table: StructureTable, nvars: int) -> "LoopAut":
        return cls(table, nvars, (), "id")

    @classmethod
    def linear(cls, aut: GAut, nvars: int) -> "LoopAut":
        return cls(aut.table, nvars, (LinearFactor(aut),), aut.name or "linear")

    @classmethod
    def base(cls, table: StructureTable, ring: RingAut) -> "LoopAut":
        return cls(table, ring.nvars, (BaseFactor(ring),))

    @classmethod
    def twist(cls, table: StructureTable, columns: Mapping) -> "LoopAut":
        """R-linear map from {basis: {basis: LaurentPoly}} columns.

        Only monomial matrices are accepted: each column has one monomial
        entry and the targets are a permutation of the basis.
        """
        images: list = [None] * table.dim
        nvars = None
        for lab, col in columns.items():
            i = table.index(lab)
            entries = [(table.index(k), p) for k, p in col.items() if not p.is_zero()]
            if len(entries) != 1 or not entries[0][1].is_monomial():
                raise ValueError(UNSUPPORTED)
            j, p = entries[0]
            (m, c), = p.terms.items()
            nvars = p.nvars
            images[i] = (j, c, m)
        if nvars is None:
            raise ValueError(UNSUPPORTED)
        for i in range(table.dim):
            if images[i] is None:
                images[i] = (i, CycScalar.rational(1), (0,) * nvars)
        if sorted(j for j, _, _ in images) != list(range(table.dim)):
            raise ValueError(UNSUPPORTED)
        return cls(table, nvars, (MonomialTwist(tuple(images)),))

    @classmethod
    def torus_shift(cls, table: StructureTable, shifts: Sequence[Sequence[int]],
                    scalars: Optional[Sequence] = None) -> "LoopAut":
        """e_a -> prod c_i^{a_i} t^{sum a_i k_i} e_a, Cartan part fixed."""
        nvars = len(shifts[0])
        scalars = [cyc(c) for c in (scalars or [1] * table.rank)]
        images = []
        for j in range(table.dim):
            w = table.weight(j)
            coef = CycScalar.rational(1)
            for c, a in zip(scalars, w):
                if a:
                    coef = coef * c ** a
            shift = tuple(sum(a * k[v] for a, k in zip(w, shifts)) for v in range(nvars))
            images.append((j, coef, shift))
        return cls(table, nvars, (MonomialTwist(tuple(images), "shift"),))

    def apply(self, coeffs: Mapping) -> dict:
        out = dict(coeffs)
        for f in reversed(self.factors):
            out = f.apply(out)
        return out

    def __call__(self, x: LoopElement) -> LoopElement:
        return LoopElement(self.nvars, self.apply(x.coeffs))

    def compose(self, other: "LoopAut") -> "LoopAut":
        return LoopAut(self.table, self.nvars, self.factors + other.factors,
                       f"{self.label} * {other.label}")

    def inverse(self) -> "LoopAut":
        return LoopAut(self.table, self.nvars, tuple(f.inverse() for f in reversed(self.factors)),
                       f"({self.label})^-1")

    def ring_part(self) -> RingAut:
        """The ring automorphism induced on R (R-linear factors contribute nothing)."""
        out = RingAut.identity(self.nvars)
        for f in self.factors:
            if isinstance(f, BaseFactor):
                out = out.compose(f.ring)
        return out

    def is_r_linear(self) -> bool:
        return not any(isinstance(f, BaseFactor) for f in self.factors)

    def __repr__(self):
        return f"LoopAut({self.label})"


def window_pairs(table: StructureTable, window: Window, ordered: bool = True):
    """Basis pairs ((i, a), (j, b)) with a, b and a + b in the window."""
    degs = window.degrees()
    elems = [(i, a) for a in degs for i in range(table.dim)]
    for p, u in enumerate(elems):
        rest = elems if ordered else elems[p:]
        for v in rest:
            s = tuple(x + y for x, y in zip(u[1], v[1]))
            if s in window:
                yield u, v


def check_loop_automorphism(theta: LoopAut, window: Window) -> tuple[int, Optional[tuple]]:
    t = theta.table
    n = 0
    for u, v in window_pairs(t, window, ordered=False):
        n += 1
        lhs = theta.apply(bracket_graded(t, {u: 1}, {v: 1}))
        rhs = bracket_graded(t, theta.apply({u: 1}), theta.apply({v: 1}))
        d = dict(lhs)
        linalg.axpy(d, -1, rhs)
        if d:
            return n, (u, v)
    return n, None


# ---------------------------------------------------------------------------
# lift solver


@dataclass
class LiftCertificate:
    theta: LoopAut
    cocycle: Cocycle
    scale: object                       # overall scalar c in mu = c * (induced action)
    ring: Optional[RingAut]             # None when V is abstract
    gamma: dict                         # (basis, degree) -> central vector
    window: Window
    residual_checked: int = 0

    def mu(self, v: Mapping) -> dict:
        if self.ring is not None:
            v = act_coeffs(self.ring, v)
        return linalg.scale(v, self.scale)

    def mu_inverse(self, v: Mapping) -> dict:
        if self.ring is not None:
            v = act_coeffs(self.ring.inverse(), v)
        return linalg.scale(v, Fraction(1) / self.scale)

    def gamma_of(self, coeffs: Mapping) -> dict:
        out: dict = {}
        for (i, m), c in coeffs.items():
            if m not in self.window:
                raise ValueError(f"degree {m} is outside the certified window")
            val = self.gamma.get((i, m))
            if val:
                linalg.axpy(out, c, val)
        return out

    def mu_scalar(self) -> Optional[object]:
        """mu as a scalar when it is one (abstract V, or Omega with trivial ring action)."""
        if self.ring is None or self.ring.is_identity():
            return self.scale
        return None

    def to_report(self) -> dict:
        t = self.cocycle.table
        gamma = [{"basis": t.labels[i], "degree": list(m),
                  "value": format_central(self.cocycle.codomain, self.cocycle.nvars, v)}
                 for (i, m), v in sorted(self.gamma.items()) if v]
        mu = format_scalar(cyc(self.scale))
        if self.ring is not None and not self.ring.is_identity():
            mu = f"{mu} * induced({BaseFactor(self.ring).describe()})"
        return {"status": "lifted", "mu": mu, "gamma_support": gamma,
                "residual_checked": self.residual_checked,
                "mu_family": "scalar multiples of the action induced by the ring part of theta"}


@dataclass
class NoLift:
    witness: tuple
    reason: str
    cocycle: Cocycle

    def to_report(self) -> dict:
        t = self.cocycle.table
        (i, a), (j, b) = self.witness
        return {"status": "no_lift", "reason": self.reason,
                "witness": [{"basis": t.labels[i], "degree": list(a)},
                            {"basis": t.labels[j], "degree": list(b)}],
                "mu_family": "scalar multiples of the action induced by the ring part of theta"}


_C = "c"
_RHS = ("rhs",)


def _gamma_key(col):
    return (col[1], col[2], repr(col[3]))


def solve_lift(theta: LoopAut, P: Cocycle, window: Window) -> Union[LiftCertificate, NoLift]:
    """Find (mu, gamma) with mu P - P(theta x theta) = delta(gamma) on the window."""
    if not isinstance(theta, LoopAut):
        raise ValueError(UNSUPPORTED)
    if theta.table.name != P.table.name or theta.nvars != P.nvars:
        raise ValueError("automorphism and cocycle live on different algebras")
    table = P.table
    omega = P.codomain == OMEGA
    ring = theta.ring_part() if omega else None

    # pass 1: evaluate both sides on every pair
    data = []
    groups: dict = {}
    for u, v in window_pairs(table, window, ordered=False):
        if u == v:
            continue
        pv = P.pair(u[0], u[1], v[0], v[1])
        mu0 = act_coeffs(ring, pv) if (omega and pv) else dict(pv)
        q = P.evaluate(theta.apply({u: 1}), theta.apply({v: 1}))
        br = table.bracket_basis(u[0], v[0])
        d = tuple(x + y for x, y in zip(u[1], v[1]))
        keys = set(mu0) | set(q)
        if br:
            groups.setdefault(d, set()).update(keys)
        data.append((u, v, d, mu0, q, br))

    ech = linalg.Echelon(priority=lambda col: (0,) + _gamma_key(col) if col != _C else (1,),
                         late=(_C,), rhs=_RHS)
    for u, v, d, mu0, q, br in data:
        keys = set(mu0) | set(q)
        if br:
            keys |= groups.get(d, set())
        for kappa in sorted(keys, key=repr):
            row = {}
            if mu0.get(kappa):
                row[_C] = mu0[kappa]
            for k, coef in br.items():
                row[("g", k, d, kappa)] = coef
            if q.get(kappa):
                row[_RHS] = q[kappa]
            if not row:
                continue
            rem = ech.add(row)
            if rem and _RHS in rem:
                return NoLift((u, v), "inconsistent equations", P)
        crow = ech.rows.get(_C)
        if crow is not None and set(crow) == {_C}:
            return NoLift((u, v), "centre action forced to zero", P)

    if _C in ech.rows:
        scale = ech.rows[_C].get(_RHS, 0)
    else:
        scale = Fraction(1)
    if not scale:
        return NoLift(data[-1][:2] if data else ((0, (0,) * P.nvars),) * 2, "centre action forced to zero", P)
    gamma: dict = {}
    for col, row in ech.rows.items():
        if col == _C:
            continue
        val = row.get(_RHS, 0) - row.get(_C, 0) * scale
        if val:
            _, k, d, kappa = col
            gamma.setdefault((k, d), {})[kappa] = val
    cert = LiftCertificate(theta, P, scale, ring, gamma, window)
    n, wit = certificate_residual(cert)
    if wit is not None:
        raise ArithmeticError(f"lift certificate fails its own residual check at {wit}")
    cert.residual_checked = n
    return cert


def certificate_residual(cert: LiftCertificate) -> tuple[int, Optional[tuple]]:
    """Re-evaluate mu P - P(theta x theta) + gamma o bracket on every ordered window pair."""
    P, theta = cert.cocycle, cert.theta
    table = P.table
    n = 0
    for u, v in window_pairs(table, cert.window, ordered=True):
        n += 1
        tot = cert.mu(P.pair(u[0], u[1], v[0], v[1]))
        linalg.axpy(tot, -1, P.evaluate(theta.apply({u: 1}), theta.apply({v: 1})))
        linalg.axpy(tot, 1, cert.gamma_of(bracket_graded(table, {u: 1}, {v: 1})))
        if tot:
            return n, (u, v)
    return n, None


# ---------------------------------------------------------------------------
# lifted maps


class LiftedAut:
    """x + v -> theta(x) + gamma(x) + mu(v)."""

    def __init__(self, theta: LoopAut, cert: LiftCertificate):
        if cert.theta is not theta and cert.theta.label != theta.label:
            raise ValueError("stale certificate: it was computed for a different automorphism")
        self.theta = theta
        self.cert = cert
        self._inv = theta.inverse()

    @property
    def cocycle(self) -> Cocycle:
        return self.cert.cocycle

    def __call__(self, x: ExtElement) -> ExtElement:
        loop = self.theta.apply(x.loop.coeffs)
        cen = self.cert.gamma_of(x.loop.coeffs)
        linalg.axpy(cen, 1, self.cert.mu(x.central))
        return ExtElement(LoopElement(x.nvars, loop), cen)

    def inverse(self, y: ExtElement) -> ExtElement:
        pre = self._inv.apply(y.loop.coeffs)
        cen = dict(y.central)
        linalg.axpy(cen, -1, self.cert.gamma_of(pre))
        return ExtElement(LoopElement(y.nvars, pre), self.cert.mu_inverse(cen))


def build_lifted(theta: LoopAut, cert: LiftCertificate) -> LiftedAut:
    if isinstance(cert, NoLift):
        raise ValueError("no lift exists; cannot build a lifted automorphism")
    if cert.cocycle.table.name != theta.table.name:
        raise ValueError("stale certificate: cocycle is on a different algebra")
    return LiftedAut(theta, cert)


def base_lift(table: StructureTable, ring: RingAut, P: Cocycle, window: Window) -> LiftedAut:
    """Lift of a ring automorphism with gamma = 0 and mu the induced action on the centre."""
    theta = LoopAut.base(table, ring)
    cert = LiftCertificate(theta, P, Fraction(1), ring if P.codomain == OMEGA else None, {}, window)
    n, wit = certificate_residual(cert)
    if wit is not None:
        raise ValueError(f"the induced action does not lift (fails on {wit})")
    cert.residual_checked = n
    return LiftedAut(theta, cert)


def check_lifted_automorphism(lifted: LiftedAut, window: Window) -> tuple[int, Optional[tuple]]:
    """theta_P([a, b]_P) = [theta_P a, theta_P b]_P = [theta a, theta b]_P on window pairs."""
    P = lifted.cocycle
    n = 0
    for u, v in window_pairs(P.table, window, ordered=False):
        n += 1
        a = ExtElement(LoopElement(P.nvars, {u: Fraction(1)}))
        b = ExtElement(LoopElement(P.nvars, {v: Fraction(1)}))
        lhs = lifted(ext_bracket(P, a, b))
        rhs = ext_bracket(P, lifted(a), lifted(b))
        plain = ext_bracket(P, ExtElement(lifted.theta(a.loop)), ExtElement(lifted.theta(b.loop)))
        if lhs != rhs or lhs != plain:
            return n, (u, v)
    return n, None


@dataclass
class ScalarAction:
    value: object


@dataclass
class NotScalar:
    element: dict
    image: dict


def centre_basis(P: Cocycle, window: Window) -> list[dict]:
    if P.codomain == OMEGA:
        keys = sorted(window_keys(window), key=lambda k: (any(k[0]), k))
        return [{k: Fraction(1)} for k in keys]
    return [{name: Fraction(1)} for name in P.codomain]


def scalar_centre_action(lifted: LiftedAut, window: Window) -> Union[ScalarAction, NotScalar]:
    """lambda if the lift acts on the window-truncated centre as lambda * id."""
    P = lifted.cocycle
    lam = None
    for z in centre_basis(P, window):
        img = lifted(ExtElement(LoopElement(P.nvars), z))
        (key, one), = z.items()
        c = img.central.get(key, 0)
        if img.loop or set(img.central) - {key} or not c:
            return NotScalar(z, img.central)
        if lam is None:
            lam = c
        elif c != lam:
            return NotScalar(z, img.central)
    return ScalarAction(lam if lam is not None else Fraction(1))


def form_preserved(aut: GAut) -> bool:
    """(x|y) = (aut x | aut y) on all basis pairs."""
    t = aut.table
    for i in range(t.dim):
        for j in range(i, t.dim):
            if t.form(aut.columns[i], aut.columns[j]) != t.killing_matrix[i][j]:
                return False
    return True


# ---------------------------------------------------------------------------
# the stabiliser of the line through (1, zeta)


def gl2z_zeta_test(M: Sequence[Sequence[int]], zeta_value) -> Optional[CycScalar]:
    """mu with M (1, zeta)^T = mu (1, zeta)^T, or None."""
    (p1, p2), (q1, q2) = M
    det = p1 * q2 - p2 * q1
    if det not in (1, -1):
        raise ValueError(f"matrix has determinant {det}, expected +-1")
    z = cyc(zeta_value)
    mu = p2 * z + p1
    if not mu:
        return None
    if q2 * z + q1 == z * mu:
        return mu
    return None


def gl2z_zeta_enumerate(zeta_value, bound: int) -> list[tuple]:
    """All (M, mu) with det M = +-1, entries in [-bound, bound] and M stabilising the line."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    z = cyc(zeta_value)
    rng = range(-bound, bound + 1)
    out = []
    for p1, p2, q1, q2 in itertools.product(rng, repeat=4):
        if p1 * q2 - p2 * q1 not in (1, -1):
            continue
        M = ((p1, p2), (q1, q2))
        mu = gl2z_zeta_test(M, z)
        if mu is not None:
            out.append((M, mu))
    return out


def mat_mul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def mat_inv(A):
    (a, b), (c, d) = A
    det = a * d - b * c
    return ((d * det, -b * det), (-c * det, a * det))


def group_check(found: Sequence[tuple], bound: int) -> dict:
    """Closure, inverses and multiplicativity of mu, within the entry bound."""
    table = {M: mu for M, mu in found}
    closed = True
    multiplicative = True
    for (A, ma), (B, mb) in itertools.product(found, repeat=2):
        C = mat_mul(A, B)
        if max(abs(x) for row in C for x in row) > bound:
            continue
        if C not in table:
            closed = False
        elif table[C] != ma * mb:
            multiplicative = False
    inverses = all(mat_inv(A) in table for A in table
                   if max(abs(x) for row in mat_inv(A) for x in row) <= bound)
    return {"closed": closed, "inverses": inverses, "mu_multiplicative": multiplicative}


def ring_aut_of_matrix(M: Sequence[Sequence[int]], scales: Optional[Sequence] = None) -> RingAut:
    """Ring automorphism t_i -> scale_i * t1^{M[i][0]} t2^{M[i][1]} (rows are images)."""
    return RingAut.from_rows(M, scales)


# ---------------------------------------------------------------------------
# text form of automorphisms


def _parse_vec(table: StructureTable, text: str) -> dict:
    if "=" in text:
        raise ValueError(f"malformed element {text!r}")
    out: dict = {}
    for part in text.split("+"):
        part = part.strip()
        if "*" in part:
            c, lab = part.rsplit("*", 1)
            linalg.axpy(out, parse_scalar(c), {table.index(lab.strip()): 1})
        else:
            sign = -1 if part.startswith("-") else 1
            linalg.axpy(out, sign, {table.index(part.lstrip("-").strip()): 1})
    return out


def _parse_int_rows(text: str) -> list[list[int]]:
    return [[int(x) for x in row.split(",")] for row in text.split(";")]


def parse_factor(text: str, table: StructureTable, nvars: int) -> LoopAut:
    text = text.strip()
    head, _, rest = text.partition(":")
    try:
        if head in ("id", "identity"):
            return LoopAut.identity(table, nvars)
        if head == "weyl":
            pair = rest.split(",")
            if len(pair) != 2:
                raise ValueError(f"weyl needs two root vectors E,F, got {rest!r}")
            e, f = pair
            return LoopAut(table, nvars, (LinearFactor(weyl_representative(table, e.strip(), f.strip())),),
                           text)
        if head == "exp":
            parts = rest.split(":")
            x = _parse_vec(table, parts[0])
            c = parse_scalar(parts[1]) if len(parts) > 1 else 1
            return LoopAut(table, nvars, (LinearFactor(exp_ad(table, x, c)),), text)
        if head == "torus":
            scal = [parse_scalar(s) for s in rest.split(",")]
            if len(scal) != table.rank:
                raise ValueError(f"torus needs {table.rank} scalars")
            return LoopAut(table, nvars, (LinearFactor(torus_aut(table, scal)),), text)
        if head == "diagram":
            return LoopAut(table, nvars, (LinearFactor(named_aut(table, rest)),), text)
        if head == "shift":
            shifts = _parse_int_rows(rest)
            if len(shifts) != table.rank or any(len(s) != nvars for s in shifts):
                raise ValueError(f"shift needs {table.rank} degree vectors of length {nvars}")
            aut = LoopAut.torus_shift(table, shifts)
            aut.label = text
            return aut
        if head == "base":
            kind, _, arg = rest.partition(":")
            if kind == "scale":
                scal = [parse_scalar(s) for s in arg.split(",")]
                if len(scal) != nvars:
                    raise ValueError(f"base scaling needs {nvars} scalars")
                return LoopAut(table, nvars, (BaseFactor(RingAut.scaling(scal)),), text)
            if kind == "matrix":
                mat, _, sc = arg.partition(":")
                rows = _parse_int_rows(mat)
                scal = [parse_scalar(s) for s in sc.split(",")] if sc else None
                if len(rows) != nvars:
                    raise ValueError(f"base matrix needs {nvars} rows")
                return LoopAut(table, nvars, (BaseFactor(RingAut.from_rows(rows, scal)),), text)
    except (KeyError, IndexError) as exc:
        raise ValueError(f"malformed automorphism {text!r}: {exc}") from None
    raise ValueError(f"malformed automorphism {text!r}")


_HEADS = ("id", "identity", "weyl", "exp", "torus", "diagram", "shift", "base")


def split_word(text: str) -> list[str]:
    """Split a composition on '*', keeping '*' that sits inside a factor (e.g. ``exp:2*e``)."""
    parts: list[str] = []
    for piece in text.split("*"):
        head = piece.strip().partition(":")[0]
        if parts and head not in _HEADS:
            parts[-1] += "*" + piece
        else:
            parts.append(piece)
    return [p.strip() for p in parts if p.strip()]


def parse_theta(text: str, table: StructureTable, nvars: int) -> LoopAut:
    """Parse words like ``weyl:e,f``, ``base:scale:2`` or ``exp:e:1 * shift:1``."""
    parts = split_word(text)
    if not parts:
        raise ValueError("empty automorphism")
    out = LoopAut.identity(table, nvars)
    for p in parts:
        out = out.compose(parse_factor(p, table, nvars))
    out.label = text
    return out
