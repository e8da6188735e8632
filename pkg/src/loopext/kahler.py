"""Kähler differentials of a Laurent polynomial ring modulo exact forms.

A one-form is written in the logarithmic frame ``sum_i b_i dt_i/t_i``.  The
quotient by exact forms is graded by the exponent of ``t``; in degree ``m``
the only relation is ``sum_i m_i t^m dlog t_i = d(t^m)``.  A class is
stored in normal form: for ``m != 0`` the coordinate at the first index with
``m_i != 0`` is eliminated, so degree ``m`` contributes ``n - 1`` free
coordinates and degree zero contributes ``n``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .scalars import CycScalar, LaurentPoly, RingAut, Window, cyc, format_monomial, format_scalar, var_names


class OneForm:
    """``sum_i comps[i] * dt_i/t_i``."""

    __slots__ = ("nvars", "comps")

    def __init__(self, nvars: int, comps: Optional[Mapping[int, LaurentPoly]] = None):
        self.nvars = nvars
        self.comps = {i: p for i, p in (comps or {}).items() if not p.is_zero()}

    @classmethod
    def plain(cls, a: LaurentPoly, i: int) -> "OneForm":
        """The form ``a dt_i`` (converted to the logarithmic frame)."""
        return cls(a.nvars, {i: a * LaurentPoly.var(a.nvars, i)})

    @classmethod
    def dlog(cls, a: LaurentPoly, i: int) -> "OneForm":
        return cls(a.nvars, {i: a})

    def __add__(self, other: "OneForm") -> "OneForm":
        out = dict(self.comps)
        for i, p in other.comps.items():
            out[i] = out[i] + p if i in out else p
        return OneForm(self.nvars, out)

    def __neg__(self):
        return OneForm(self.nvars, {i: -p for i, p in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def mul(self, a) -> "OneForm":
        """Multiply by a ring element or scalar."""
        return OneForm(self.nvars, {i: p * a for i, p in self.comps.items()})

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.nvars == other.nvars and self.comps == other.comps

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.comps

    def __repr__(self):
        names = var_names(self.nvars)
        return "OneForm(" + " + ".join(f"({p})*dlog({names[i]})" for i, p in sorted(self.comps.items())) + ")"


def differential(a: LaurentPoly) -> OneForm:
    """d(t^m) = sum_i m_i t^m dlog t_i, extended linearly."""
    comps: dict = {}
    for m, c in a.terms.items():
        for i, e in enumerate(m):
            if e:
                comps.setdefault(i, {})[m] = c * e
    return OneForm(a.nvars, {i: LaurentPoly(a.nvars, t) for i, t in comps.items()})


def pivot_index(m: Sequence[int]) -> Optional[int]:
    for i, x in enumerate(m):
        if x:
            return i
    return None


def normal_component(m: tuple, vec: Mapping[int, object]) -> dict:
    """Normal form of the class of ``sum_i vec[i] t^m dlog t_i`` as {(m, i): c}."""
    p = pivot_index(m)
    if p is None:
        return {(m, i): c for i, c in vec.items() if c}
    cp = vec.get(p)
    out = {}
    for i, c in vec.items():
        if i == p:
            continue
        if cp:
            c = c - cp * Fraction(m[i], m[p]) if m[i] else c
        if c:
            out[(m, i)] = c
    if cp:
        for i, mi in enumerate(m):
            if i != p and mi and i not in vec:
                out[(m, i)] = -cp * Fraction(mi, m[p])
    return out


class DifferentialClass:
    """Element of Omega/dS in normal form, stored as {(degree, index): coefficient}."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Optional[Mapping] = None, normalized: bool = False):
        self.nvars = nvars
        if normalized:
            self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}
        else:
            out: dict = {}
            by_deg: dict = {}
            for (m, i), c in (coeffs or {}).items():
                by_deg.setdefault(tuple(m), {})
                d = by_deg[tuple(m)]
                s = d.get(i, 0) + c
                d[i] = s
            for m, vec in by_deg.items():
                linalg.axpy(out, 1, normal_component(m, vec))
            self.coeffs = out

    @classmethod
    def zero(cls, nvars: int) -> "DifferentialClass":
        return cls(nvars, {}, True)

    @classmethod
    def dlog(cls, m: Sequence[int], i: int, coef=1) -> "DifferentialClass":
        """Class of ``coef * t^m dlog t_i``."""
        m = tuple(m)
        return cls(len(m), normal_component(m, {i: cyc(coef)}), True)

    @property
    def graded(self) -> dict:
        """Degree -> coefficient vector (length n) in normal form."""
        out: dict = {}
        for (m, i), c in sorted(self.coeffs.items()):
            vec = out.setdefault(m, [CycScalar.rational(0)] * self.nvars)
            vec[i] = cyc(c)
        return {m: tuple(v) for m, v in out.items()}

    def __add__(self, other: "DifferentialClass") -> "DifferentialClass":
        out = dict(self.coeffs)
        linalg.axpy(out, 1, other.coeffs)
        return DifferentialClass(self.nvars, out, True)

    def __neg__(self):
        return DifferentialClass(self.nvars, {k: -v for k, v in self.coeffs.items()}, True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DifferentialClass":
        return DifferentialClass(self.nvars, linalg.scale(self.coeffs, c), True)

    __rmul__ = scale

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, DifferentialClass):
            d = dict(self.coeffs)
            linalg.axpy(d, -1, other.coeffs)
            return self.nvars == other.nvars and not d
        if other == 0:
            return not self.coeffs
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        return f"DifferentialClass({format_class(self.coeffs, self.nvars)!r})"

    def __str__(self):
        return format_class(self.coeffs, self.nvars)


def format_class(coeffs: Mapping, nvars: int, var: str = "t") -> str:
    if not coeffs:
        return "0"
    names = var_names(nvars, var)
    parts = []
    for (m, i), c in sorted(coeffs.items()):
        cs = format_scalar(cyc(c))
        if "+" in cs or "-" in cs[1:]:
            cs = f"({cs})"
        mono = format_monomial(m, var)
        factors = ([mono] if mono else []) + [f"dlog({names[i]})"]
        if cs in ("1", "-1"):
            parts.append(("-" if cs == "-1" else "") + " * ".join(factors))
        else:
            parts.append(" * ".join([cs] + factors))
    return join_signed(parts)


def join_signed(parts: Sequence[str]) -> str:
    """Join terms with + and -, folding a leading minus sign into the operator."""
    out = parts[0]
    for s in parts[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def bar(omega: OneForm) -> DifferentialClass:
    """Normal form of the class of a one-form modulo exact forms."""
    by_deg: dict = {}
    for i, p in omega.comps.items():
        for m, c in p.terms.items():
            by_deg.setdefault(m, {})[i] = c
    out: dict = {}
    for m, vec in by_deg.items():
        out.update(normal_component(m, vec))
    return DifferentialClass(omega.nvars, out, True)


def class_of(a: LaurentPoly, b: LaurentPoly) -> DifferentialClass:
    """bar(a db)."""
    return bar(differential(b).mul(a))


# ---------------------------------------------------------------------------
# automorphism action


def act_key(theta: RingAut, m: tuple, i: int) -> dict:
    """Normal-form image of the class of t^m dlog t_i."""
    img = theta.exponent_image(m)
    lam = theta.monomial_scale(m)
    vec = {}
    for k in range(theta.nvars):
        a = theta.matrix[k][i]
        if a:
            vec[k] = lam * a
    return normal_component(img, vec)


def act_coeffs(theta: RingAut, coeffs: Mapping) -> dict:
    out: dict = {}
    for (m, i), c in coeffs.items():
        linalg.axpy(out, c, act_key(theta, m, i))
    return out


def aut_act_class(theta: RingAut, z: DifferentialClass) -> DifferentialClass:
    """Image of a class under t^m dlog t_i -> lambda^m t^{Am} sum_k A_ki dlog t_k."""
    if theta.nvars != z.nvars:
        raise ValueError(f"dimension mismatch: {theta.nvars} vs {z.nvars}")
    return DifferentialClass(z.nvars, act_coeffs(theta, z.coeffs), True)


# ---------------------------------------------------------------------------
# window bases


def degree_keys(m: tuple) -> list:
    """Normal-form coordinate keys in degree m."""
    p = pivot_index(m)
    return [(m, i) for i in range(len(m)) if i != p]


def degree_dim(m: Sequence[int]) -> int:
    return len(degree_keys(tuple(m)))


def window_keys(window: Window) -> list:
    out = []
    for m in window.degrees():
        out.extend(degree_keys(m))
    return out


def window_basis(window: Window) -> list[DifferentialClass]:
    return [DifferentialClass(window.nvars, {k: Fraction(1)}, True) for k in window_keys(window)]


def brute_force_dims(window: Window) -> dict:
    """Per-degree dimension of Omega/dS on the window by rank of exact forms.

    The quotient is spanned by t^m dlog t_i (n per degree); exact forms are
    d(t^m) for every m in the window.  No normal form is used.
    """
    n = window.nvars
    ech = linalg.Echelon()
    for m in window.degrees():
        form = differential(LaurentPoly.monomial(m))
        ech.add({(mm, i): c for i, p in form.comps.items() for mm, c in p.terms.items()})
    pivots_per_degree: dict = {}
    for (m, _i) in ech.rows:
        pivots_per_degree[m] = pivots_per_degree.get(m, 0) + 1
    return {m: n - pivots_per_degree.get(m, 0) for m in window.degrees()}


def _orbit(gens: Sequence[RingAut], m: tuple) -> list:
    seen = {m}
    order = [m]
    frontier = [m]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.exponent_image(x)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(order)


def fixed_classes(gens: Sequence[RingAut], window: Window) -> list[DifferentialClass]:
    """Basis of the subspace of the window fixed by every generator."""
    for g in gens:
        if g.order() is None:
            raise ValueError(f"generator {g} has infinite order")
    done: set = set()
    basis = []
    for m in window.degrees():
        if m in done:
            continue
        orbit = _orbit(gens, m)
        for x in orbit:
            if x not in window:
                raise ValueError(f"degree orbit of {m} leaves the window")
        done.update(orbit)
        keys = [k for x in orbit for k in degree_keys(x)]
        if not keys:
            continue
        rows: dict = {}
        for gi, g in enumerate(gens):
            for k in keys:
                img = dict(act_key(g, k[0], k[1]))
                linalg.axpy(img, -1, {k: 1})
                for key, c in img.items():
                    rows.setdefault((gi, key), {})[k] = c
        for v in linalg.nullspace(list(rows.values()), keys):
            basis.append(DifferentialClass(window.nvars, v, True))
    return basis


def pullback_key(orders: Sequence[int], r: tuple, i: int) -> dict:
    """Image of class(t^r dlog t_i) under t_j = s_j^{orders[j]}: orders[i] * class(s^{order*r} dlog s_i)."""
    m = tuple(o * x for o, x in zip(orders, r))
    return normal_component(m, {i: Fraction(orders[i])})


def pullback(orders: Sequence[int], z: DifferentialClass) -> DifferentialClass:
    out: dict = {}
    for (r, i), c in z.coeffs.items():
        linalg.axpy(out, c, pullback_key(orders, r, i))
    return DifferentialClass(z.nvars, out, True)
