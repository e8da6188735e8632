"""Exact scalars and Laurent polynomials.

``CycScalar`` is an element of a cyclotomic field Q(zeta_N) written in the
power basis of zeta_N modulo the N-th cyclotomic polynomial.  Operands with
different conductors are promoted to the lcm before combining; a result that
happens to be rational always comes back with conductor 1.

``LaurentPoly`` is a sparse map from integer exponent vectors to
``CycScalar`` coefficients, kept in lexicographic exponent order.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from . import linalg

Exponent = tuple  # tuple[int, ...]
Number = Union[int, Fraction, "CycScalar"]


@lru_cache(maxsize=None)
def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    from sympy import Symbol, cyclotomic_poly

    poly = cyclotomic_poly(n, Symbol("x"), polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def totient(n: int) -> int:
    return len(cyclotomic_coeffs(n)) - 1


@lru_cache(maxsize=None)
def _powers(n: int) -> tuple[dict, ...]:
    """Power-basis coordinates of zeta_n**e for e in range(n)."""
    phi = cyclotomic_coeffs(n)
    deg = len(phi) - 1
    out = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(n):
        out.append({i: c for i, c in enumerate(cur) if c})
        # multiply by x and reduce with x**deg = -sum phi[i] x**i
        top = cur[-1]
        cur = [Fraction(0)] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(out)


def _reduce(n: int, raw: Mapping[int, Fraction]) -> dict:
    pw = _powers(n)
    out: dict = {}
    for e, c in raw.items():
        if c:
            linalg.axpy(out, c, pw[e % n])
    return out


class CycScalar:
    """Element of Q(zeta_N); immutable."""

    __slots__ = ("conductor", "coords", "_hash")

    def __init__(self, coords: Union[Mapping[int, Number], Number, None] = None,
                 conductor: int = 1):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        if coords is None:
            coords = {}
        if isinstance(coords, CycScalar):
            self.conductor, self.coords, self._hash = coords.conductor, coords.coords, None
            return
        if isinstance(coords, (int, Fraction)):
            coords = {0: coords}
        raw = {int(e): Fraction(c) for e, c in coords.items()}
        red = _reduce(conductor, raw)
        if conductor > 1 and all(k == 0 for k in red):
            conductor = 1
        self.conductor = conductor
        self.coords = red
        self._hash = None

    @classmethod
    def _make(cls, conductor: int, coords: dict) -> "CycScalar":
        if conductor > 1 and all(k == 0 for k in coords):
            conductor = 1
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coords = coords
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q) -> "CycScalar":
        q = Fraction(q)
        return cls._make(1, {0: q} if q else {})

    # -- conductor handling -------------------------------------------------
    def promote(self, n: int) -> "CycScalar":
        """The same element written over Q(zeta_n); n must be a multiple."""
        if n % self.conductor:
            raise ValueError(f"cannot promote conductor {self.conductor} to {n}")
        if n == self.conductor or self.conductor == 1:
            obj = object.__new__(CycScalar)
            obj.conductor, obj.coords, obj._hash = n, dict(self.coords), None
            return obj
        step = n // self.conductor
        obj = object.__new__(CycScalar)
        obj.conductor = n
        obj.coords = _reduce(n, {j * step: c for j, c in self.coords.items()})
        obj._hash = None
        return obj

    def _coords_at(self, n: int) -> dict:
        if n == self.conductor or self.conductor == 1:
            return self.coords
        return self.promote(n).coords

    def demote(self) -> "CycScalar":
        """Rewrite over the smallest cyclotomic field containing the element."""
        n = self.conductor
        if n == 1:
            return self
        pw = _powers(n)
        for d in sorted(d for d in range(1, n) if n % d == 0):
            step = n // d
            basis = [pw[j * step] for j in range(totient(d))]
            sol = linalg.coordinates(basis, self.coords)
            if sol is not None:
                return CycScalar({j: c for j, c in enumerate(sol) if c}, d)
        return self

    # -- predicates ---------------------------------------------------------
    def is_rational(self) -> bool:
        return all(k == 0 for k in self.coords)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords.get(0, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.coords)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not o.coords:
            return self
        if not self.coords:
            return o
        n = _lcm(self.conductor, o.conductor)
        out = dict(self._coords_at(n))
        linalg.axpy(out, 1, o._coords_at(n))
        return CycScalar._make(n, out)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._make(self.conductor, {k: -v for k, v in self.coords.items()})

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.coords or not o.coords:
            return _ZERO
        if self.conductor == 1:
            q = self.coords[0]
            if o.conductor == 1:
                return CycScalar._make(1, {0: q * o.coords[0]})
            return CycScalar._make(o.conductor, {k: q * v for k, v in o.coords.items()})
        if o.conductor == 1:
            q = o.coords[0]
            return CycScalar._make(self.conductor, {k: q * v for k, v in self.coords.items()})
        n = _lcm(self.conductor, o.conductor)
        a, b = self._coords_at(n), o._coords_at(n)
        raw: dict = {}
        for i, x in a.items():
            for j, y in b.items():
                e = (i + j) % n
                raw[e] = raw.get(e, 0) + x * y
        return CycScalar._make(n, _reduce(n, raw))

    __rmul__ = __mul__

    def galois(self, k: int) -> "CycScalar":
        """Image under the automorphism zeta_N -> zeta_N**k (gcd(k, N) == 1)."""
        n = self.conductor
        if math.gcd(k, n) != 1:
            raise ValueError("exponent must be a unit modulo the conductor")
        if n == 1:
            return self
        return CycScalar._make(n, _reduce(n, {(j * k) % n: c for j, c in self.coords.items()}))

    def inverse(self) -> "CycScalar":
        if not self.coords:
            raise ZeroDivisionError("division by zero")
        n = self.conductor
        if n == 1:
            return CycScalar._make(1, {0: 1 / self.coords[0]})
        conj = _ONE
        for k in range(2, n):
            if math.gcd(k, n) == 1:
                conj = conj * self.galois(k)
        norm = (self * conj).to_fraction()
        return conj * CycScalar.rational(1 / norm)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = _ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def root_order(self, limit: Optional[int] = None) -> Optional[int]:
        """Multiplicative order if this is a root of unity, else None."""
        # roots of unity in Q(zeta_N) have order dividing lcm(2, N)
        bound = _lcm(2, self.conductor) if limit is None else limit
        p = self
        for k in range(1, bound + 1):
            if p == 1:
                return k
            p = p * self
        return None

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.conductor == o.conductor:
            return self.coords == o.coords
        n = _lcm(self.conductor, o.conductor)
        return self._coords_at(n) == o._coords_at(n)

    def __hash__(self):
        if self._hash is None:
            d = self if self.is_rational() else self.demote()
            if d.is_rational():
                self._hash = hash(d.coords.get(0, Fraction(0)))
            else:
                self._hash = hash((d.conductor, tuple(sorted(d.coords.items()))))
        return self._hash

    def __repr__(self):
        return f"CycScalar({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _coerce(x):
    if isinstance(x, CycScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return CycScalar.rational(x)
    return NotImplemented


_ZERO = CycScalar._make(1, {})
_ONE = CycScalar._make(1, {0: Fraction(1)})


def cyc(x) -> CycScalar:
    """Coerce an int, Fraction, string or CycScalar to a CycScalar."""
    if isinstance(x, str):
        return parse_scalar(x)
    c = _coerce(x)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an exact scalar")
    return c


def zeta(n: int, k: int = 1) -> CycScalar:
    """The root of unity exp(2 pi i k / n)."""
    return CycScalar({k % n: 1}, n)


def cyc_arith(a: CycScalar, b: Optional[CycScalar], op: str) -> CycScalar:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------------------
# Laurent polynomials


def _mono_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


class LaurentPoly:
    """Sparse Laurent polynomial in ``nvars`` variables; immutable."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping] = None):
        self.nvars = nvars
        out: dict = {}
        for m, c in (terms or {}).items():
            m = tuple(int(x) for x in m)
            if len(m) != nvars:
                raise ValueError(f"exponent {m} has wrong length for {nvars} variables")
            c = cyc(c)
            if c:
                prev = out.get(m)
                c = c if prev is None else prev + c
                if c:
                    out[m] = c
                else:
                    out.pop(m)
        self.terms = dict(sorted(out.items()))
        self._hash = None

    @classmethod
    def _trusted(cls, nvars: int, terms: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.terms = dict(sorted(terms.items())) if len(terms) > 1 else terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._trusted(nvars, {})

    @classmethod
    def const(cls, nvars: int, c=1) -> "LaurentPoly":
        c = cyc(c)
        return cls._trusted(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, m: Sequence[int], c=1) -> "LaurentPoly":
        c = cyc(c)
        m = tuple(m)
        return cls._trusted(len(m), {m: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        m = [0] * nvars
        m[i] = power
        return cls.monomial(m)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def support(self) -> list:
        return list(self.terms)

    def coeff(self, m: Sequence[int]) -> CycScalar:
        return self.terms.get(tuple(m), _ZERO)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _check(self, other: "LaurentPoly"):
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            c = _coerce(other)
            if c is NotImplemented:
                return NotImplemented
            other = LaurentPoly.const(self.nvars, c)
        self._check(other)
        out = dict(self.terms)
        linalg.axpy(out, 1, other.terms)
        return LaurentPoly._trusted(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._trusted(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = _coerce(other)
            if c is NotImplemented:
                return NotImplemented
            if not c:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._trusted(self.nvars, {m: c * v for m, v in self.terms.items()})
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_add(m1, m2)
                s = out.get(m)
                p = c1 * c2
                s = p if s is None else s + p
                if s:
                    out[m] = s
                else:
                    out.pop(m)
        return LaurentPoly._trusted(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (m, c), = self.terms.items()
            return LaurentPoly.monomial([-x for x in m], c.inverse()) ** (-k)
        out = LaurentPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        c = _coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self == LaurentPoly.const(self.nvars, c)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self.terms.items())))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def laurent_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


# ---------------------------------------------------------------------------
# monomial ring automorphisms


@dataclass(frozen=True)
class RingAut:
    """t_i -> scales[i] * t**(column i of matrix); matrix integral with det +-1."""

    matrix: tuple
    scales: tuple

    def __post_init__(self):
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        n = len(mat)
        if any(len(r) != n for r in mat):
            raise ValueError("matrix must be square")
        scales = tuple(cyc(s) for s in self.scales) if self.scales else (_ONE,) * n
        if len(scales) != n:
            raise ValueError("need one scale per variable")
        if any(not s for s in scales):
            raise ValueError("scales must be nonzero")
        d = linalg.det([list(r) for r in mat]) if n else 1
        if d not in (1, -1):
            raise ValueError(f"matrix has determinant {d}, expected +-1")
        object.__setattr__(self, "matrix", mat)
        object.__setattr__(self, "scales", scales)

    @classmethod
    def identity(cls, n: int) -> "RingAut":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), (1,) * n)

    @classmethod
    def scaling(cls, scales: Sequence) -> "RingAut":
        n = len(scales)
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), tuple(scales))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], scales: Optional[Sequence] = None) -> "RingAut":
        """Build from the matrix whose row i lists the exponents of the image of t_i."""
        n = len(rows)
        mat = tuple(tuple(rows[j][i] for j in range(n)) for i in range(n))
        return cls(mat, tuple(scales) if scales else (1,) * n)

    @property
    def nvars(self) -> int:
        return len(self.matrix)

    def exponent_image(self, m: Sequence[int]) -> Exponent:
        return tuple(sum(self.matrix[i][j] * m[j] for j in range(self.nvars))
                     for i in range(self.nvars))

    def monomial_scale(self, m: Sequence[int]) -> CycScalar:
        out = _ONE
        for lam, e in zip(self.scales, m):
            if e:
                out = out * lam ** e
        return out

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        if p.nvars != self.nvars:
            raise ValueError(f"dimension mismatch: automorphism on {self.nvars} variables, "
                             f"polynomial in {p.nvars}")
        out: dict = {}
        for m, c in p.terms.items():
            out[self.exponent_image(m)] = c * self.monomial_scale(m)
        return LaurentPoly._trusted(self.nvars, out)

    apply = __call__

    def compose(self, other: "RingAut") -> "RingAut":
        """self o other."""
        n = self.nvars
        mat = tuple(tuple(sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n))
                          for j in range(n)) for i in range(n))
        scales = []
        for i in range(n):
            col = tuple(other.matrix[k][i] for k in range(n))
            scales.append(other.scales[i] * self.monomial_scale(col))
        return RingAut(mat, tuple(scales))

    def inverse(self) -> "RingAut":
        n = self.nvars
        inv = linalg.inverse([list(r) for r in self.matrix])
        mat = tuple(tuple(int(x) for x in row) for row in inv)
        scales = []
        for i in range(n):
            col = tuple(mat[k][i] for k in range(n))
            scales.append(self.monomial_scale(col).inverse())
        return RingAut(mat, tuple(scales))

    def is_identity(self) -> bool:
        return self == RingAut.identity(self.nvars)

    def order(self, max_matrix_order: int = 12) -> Optional[int]:
        """Finite order, or None when the automorphism has infinite order."""
        ident = tuple(tuple(int(i == j) for j in range(self.nvars)) for i in range(self.nvars))
        p, k = self, 1
        while p.matrix != ident:
            if k >= max_matrix_order:
                return None
            p, k = p.compose(self), k + 1
        extra = 1
        for s in p.scales:
            o = s.root_order()
            if o is None:
                return None
            extra = _lcm(extra, o)
        return k * extra

    def __str__(self):
        rows = [[self.matrix[j][i] for j in range(self.nvars)] for i in range(self.nvars)]
        return f"RingAut(rows={rows}, scales={[str(s) for s in self.scales]})"


def ring_aut_apply(theta: RingAut, p: LaurentPoly) -> LaurentPoly:
    return theta(p)


# ---------------------------------------------------------------------------
# windows of degrees


@dataclass(frozen=True)
class Window:
    """Box of exponent vectors with |m_i| <= radii[i]."""

    radii: tuple

    @classmethod
    def box(cls, nvars: int, radius: int) -> "Window":
        if radius < 0:
            raise ValueError("window radius must be non-negative")
        return cls((radius,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.radii)

    @property
    def radius(self) -> int:
        return max(self.radii) if self.radii else 0

    def degrees(self) -> list:
        return list(itertools.product(*[range(-r, r + 1) for r in self.radii]))

    def __contains__(self, m) -> bool:
        return all(-r <= x <= r for x, r in zip(m, self.radii))

    def scaled(self, k: int) -> "Window":
        return Window(tuple(k * r for r in self.radii))

    def __iter__(self) -> Iterator:
        return iter(self.degrees())

    def __len__(self) -> int:
        return math.prod(2 * r + 1 for r in self.radii)

    def describe(self):
        if len(set(self.radii)) <= 1:
            return {"nvars": self.nvars, "radius": self.radius}
        return {"nvars": self.nvars, "radii": list(self.radii)}


# ---------------------------------------------------------------------------
# text form


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(c) -> str:
    c = cyc(c)
    if not c.coords:
        return "0"
    if c.conductor == 1:
        return _fmt_rational(c.coords[0])
    parts = []
    for j in sorted(c.coords):
        q = c.coords[j]
        atom = "" if j == 0 else (f"z{c.conductor}" if j == 1 else f"z{c.conductor}^{j}")
        if not atom:
            s = _fmt_rational(q)
        elif q == 1:
            s = atom
        elif q == -1:
            s = "-" + atom
        else:
            s = f"{_fmt_rational(q)}*{atom}"
        parts.append(s)
    out = parts[0]
    for s in parts[1:]:
        out += s if s.startswith("-") else "+" + s
    return out


def var_names(nvars: int, var: str = "t") -> list[str]:
    return [var] if nvars == 1 else [f"{var}{i + 1}" for i in range(nvars)]


def format_monomial(m: Sequence[int], var: str = "t") -> str:
    names = var_names(len(m), var)
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _needs_parens(s: str) -> bool:
    return "+" in s or "-" in s[1:]


def format_term(m: Sequence[int], c: CycScalar, var: str = "t") -> str:
    mono = format_monomial(m, var)
    cs = format_scalar(c)
    if not mono:
        return cs
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    if _needs_parens(cs):
        cs = f"({cs})"
    return f"{cs}*{mono}"


def format_poly(p: LaurentPoly, var: str = "t") -> str:
    if not p.terms:
        return "0"
    out = ""
    for m, c in p.terms.items():
        s = format_term(m, c, var)
        if not out:
            out = s
        elif s.startswith("-"):
            out += " - " + s[1:]
        else:
            out += " + " + s
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|(z\d+|i)|([A-Za-z]\d*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        num, root, name, op = mt.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif root is not None:
            out.append(("root", 4 if root == "i" else int(root[1:])))
        elif name is not None:
            out.append(("var", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = mt.end()
    return out


class _Parser:
    def __init__(self, text: str, nvars: int, var: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.nvars = nvars
        self.names = {n: k for k, n in enumerate(var_names(nvars, var))} if nvars else {}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, val=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (val and tok[1] != val):
            raise ValueError(f"unexpected token {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> LaurentPoly:
        out = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input at token {self.peek()[1]!r}")
        return out

    def expr(self):
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "+"):
            self.take()
        out = self.term() * sign
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            out = out + t if op == "+" else out - t
        return out

    def term(self):
        out = self.power()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            rhs = self.power()
            if op == "*":
                out = out * rhs
            else:
                if not rhs.is_monomial():
                    raise ValueError("can only divide by monomials")
                out = out * rhs ** -1
        return out

    def _signed_int(self) -> int:
        sign = 1
        if self.peek() == ("op", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("op", "("):
            self.take()
            k = self._signed_int()
            self.take("op", ")")
            return sign * k
        return sign * self.take("num")[1]

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            base = base ** self._signed_int()
        return base

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return LaurentPoly.const(self.nvars, val)
        if kind == "root":
            self.take()
            return LaurentPoly.const(self.nvars, zeta(val))
        if kind == "var":
            self.take()
            if val not in self.names:
                raise ValueError(f"unknown variable {val!r}")
            return LaurentPoly.var(self.nvars, self.names[val])
        if (kind, val) == ("op", "("):
            self.take()
            out = self.expr()
            self.take("op", ")")
            return out
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text: str, nvars: int, var: str = "t") -> LaurentPoly:
    """Parse the canonical text form, e.g. ``3*z4*t1^2*t2^-1 - 1/2``."""
    return _Parser(text, nvars, var).parse()


def parse_scalar(text: str) -> CycScalar:
    """Parse an exact scalar such as ``2/3``, ``i``, ``-1+z3^2`` or ``(1+z8)/2``."""
    p = _Parser(text, 0, "t").parse()
    return p.coeff(())
