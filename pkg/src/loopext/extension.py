"""Central extensions of loop algebras defined by 2-cocycles.

Central values are sparse dicts over a codomain basis.  For differential
classes the keys are ``(degree, index)`` in normal form; for an abstract
codomain they are basis names such as ``"c"``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

from . import linalg
from .kahler import DifferentialClass, format_class, join_signed, normal_component
from .lie_core import LoopElement, StructureTable, bracket_graded, build_split_simple
from .scalars import CycScalar, Window, cyc, format_scalar, parse_scalar

OMEGA = "omega"
COCYCLE_FORMAT = "loopext-cocycle"
COCYCLE_VERSION = 1


def _add_deg(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Cocycle:
    """Alternating bilinear map on g (x) k[t^{+-1}] given degree block by degree block."""

    kind = "zero"

    def __init__(self, table: StructureTable, nvars: int, codomain: Union[str, tuple] = OMEGA,
                 normalized: bool = False):
        self.table = table
        self.nvars = nvars
        self.codomain = codomain
        self.normalized = normalized
        self._blocks: dict = {}

    @property
    def form_pairs(self) -> dict:
        kp = self.table.killing_pairs
        if not self.normalized:
            return kp
        s = self.table.normalized_scale
        return {i: {j: v * s for j, v in row.items()} for i, row in kp.items()}

    def _block(self, a: tuple, b: tuple) -> dict:
        return {}

    def block(self, a: tuple, b: tuple) -> dict:
        """{(i, j): central vector} for the arguments b_i t^a, b_j t^b."""
        key = (a, b)
        blk = self._blocks.get(key)
        if blk is None:
            blk = self._block(a, b)
            self._blocks[key] = blk
        return blk

    def pair(self, i: int, a: tuple, j: int, b: tuple) -> dict:
        return self.block(tuple(a), tuple(b)).get((i, j), {})

    def evaluate(self, x: Mapping, y: Mapping) -> dict:
        """P on graded coefficient maps {(i, m): c}."""
        out: dict = {}
        for (i, a), u in x.items():
            for (j, b), v in y.items():
                val = self.block(a, b).get((i, j))
                if val:
                    linalg.axpy(out, u * v, val)
        return out

    def __call__(self, x: LoopElement, y: LoopElement) -> dict:
        self._check(x)
        self._check(y)
        return self.evaluate(x.coeffs, y.coeffs)

    def _check(self, x: LoopElement):
        if x.nvars != self.nvars:
            raise ValueError(f"cocycle is on {self.nvars} variables, element has {x.nvars}")

    def describe(self) -> str:
        return self.kind

    def format_central(self, v: Mapping) -> str:
        return format_central(self.codomain, self.nvars, v)


def format_central(codomain, nvars: int, v: Mapping) -> str:
    if codomain == OMEGA:
        return format_class(v, nvars)
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        cs = format_scalar(cyc(v[k]))
        if "+" in cs or "-" in cs[1:]:
            cs = f"({cs})"
        parts.append(f"{cs}*{k}")
    return join_signed(parts)


class ZeroCocycle(Cocycle):
    kind = "zero"


class KasselCocycle(Cocycle):
    """(x t^a, y t^b) -> (x|y) * class(t^a d t^b)."""

    kind = "kassel"

    def __init__(self, table: StructureTable, nvars: int, normalized: bool = False):
        super().__init__(table, nvars, OMEGA, normalized)
        self._pairs = self.form_pairs

    def _block(self, a, b):
        w = normal_component(_add_deg(a, b), {i: Fraction(x) for i, x in enumerate(b) if x})
        if not w:
            return {}
        out = {}
        for i, row in self._pairs.items():
            for j, k in row.items():
                out[(i, j)] = {key: k * c for key, c in w.items()}
        return out


class EFCocycle(Cocycle):
    """(x t^m, y t^n) -> (x|y)(m_1 + zeta m_2) delta_{m+n,0} c on two variables."""

    kind = "ef"

    def __init__(self, table: StructureTable, zeta_value, nvars: int = 2, normalized: bool = False):
        if nvars != 2:
            raise ValueError(f"this cocycle needs exactly 2 variables, got {nvars}")
        super().__init__(table, 2, ("c",), normalized)
        self.zeta = cyc(zeta_value)
        self._pairs = self.form_pairs

    def _block(self, a, b):
        if any(x + y for x, y in zip(a, b)):
            return {}
        s = a[0] + self.zeta * a[1]
        if not s:
            return {}
        return {(i, j): {"c": s * k} for i, row in self._pairs.items() for j, k in row.items()}

    def describe(self) -> str:
        return f"ef(zeta={format_scalar(self.zeta)})"


class ResidueCocycle(Cocycle):
    """One variable: (x t^a, y t^b) -> (x|y) b delta_{a+b,0} c."""

    kind = "residue"

    def __init__(self, table: StructureTable, nvars: int = 1, normalized: bool = False):
        if nvars != 1:
            raise ValueError(f"the residue cocycle is defined for 1 variable, got {nvars}")
        super().__init__(table, 1, ("c",), normalized)
        self._pairs = self.form_pairs

    def _block(self, a, b):
        if a[0] + b[0] or not b[0]:
            return {}
        return {(i, j): {"c": k * b[0]} for i, row in self._pairs.items() for j, k in row.items()}


class TabulatedCocycle(Cocycle):
    """A base cocycle with individual values overridden (antisymmetrically)."""

    kind = "tabulated"

    def __init__(self, base: Cocycle, entries: Mapping):
        super().__init__(base.table, base.nvars, base.codomain, base.normalized)
        self.base = base
        self.entries: dict = {}
        for ((i, a), (j, b)), val in entries.items():
            a, b = tuple(a), tuple(b)
            self.entries[((i, a), (j, b))] = dict(val)
            self.entries[((j, b), (i, a))] = {k: -v for k, v in val.items()}

    def _block(self, a, b):
        out = {k: dict(v) for k, v in self.base.block(a, b).items()}
        for ((i, aa), (j, bb)), val in self.entries.items():
            if aa == a and bb == b:
                if val:
                    out[(i, j)] = dict(val)
                else:
                    out.pop((i, j), None)
        return out

    def describe(self) -> str:
        return f"tabulated(base={self.base.describe()}, overrides={len(self.entries) // 2})"


def kassel_cocycle(table: StructureTable, x: LoopElement, y: LoopElement) -> DifferentialClass:
    P = KasselCocycle(table, x.nvars)
    return DifferentialClass(x.nvars, P(x, y), True)


def ef_cocycle(zeta_value, table: StructureTable, x: LoopElement, y: LoopElement) -> dict:
    if x.nvars != 2 or y.nvars != 2:
        raise ValueError("this cocycle needs exactly 2 variables")
    return EFCocycle(table, zeta_value)(x, y)


def make_cocycle(kind: str, table: StructureTable, nvars: int, zeta_value=None,
                 normalized: bool = False) -> Cocycle:
    kind = kind.lower()
    if kind == "kassel":
        return KasselCocycle(table, nvars, normalized)
    if kind == "ef":
        if zeta_value is None:
            raise ValueError("the ef cocycle needs a zeta value")
        return EFCocycle(table, zeta_value, nvars, normalized)
    if kind == "residue":
        return ResidueCocycle(table, nvars, normalized)
    if kind == "zero":
        return ZeroCocycle(table, nvars)
    raise ValueError(f"unknown cocycle kind {kind!r}")


# ---------------------------------------------------------------------------
# tabulated files


def _central_to_json(codomain, v: Mapping):
    if codomain == OMEGA:
        return [[list(m), i, format_scalar(cyc(c))] for (m, i), c in sorted(v.items())]
    return {k: format_scalar(cyc(c)) for k, c in sorted(v.items())}


def _central_from_json(codomain, nvars, raw) -> dict:
    if codomain == OMEGA:
        out: dict = {}
        for m, i, c in raw:
            if len(m) != nvars:
                raise ValueError(f"degree {m} has wrong length")
            linalg.axpy(out, parse_scalar(str(c)), normal_component(tuple(m), {int(i): Fraction(1)}))
        return out
    return {k: parse_scalar(str(c)) for k, c in raw.items() if parse_scalar(str(c))}


def load_tabulated(path: Union[str, Path]) -> TabulatedCocycle:
    data = json.loads(Path(path).read_text())
    return tabulated_from_dict(data)


def tabulated_from_dict(data: Mapping) -> TabulatedCocycle:
    if data.get("format") != COCYCLE_FORMAT:
        raise ValueError(f"not a cocycle file (format={data.get('format')!r})")
    if data.get("version") != COCYCLE_VERSION:
        raise ValueError(f"unsupported cocycle file version {data.get('version')!r}")
    table = build_split_simple(data["algebra"])
    nvars = int(data["nvars"])
    base = make_cocycle(data.get("base", "zero"), table, nvars, data.get("zeta") and parse_scalar(data["zeta"]))
    codomain = base.codomain
    if data.get("codomain", OMEGA if codomain == OMEGA else "abstract") not in (OMEGA, "abstract"):
        raise ValueError(f"unknown codomain {data.get('codomain')!r}")
    entries = {}
    for e in data.get("entries", []):
        i, j = table.index(e["x"]), table.index(e["y"])
        a, b = tuple(e["a"]), tuple(e["b"])
        entries[((i, a), (j, b))] = _central_from_json(codomain, nvars, e["value"])
    return TabulatedCocycle(base, entries)


def tabulated_to_dict(P: TabulatedCocycle) -> dict:
    seen = set()
    entries = []
    for ((i, a), (j, b)), val in sorted(P.entries.items()):
        if ((j, b), (i, a)) in seen:
            continue
        seen.add(((i, a), (j, b)))
        entries.append({"x": P.table.labels[i], "a": list(a), "y": P.table.labels[j], "b": list(b),
                        "value": _central_to_json(P.codomain, val)})
    out = {"format": COCYCLE_FORMAT, "version": COCYCLE_VERSION, "algebra": P.table.name,
           "nvars": P.nvars, "codomain": OMEGA if P.codomain == OMEGA else "abstract",
           "base": P.base.kind, "entries": entries}
    if isinstance(P.base, EFCocycle):
        out["zeta"] = format_scalar(P.base.zeta)
    return out


# ---------------------------------------------------------------------------
# extension elements


@dataclass
class ExtElement:
    """x + v with x a loop element and v a central vector."""

    loop: LoopElement
    central: dict = field(default_factory=dict)

    def __post_init__(self):
        self.central = {k: v for k, v in self.central.items() if v}

    @classmethod
    def zero(cls, nvars: int) -> "ExtElement":
        return cls(LoopElement(nvars), {})

    @property
    def nvars(self) -> int:
        return self.loop.nvars

    def __add__(self, other: "ExtElement") -> "ExtElement":
        c = dict(self.central)
        linalg.axpy(c, 1, other.central)
        return ExtElement(self.loop + other.loop, c)

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        c = dict(self.central)
        linalg.axpy(c, -1, other.central)
        return ExtElement(self.loop - other.loop, c)

    def __neg__(self):
        return ExtElement(-self.loop, {k: -v for k, v in self.central.items()})

    def scale(self, c) -> "ExtElement":
        return ExtElement(self.loop.scale(c), linalg.scale(self.central, c))

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        d = dict(self.central)
        linalg.axpy(d, -1, other.central)
        return self.loop == other.loop and not d

    __hash__ = None

    def flat(self) -> dict:
        out = {("x", i, m): c for (i, m), c in self.loop.coeffs.items()}
        out.update({("z", k): c for k, c in self.central.items()})
        return out

    @classmethod
    def from_flat(cls, nvars: int, flat: Mapping) -> "ExtElement":
        loop = {(k[1], k[2]): c for k, c in flat.items() if k[0] == "x"}
        cen = {k[1]: c for k, c in flat.items() if k[0] == "z"}
        return cls(LoopElement(nvars, loop), cen)

    def format(self, table: StructureTable, codomain=OMEGA) -> str:
        parts = []
        if self.loop:
            parts.append(self.loop.format(table))
        if self.central:
            parts.append(format_central(codomain, self.nvars, self.central))
        return join_signed(parts) if parts else "0"


def ext_bracket(P: Cocycle, a: ExtElement, b: ExtElement) -> ExtElement:
    """[x + u, y + v] = [x, y] + P(x, y)."""
    if a.nvars != P.nvars or b.nvars != P.nvars:
        raise ValueError(f"cocycle is on {P.nvars} variables; elements have {a.nvars} and {b.nvars}")
    loop = LoopElement(P.nvars, bracket_graded(P.table, a.loop.coeffs, b.loop.coeffs))
    return ExtElement(loop, P.evaluate(a.loop.coeffs, b.loop.coeffs))


# ---------------------------------------------------------------------------
# verification


def _inverse_brackets(table: StructureTable) -> dict:
    """k -> [(i, j, c)] with [b_i, b_j] having coefficient c at b_k."""
    inv: dict = {}
    for (i, j), vec in table.brackets.items():
        for k, c in vec.items():
            inv.setdefault(k, []).append((i, j, c))
    return inv


def _fmt_arg(table, i, m):
    return {"basis": table.labels[i], "degree": list(m)}


def check_alternating(P: Cocycle, window: Window) -> tuple[int, Optional[dict]]:
    """P(u, v) + P(v, u) = 0 for u in the doubled window and v in the window."""
    table = P.table
    big = window.scaled(2).degrees()
    small = window.degrees()
    checks = 0
    for a in big:
        for b in small:
            blk, rev = P.block(a, b), P.block(b, a)
            checks += table.dim * table.dim
            for (i, j) in set(blk) | {(j, i) for (i, j) in rev}:
                s = dict(blk.get((i, j), {}))
                linalg.axpy(s, 1, rev.get((j, i), {}))
                if s or (i == j and a == b and blk.get((i, j))):
                    return checks, {"check": "alternating",
                                    "pair": [_fmt_arg(table, i, a), _fmt_arg(table, j, b)]}
    return checks, None


def check_cyclic(P: Cocycle, window: Window) -> tuple[int, Optional[dict]]:
    """P([x,y],z) + P([y,z],x) + P([z,x],y) = 0 on all window triples.

    The cyclic sum is alternating in its three arguments, so it suffices to
    take degree triples a <= b <= c with all basis triples.
    """
    table = P.table
    inv = _inverse_brackets(table)
    degs = window.degrees()
    checks = 0
    n = table.dim
    for a, b, c in itertools.combinations_with_replacement(degs, 3):
        total: dict = {}
        # term P([x,y], z): x@a, y@b, z@c
        for (k, z), v in P.block(_add_deg(a, b), c).items():
            for x, y, coef in inv.get(k, ()):
                for key, val in v.items():
                    _acc(total, (x, y, z, key), coef * val)
        # term P([y,z], x)
        for (k, x), v in P.block(_add_deg(b, c), a).items():
            for y, z, coef in inv.get(k, ()):
                for key, val in v.items():
                    _acc(total, (x, y, z, key), coef * val)
        # term P([z,x], y)
        for (k, y), v in P.block(_add_deg(c, a), b).items():
            for z, x, coef in inv.get(k, ()):
                for key, val in v.items():
                    _acc(total, (x, y, z, key), coef * val)
        checks += n * n * n
        if total:
            x, y, z, _ = min(total, key=lambda t: (t[0], t[1], t[2], str(t[3])))
            residue = {kk[3]: vv for kk, vv in total.items() if kk[:3] == (x, y, z)}
            return checks, {"check": "cyclic",
                            "triple": [_fmt_arg(table, x, a), _fmt_arg(table, y, b), _fmt_arg(table, z, c)],
                            "residue": format_central(P.codomain, P.nvars, residue)}
    return checks, None


def _acc(d: dict, key, val):
    s = d.get(key, 0) + val
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def cocycle_verify(P: Cocycle, table: Optional[StructureTable] = None, window: Optional[Window] = None) -> dict:
    """Exhaustive alternating and cocycle-identity check on a window; returns a report dict."""
    if table is not None and table is not P.table and table.name != P.table.name:
        raise ValueError(f"cocycle is on {P.table.name}, table is {table.name}")
    if window is None:
        window = Window.box(P.nvars, 2)
    if window.nvars != P.nvars:
        raise ValueError("window and cocycle variable counts differ")
    n_alt, wit = check_alternating(P, window)
    report: dict = {"cocycle": P.describe(), "algebra": P.table.name, "window": window.describe(),
                    "checks_run": {"alternating_pairs": n_alt}}
    if wit is None:
        n_cyc, wit = check_cyclic(P, window)
        report["checks_run"]["identity_triples"] = n_cyc
    report["status"] = "pass" if wit is None else "fail"
    if wit is not None:
        report["witness"] = wit
    return report


def corrupt(P: Cocycle, x, a, y, b, delta) -> TabulatedCocycle:
    """Copy of P with P(x t^a, y t^b) shifted by ``delta`` (a central vector)."""
    i, j = P.table.index(x), P.table.index(y)
    a, b = tuple(a), tuple(b)
    val = dict(P.pair(i, a, j, b))
    linalg.axpy(val, 1, delta)
    return TabulatedCocycle(P, {((i, a), (j, b)): val})
