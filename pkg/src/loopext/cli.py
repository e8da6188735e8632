"""Command-line driver: ``loopext <command> [options]``.

Exit codes: 0 when every check passes, 1 when a verification fails, 2 for
bad input.  Reports are deterministic for a fixed configuration and seed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .autlift import (build_lifted, check_lifted_automorphism, gl2z_zeta_enumerate, group_check,
                      parse_theta, scalar_centre_action, ScalarAction, solve_lift)
from .descent import (SHIPPED, averaging_check, constant_datum, datum_from_dict, fixed_loop,
                      load_datum, stability_check, trivial_datum, verify_central_extension)
from .extension import cocycle_verify, load_tabulated, make_cocycle
from .lie_core import build_split_simple, parse_type, verify_table
from .scalars import Window, format_scalar, parse_scalar

DEFAULT_SEED = 20240611


@dataclass
class RunConfig:
    command: str
    algebra: Optional[str] = None
    window: int = 2
    nvars: int = 1
    orders: list = field(default_factory=list)
    zeta: Optional[str] = None
    bound: int = 1
    format: str = "json"
    output: Optional[str] = None
    seed: int = DEFAULT_SEED
    kind: Optional[str] = None
    file: Optional[str] = None
    theta: Optional[str] = None
    aut: Optional[str] = None
    trivial: bool = False
    dump_bases: bool = False
    samples: int = 10

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window radius must be at least 1")
        if self.format not in ("text", "json"):
            raise ValueError("format must be text or json")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# commands


def cmd_verify_algebra(cfg: RunConfig) -> tuple[int, dict]:
    table = build_split_simple(*parse_type(cfg.algebra or ""))
    rep = verify_table(table)
    return (0 if rep["status"] == "pass" else 1), rep


def cmd_cocycle(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.kind == "tabulated":
        if not cfg.file:
            raise UsageError("tabulated cocycles need --file")
        P = load_tabulated(cfg.file)
    else:
        if not cfg.algebra:
            raise UsageError("--type is required")
        table = build_split_simple(*parse_type(cfg.algebra))
        nvars = 2 if cfg.kind == "ef" else cfg.nvars
        zeta = parse_scalar(cfg.zeta) if cfg.zeta is not None else None
        P = make_cocycle(cfg.kind or "kassel", table, nvars, zeta)
    rep = cocycle_verify(P, P.table, Window.box(P.nvars, cfg.window))
    return (0 if rep["status"] == "pass" else 1), rep


def _matrix_json(M):
    return [list(row) for row in M]


def cmd_gl2z(cfg: RunConfig) -> tuple[int, dict]:
    if cfg.zeta is None:
        raise UsageError("--zeta is required")
    z = parse_scalar(cfg.zeta)
    found = gl2z_zeta_enumerate(z, cfg.bound)
    rep = {"zeta": format_scalar(z), "bound": cfg.bound, "count": len(found),
           "elements": [{"matrix": _matrix_json(M), "mu": format_scalar(mu)} for M, mu in found],
           "group": group_check(found, cfg.bound)}
    ok = all(rep["group"].values())
    rep["status"] = "pass" if ok else "fail"
    return (0 if ok else 1), rep


def _datum_from_config(cfg: RunConfig):
    if cfg.file:
        return load_datum(cfg.file)
    if cfg.kind:
        if cfg.kind not in SHIPPED:
            raise UsageError(f"unknown shipped datum {cfg.kind!r}; choose from {', '.join(SHIPPED)}")
        return datum_from_dict(SHIPPED[cfg.kind])
    if not cfg.algebra:
        raise UsageError("--type, --datum or --shipped is required")
    if cfg.trivial or not cfg.aut:
        return trivial_datum(cfg.algebra, cfg.nvars)
    order = cfg.orders[0] if cfg.orders else 2
    return constant_datum(cfg.algebra, cfg.aut, order, cfg.nvars)


def cmd_descend(cfg: RunConfig) -> tuple[int, dict]:
    d = _datum_from_config(cfg)
    window = Window.box(d.nvars, cfg.window)
    rep = verify_central_extension(d, window)
    stable, srep = stability_check(d, window)
    rep["stability"] = {"status": "pass" if stable else "fail", **srep}
    ok, wit = averaging_check(d, window, random.Random(cfg.seed), cfg.samples)
    rep["averaging"] = {"status": "pass" if ok else "fail", "samples": cfg.samples}
    if wit:
        rep["averaging"]["witness"] = wit
    if cfg.dump_bases:
        lu = fixed_loop(d, window)
        rep["bases"] = {",".join(map(str, j)): [x.format(d.table) for x in v] for j, v in lu.pieces.items()}
    passed = rep["status"] == "pass" and stable and ok
    rep["status"] = "pass" if passed else "fail"
    return (0 if passed else 1), rep


def cmd_lift(cfg: RunConfig) -> tuple[int, dict]:
    if not cfg.theta:
        raise UsageError("--theta is required")
    table = build_split_simple(*parse_type(cfg.algebra or "A1"))
    kind = cfg.kind or "kassel"
    nvars = 2 if kind == "ef" else cfg.nvars
    zeta = parse_scalar(cfg.zeta) if cfg.zeta is not None else None
    P = make_cocycle(kind, table, nvars, zeta)
    theta = parse_theta(cfg.theta, table, nvars)
    window = Window.box(nvars, cfg.window)
    res = solve_lift(theta, P, window)
    rep = {"theta": cfg.theta, "cocycle": P.describe(), "window": window.describe()}
    rep.update(res.to_report())
    if rep["status"] != "lifted":
        return 1, rep
    lifted = build_lifted(theta, res)
    n, wit = check_lifted_automorphism(lifted, window)
    rep["automorphism_pairs_checked"] = n
    centre = scalar_centre_action(lifted, window)
    if isinstance(centre, ScalarAction):
        rep["centre_action"] = format_scalar(centre.value)
    else:
        rep["centre_action"] = "not scalar"
        rep["centre_witness"] = {"element": P.format_central(centre.element),
                                 "image": P.format_central(centre.image)}
    return (0 if wit is None else 1), rep


COMMANDS = {
    "verify-algebra": cmd_verify_algebra,
    "cocycle": cmd_cocycle,
    "gl2z": cmd_gl2z,
    "descend": cmd_descend,
    "lift": cmd_lift,
}


# ---------------------------------------------------------------------------
# argument parsing and output


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="json")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="loopext", description="Exact loop algebras, central extensions and descent.")
    p.add_argument("--version", action="version", version=f"loopext {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify-algebra", parents=[common], help="exhaustive Lie axiom checks")
    s.add_argument("--type", dest="algebra", required=True)

    s = sub.add_parser("cocycle", parents=[common], help="verify a 2-cocycle on a window")
    s.add_argument("--kind", choices=("kassel", "ef", "residue", "tabulated"), default="kassel")
    s.add_argument("--type", dest="algebra")
    s.add_argument("--n", dest="nvars", type=int, default=1)
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--zeta")
    s.add_argument("--file")

    s = sub.add_parser("gl2z", parents=[common], help="matrices stabilising the line through (1, zeta)")
    s.add_argument("--zeta", required=True)
    s.add_argument("--bound", type=int, default=1)

    s = sub.add_parser("descend", parents=[common], help="twisted loop algebra and its central extension")
    s.add_argument("--type", dest="algebra")
    s.add_argument("--aut")
    s.add_argument("--order", type=int, dest="order")
    s.add_argument("--trivial", action="store_true")
    s.add_argument("--n", dest="nvars", type=int, default=1)
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--datum", dest="file")
    s.add_argument("--shipped", dest="kind")
    s.add_argument("--dump-bases", action="store_true")
    s.add_argument("--samples", type=int, default=10)

    s = sub.add_parser("lift", parents=[common], help="lift an automorphism to a central extension")
    s.add_argument("--theta", required=True)
    s.add_argument("--cocycle", dest="kind", choices=("kassel", "ef", "residue"), default="kassel")
    s.add_argument("--type", dest="algebra", default="A1")
    s.add_argument("--n", dest="nvars", type=int, default=1)
    s.add_argument("--window", type=int, default=2)
    s.add_argument("--zeta")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    vals = vars(ns).copy()
    order = vals.pop("order", None)
    if order is not None:
        vals["orders"] = [order]
    known = RunConfig.__dataclass_fields__
    return RunConfig(**{k: v for k, v in vals.items() if k in known})


def render_text(rep: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for k, v in rep.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{k}:")
            lines.append(render_text(v, indent + 1))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{pad}{k}:")
            for item in v:
                lines.append(f"{pad}  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{pad}{k}: {v}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        code, result = COMMANDS[cfg.command](cfg)
    except (UsageError, ValueError, KeyError, ZeroDivisionError, OSError) as exc:
        msg = exc.args[0] if exc.args and not isinstance(exc, OSError) else str(exc)
        print(f"loopext: error: {msg}", file=sys.stderr)
        return 2
    report = {"tool": "loopext", "version": __version__, "command": cfg.command,
              "config": asdict(cfg), "seed": cfg.seed, "result": result}
    if cfg.format == "json":
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = render_text({"command": cfg.command, "status": result.get("status"), **result}) + "\n"
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
