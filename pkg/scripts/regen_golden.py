"""Regenerate corpus/v1: structure tables, datum files, tabulated cocycles and golden reports.

Run from anywhere; paths are resolved against the repository root.
"""

import contextlib
import io
import json
import os
from fractions import Fraction
from pathlib import Path

from loopext.cli import main
from loopext.descent import SHIPPED
from loopext.extension import KasselCocycle, TabulatedCocycle, corrupt, tabulated_to_dict
from loopext.lie_core import SUPPORTED, build_split_simple, parse_type, table_to_text

ROOT = Path(__file__).resolve().parents[1]
CORPUS = ROOT / "corpus" / "v1"


def write_json(path: Path, data) -> None:
    path.write_text(json.dumps(data, sort_keys=True, indent=2) + "\n")


def tables():
    for name in SUPPORTED:
        (CORPUS / "tables" / f"{name}.txt").write_text(table_to_text(build_split_simple(*parse_type(name))))


def data():
    for name, spec in SHIPPED.items():
        write_json(CORPUS / "data" / f"{name}.json", spec)
    a1 = build_split_simple("A", 1)
    P = KasselCocycle(a1, 1)
    # the bad file shifts P(e t, f t^-1) by one unit of class(dt/t)
    write_json(CORPUS / "data" / "bad.coc", tabulated_to_dict(corrupt(P, "e", (1,), "f", (-1,), {((0,), 0): Fraction(1)})))
    # the good file restates two true values as overrides
    good = TabulatedCocycle(P, {((1, (1,)), (2, (-1,))): P.pair(1, (1,), 2, (-1,)),
                                ((0, (2,)), (0, (-2,))): P.pair(0, (2,), 0, (-2,))})
    write_json(CORPUS / "data" / "kassel-a1.coc", tabulated_to_dict(good))


def reports():
    cases = json.loads((CORPUS / "cases.json").read_text())["cases"]
    for case in cases:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = main(case["argv"])
        if code != case["exit"]:
            raise SystemExit(f"{case['name']}: exit {code}, expected {case['exit']}")
        (CORPUS / "reports" / f"{case['name']}.json").write_text(buf.getvalue())
        print(f"{case['name']}: exit {code}")


if __name__ == "__main__":
    os.chdir(ROOT)
    tables()
    data()
    reports()
