"""Walk through a twisted loop algebra (default: A2 with the diagram swap).

Prints graded bases, the extension checks, and one averaged lift.  With
``--datum a1-klein`` the sample has nonzero x_g, since two variables give
central classes that the group moves.
"""

import argparse
import random

from loopext.descent import (average_completion, cocycle_values, fixed_loop, random_twisted_element,
                             shipped_datum, verify_central_extension)
from loopext.scalars import Window


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--window", type=int, default=2)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--datum", default="a2-diagram-swap")
    args = ap.parse_args()

    d = shipped_datum(args.datum)
    w = Window.box(d.nvars, args.window)
    lu = fixed_loop(d, w)
    for j, basis in sorted(lu.pieces.items()):
        print(f"degree {j}: dim {len(basis)}")
        for x in basis:
            print("   ", x.format(d.table))

    rep = verify_central_extension(d, w)
    print("checks:", {k: rep[k]["status"] for k in
                      ("surjective", "kernel_central", "kernel_matches_base_classes", "perfect_centreless")})
    print("kernel dims:", rep["kernel_dims"])

    x = random_twisted_element(d, w, random.Random(args.seed))
    print("sample:", x.format(d.table))
    for g, xg in cocycle_values(d, x).items():
        print(f"  x_{g} =", xg.format(d.table))
    print("completion:", average_completion(d, x).format(d.table))


if __name__ == "__main__":
    main()
