"""Count matrices in GL2(Z) stabilising the line through (1, zeta) for several zeta and bounds."""

import argparse

from loopext.autlift import gl2z_zeta_enumerate, group_check
from loopext.scalars import format_scalar, parse_scalar


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--zeta", nargs="*", default=["0", "1", "-1", "z3", "z4", "z6", "z5", "z8", "1/2"])
    ap.add_argument("--bound", type=int, default=3)
    args = ap.parse_args()

    print(f"{'zeta':>8}  " + "  ".join(f"b={b}" for b in range(1, args.bound + 1)) + "  group")
    for text in args.zeta:
        z = parse_scalar(text)
        counts, ok = [], True
        for b in range(1, args.bound + 1):
            found = gl2z_zeta_enumerate(z, b)
            counts.append(len(found))
            ok &= all(group_check(found, b).values())
        print(f"{format_scalar(z):>8}  " + "  ".join(f"{c:>3}" for c in counts) + f"  {'ok' if ok else 'broken'}")


if __name__ == "__main__":
    main()
