"""Solve the crossing and knot rectangles for a range of n and tabulate
ell(w), residuals and the rectangle-size margins."""
import argparse
import math
import time

from hypmut import packing


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=20)
    args = ap.parse_args()
    print(f"{'n':>3s} {'cross ell_w':>14s} {'sec(pi/m)':>14s} {'knot ell_w':>14s} "
          f"{'2cos(pi/m)':>14s} {'residual':>9s} {'min margin':>11s}")
    t0 = time.perf_counter()
    for n in range(2, args.max_n + 1):
        m = 2 * n + 1
        c = packing.solve_crossing_rectangle(n)
        k = packing.solve_knot_rectangle(n)
        margin = min(b.margin for b in packing.knot_rectangle_bounds(k)
                     + packing.crossing_rectangle_bounds(c))
        res = max(c.residual, k.residual)
        print(f"{n:3d} {c.ell_w:14.10f} {1 / math.cos(math.pi / m):14.10f} {k.ell_w:14.10f} "
              f"{2 * math.cos(math.pi / m):14.10f} {res:9.1e} {margin:11.3e}")
    print(f"total {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
