"""Watching transform values fill the unit disk.

The two-point transform values (e^{-in a} + e^{-in b})/2 equidistribute over
the closed unit disk.  This demo measures how quickly: for growing N it
reports the covering radius of the disk by the values with |n| <= N -- the
distance from the worst-covered disk point to its nearest sample -- for all
indices and for the even and odd subsequences separately.
"""

import math

import numpy as np

from natspec import covering_radius, disk_grid, pair_transform_values

ALPHA, BETA = math.sqrt(2), math.sqrt(3)


def main() -> None:
    reference = disk_grid(1.0, 0.01)
    print(f"reference grid: {len(reference)} points in the closed unit disk")
    print(f"{'N':>6}  {'all':>10}  {'even':>10}  {'odd':>10}")
    for exponent in range(4, 13):
        N = 2 ** exponent
        ns = np.arange(-N, N + 1, dtype=np.int64)
        values = pair_transform_values(ns, ALPHA, BETA)
        cols = []
        for mask in (np.ones_like(ns, dtype=bool), ns % 2 == 0, ns % 2 != 0):
            cols.append(covering_radius(reference, values[mask]))
        print(f"{N:>6}  {cols[0]:>10.6f}  {cols[1]:>10.6f}  {cols[2]:>10.6f}")

    print("\nthe covering radius never increases with N: each row's samples")
    print("are a superset of the previous row's.")


if __name__ == "__main__":
    main()
