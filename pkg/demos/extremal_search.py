#!/usr/bin/env python3
# The extremal questions: how large can the down and total degrees get, and
# which permutations get there.  Closed forms against exhaustive search.

from bruhat_degrees import (
    brute_force_max,
    extremal_down_permutations,
    extremal_total_permutations,
    max_down_degree,
    max_total_degree,
    total_degree,
)

# Down degree: the maximum is floor(n^2/4), attained by three-block
# permutations.  n of them for odd n, n/2 for even n.
print("== maximal down degree ==")
for n in range(2, 8):
    best, attaining = brute_force_max(n, "down")
    family = extremal_down_permutations(n)
    print(f"n={n}: max={best} (formula {max_down_degree(n)}), "
          f"{len(attaining)} attaining, family matches: {attaining == family}")
print("the n=6 extremals:", " ".join(str(p) for p in extremal_down_permutations(6)))

# Total degree: the maximum is floor(n^2/4) + n - 2. The extremal set is the
# orbit of the two-block permutations under three involutions: reversal,
# swapping the end entries, swapping the values 1 and n.
print("\n== maximal total degree ==")
for n in range(2, 8):
    best, attaining = brute_force_max(n, "total")
    family = extremal_total_permutations(n)
    print(f"n={n}: max={best} (formula {max_total_degree(n)}), "
          f"{len(attaining)} attaining, orbit matches: {attaining == family}")

print("\nthe 16 extremals of S_5:")
for p in extremal_total_permutations(5):
    prof = total_degree(p)
    print(f"  {p}  down={prof.down} up={prof.up} total={prof.total}")

# For orders 1 < r < n-1 only the Turan upper bound t_{r+1}(n) is known in
# closed form; exhaustive maxima show it is not always tight (exploratory).
from bruhat_degrees import turan_number

print("\n== r-th degree maxima vs the Turan cap (exploratory) ==")
for n in range(4, 8):
    row = []
    for r in range(1, n):
        best, _ = brute_force_max(n, "rth", r=r)
        row.append(f"r={r}: {best}/{turan_number(r + 1, n)}")
    print(f"n={n}: " + "  ".join(row))
