"""Maxima of the degree statistics: closed forms, explicit extremal
families, and an exhaustive-search oracle.

The maximal down degree on S_n is floor(n^2/4), attained exactly by the
three-block permutations [t+m+1..n, t+1..t+m, 1..t] with m a half of n and
1 <= t <= n-m; there are n of them for odd n and n/2 for even n.

The maximal total degree is floor(n^2/4) + n - 2 (n >= 2), attained by the
two-block permutations [m+1..n, 1..m] and their images under reversal,
first/last entry exchange, and exchange of the values 1 and n; the orbit
has size 2, 4, 8 or 16 depending on n.

``brute_force_max`` rederives both facts by scanning all of S_n, split into
contiguous lexicographic blocks so the scan parallelizes deterministically.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import bruhat
from ._parallel import map_blocks
from .perm import Permutation, _rank_block_prefixes, _value_tuples

MAX_EXHAUSTIVE_N = 9

_STATS = ("down", "total", "rth")


@dataclass(frozen=True)
class ExtremalFamilySpec:
    """One member of the maximal-down-degree family: block size m, offset t."""

    n: int
    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m not in (self.n // 2, (self.n + 1) // 2):
            raise ValueError(f"block size m={self.m} is not a half of n={self.n}")
        if not 1 <= self.t <= self.n - self.m:
            raise ValueError(f"offset t={self.t} out of range 1..{self.n - self.m}")

    def permutation(self) -> Permutation:
        n, m, t = self.n, self.m, self.t
        vals = list(range(t + m + 1, n + 1)) + list(range(t + 1, t + m + 1)) + list(range(1, t + 1))
        return Permutation(tuple(vals))


def max_down_degree(n: int) -> int:
    """floor(n^2/4), the largest possible number of covered elements."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    return n * n // 4


def max_total_degree(n: int) -> int:
    """floor(n^2/4) + n - 2, the largest Hasse-diagram valency; needs n >= 2."""
    if n < 2:
        raise ValueError("total-degree maximum needs n >= 2")
    return n * n // 4 + n - 2


def extremal_down_permutations(n: int) -> list[Permutation]:
    """All permutations attaining the maximal down degree, sorted.

    n of them when n is odd, n/2 when n is even (n >= 2).
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    found = {
        ExtremalFamilySpec(n, m, t).permutation()
        for m in {n // 2, (n + 1) // 2}
        for t in range(1, n - m + 1)
    }
    return sorted(found, key=lambda p: p.values)


def _two_block(n: int, m: int) -> Permutation:
    return Permutation(tuple(range(m + 1, n + 1)) + tuple(range(1, m + 1)))


def extremal_total_permutations(n: int) -> list[Permutation]:
    """All permutations attaining the maximal total degree, sorted.

    Computed as the closure of the two-block permutations under the three
    involutions (reversal, end-position exchange, extreme-value exchange);
    the closure is a fixed point after at most a few rounds since the
    involutions generate a group of order 8.
    """
    if n < 2:
        raise ValueError("total-degree extremals need n >= 2")
    closure = {_two_block(n, m) for m in {n // 2, (n + 1) // 2}}
    while True:
        grown = set(closure)
        for p in closure:
            grown.add(p.reverse_positions())
            grown.add(p.exchange_end_positions())
            grown.add(p.exchange_extreme_values())
        if grown == closure:
            return sorted(closure, key=lambda p: p.values)
        closure = grown


def _scan_max_block(args: tuple[int, tuple[int, ...], str, int]) -> tuple[int, list[tuple[int, ...]]]:
    n, prefix, stat, r = args
    best = -1
    hits: list[tuple[int, ...]] = []
    if stat == "down":
        stat_fn = bruhat._down_degree_word
    elif stat == "total":
        down, up = bruhat._down_degree_word, bruhat._up_degree_word
        stat_fn = lambda w: down(w) + up(w)
    else:
        stat_fn = lambda w: bruhat._rth_down_degree_word(w, r)
    for w in _value_tuples(n, prefix):
        d = stat_fn(w)
        if d > best:
            best = d
            hits = [w]
        elif d == best:
            hits.append(w)
    return best, hits


def brute_force_max(
    n: int,
    stat: str = "down",
    r: int | None = None,
    jobs: int | None = 1,
    limit: int = MAX_EXHAUSTIVE_N,
) -> tuple[int, list[Permutation]]:
    """Exact maximum of a degree statistic over S_n with all attaining
    permutations, by full enumeration.

    stat is one of 'down', 'total', 'rth' (the last needs r).  Refuses
    n > limit; raise the limit explicitly if you accept the factorial cost.
    """
    if stat not in _STATS:
        raise ValueError(f"unknown statistic {stat!r}, expected one of {_STATS}")
    if stat == "rth":
        if r is None:
            raise ValueError("statistic 'rth' needs the order parameter r")
        bruhat._check_order(n, r)
    if n < 1:
        raise ValueError("degree must be >= 1")
    if n > limit:
        raise ValueError(
            f"n={n} exceeds the exhaustive limit {limit} ({n}! permutations); "
            "pass a larger limit to override")
    depth = 0 if (jobs == 1 or n < 4) else 2
    blocks = [(n, prefix, stat, r or 0) for prefix in _rank_block_prefixes(n, depth)]
    results = map_blocks(_scan_max_block, blocks, jobs)
    best = max(b for b, _ in results)
    attaining = sorted(w for b, hits in results if b == best for w in hits)
    return best, [Permutation(w) for w in attaining]
