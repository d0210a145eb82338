"""Exact and sampled statistics of the degree distributions over S_n.

The expected down degree of a uniform element of S_n equals

    sum_{i=2}^{n} sum_{j=2}^{i} sum_{k=2}^{j} 1/(i*(k-1))
        = (n+1) * H_n - 2n,          H_n = 1 + 1/2 + ... + 1/n,

which grows as n ln n + O(n).  Everything exact here runs in
``fractions.Fraction`` arithmetic; floats appear only in Monte Carlo
estimates and asymptotics reporting (harmonic denominators overflow any
fixed-width type long before n = 50).

The expectation rests on an increment identity: appending the letter i to
the restriction of p below i raises the down degree by the number of
left-to-right maxima of the suffix following i, and the left-to-right
maxima statistic over S_t has generating polynomial (q)(q+1)...(q+t-1).
Both facts are re-checkable from this module (``check_increment_lemma``,
``ltrm_counts``).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import bruhat
from ._parallel import map_blocks
from .perm import (
    Permutation,
    _rank_block_prefixes,
    _value_tuples,
    ltr_maxima,
    standardize_word,
    suffix,
)

MAX_EXHAUSTIVE_N = 9

_MC_BLOCK = 20_000


def harmonic(n: int) -> Fraction:
    """H_n = sum of 1/i for 1 <= i <= n, exactly; H_0 = 0.

    >>> harmonic(3)
    Fraction(11, 6)
    """
    if n < 0:
        raise ValueError("harmonic numbers need n >= 0")
    num, den = _harmonic_range(1, n + 1)
    return Fraction(num, den)


def _harmonic_range(lo: int, hi: int) -> tuple[int, int]:
    # balanced split keeps the big-integer sizes even, much faster than a
    # left fold for n in the thousands
    if hi - lo == 0:
        return 0, 1
    if hi - lo == 1:
        return 1, lo
    mid = (lo + hi) // 2
    n1, d1 = _harmonic_range(lo, mid)
    n2, d2 = _harmonic_range(mid, hi)
    return n1 * d2 + n2 * d1, d1 * d2


def expected_down_degree(n: int) -> Fraction:
    """(n+1) * H_n - 2n: the mean down degree over S_n.

    >>> expected_down_degree(3)
    Fraction(4, 3)
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    return (n + 1) * harmonic(n) - 2 * n


def triple_sum_expectation(n: int) -> Fraction:
    """The triple sum form of the expectation, evaluated exactly.

    Accumulates sum_{k=2}^{j} 1/(k-1) and its partial sums over j, so the
    triple sum costs O(n) fraction operations instead of O(n^3) terms.
    ``_triple_sum_literal`` evaluates it term by term for cross-checking.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    total = Fraction(0)
    inner = Fraction(0)  # sum_{k=2}^{j} 1/(k-1) for the current j
    mid = Fraction(0)  # sum over j <= i of inner(j)
    for i in range(2, n + 1):
        inner += Fraction(1, i - 1)
        mid += inner
        total += mid / i
    return total


def _triple_sum_literal(n: int) -> Fraction:
    return sum(
        (Fraction(1, i * (k - 1))
         for i in range(2, n + 1)
         for j in range(2, i + 1)
         for k in range(2, j + 1)),
        Fraction(0),
    )


def expected_ltrm(t: int) -> Fraction:
    """Expected number of left-to-right maxima of a uniform word of length t."""
    return harmonic(t)


def ltrm_counts(t: int) -> list[int]:
    """counts[k] = number of permutations of S_t with exactly k left-to-right
    maxima; equals the coefficient of q^k in (q)(q+1)...(q+t-1)."""
    counts = [0] * (t + 1)
    for w in _value_tuples(t):
        counts[ltr_maxima(w)] += 1
    return counts


def rising_factorial_coefficients(t: int) -> list[int]:
    """Coefficients of (q)(q+1)...(q+t-1), index = power of q."""
    coeffs = [1]
    for k in range(1, t + 1):
        shifted = [0] + coeffs
        coeffs = [shifted[i] + (k - 1) * (coeffs[i] if i < len(coeffs) else 0)
                  for i in range(len(shifted))]
    return coeffs


def check_increment_lemma(p: Permutation) -> bool:
    """Verify, for each 2 <= i <= n, that extending the restriction of p
    below i by the letter i raises the down degree by the number of
    left-to-right maxima of the suffix following i.

    Words are renamed monotonically to permutations before their down
    degrees are taken.
    """
    if p.n < 2:
        raise ValueError("increment check needs n >= 2")
    for i in range(2, p.n + 1):
        w_hi = p.restrict_below(i + 1)  # word on {1..i}
        w_lo = p.restrict_below(i)  # word on {1..i-1}
        j = w_hi.index(i) + 1
        lhs = bruhat.down_degree(standardize_word(w_hi)) - (
            bruhat.down_degree(standardize_word(w_lo)) if w_lo else 0)
        rhs = ltr_maxima(suffix(w_lo, i - j))
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# exhaustive distributions

@dataclass(frozen=True)
class Histogram:
    """Exact counts of a statistic over all of S_n."""

    n: int
    stat: str
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())

    def mean(self) -> Fraction:
        return Fraction(sum(v * c for v, c in self.counts.items()), self.total())

    def to_json(self) -> str:
        ordered = {str(v): self.counts[v] for v in sorted(self.counts)}
        return json.dumps({"n": self.n, "stat": self.stat, "counts": ordered},
                          separators=(",", ":"))


def _distribution_block(args: tuple[int, tuple[int, ...], str, int]) -> dict[int, int]:
    n, prefix, stat, r = args
    counts: dict[int, int] = {}
    if stat == "down":
        stat_fn = bruhat._down_degree_word
    elif stat == "total":
        down, up = bruhat._down_degree_word, bruhat._up_degree_word
        stat_fn = lambda w: down(w) + up(w)
    else:
        stat_fn = lambda w: bruhat._rth_down_degree_word(w, r)
    for w in _value_tuples(n, prefix):
        d = stat_fn(w)
        counts[d] = counts.get(d, 0) + 1
    return counts


def distribution(
    n: int,
    stat: str = "down",
    r: int | None = None,
    jobs: int | None = 1,
    limit: int = MAX_EXHAUSTIVE_N,
) -> Histogram:
    """Exact distribution of a degree statistic over all n! permutations."""
    label = _check_stat(n, stat, r)
    if n > limit:
        raise ValueError(
            f"n={n} exceeds the exhaustive limit {limit}; pass a larger limit to override")
    depth = 0 if (jobs == 1 or n < 4) else 2
    blocks = [(n, prefix, stat, r or 0) for prefix in _rank_block_prefixes(n, depth)]
    merged: dict[int, int] = {}
    for part in map_blocks(_distribution_block, blocks, jobs):
        for v, c in part.items():
            merged[v] = merged.get(v, 0) + c
    return Histogram(n=n, stat=label, counts=merged)


def exhaustive_mean(n: int, stat: str = "down", r: int | None = None,
                    jobs: int | None = 1, limit: int = MAX_EXHAUSTIVE_N) -> Fraction:
    """Exact mean of a statistic over S_n (rational, no rounding)."""
    return distribution(n, stat, r=r, jobs=jobs, limit=limit).mean()


def _check_stat(n: int, stat: str, r: int | None) -> str:
    if n < 1:
        raise ValueError("degree must be >= 1")
    if stat not in ("down", "total", "rth"):
        raise ValueError(f"unknown statistic {stat!r}")
    if stat == "rth":
        if r is None:
            raise ValueError("statistic 'rth' needs the order parameter r")
        bruhat._check_order(n, r)
        return f"rth({r})"
    return stat


# ---------------------------------------------------------------------------
# Monte Carlo

def random_permutation_matrix(n: int, count: int, seed_key: tuple[int, ...]) -> np.ndarray:
    """count uniform permutations of {1..n} as rows, from a PCG64 stream
    keyed by seed_key (deterministic across platforms and job counts)."""
    rng = np.random.default_rng(np.random.SeedSequence(seed_key))
    return rng.permuted(np.tile(np.arange(1, n + 1), (count, 1)), axis=1)


def down_degrees_batch(W: np.ndarray) -> np.ndarray:
    """Down degree of every row of W (rows are one-line permutations)."""
    m, n = W.shape
    count = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        b = W[:, i]
        best = np.zeros(m, dtype=W.dtype)
        for k in range(i + 1, n):
            a = W[:, k]
            hit = (a < b) & (a > best)
            count += hit
            best = np.where(hit, a, best)
    return count


def up_degrees_batch(W: np.ndarray) -> np.ndarray:
    """Up degree of every row of W."""
    m, n = W.shape
    count = np.zeros(m, dtype=np.int64)
    for i in range(n - 1):
        b = W[:, i]
        best = np.full(m, n + 1, dtype=W.dtype)
        for k in range(i + 1, n):
            a = W[:, k]
            hit = (a > b) & (a < best)
            count += hit
            best = np.where(hit, a, best)
    return count


def _mc_block(args: tuple[int, str, int, int, int, int]) -> tuple[int, int, int]:
    n, stat, r, seed, index, count = args
    W = random_permutation_matrix(n, count, (seed, index))
    if stat == "down":
        vals = down_degrees_batch(W)
    elif stat == "total":
        vals = down_degrees_batch(W) + up_degrees_batch(W)
    else:
        vals = np.fromiter(
            (bruhat.rth_down_degree(Permutation(tuple(int(x) for x in row)), r)
             for row in W),
            dtype=np.int64, count=count)
    # integer sums keep the reduction exact, hence independent of job count
    return count, int(vals.sum()), int((vals.astype(object) ** 2).sum())


def monte_carlo_mean(
    n: int,
    stat: str = "down",
    samples: int = 10_000,
    seed: int = 0,
    r: int | None = None,
    jobs: int | None = 1,
) -> tuple[float, float]:
    """Sample mean and standard error of a degree statistic over uniform
    permutations; byte-deterministic given (n, stat, samples, seed).

    Samples are drawn in fixed blocks with per-block derived seeds, so the
    result does not depend on the number of workers.
    """
    _check_stat(n, stat, r)
    if samples < 2:
        raise ValueError("need at least 2 samples for a standard error")
    blocks = []
    index = 0
    remaining = samples
    while remaining > 0:
        take = min(_MC_BLOCK, remaining)
        blocks.append((n, stat, r or 0, seed, index, take))
        index += 1
        remaining -= take
    parts = map_blocks(_mc_block, blocks, jobs)
    count = sum(c for c, _, _ in parts)
    s1 = sum(s for _, s, _ in parts)
    s2 = sum(q for _, _, q in parts)
    mean = s1 / count
    var = (s2 - count * mean * mean) / (count - 1)
    stderr = math.sqrt(max(var, 0.0) / count)
    return mean, stderr
