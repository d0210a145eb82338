"""Cover relations and degree statistics of the strong Bruhat order on S_n.

A permutation p covers q exactly when q = t_{a,b} * p for some values a < b
such that b appears before a in p and no position between them holds a value
strictly between a and b.  Equivalently, left multiplication by t_{a,b}
drops the inversion number by exactly 1.

The r-th strong descent set generalizes this: t_{a,b} is an r-th strong
descent of p when b appears before a and fewer than r of the positions
strictly between them hold values strictly between a and b; equivalently
0 > inv(t_{a,b} p) - inv(p) > -2r.  The r = 1 case gives the covers, and
r = n-1 gives all inversions.

All positional scans here are O(n^2); the inversion-number route
(``length_change``) is retained as an independent oracle for tests.
"""
from __future__ import annotations

import json
from bisect import bisect_right, insort
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .perm import Permutation, Transposition, apply_transposition_left

# above this size, set construction goes through the vectorized scan
_NUMPY_MIN_N = 32


@dataclass(frozen=True)
class DegreeProfile:
    """Down, up and total valency of a permutation in the Hasse diagram."""

    down: int
    up: int

    @property
    def total(self) -> int:
        return self.down + self.up


@dataclass(frozen=True)
class StrongDescentSet:
    """The r-th strong descent set of a permutation of degree n.

    ``members`` is sorted by (a, b) so that serialized output is
    deterministic.
    """

    n: int
    r: int
    members: tuple[Transposition, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.r < max(self.n, 2):
            raise ValueError(f"order parameter r={self.r} out of range 1..{self.n - 1}")
        for t in self.members:
            if not 1 <= t.a < t.b <= self.n:
                raise ValueError(f"member {t} out of range for n={self.n}")
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Transposition]:
        return iter(self.members)

    def __contains__(self, t: object) -> bool:
        return t in set(self.members)

    def pairs(self) -> list[tuple[int, int]]:
        return [(t.a, t.b) for t in self.members]

    def to_text(self) -> str:
        return " ".join(f"t({t.a},{t.b})" for t in self.members)

    @classmethod
    def from_text(cls, n: int, r: int, text: str) -> "StrongDescentSet":
        members = []
        for token in text.split():
            if not (token.startswith("t(") and token.endswith(")")):
                raise ValueError(f"bad transposition token {token!r}")
            a, b = (int(x) for x in token[2:-1].split(","))
            members.append(Transposition.of(a, b))
        return cls(n, r, tuple(members))

    def to_json(self) -> str:
        payload = {"n": self.n, "r": self.r, "members": [[t.a, t.b] for t in self.members]}
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "StrongDescentSet":
        payload = json.loads(text)
        members = tuple(Transposition.of(a, b) for a, b in payload["members"])
        return cls(int(payload["n"]), int(payload["r"]), members)


# ---------------------------------------------------------------------------
# hot word-level scans (tuples of values, no wrapper objects)

def _down_degree_word(w: Sequence[int]) -> int:
    n = len(w)
    total = 0
    for i in range(n - 1):
        b = w[i]
        if b == 1:
            continue
        best = 0
        for k in range(i + 1, n):
            a = w[k]
            if a < b and a > best:
                total += 1
                if a == b - 1:
                    break
                best = a
    return total


def _up_degree_word(w: Sequence[int]) -> int:
    n = len(w)
    total = 0
    for i in range(n - 1):
        b = w[i]
        if b == n:
            continue
        best = n + 1
        for k in range(i + 1, n):
            a = w[k]
            if a > b and a < best:
                total += 1
                if a == b + 1:
                    break
                best = a
    return total


def _down_pairs_word(w: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs (a, b) with t_{a,b} a strong descent (r = 1)."""
    n = len(w)
    out = []
    for i in range(n - 1):
        b = w[i]
        if b == 1:
            continue
        best = 0
        for k in range(i + 1, n):
            a = w[k]
            if a < b and a > best:
                out.append((a, b))
                if a == b - 1:
                    break
                best = a
    return out


def _up_pairs_word(w: Sequence[int]) -> list[tuple[int, int]]:
    """Pairs (a, b), a < b, with inv(t_{a,b} w) = inv(w) + 1."""
    n = len(w)
    out = []
    for i in range(n - 1):
        b = w[i]
        if b == n:
            continue
        best = n + 1
        for k in range(i + 1, n):
            a = w[k]
            if a > b and a < best:
                out.append((b, a))
                if a == b + 1:
                    break
                best = a
    return out


def _descent_pairs_word(w: Sequence[int], r: int) -> list[tuple[int, int]]:
    """Pairs (a, b) in the r-th strong descent set, bisect scan."""
    n = len(w)
    out = []
    for i in range(n - 1):
        b = w[i]
        if b == 1:
            continue
        below: list[int] = []  # sorted values < b seen after position i
        for k in range(i + 1, n):
            a = w[k]
            if a < b:
                if len(below) - bisect_right(below, a) < r:
                    out.append((a, b))
                insort(below, a)
    return out


def _rth_down_degree_word(w: Sequence[int], r: int) -> int:
    n = len(w)
    total = 0
    for i in range(n - 1):
        b = w[i]
        if b == 1:
            continue
        below: list[int] = []
        for k in range(i + 1, n):
            a = w[k]
            if a < b:
                if len(below) - bisect_right(below, a) < r:
                    total += 1
                insort(below, a)
    return total


# ---------------------------------------------------------------------------
# vectorized pair scan

def between_counts(p: Permutation | Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """For every value pair, the number of strictly-between values positioned
    strictly between them.

    Returns ``(counts, pos)`` where ``counts[a-1, b-1]`` (valid for a < b,
    regardless of which appears first) is the between count and ``pos[v]``
    is the 0-based position of value v.  Built from a 2-D prefix-sum table,
    O(n^2) time and space.
    """
    vals = np.asarray(p.values if isinstance(p, Permutation) else p, dtype=np.int64)
    n = len(vals)
    pos = np.zeros(n + 1, dtype=np.int64)
    pos[vals] = np.arange(n)
    onehot = np.zeros((n, n + 1), dtype=np.int64)
    onehot[np.arange(n), vals] = 1
    prefix = onehot.cumsum(axis=0).cumsum(axis=1)
    prefix = np.vstack([np.zeros((1, n + 1), dtype=np.int64), prefix])
    values = np.arange(1, n + 1)
    pv = pos[values]
    lo = np.minimum(pv[:, None], pv[None, :])
    hi = np.maximum(pv[:, None], pv[None, :])
    upper = (values - 1)[None, :]  # values <= b-1
    lower = values[:, None]  # values <= a
    counts = (prefix[hi, upper] - prefix[lo + 1, upper]) - (prefix[hi, lower] - prefix[lo + 1, lower])
    return counts, pos


def _descent_pairs_numpy(p: Permutation, r: int) -> list[tuple[int, int]]:
    counts, pos = between_counts(p)
    n = p.n
    values = np.arange(1, n + 1)
    inverted = pos[values][None, :] < pos[values][:, None]  # pos(b) < pos(a)
    mask = np.triu(np.ones((n, n), dtype=bool), 1) & inverted & (counts < r)
    return [(int(a) + 1, int(b) + 1) for a, b in np.argwhere(mask)]


# ---------------------------------------------------------------------------
# public operations

def length_change(t: Transposition, p: Permutation) -> int:
    """inv(t_{a,b} p) - inv(p); always odd.

    Independent slow path used as the oracle for every descent-set
    membership criterion.
    """
    return apply_transposition_left(t, p).inversion_number() - p.inversion_number()


def is_cover(p: Permutation, q: Permutation) -> bool:
    """True iff p covers q in the strong Bruhat order."""
    if p.n != q.n:
        raise ValueError(f"degree mismatch: {p.n} vs {q.n}")
    diff = [i for i, (x, y) in enumerate(zip(p.values, q.values)) if x != y]
    if len(diff) != 2:
        return False
    i, k = diff
    b, a = p.values[i], p.values[k]
    if b <= a or q.values[i] != a or q.values[k] != b:
        return False
    return all(not a < p.values[j] < b for j in range(i + 1, k))


def covered_by(p: Permutation) -> list[Permutation]:
    """All q covered by p (down neighbors), sorted."""
    out = [p.swap_values(a, b) for a, b in _down_pairs_word(p.values)]
    return sorted(out, key=lambda q: q.values)


def covers_of(p: Permutation) -> list[Permutation]:
    """All q covering p (up neighbors), sorted."""
    out = [p.swap_values(a, b) for a, b in _up_pairs_word(p.values)]
    return sorted(out, key=lambda q: q.values)


def down_degree(p: Permutation) -> int:
    return _down_degree_word(p.values)


def up_degree(p: Permutation) -> int:
    return _up_degree_word(p.values)


def total_degree(p: Permutation) -> DegreeProfile:
    return DegreeProfile(down=down_degree(p), up=up_degree(p))


def strong_descent_set(p: Permutation, r: int = 1) -> StrongDescentSet:
    """The r-th strong descent set of p, members sorted by (a, b).

    The positional criterion and the length-window criterion
    (0 > length_change > -2r) agree; tests check this exhaustively.
    """
    _check_order(p.n, r)
    if p.n >= _NUMPY_MIN_N:
        pairs = _descent_pairs_numpy(p, r)
    elif r == 1:
        pairs = _down_pairs_word(p.values)
    else:
        pairs = _descent_pairs_word(p.values, r)
    members = tuple(Transposition(a, b) for a, b in sorted(pairs))
    return StrongDescentSet(n=p.n, r=r, members=members)


def rth_down_degree(p: Permutation, r: int) -> int:
    """Cardinality of the r-th strong descent set."""
    _check_order(p.n, r)
    if r == 1:
        return _down_degree_word(p.values)
    if p.n >= _NUMPY_MIN_N:
        return len(_descent_pairs_numpy(p, r))
    return _rth_down_degree_word(p.values, r)


def _check_order(n: int, r: int) -> None:
    if not 1 <= r < max(n, 2):
        raise ValueError(f"order parameter r={r} out of range 1..{max(n - 1, 1)}")
