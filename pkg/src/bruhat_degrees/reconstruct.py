"""Rebuild a permutation from its strong descent set.

The strong descent set determines the permutation uniquely.  The
construction inserts values 2, 3, ..., n one at a time: when value k is
added, the members t_{a,k} of the descent set say exactly where k lands.
If no member involves k, then k goes last; otherwise k sits immediately
before the smallest such a.  (Deleting the value k from a permutation
removes precisely the members t_{a,k} from its descent set, which is why
the insertion order works.)

Not every set of transpositions is a strong descent set, and no simple
characterization is used here; the result is always validated by
recomputing its descent set, and a mismatch raises ValidationFailure.
"""
from __future__ import annotations

from typing import Iterable

from . import bruhat
from .bruhat import StrongDescentSet
from .perm import Permutation, Transposition


class ValidationFailure(ValueError):
    """The given set is not the strong descent set of any permutation."""


def reconstruct(n: int, descents: StrongDescentSet) -> Permutation:
    """The unique permutation in S_n whose strong descent set is ``descents``.

    Raises ValidationFailure if no permutation realizes the set, and
    ValueError for malformed input (wrong n, r != 1, members out of range).
    """
    if descents.n != n:
        raise ValueError(f"descent set carries n={descents.n}, expected {n}")
    if descents.r != 1:
        raise ValueError(f"reconstruction needs r=1, got r={descents.r}")
    p = _build(n, descents.pairs())
    if bruhat.strong_descent_set(p, 1).members != descents.members:
        raise ValidationFailure(
            f"set of {len(descents)} transpositions is not realizable in S_{n}")
    return p


def is_realizable(n: int, members: Iterable[tuple[int, int] | Transposition]) -> bool:
    """True iff some permutation in S_n has exactly this strong descent set."""
    try:
        candidate = StrongDescentSet(
            n=n, r=1, members=tuple(Transposition.of(a, b) for a, b in members))
        reconstruct(n, candidate)
    except ValueError:  # covers ValidationFailure and malformed members
        return False
    return True


def _build(n: int, pairs: list[tuple[int, int]]) -> Permutation:
    # smallest partner below each value, if any
    anchor = [0] * (n + 1)
    for a, b in pairs:
        if not 1 <= a < b <= n:
            raise ValueError(f"member ({a},{b}) out of range for n={n}")
        if anchor[b] == 0 or a < anchor[b]:
            anchor[b] = a
    word = [1]
    for k in range(2, n + 1):
        if anchor[k] == 0:
            word.append(k)
        else:
            word.insert(word.index(anchor[k]), k)
    return Permutation(tuple(word))
