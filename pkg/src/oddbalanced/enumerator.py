"""Brute-force generation of odd-balanced unimodal sequences.

A sequence of size 2n+2 has an even peak, distinct even parts strictly
below the peak on each side, and a multiset of odd parts (all below the
peak) repeated identically on both sides.  These are the exact objects
counted by the rank generating function, so the enumeration here serves as
the independent oracle for the series expansion.

Runtime grows quickly with n; sizes up to about 2n+2 = 30 stay practical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


@dataclass(frozen=True)
class OddBalancedSequence:
    peak: int
    left_evens: tuple  # strictly increasing, each < peak
    right_evens: tuple  # strictly decreasing, each < peak
    side_odds: tuple  # one side's odd multiset, sorted descending

    def __post_init__(self):
        assert self.peak % 2 == 0 and self.peak >= 2
        assert all(e % 2 == 0 and 0 < e < self.peak for e in self.left_evens)
        assert all(e % 2 == 0 and 0 < e < self.peak for e in self.right_evens)
        assert all(o % 2 == 1 and 0 < o < self.peak for o in self.side_odds)
        assert tuple(sorted(self.left_evens)) == self.left_evens
        assert tuple(sorted(self.right_evens, reverse=True)) == self.right_evens
        assert len(set(self.left_evens)) == len(self.left_evens)
        assert len(set(self.right_evens)) == len(self.right_evens)

    @property
    def size(self):
        return (self.peak + sum(self.left_evens) + sum(self.right_evens)
                + 2 * sum(self.side_odds))

    @property
    def rank(self):
        # odd parts appear on both sides, so only the even parts count
        return len(self.right_evens) - len(self.left_evens)

    def flatten(self):
        """The sequence as actually written: ascending left side, peak,
        descending right side."""
        left = tuple(sorted(self.left_evens + self.side_odds))
        right = tuple(sorted(self.right_evens + self.side_odds, reverse=True))
        return left + (self.peak,) + right

    def is_unimodal_with_strict_evens(self):
        """Check the defining chain on the flattened sequence: weakly
        monotone to/from the peak, strict wherever two even parts (or an
        even part and the peak) are adjacent."""
        seq = self.flatten()
        p = seq.index(max(seq))
        for i in range(len(seq) - 1):
            a, b = seq[i], seq[i + 1]
            if i < p:
                ok = a < b if (a % 2 == 0 and b % 2 == 0) else a <= b
            else:
                ok = a > b if (a % 2 == 0 and b % 2 == 0) else a >= b
            if not ok:
                return False
        return True


def rank_of(seq):
    """Rank statistic: parts after the peak minus parts before it."""
    if isinstance(seq, OddBalancedSequence):
        return seq.rank
    # tuple form: the peak is the unique maximal element (even, strict
    # against its even neighbours)
    p = seq.index(max(seq))
    return (len(seq) - 1 - p) - p


def _subsets_bounded(values, bound):
    """All subsets of values (distinct positive ints) with sum <= bound."""
    out = [()]
    for v in values:
        out += [s + (v,) for s in out if sum(s) + v <= bound]
    return [s for s in out if sum(s) <= bound]


@lru_cache(maxsize=None)
def _odd_partitions(total, max_part):
    """Partitions of total into odd parts <= max_part, parts descending."""
    if total == 0:
        return ((),)
    if max_part < 1:
        return ()
    if max_part % 2 == 0:
        max_part -= 1
    out = []
    p = min(max_part, total if total % 2 == 1 else total - 1)
    while p >= 1:
        for rest in _odd_partitions(total - p, p):
            out.append((p,) + rest)
        p -= 2
    return tuple(out)


def enumerate_sequences(n):
    """All odd-balanced unimodal sequences of size 2n+2, each exactly once."""
    if n < 0:
        raise ValueError("n must be >= 0")
    size = 2 * n + 2
    out = []
    for peak in range(2, size + 1, 2):
        budget = size - peak
        evens = tuple(range(2, peak, 2))
        for left in _subsets_bounded(evens, budget):
            for right in _subsets_bounded(evens, budget - sum(left)):
                rem = budget - sum(left) - sum(right)
                assert rem % 2 == 0
                for odds in _odd_partitions(rem // 2, peak - 1):
                    out.append(OddBalancedSequence(
                        peak=peak,
                        left_evens=tuple(sorted(left)),
                        right_evens=tuple(sorted(right, reverse=True)),
                        side_odds=odds,
                    ))
    return out


@dataclass
class EnumeratedTable:
    """Exact v(m,n) counts gathered from enumeration."""

    max_n: int
    counts: dict = field(default_factory=dict)  # (m, n) -> count

    def v(self, m, n):
        return self.counts.get((m, n), 0)

    def ranks_at(self, n):
        return sorted(m for (m, nn) in self.counts if nn == n)

    def total(self, n):
        return sum(c for (m, nn), c in self.counts.items() if nn == n)


def count_rank_table(n_max):
    """Exact v(m,n) for all n <= n_max via enumeration."""
    table = EnumeratedTable(max_n=n_max)
    for n in range(n_max + 1):
        for seq in enumerate_sequences(n):
            key = (seq.rank, n)
            table.counts[key] = table.counts.get(key, 0) + 1
    return table
