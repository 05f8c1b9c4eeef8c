"""Integer partitions as multiplicity sequences, and the growth counting sequences.

A partition is stored by multiplicities: entry ``i-1`` of the tuple is the
number of parts equal to ``i``.  This makes the weight ``sum(i * mult_i)``,
the number of parts and the exponent vector of the associated power monomial
all read off directly.
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Tuple


class Partition:
    """Multiplicity-vector partition; immutable and hashable."""

    __slots__ = ("mults",)

    def __init__(self, mults: Iterable[int] = ()):
        m = tuple(int(v) for v in mults)
        while m and m[-1] == 0:
            m = m[:-1]
        if any(v < 0 for v in m):
            raise ValueError("partition multiplicities must be non-negative")
        object.__setattr__(self, "mults", m)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from an explicit list of parts, e.g. [1, 1, 2]."""
        parts = list(parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive")
        mults = [0] * (max(parts) if parts else 0)
        for p in parts:
            mults[p - 1] += 1
        return cls(mults)

    # -- basic statistics -------------------------------------------------

    @property
    def weight(self) -> int:
        return sum((i + 1) * v for i, v in enumerate(self.mults))

    @property
    def degree(self) -> int:
        """Number of parts, i.e. total degree of the power monomial."""
        return sum(self.mults)

    @property
    def max_part(self) -> int:
        return len(self.mults)

    @property
    def is_empty(self) -> bool:
        return not self.mults

    def parts(self) -> List[int]:
        out: List[int] = []
        for i, v in enumerate(self.mults):
            out.extend([i + 1] * v)
        return out

    def multiplicity(self, i: int) -> int:
        """Multiplicity of the part ``i`` (1-indexed)."""
        if i < 1:
            raise ValueError("part index must be >= 1")
        return self.mults[i - 1] if i <= len(self.mults) else 0

    # -- multiset arithmetic ---------------------------------------------

    def combine(self, other: "Partition") -> "Partition":
        """Multiset union: adds multiplicities (product of power monomials)."""
        n = max(len(self.mults), len(other.mults))
        return Partition(
            tuple(self.multiplicity(i + 1) + other.multiplicity(i + 1) for i in range(n))
        )

    def remove_part(self, i: int) -> "Partition":
        """Remove one part equal to ``i``; the part must be present."""
        if self.multiplicity(i) < 1:
            raise ValueError(f"no part equal to {i} to remove")
        m = list(self.mults)
        m[i - 1] -= 1
        return Partition(m)

    # -- dunder plumbing ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.mults == other.mults

    def __hash__(self) -> int:
        return hash(self.mults)

    def __repr__(self) -> str:
        return f"Partition({list(self.mults)})"


EMPTY = Partition()


def weight(p: Partition) -> int:
    """Weight of a partition: the integer it partitions."""
    return p.weight


def enumerate_partitions(
    wt: int, num_parts: Optional[int] = None, max_part: Optional[int] = None
) -> List[Partition]:
    """All partitions of ``wt`` with the given number of parts and part bound.

    ``num_parts=None`` leaves the number of parts unconstrained.  The result
    is duplicate-free and sorted lexicographically on the multiplicity
    vector, which fixes a deterministic order.
    """
    if wt < 0 or (num_parts is not None and num_parts < 0):
        return []
    if max_part is None:
        max_part = wt
    if max_part < 0:
        return []

    results: List[Partition] = []

    def rec(part: int, wt_left: int, deg_left: Optional[int], acc: List[int]):
        if part == 0:
            if wt_left == 0 and deg_left in (None, 0):
                results.append(Partition(reversed(acc)))
            return
        if part == 1:
            # remaining weight must be made of 1's
            if deg_left is not None and deg_left != wt_left:
                return
            acc.append(wt_left)
            rec(0, 0, 0 if deg_left is not None else None, acc)
            acc.pop()
            return
        top = wt_left // part
        if deg_left is not None:
            top = min(top, deg_left)
        for mult in range(top + 1):
            acc.append(mult)
            rec(
                part - 1,
                wt_left - mult * part,
                None if deg_left is None else deg_left - mult,
                acc,
            )
            acc.pop()

    effective_max = min(max_part, wt) if wt > 0 else 0
    if wt == 0:
        if num_parts in (None, 0):
            return [EMPTY]
        return []
    if effective_max == 0:
        return []
    rec(effective_max, wt, num_parts, [])
    results.sort(key=lambda p: p.mults)
    return results


def count_partitions(limit: int) -> List[int]:
    """Partition numbers p(0..limit) by the standard coin-style DP."""
    if limit < 0:
        return []
    ways = [0] * (limit + 1)
    ways[0] = 1
    for part in range(1, limit + 1):
        for w in range(part, limit + 1):
            ways[w] += ways[w - part]
    return ways


def sequences_abc(limit: int) -> Tuple[List[int], List[int], List[int]]:
    """The growth sequences: partition counts, prefix sums and double prefix sums.

    ``a[i]`` counts unrestricted partitions of ``i``; ``b`` and ``c`` are the
    first and second partial-sum sequences.  Consumers treat negative indices
    as 0.
    """
    if limit < 0:
        raise ValueError("limit must be >= 0")
    a = count_partitions(limit)
    b: List[int] = []
    c: List[int] = []
    run = 0
    for v in a:
        run += v
        b.append(run)
    run = 0
    for v in b:
        run += v
        c.append(run)
    return a, b, c


def seq_at(seq: List[int], idx: int) -> int:
    """Sequence access with the negative-index-is-zero convention."""
    if idx < 0:
        return 0
    return seq[idx]
