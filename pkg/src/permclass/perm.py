"""Finite permutations in one-line notation and the basic operators on them.

A permutation of length n is a bijection of [n] = {1, ..., n}, stored as the
tuple (p(1), ..., p(n)).  The empty permutation (n = 0) is a valid value.
All values are immutable; every function here is pure.

Text format: a plain digit string for n <= 9 ("2143"), comma-separated values
otherwise ("8,11,10,6,9,4,7,1,5,3,2").  str() emits the same convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInflation, InvalidPointSet, InvalidSequence


@dataclass(frozen=True)
class Perm:
    values: tuple[int, ...] = ()

    def __post_init__(self):
        n = len(self.values)
        if sorted(self.values) != list(range(1, n + 1)):
            raise InvalidSequence(f"not a permutation of 1..{n}: {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def __lt__(self, other: "Perm") -> bool:
        return (len(self), self.values) < (len(other), other.values)

    @classmethod
    def from_text(cls, text: str) -> "Perm":
        s = text.strip()
        if s == "":
            return cls(())
        if "," in s:
            try:
                vals = tuple(int(t) for t in s.split(","))
            except ValueError:
                raise InvalidSequence(f"bad permutation text: {text!r}")
            return cls(vals)
        if not s.isdigit():
            raise InvalidSequence(f"bad permutation text: {text!r}")
        return cls(tuple(int(ch) for ch in s))


EMPTY = Perm(())


def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def decreasing(n: int) -> Perm:
    return Perm(tuple(range(n, 0, -1)))


def all_perms(n: int) -> Iterator[Perm]:
    for vals in permutations(range(1, n + 1)):
        yield Perm(vals)


def pattern_of(seq: Sequence[int]) -> Perm:
    """The unique permutation order-isomorphic to a sequence of distinct ints."""
    seq = tuple(seq)
    if len(set(seq)) != len(seq):
        raise InvalidSequence(f"entries not distinct: {seq}")
    rank = {v: r for r, v in enumerate(sorted(seq), 1)}
    return Perm(tuple(rank[v] for v in seq))


def restriction(p: Perm, indices: Iterable[int]) -> Perm:
    """Pattern of p at the given 1-based positions."""
    idx = sorted(set(indices))
    if idx and (idx[0] < 1 or idx[-1] > len(p)):
        raise InvalidPointSet(f"positions out of range 1..{len(p)}: {idx}")
    return pattern_of(tuple(p.values[i - 1] for i in idx))


def delete(p: Perm, i: int) -> Perm:
    """Pattern of p with the point at 1-based position i removed."""
    if not 1 <= i <= len(p):
        raise InvalidPointSet(f"position out of range: {i}")
    return pattern_of(p.values[: i - 1] + p.values[i:])


def deletions(p: Perm) -> set[Perm]:
    """All distinct one-point-deletion patterns of p."""
    return {delete(p, i) for i in range(1, len(p) + 1)}


def contains(pat: Perm, host: Perm) -> bool:
    """True iff host has a subsequence order-isomorphic to pat.

    Depth-first search over candidate positions; each candidate value must lie
    strictly between the already-matched values that tightest-bound the
    pattern value from below and above, which prunes hard on long hosts.
    """
    k, n = len(pat), len(host)
    if k == 0:
        return True
    if k > n:
        return False
    pv, hv = pat.values, host.values
    lo_ref: list[int | None] = [None] * k
    hi_ref: list[int | None] = [None] * k
    for j in range(k):
        for i in range(j):
            if pv[i] < pv[j] and (lo_ref[j] is None or pv[i] > pv[lo_ref[j]]):
                lo_ref[j] = i
            if pv[i] > pv[j] and (hi_ref[j] is None or pv[i] < pv[hi_ref[j]]):
                hi_ref[j] = i
    chosen = [0] * k

    def dfs(j: int, start: int) -> bool:
        if j == k:
            return True
        for i in range(start, n - (k - j) + 1):
            v = hv[i]
            lo = lo_ref[j]
            if lo is not None and v <= hv[chosen[lo]]:
                continue
            hi = hi_ref[j]
            if hi is not None and v >= hv[chosen[hi]]:
                continue
            chosen[j] = i
            if dfs(j + 1, i + 1):
                return True
        return False

    return dfs(0, 0)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, v in enumerate(p.values, 1):
        out[v - 1] = i
    return Perm(tuple(out))


def reverse(p: Perm) -> Perm:
    return Perm(p.values[::-1])


def complement(p: Perm) -> Perm:
    n = len(p)
    return Perm(tuple(n + 1 - v for v in p.values))


def direct_sum(s: Perm, t: Perm) -> Perm:
    n = len(s)
    return Perm(s.values + tuple(n + v for v in t.values))


def skew_sum(s: Perm, t: Perm) -> Perm:
    m = len(t)
    return Perm(tuple(m + v for v in s.values) + t.values)


def inflate(skeleton: Perm, parts: Sequence[Perm]) -> Perm:
    """Replace the i-th point of the skeleton by a block patterned on parts[i].

    Block i occupies consecutive positions; its values are offset by the total
    size of the blocks whose skeleton value is smaller.
    """
    m = len(skeleton)
    if len(parts) != m:
        raise InvalidInflation(f"expected {m} parts, got {len(parts)}")
    if any(len(t) == 0 for t in parts):
        raise InvalidInflation("inflation parts must be nonempty")
    sizes = [len(t) for t in parts]
    offset = [0] * m
    for i in range(m):
        offset[i] = sum(sizes[j] for j in range(m) if skeleton[j] < skeleton[i])
    out: list[int] = []
    for i, t in enumerate(parts):
        out.extend(offset[i] + v for v in t.values)
    return Perm(tuple(out))
