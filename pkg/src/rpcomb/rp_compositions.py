"""RP compositions of an integer and their bijection with binary partitions.

Compositions are plain tuples of positive ints.  A binary partition is kept
as its multiplicity vector: ``m[i]`` copies of the part ``2**i``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from .core_trees import EMPTY, inorder_expand, is_rp, pair_sequence
from .errors import BoundExceeded, DomainError, NotRecursivelyPalindromic

Composition = Tuple[int, ...]

DEFAULT_PARTITION_BOUND = 256


@dataclass(frozen=True)
class BinaryPartition:
    """Partition of ``n`` into powers of two, by multiplicity of each power.

    Trailing zero multiplicities are dropped, so the last entry (if any) is
    positive and equal partitions compare equal.
    """

    multiplicities: Tuple[int, ...]

    def __post_init__(self):
        m = list(self.multiplicities)
        if any(not isinstance(x, int) or x < 0 for x in m):
            raise DomainError(f"multiplicities must be nonnegative ints: {m}")
        while m and m[-1] == 0:
            m.pop()
        object.__setattr__(self, "multiplicities", tuple(m))

    @property
    def n(self) -> int:
        return sum(m << i for i, m in enumerate(self.multiplicities))

    @property
    def parts(self) -> Tuple[int, ...]:
        """Parts in descending order."""
        out: List[int] = []
        for i in reversed(range(len(self.multiplicities))):
            out.extend([1 << i] * self.multiplicities[i])
        return tuple(out)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "BinaryPartition":
        m: List[int] = []
        for p in parts:
            if not isinstance(p, int) or p < 1 or p & (p - 1):
                raise DomainError(f"{p!r} is not a power of 2")
            i = p.bit_length() - 1
            if len(m) <= i:
                m.extend([0] * (i + 1 - len(m)))
            m[i] += 1
        return cls(tuple(m))


def _check_composition(c: Sequence[int]) -> None:
    for p in c:
        if not isinstance(p, int) or p < 1:
            raise DomainError(f"composition parts must be positive ints, got {p!r}")


def is_rp_composition(c: Sequence[int]) -> bool:
    return is_rp(tuple(c))


# f(0..len-1), grown on demand
_rp_counts: List[int] = [1]
_rp_counts_lock = threading.Lock()


def rp_composition_counts(n: int) -> List[int]:
    """List of ``count_rp_compositions(i)`` for ``i`` in ``0..n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    with _rp_counts_lock:
        f = _rp_counts
        for m in range(len(f), n + 1):
            if m % 2:
                f.append(f[m - 1])
            else:
                f.append(f[m - 2] + f[m // 2])
        return f[: n + 1]


def count_rp_compositions(n: int) -> int:
    """Number of RP compositions of ``n``.

    Uses ``f(2m+1) = f(2m)`` and ``f(2m) = f(2m-2) + f(m)`` with ``f(0) = 1``.
    """
    return rp_composition_counts(n)[n]


def binary_partition_counts(n: int) -> List[int]:
    """List of ``count_binary_partitions(i)`` for ``i`` in ``0..n``.

    Counted by admitting the parts ``1, 2, 4, ...`` one at a time (the usual
    coin-change table), which shares nothing with the recurrence behind
    :func:`count_rp_compositions`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    ways = [1] + [0] * n
    part = 1
    while part <= n:
        for s in range(part, n + 1):
            ways[s] += ways[s - part]
        part <<= 1
    return ways


def count_binary_partitions(n: int) -> int:
    """Number of partitions of ``n`` into powers of two."""
    return binary_partition_counts(n)[n]


def enumerate_rp_compositions(n: int) -> Iterator[Composition]:
    """Yield each RP composition of ``n`` once.

    An RP composition of ``2m`` is ``w + w`` or ``w + (2j,) + w`` with
    ``w`` an RP composition of ``m - j``; one of ``2m + 1`` is
    ``w + (2j + 1,) + w``.  Middle parts are tried in ascending order.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    m, odd = divmod(n, 2)
    if not odd:
        for w in enumerate_rp_compositions(m):
            yield w + w
    for j in range(0 if odd else 1, m + 1):
        middle = (2 * j + odd,)
        for w in enumerate_rp_compositions(m - j):
            yield w + middle + w


def enumerate_binary_partitions(
    n: int, bound: int = DEFAULT_PARTITION_BOUND
) -> Iterator[BinaryPartition]:
    """Yield every binary partition of ``n``.

    Ordered by largest part descending, then by the remaining parts the
    same way, e.g. ``4; 2+2; 2+1+1; 1+1+1+1``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"n={n} exceeds the partition enumeration bound {bound}")

    def parts_of(rest: int, largest: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        p = largest
        while p >= 1:
            if p <= rest:
                for tail in parts_of(rest - p, p):
                    yield (p,) + tail
            p >>= 1

    top = 1 << max(n.bit_length() - 1, 0)
    for parts in parts_of(n, top):
        yield BinaryPartition.from_parts(parts)


def partition_to_composition(partition: BinaryPartition) -> Composition:
    """RP composition read off the complete tree labeled by multiplicities.

    Depth ``i`` of the tree carries ``m[i]``; zero labels are skipped by the
    inorder reading.
    """
    labels = [m if m else EMPTY for m in partition.multiplicities]
    return inorder_expand(labels)


def composition_to_partition(c: Sequence[int]) -> BinaryPartition:
    """Inverse of :func:`partition_to_composition`."""
    c = tuple(c)
    _check_composition(c)
    if not is_rp(c):
        raise NotRecursivelyPalindromic(f"{c!r} is not an RP composition")
    m = []
    while c:
        p = len(c)
        m.append(c[p // 2] if p % 2 else 0)
        c = c[: p // 2]
    return BinaryPartition(tuple(m))


def pair_composition(c: Sequence[int]) -> Composition:
    """Pairing involution on the parts of a composition."""
    return tuple(pair_sequence(tuple(c)))


def all_compositions(n: int) -> Iterator[Composition]:
    """All ``2**(n-1)`` compositions of ``n`` (just the empty one for 0).

    Bit ``i`` of the mask set means a cut after the ``i+1``-th unit.
    """
    if n == 0:
        yield ()
        return
    for mask in range(1 << (n - 1)):
        parts = []
        run = 1
        for i in range(n - 1):
            if mask >> i & 1:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)
