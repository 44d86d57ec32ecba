"""
Exact combinatorial primitives.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever rounds.  Integer partitions are tuples in non-increasing order, set
partitions are generated from restricted growth strings.

>>> partitions(4)
[(4), (3,1), (2,2), (2,1,1), (1,1,1,1)]
>>> stirling2(4, 2)
7
>>> bernoulli_unsigned(2)
Fraction(1, 30)
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator, TypeVar

from .config import SET_PARTITION_LIMIT
from .errors import LimitExceededError

Rational = Fraction
INFINITY = math.inf

# Above this length the set-partition sum switches from literal enumeration
# of set partitions to the multiset recursion.
DIRECT_ENUMERATION_MAX_LENGTH = 8


class Partition(tuple):
    """An integer partition, stored as a non-increasing tuple of positive ints.

    Construction sorts its input, so ``Partition([1, 3]) == (3, 1)``.  Being a
    tuple subclass, it hashes and compares like the plain tuple of its parts.
    """

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    def weight(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def multiplicity_factorial(self) -> int:
        """prod_i m_i(lambda)!"""
        return math.prod(math.factorial(m) for m in Counter(self).values())

    def has_distinct_parts(self) -> bool:
        return len(set(self)) == len(self)

    def conjugate(self) -> Partition:
        if not self:
            return self
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def union(self, other) -> Partition:
        return Partition(tuple(self) + tuple(other))

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"

    __str__ = __repr__


IntegerPartition = Partition


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n)]


def partitions_up_to(n: int) -> list[Partition]:
    """Partitions of every weight 0..n, grouped by weight."""
    return [p for w in range(n + 1) for p in partitions(w)]


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``{1, ..., ground_size}`` into nonempty blocks.

    Blocks are sorted tuples, ordered by their smallest element.
    """

    blocks: tuple[tuple[int, ...], ...]
    ground_size: int

    def __post_init__(self):
        seen = sorted(x for b in self.blocks for x in b)
        if seen != list(range(1, self.ground_size + 1)):
            raise ValueError(f"blocks do not partition [{self.ground_size}]")
        if any(not b for b in self.blocks):
            raise ValueError("empty block")

    def length(self) -> int:
        return len(self.blocks)

    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def block_sums(self, weights) -> tuple:
        """``lambda_{pi_i}``: the sum of ``weights[j-1]`` over each block."""
        return tuple(sum(weights[j - 1] for j in b) for b in self.blocks)

    def __contains__(self, block) -> bool:
        return tuple(sorted(block)) in self.blocks


def _restricted_growth_strings(n: int) -> Iterator[list[int]]:
    # lexicographic order; a[0] = 0 and a[i] <= 1 + max(a[:i])
    if n == 0:
        yield []
        return
    a = [0] * n
    maxes = [0] * n  # maxes[i] = max(a[:i+1])

    def rec(i):
        if i == n:
            yield a
            return
        for v in range(maxes[i - 1] + 2):
            a[i] = v
            maxes[i] = max(maxes[i - 1], v)
            yield from rec(i + 1)

    yield from rec(1)


def _rgs_blocks(rgs: list[int]) -> list[list[int]]:
    blocks: list[list[int]] = []
    for idx, b in enumerate(rgs):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(idx)
    return blocks


def set_partitions(n: int, limit: int | None = None) -> Iterator[SetPartition]:
    """Yield every partition of ``[n]`` once, in restricted-growth-string order.

    ``n = 0`` yields the single empty partition.  Raises
    :class:`LimitExceededError` when ``n`` exceeds ``limit`` (default
    ``SET_PARTITION_LIMIT``), since the count grows like the Bell numbers.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    limit = SET_PARTITION_LIMIT if limit is None else limit
    if n > limit:
        raise LimitExceededError(f"set partitions of [{n}] exceed limit {limit}")
    for rgs in _restricted_growth_strings(n):
        blocks = tuple(tuple(j + 1 for j in b) for b in _rgs_blocks(rgs))
        yield SetPartition(blocks, n)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, with S(0,0)=1, S(n,0)=0 and S(n,k)=0 for k>n."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 takes nonnegative arguments")
    if k > n:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


_bernoulli_lock = threading.Lock()
_bernoulli_table: list[Fraction] = []


def bernoulli_unsigned(i: int) -> Fraction:
    """Unsigned Bernoulli number B_i, i >= 1, read off x/sinh(x).

    The coefficient of x^{2i} in x/sinh(x) is (-1)^i (2^{2i}-2) B_i / (2i)!.
    """
    if i < 1:
        raise ValueError("bernoulli_unsigned is defined for i >= 1")
    with _bernoulli_lock:
        if i > len(_bernoulli_table):
            from .series import x_over_sinh

            top = max(i, 2 * len(_bernoulli_table))
            q = x_over_sinh(2 * top)
            _bernoulli_table[:] = [
                (-1) ** j * q[2 * j] * math.factorial(2 * j) / (2 ** (2 * j) - 2)
                for j in range(1, top + 1)
            ]
        return _bernoulli_table[i - 1]


def nu2(q) -> int | float:
    """2-adic valuation of an integer or rational; ``INFINITY`` for zero."""
    q = Fraction(q)
    if q == 0:
        return INFINITY

    def v(m: int) -> int:
        m = abs(m)
        return (m & -m).bit_length() - 1

    return v(q.numerator) - v(q.denominator)


def binary_weight(i: int) -> int:
    """Number of ones in the binary expansion of ``i``."""
    if i < 0:
        raise ValueError("binary_weight takes a nonnegative integer")
    return bin(i).count("1")


R = TypeVar("R")


def set_partition_sum(
    parts,
    block_weight: Callable[[int, int], R],
    one: R,
    *,
    direct_max_length: int = DIRECT_ENUMERATION_MAX_LENGTH,
) -> R:
    """Sum over pi in Pi_l of prod_i block_weight(|pi_i|, sum of parts in pi_i).

    ``parts`` is indexed 1..l.  The ring only needs ``+``, ``*`` and
    multiplication by ``int``; ``one`` is its unit.  Short inputs are summed
    over literal set partitions; longer ones by recursion over the block
    holding the first remaining element, with identical parts merged and
    counted by binomials.
    """
    parts = tuple(parts)
    if len(parts) <= direct_max_length:
        return _set_partition_sum_direct(parts, block_weight, one)
    return _set_partition_sum_grouped(parts, block_weight, one)


def _set_partition_sum_direct(parts, block_weight, one):
    total = None
    cache: dict = {}
    for rgs in _restricted_growth_strings(len(parts)):
        term = one
        for b in _rgs_blocks(rgs):
            key = (len(b), sum(parts[j] for j in b))
            w = cache.get(key)
            if w is None:
                w = cache[key] = block_weight(*key)
            term = term * w
        total = term if total is None else total + term
    return total


def _set_partition_sum_grouped(parts, block_weight, one):
    counts = Counter(parts)
    values = sorted(counts)
    start = tuple(counts[v] for v in values)
    weights: dict = {}
    memo: dict = {}

    def weight(size, total):
        w = weights.get((size, total))
        if w is None:
            w = weights[(size, total)] = block_weight(size, total)
        return w

    def rec(state):
        if not any(state):
            return one
        if state in memo:
            return memo[state]
        j0 = next(j for j, c in enumerate(state) if c)
        acc = None
        ranges = [range(1, c + 1) if j == j0 else range(c + 1) for j, c in enumerate(state)]
        for block in product(*ranges):
            ways = math.comb(state[j0] - 1, block[j0] - 1)
            for j, c in enumerate(block):
                if j != j0:
                    ways *= math.comb(state[j], c)
            rest = tuple(s - c for s, c in zip(state, block))
            size = sum(block)
            total = sum(c * v for c, v in zip(block, values))
            term = ways * (weight(size, total) * rec(rest))
            acc = term if acc is None else acc + term
        memo[state] = acc
        return acc

    return rec(start)
