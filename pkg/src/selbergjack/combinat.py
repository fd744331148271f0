"""Exact integer and rational combinatorics.

Partitions, compositions, dominance order, multinomial coefficients and
Pochhammer symbols.  Everything here is exact: integers are arbitrary
precision and rational scalars are ``fractions.Fraction`` (always stored
gcd-reduced with positive denominator, so equality is structural).

All values are immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Composition",
    "Partition",
    "compositions_of",
    "dominance_less",
    "multinomial",
    "partitions_of",
    "pochhammer",
]

# A composition is a plain tuple of nonnegative integers of fixed length.
Composition = tuple[int, ...]


class Partition:
    """A weakly decreasing tuple of nonnegative integers.

    Trailing zeros are stripped on construction, so ``Partition([2, 1, 0])``
    equals ``Partition([2, 1])``.  ``part(i)`` returns 0 beyond the stored
    length, matching the convention that a partition is padded with zero
    parts whenever a context asks for "at most n parts".

    >>> lam = Partition([3, 1])
    >>> lam.weight, lam.length, lam.part(5)
    (4, 2, 0)
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: "Partition | Iterable[int]" = ()):
        if isinstance(parts, Partition):
            self._parts = parts._parts
            return
        p = tuple(int(v) for v in parts)
        if any(v < 0 for v in p):
            raise ValueError(f"partition parts must be nonnegative, got {p}")
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"partition parts must be weakly decreasing, got {p}")
        while p and p[-1] == 0:
            p = p[:-1]
        self._parts = p

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        """Sum of the parts."""
        return sum(self._parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return len(self._parts)

    def part(self, i: int) -> int:
        """The part at 0-based index ``i``; zero beyond the stored length."""
        return self._parts[i] if 0 <= i < len(self._parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        """The parts padded with zeros to length ``n``."""
        if n < len(self._parts):
            raise ValueError(f"cannot pad {self} to {n} < {self.length} parts")
        return self._parts + (0,) * (n - len(self._parts))

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"


def compositions_of(r: int, n: int) -> Iterator[Composition]:
    """Yield every composition of ``r`` into ``n`` nonnegative parts.

    Order is lexicographic with the first part descending, so
    ``compositions_of(2, 2)`` yields (2,0), (1,1), (0,2).  The total count
    is C(r+n-1, n-1).
    """
    if n < 1:
        raise ValueError(f"need at least one slot, got n={n}")
    if r < 0:
        raise ValueError(f"weight must be nonnegative, got r={r}")

    def rec(rem: int, slots: int) -> Iterator[Composition]:
        if slots == 1:
            yield (rem,)
            return
        for v in range(rem, -1, -1):
            for tail in rec(rem - v, slots - 1):
                yield (v,) + tail

    return rec(r, n)


def multinomial(r: int, nu: Sequence[int]) -> int:
    """The multinomial coefficient r!/(nu_1! ... nu_n!), exact.

    ``nu`` must sum to ``r``.
    """
    nu = tuple(int(v) for v in nu)
    if any(v < 0 for v in nu):
        raise ValueError(f"composition parts must be nonnegative, got {nu}")
    if sum(nu) != r:
        raise ValueError(f"composition {nu} does not sum to r={r}")
    out = math.factorial(r)
    for v in nu:
        out //= math.factorial(v)
    return out


def pochhammer(a, k: int):
    """The rising factorial (a)_k = a(a+1)...(a+k-1); 1 when k = 0.

    Exact for int/Fraction input, floating for float/complex input.
    """
    if k < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got k={k}")
    out = a - a + 1 if k else 1  # preserve the scalar kind of a
    for i in range(k):
        out = out * (a + i)
    return out


def dominance_less(mu: "Partition | Iterable[int]", lam: "Partition | Iterable[int]") -> bool:
    """True iff ``mu`` < ``lam`` strictly in dominance order.

    Both arguments must have the same weight; partial sums of ``mu`` must
    never exceed those of ``lam`` and the partitions must differ.
    """
    mu, lam = Partition(mu), Partition(lam)
    if mu.weight != lam.weight:
        raise ValueError(f"dominance needs equal weights, got {mu.weight} != {lam.weight}")
    if mu == lam:
        return False
    sm = sl = 0
    for i in range(max(mu.length, lam.length)):
        sm += mu.part(i)
        sl += lam.part(i)
        if sm > sl:
            return False
    return True


def partitions_of(w: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Yield all partitions of weight ``w`` in descending lexicographic order.

    ``max_parts`` bounds the number of nonzero parts and ``max_part`` the
    largest part; both default to unbounded.
    """
    if w < 0:
        raise ValueError(f"weight must be nonnegative, got {w}")
    cap = w if max_part is None else min(max_part, w)
    slots = w if max_parts is None else max_parts

    def rec(rem: int, biggest: int, left: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        if left == 0:
            return
        for k in range(min(rem, biggest), 0, -1):
            if k * left < rem:
                break
            for tail in rec(rem - k, k, left - 1):
                yield (k,) + tail

    for parts in rec(w, cap, slots):
        yield Partition(parts)
