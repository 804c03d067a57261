"""Integer partitions, bipartitions and the dimension counts attached to them."""

from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Iterator, NamedTuple

# Largest n accepted by the dimension formulas; 20! still fits in a signed 64-bit word.
MAX_DIMENSION_N = 20


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped, so ``Partition([3, 1, 0]) == (3, 1)``.  Since this is
    a tuple subclass, partitions hash and compare equal to the plain tuples used as
    dictionary keys throughout the package.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for p in parts:
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"


class Bipartition(NamedTuple):
    first: Partition
    second: Partition

    @classmethod
    def of(cls, first: Iterable[int], second: Iterable[int]) -> "Bipartition":
        return cls(Partition(first), Partition(second))

    @property
    def size(self) -> int:
        return sum(self.first) + sum(self.second)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def rectangle_with_tail(width: int, height: int, tail: int) -> Partition:
    """The shape ``(width^height, 1^tail)``; used for ``(2^k, 1^m)``."""
    return Partition([width] * height + [1] * tail)


def hook_lengths(lam: Iterable[int]) -> list[int]:
    lam = tuple(lam)
    conj = conjugate(lam)
    return [lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def _check_size(n: int) -> None:
    if n > MAX_DIMENSION_N:
        raise OverflowError(f"dimension computations are limited to n <= {MAX_DIMENSION_N}, got {n}")


def hook_dimension(lam: Iterable[int]) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook length formula)."""
    lam = Partition(lam)
    n = lam.size
    _check_size(n)
    denom = 1
    for h in hook_lengths(lam):
        denom *= h
    return factorial(n) // denom


def bipartition_dimension(b: tuple) -> int:
    """Dimension of the hyperoctahedral irreducible indexed by ``b = (lam, mu)``."""
    lam, mu = Partition(b[0]), Partition(b[1])
    n = lam.size + mu.size
    _check_size(n)
    return comb(n, lam.size) * hook_dimension(lam) * hook_dimension(mu)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None:
        max_part = n

    def rec(rem: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if rem == 0:
            yield Partition(prefix)
            return
        for p in range(min(rem, cap), 0, -1):
            prefix.append(p)
            yield from rec(rem - p, p, prefix)
            prefix.pop()

    yield from rec(n, max_part, [])


def bipartitions_of(n: int) -> Iterator[Bipartition]:
    for a in range(n, -1, -1):
        for lam in partitions_of(a):
            for mu in partitions_of(n - a):
                yield Bipartition(lam, mu)


def contains(nu: Iterable[int], lam: Iterable[int]) -> bool:
    """True when the diagram of ``lam`` fits inside the diagram of ``nu``."""
    nu, lam = tuple(nu), tuple(lam)
    if len(lam) > len(nu):
        return False
    return all(a <= b for a, b in zip(lam, nu))
