"""Lattices of flats of thagomizer and cycle matroids, and hyperoctahedral orbit data.

Ground-set layout for the thagomizer ``T_n``: the spine has index 0, and spike
``i`` (1-based) consists of ``a_i`` at index ``2i-1`` and ``b_i`` at index ``2i``.
The group ``B_n`` acts by permuting spikes and swapping ``a_i <-> b_i``; it is never
materialized, only its orbit representatives and stabilizer orders are.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial
from typing import Sequence

from thagomizer.bi_ring import BiSchurPoly, bi_multiply, h_sum_alphabets
from thagomizer.lattice import FlatLattice
from thagomizer.schur import h_gen

MAX_THAGOMIZER_N = 8
MAX_CYCLE_N = 10

SPINE = 0


def spike_a(i: int) -> int:
    return 2 * i - 1


def spike_b(i: int) -> int:
    return 2 * i


def flats_of_thagomizer(n: int) -> FlatLattice:
    """All ``3^n + 2^n`` flats of ``T_n``.

    Flats avoiding the spine pick at most one edge from each spike (rank = number of
    edges); flats containing the spine are the spine plus a union of whole spikes
    (rank = number of spikes + 1).
    """
    if not 0 <= n <= MAX_THAGOMIZER_N:
        raise ValueError(f"thagomizer lattice needs 0 <= n <= {MAX_THAGOMIZER_N}, got {n}")
    rank: dict[int, int] = {}
    for choice in product((0, 1, 2), repeat=n):
        f = 0
        for i, c in enumerate(choice, start=1):
            if c == 1:
                f |= 1 << spike_a(i)
            elif c == 2:
                f |= 1 << spike_b(i)
        rank[f] = sum(1 for c in choice if c)
    for mask in range(1 << n):
        f = 1 << SPINE
        size = 0
        for i in range(1, n + 1):
            if mask >> (i - 1) & 1:
                f |= (1 << spike_a(i)) | (1 << spike_b(i))
                size += 1
        rank[f] = size + 1
    return FlatLattice(rank.keys(), rank)


def flats_of_cycle(n: int) -> FlatLattice:
    """Flats of the ``n``-cycle graphic matroid ``U_{n-1,n}``: subsets of size ``<= n-2`` plus the full set."""
    if not 2 <= n <= MAX_CYCLE_N:
        raise ValueError(f"cycle lattice needs 2 <= n <= {MAX_CYCLE_N}, got {n}")
    full = (1 << n) - 1
    rank = {f: bin(f).count("1") for f in range(1 << n) if bin(f).count("1") <= n - 2}
    rank[full] = n - 1
    return FlatLattice(rank.keys(), rank)


@dataclass(frozen=True)
class FlatOrbitDescriptor:
    """One ``B_n``-orbit of flats of ``T_n``.

    Type I: ``{a_1..a_k}``, stabilizer ``S_k x B_{n-k}``, contraction ``T_{n-k}``
    (up to a parallel class on the spine).  Type II: spine plus the first ``k``
    spikes, stabilizer ``B_k x B_{n-k}``, Boolean contraction of rank ``n-k``.
    """

    kind: str
    n: int
    k: int
    rank: int
    contraction: str
    induction_weight: BiSchurPoly
    stabilizer_order: int

    @property
    def orbit_size(self) -> int:
        return hyperoctahedral_order(self.n) // self.stabilizer_order

    @property
    def representative(self) -> int:
        return orbit_representative(self.kind, self.k)


def hyperoctahedral_order(n: int) -> int:
    return 2 ** n * factorial(n)


def orbit_representative(kind: str, k: int) -> int:
    if kind == "I":
        return sum(1 << spike_a(i) for i in range(1, k + 1))
    if kind == "II":
        return (1 << SPINE) | sum((1 << spike_a(i)) | (1 << spike_b(i)) for i in range(1, k + 1))
    raise ValueError(f"unknown orbit type {kind!r}")


def orbit_decomposition(n: int) -> list[FlatOrbitDescriptor]:
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []
    for k in range(n + 1):
        out.append(FlatOrbitDescriptor(
            kind="I", n=n, k=k, rank=k,
            contraction=f"Thagomizer({n - k})",
            induction_weight=h_sum_alphabets(k),
            stabilizer_order=factorial(k) * hyperoctahedral_order(n - k),
        ))
    for k in range(n + 1):
        out.append(FlatOrbitDescriptor(
            kind="II", n=n, k=k, rank=k + 1,
            contraction=f"Boolean({n - k})",
            induction_weight=bi_multiply(BiSchurPoly.in_x(h_gen(k)), BiSchurPoly.in_x(h_gen(n - k))),
            stabilizer_order=hyperoctahedral_order(k) * hyperoctahedral_order(n - k),
        ))
    return out


# A signed permutation is a pair (perm, swaps): spike i goes to spike perm[i-1],
# and its two edges are exchanged on the way when swaps[i-1] is true.
SignedPermutation = tuple


def apply_signed_permutation(g: SignedPermutation, flat: int, n: int) -> int:
    perm, swaps = g
    out = flat & (1 << SPINE)
    for i in range(1, n + 1):
        j = perm[i - 1]
        has_a = flat >> spike_a(i) & 1
        has_b = flat >> spike_b(i) & 1
        if swaps[i - 1]:
            has_a, has_b = has_b, has_a
        if has_a:
            out |= 1 << spike_a(j)
        if has_b:
            out |= 1 << spike_b(j)
    return out


def carry_to_representative(flat: int, n: int) -> SignedPermutation:
    """A group element taking a spine-free flat to ``{a_1, ..., a_k}``.

    Swap every spike that meets the flat in its ``b`` edge, then move the occupied
    spikes to the front.
    """
    if flat & (1 << SPINE):
        raise ValueError("flat contains the spine")
    swaps = tuple(bool(flat >> spike_b(i) & 1) for i in range(1, n + 1))
    occupied = [i for i in range(1, n + 1) if flat >> spike_a(i) & 1 or flat >> spike_b(i) & 1]
    empty = [i for i in range(1, n + 1) if i not in occupied]
    perm = [0] * n
    for pos, i in enumerate(occupied + empty, start=1):
        perm[i - 1] = pos
    return tuple(perm), swaps


def all_signed_permutations(n: int):
    for perm in permutations(range(1, n + 1)):
        for swaps in product((False, True), repeat=n):
            yield perm, swaps


def flat_edges(flat: int, n: int) -> Sequence[str]:
    """Human-readable edge names, e.g. ``['e*', 'a1', 'b2']``."""
    names = []
    if flat & (1 << SPINE):
        names.append("e*")
    for i in range(1, n + 1):
        if flat >> spike_a(i) & 1:
            names.append(f"a{i}")
        if flat >> spike_b(i) & 1:
            names.append(f"b{i}")
    return names
