"""Brute-force, non-equivariant Kazhdan-Lusztig-Stanley computations on a lattice of flats.

Flats are bitsets over the ground set.  Everything here works on the explicit
lattice, so it serves as ground truth for the dimension shadows of the equivariant
formulas.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from thagomizer import intpoly


class LatticeError(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """An internal invariant (palindromicity, degree bound) failed; indicates a bug."""


class FlatLattice:
    """A ranked lattice of flats ordered by containment.

    ``flats`` are integer bitsets, ``rank`` maps each flat to its rank.  Intervals
    made with :meth:`interval` share one memo table with the lattice they came from,
    keyed by the interval's endpoints (which determine its element set).
    """

    def __init__(self, flats: Iterable[int], rank: Mapping[int, int], *, check: bool = False,
                 _cache: dict | None = None, _base_rank: int | None = None):
        self.flats = sorted(set(flats), key=lambda f: (rank[f], f))
        if not self.flats:
            raise LatticeError("empty lattice")
        self._abs_rank = rank
        self.bottom = self.flats[0]
        self.top = self.flats[-1]
        self._base = rank[self.bottom] if _base_rank is None else _base_rank
        self._cache = {} if _cache is None else _cache
        if check:
            self.validate()

    @classmethod
    def from_flats(cls, flats: Iterable[int], rank: Mapping[int, int], check: bool = True) -> "FlatLattice":
        return cls(flats, rank, check=check)

    def rank(self, f: int) -> int:
        return self._abs_rank[f] - self._base

    @property
    def rank_top(self) -> int:
        return self.rank(self.top)

    def __len__(self) -> int:
        return len(self.flats)

    def __contains__(self, f: int) -> bool:
        return f in self._abs_rank and (f & self.bottom) == self.bottom and (f | self.top) == self.top

    @staticmethod
    def leq(a: int, b: int) -> bool:
        return a & ~b == 0

    def validate(self) -> None:
        """Check bottom/top, that ranks grow along proper containment and along covers by exactly one."""
        flats = self.flats
        for f in flats:
            if not (self.leq(self.bottom, f) and self.leq(f, self.top)):
                raise LatticeError(f"flat {f:b} is not between bottom and top")
        if self.rank(self.bottom) != 0:
            raise LatticeError("bottom must have rank 0")
        for a in flats:
            ra = self.rank(a)
            for b in flats:
                if a != b and self.leq(a, b):
                    rb = self.rank(b)
                    if rb <= ra:
                        raise LatticeError("rank does not increase along containment")
                    if rb > ra + 1:
                        between = any(self.leq(a, z) and self.leq(z, b) and z not in (a, b) for z in flats)
                        if not between:
                            raise LatticeError("cover relation skips a rank: lattice is not graded")

    def interval(self, lo: int, hi: int) -> "FlatLattice":
        if not self.leq(lo, hi):
            raise LatticeError("interval endpoints are not comparable")
        key = ("interval", lo, hi)
        hit = self._cache.get(key)
        if hit is None:
            members = [f for f in self.flats if self.leq(lo, f) and self.leq(f, hi)]
            hit = FlatLattice(members, self._abs_rank, _cache=self._cache, _base_rank=self._abs_rank[lo])
            self._cache[key] = hit
        return hit

    def upper(self, f: int) -> "FlatLattice":
        """``[f, top]``, the lattice of flats of the contraction by ``f``."""
        return self.interval(f, self.top)

    def lower(self, f: int) -> "FlatLattice":
        """``[bottom, f]``, the lattice of flats of the restriction to ``f``."""
        return self.interval(self.bottom, f)

    def __repr__(self) -> str:
        return f"FlatLattice({len(self.flats)} flats, rank {self.rank_top})"


def mobius(L: FlatLattice, a: int, b: int) -> int:
    if not L.leq(a, b):
        raise LatticeError("mobius needs a <= b")
    return mobius_from(L, a).get(b, 0)


def mobius_from(L: FlatLattice, a: int) -> dict[int, int]:
    """``{z: mu(a, z)}`` for every ``z >= a``."""
    key = ("mobius", a, L.bottom, L.top)
    hit = L._cache.get(key)
    if hit is not None:
        return hit
    mu: dict[int, int] = {}
    for z in L.flats:  # sorted by rank, so every predecessor is done first
        if not L.leq(a, z):
            continue
        if z == a:
            mu[z] = 1
        else:
            mu[z] = -sum(m for y, m in mu.items() if L.leq(y, z))
    L._cache[key] = mu
    return mu


def characteristic_polynomial(L: FlatLattice) -> intpoly.IntPoly:
    """``sum_F mu(bottom, F) t^(rk(top) - rk(F))``."""
    r = L.rank_top
    coeffs = [0] * (r + 1)
    for f, m in mobius_from(L, L.bottom).items():
        coeffs[r - L.rank(f)] += m
    return intpoly.trim(coeffs)


def kl_and_z(L: FlatLattice) -> tuple[intpoly.IntPoly, intpoly.IntPoly]:
    """Kazhdan-Lusztig and Z-polynomials of the matroid whose flats form ``L``.

    ``Z = sum_F t^rk(F) P_{[F, top]}`` must be palindromic of degree ``r`` with
    ``deg P < r/2``; with every upper interval already known, this pins down ``P``.
    """
    key = ("kl", L.bottom, L.top)
    hit = L._cache.get(key)
    if hit is not None:
        return hit
    r = L.rank_top
    if r == 0:
        result = ((1,), (1,))
        L._cache[key] = result
        return result
    rest = [0] * (r + 1)
    for f in L.flats:
        if f == L.bottom:
            continue
        p_up, _ = kl_and_z(L.interval(f, L.top))
        k = L.rank(f)
        for i, c in enumerate(p_up):
            rest[k + i] += c
    p = [0] * (r + 1)
    for i in range((r + 1) // 2):
        if 2 * i < r:
            p[i] = rest[r - i] - rest[i]
    z = [p[i] + rest[i] for i in range(r + 1)]
    p = intpoly.trim(p)
    if not intpoly.is_palindromic(z, r):
        raise InconsistencyError(f"Z-polynomial {z} is not palindromic of degree {r}")
    if p and 2 * (len(p) - 1) >= r:
        raise InconsistencyError(f"KL polynomial {p} violates the degree bound for rank {r}")
    result = (p, intpoly.trim(z))
    L._cache[key] = result
    return result


def inverse_kl(L: FlatLattice) -> intpoly.IntPoly:
    """Solve ``sum_F (-1)^rk(F) Q_{[bottom,F]} P_{[F,top]} = 0`` for ``Q_L``."""
    key = ("q", L.bottom, L.top)
    hit = L._cache.get(key)
    if hit is not None:
        return hit
    r = L.rank_top
    if r == 0:
        L._cache[key] = (1,)
        return (1,)
    acc: intpoly.IntPoly = ()
    for f in L.flats:
        if f == L.top:
            continue
        q_low = inverse_kl(L.interval(L.bottom, f))
        p_up, _ = kl_and_z(L.interval(f, L.top))
        term = intpoly.mul(q_low, p_up)
        acc = intpoly.add(acc, term) if L.rank(f) % 2 == 0 else intpoly.sub(acc, term)
    # the top term is (-1)^r Q_L * 1
    q = tuple(-c for c in acc) if r % 2 == 0 else acc
    q = intpoly.trim(q)
    L._cache[key] = q
    return q


def boolean_lattice(r: int) -> FlatLattice:
    flats = range(1 << r)
    return FlatLattice(flats, {f: bin(f).count("1") for f in flats})


def uniform_lattice(rank: int, size: int) -> FlatLattice:
    """Flats of the uniform matroid ``U_{rank,size}``: subsets of size < rank, plus the full set."""
    full = (1 << size) - 1
    flats = [f for f in range(1 << size) if bin(f).count("1") < rank] + [full]
    ranks = {f: min(bin(f).count("1"), rank) for f in flats}
    return FlatLattice(flats, ranks)
