"""Single-alphabet symmetric functions in the Schur basis."""

from __future__ import annotations

import threading
from typing import Iterable, Mapping

from thagomizer import _kernel
from thagomizer.partitions import Partition, conjugate, contains

_backend_name = _kernel.DEFAULT_BACKEND
_lr_expand = _kernel.BACKENDS[_backend_name]
_cache: dict = {}
_cache_lock = threading.Lock()


def backend() -> str:
    return _backend_name


def set_backend(name: str) -> None:
    """Switch the LR kernel (``"python"`` or ``"cython"``) and drop cached products."""
    global _backend_name, _lr_expand
    if name not in _kernel.BACKENDS:
        raise ValueError(f"unknown or unavailable LR backend {name!r}; have {sorted(_kernel.BACKENDS)}")
    with _cache_lock:
        _backend_name = name
        _lr_expand = _kernel.BACKENDS[name]
        _cache.clear()


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def lr_product(lam: tuple, mu: tuple) -> tuple:
    """Expansion of ``s_lam * s_mu`` as a tuple of ``(nu, c)`` pairs (memoized)."""
    # the content (second argument) drives the enumeration cost; use the smaller one
    if (sum(mu), len(mu), mu) > (sum(lam), len(lam), lam):
        lam, mu = mu, lam
    key = (lam, mu)
    hit = _cache.get(key)
    if hit is None:
        hit = tuple(_lr_expand(lam, mu).items())
        with _cache_lock:
            _cache[key] = hit
    return hit


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """The Littlewood-Richardson coefficient ``c^nu_{lam, mu}``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size + mu.size != nu.size or not contains(nu, lam) or not contains(nu, mu):
        return 0
    return dict(lr_product(lam, mu)).get(nu, 0)


class SchurPoly:
    """A finite integer combination of Schur functions ``s_lam``.

    Terms with zero coefficient are never stored.  Elements need not be
    homogeneous.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for lam, c in terms.items():
                if c:
                    lam = Partition(lam)
                    clean[lam] = clean.get(lam, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "SchurPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def s(cls, lam: Iterable[int] = (), coeff: int = 1) -> "SchurPoly":
        return cls({Partition(lam): coeff})

    @classmethod
    def one(cls) -> "SchurPoly":
        return cls._raw({Partition(): 1})

    @classmethod
    def zero(cls) -> "SchurPoly":
        return cls._raw({})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SchurPoly({(): other})
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "SchurPoly") -> "SchurPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return SchurPoly._raw(out)

    def __neg__(self) -> "SchurPoly":
        return SchurPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SchurPoly") -> "SchurPoly":
        return self + (-other)

    def scale(self, c: int) -> "SchurPoly":
        if c == 0:
            return SchurPoly.zero()
        return SchurPoly._raw({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SchurPoly):
            return NotImplemented
        return schur_multiply(self, other)

    __rmul__ = __mul__

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def items(self):
        return self.terms.items()

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for lam, c in sorted(self.terms.items(), reverse=True):
            parts.append(f"{c}*s{list(lam)}")
        return " + ".join(parts)


def schur_multiply(a: SchurPoly, b: SchurPoly) -> SchurPoly:
    out: dict = {}
    for lam, c in a.terms.items():
        for mu, d in b.terms.items():
            cd = c * d
            for nu, m in lr_product(lam, mu):
                out[nu] = out.get(nu, 0) + cd * m
    return SchurPoly._raw({k: v for k, v in out.items() if v})


def h_gen(n: int) -> SchurPoly:
    """Complete homogeneous ``h_n = s_(n)``."""
    if n < 0:
        raise ValueError("h_n needs n >= 0")
    return SchurPoly._raw({Partition((n,) if n else ()): 1})


def e_gen(n: int) -> SchurPoly:
    """Elementary ``e_n = s_(1^n)``."""
    if n < 0:
        raise ValueError("e_n needs n >= 0")
    return SchurPoly._raw({Partition((1,) * n): 1})


def omega(f: SchurPoly) -> SchurPoly:
    """The involution ``s_lam -> s_lam'``."""
    return SchurPoly._raw({conjugate(k): v for k, v in f.terms.items()})
