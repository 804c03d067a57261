"""The two-alphabet ring spanned by ``s_lam[X] s_mu[Y]``.

This is the image of the wreath-product Frobenius characteristic: the irreducible
hyperoctahedral representation ``V_{lam,mu}`` corresponds to ``s_lam[X] s_mu[Y]``.
Besides the plain ring (:class:`BiSchurPoly`) the module provides polynomials in
``t`` over it (:class:`GradedBiSchur`), ``u``-truncated series with Laurent
``t``-coefficients (:class:`TruncatedBiSeries`), and the handful of alphabet
substitutions the thagomizer computations need.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

from thagomizer import intpoly
from thagomizer.partitions import Partition, bipartition_dimension
from thagomizer.schur import SchurPoly, e_gen, h_gen, lr_product, schur_multiply

EMPTY = Partition()
DEFAULT_SERIES_ORDER = 9


class MixedDegreeError(ValueError):
    """A polynomial whose coefficients do not all live in one degree ``n``."""


def _bi_key(key) -> tuple:
    lam, mu = key
    return (Partition(lam), Partition(mu))


def canonical_order(keys: Iterable[tuple]) -> list[tuple]:
    """Display order for bipartitions: reverse lexicographic in ``(lam, mu)``.

    This puts ``V_{(n), empty}`` first and walks down the ``X``-shape, matching the
    order in which the closed formulas list their terms.
    """
    return sorted(keys, reverse=True)


class BiSchurPoly:
    """Finite integer combination of ``s_lam[X] s_mu[Y]``; zero terms are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        clean: dict = {}
        if terms:
            for key, c in terms.items():
                if c:
                    key = _bi_key(key)
                    clean[key] = clean.get(key, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, terms: dict) -> "BiSchurPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def s(cls, lam: Iterable[int] = (), mu: Iterable[int] = (), coeff: int = 1) -> "BiSchurPoly":
        return cls({(Partition(lam), Partition(mu)): coeff})

    @classmethod
    def one(cls) -> "BiSchurPoly":
        return cls._raw({(EMPTY, EMPTY): 1})

    @classmethod
    def zero(cls) -> "BiSchurPoly":
        return cls._raw({})

    @classmethod
    def in_x(cls, f: SchurPoly) -> "BiSchurPoly":
        return cls._raw({(lam, EMPTY): c for lam, c in f.terms.items()})

    @classmethod
    def in_y(cls, f: SchurPoly) -> "BiSchurPoly":
        return cls._raw({(EMPTY, mu): c for mu, c in f.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BiSchurPoly.one().scale(other)
        if not isinstance(other, BiSchurPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BiSchurPoly") -> "BiSchurPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return BiSchurPoly._raw(out)

    def __neg__(self) -> "BiSchurPoly":
        return BiSchurPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BiSchurPoly") -> "BiSchurPoly":
        return self + (-other)

    def scale(self, c: int) -> "BiSchurPoly":
        if c == 0:
            return BiSchurPoly.zero()
        return BiSchurPoly._raw({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, BiSchurPoly):
            return bi_multiply(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def items(self):
        return self.terms.items()

    def sorted_items(self) -> list[tuple]:
        return [(k, self.terms[k]) for k in canonical_order(self.terms)]

    def bidegrees(self) -> set[tuple[int, int]]:
        return {(sum(lam), sum(mu)) for lam, mu in self.terms}

    def total_degrees(self) -> set[int]:
        return {sum(lam) + sum(mu) for lam, mu in self.terms}

    def __repr__(self) -> str:
        return render_bi_text(self)


def bi_multiply(a: BiSchurPoly, b: BiSchurPoly) -> BiSchurPoly:
    out: dict = {}
    for (lam, mu), c in a.terms.items():
        for (alpha, beta), d in b.terms.items():
            cd = c * d
            xs = lr_product(lam, alpha)
            ys = lr_product(mu, beta)
            for gamma, cx in xs:
                w = cd * cx
                for delta, cy in ys:
                    key = (gamma, delta)
                    out[key] = out.get(key, 0) + w * cy
    return BiSchurPoly._raw({k: v for k, v in out.items() if v})


def h_sum_alphabets(n: int) -> BiSchurPoly:
    """``h_n[X+Y] = sum_{a+b=n} h_a[X] h_b[Y]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return BiSchurPoly._raw(
        {(Partition((a,) if a else ()), Partition((n - a,) if n - a else ())): 1 for a in range(n + 1)}
    )


def e_sum_alphabets(n: int) -> BiSchurPoly:
    """``e_n[X+Y] = sum_{a+b=n} e_a[X] e_b[Y]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return BiSchurPoly._raw({(Partition((1,) * a), Partition((1,) * (n - a))): 1 for a in range(n + 1)})


def e_doubled(n: int) -> BiSchurPoly:
    """``e_n[2X+Y] = sum_{a+b+c=n} e_a[X] e_b[X] e_c[Y]``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = BiSchurPoly.zero()
    for c in range(n + 1):
        xpart = SchurPoly.zero()
        for a in range(n - c + 1):
            xpart = xpart + schur_multiply(e_gen(a), e_gen(n - c - a))
        out = out + bi_multiply(BiSchurPoly.in_x(xpart), BiSchurPoly.in_y(e_gen(c)))
    return out


class GradedBiSchur:
    """Polynomial in ``t`` (non-negative degrees) with :class:`BiSchurPoly` coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, BiSchurPoly] | None = None):
        clean = {}
        for d, b in (coeffs or {}).items():
            d = int(d)
            if d < 0:
                raise ValueError(f"negative t-degree {d} in a graded polynomial")
            if b:
                clean[d] = b
        self.coeffs = clean

    @classmethod
    def constant(cls, b: BiSchurPoly) -> "GradedBiSchur":
        return cls({0: b})

    @classmethod
    def monomial(cls, d: int, b: BiSchurPoly) -> "GradedBiSchur":
        return cls({d: b})

    @classmethod
    def one(cls) -> "GradedBiSchur":
        return cls({0: BiSchurPoly.one()})

    @classmethod
    def zero(cls) -> "GradedBiSchur":
        return cls({})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "GradedBiSchur":
        """Build from ``(t_degree, lam, mu, coeff)`` tuples."""
        acc: dict[int, dict] = {}
        for d, lam, mu, c in terms:
            cell = acc.setdefault(int(d), {})
            key = (Partition(lam), Partition(mu))
            cell[key] = cell.get(key, 0) + c
        return cls({d: BiSchurPoly(cell) for d, cell in acc.items()})

    def coeff(self, d: int) -> BiSchurPoly:
        return self.coeffs.get(d, BiSchurPoly.zero())

    __getitem__ = coeff

    @property
    def degree(self) -> int:
        """Largest ``t``-degree present; ``-1`` for the zero polynomial."""
        return max(self.coeffs, default=-1)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = GradedBiSchur.one().scale(other)
        if not isinstance(other, GradedBiSchur):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset((d, hash(b)) for d, b in self.coeffs.items()))

    def __add__(self, other: "GradedBiSchur") -> "GradedBiSchur":
        out = dict(self.coeffs)
        for d, b in other.coeffs.items():
            out[d] = out[d] + b if d in out else b
        return GradedBiSchur(out)

    def __neg__(self) -> "GradedBiSchur":
        return GradedBiSchur({d: -b for d, b in self.coeffs.items()})

    def __sub__(self, other: "GradedBiSchur") -> "GradedBiSchur":
        return self + (-other)

    def scale(self, c: int) -> "GradedBiSchur":
        return GradedBiSchur({d: b.scale(c) for d, b in self.coeffs.items()})

    def shift(self, k: int) -> "GradedBiSchur":
        """Multiply by ``t**k``."""
        return GradedBiSchur({d + k: b for d, b in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, BiSchurPoly):
            return GradedBiSchur({d: bi_multiply(b, other) for d, b in self.coeffs.items()})
        if isinstance(other, GradedBiSchur):
            out: dict[int, BiSchurPoly] = {}
            for d, b in self.coeffs.items():
                for e, c in other.coeffs.items():
                    prod = bi_multiply(b, c)
                    out[d + e] = out[d + e] + prod if d + e in out else prod
            return GradedBiSchur(out)
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def terms(self) -> Iterator[tuple]:
        """``(t_degree, lam, mu, coeff)`` in canonical order."""
        for d in sorted(self.coeffs):
            for (lam, mu), c in self.coeffs[d].sorted_items():
                yield d, lam, mu, c

    def total_degrees(self) -> set[int]:
        out: set[int] = set()
        for b in self.coeffs.values():
            out |= b.total_degrees()
        return out

    def to_json_obj(self) -> list[dict]:
        return [
            {
                "t": d,
                "terms": [
                    {"lambda": list(lam), "mu": list(mu), "coeff": c}
                    for (lam, mu), c in self.coeffs[d].sorted_items()
                ],
            }
            for d in sorted(self.coeffs)
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: list[dict]) -> "GradedBiSchur":
        return cls.from_terms(
            (entry["t"], term["lambda"], term["mu"], term["coeff"]) for entry in obj for term in entry["terms"]
        )

    @classmethod
    def from_json(cls, text: str) -> "GradedBiSchur":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self) -> str:
        return render_text(self)


def _shape_text(p: tuple) -> str:
    return ",".join(str(x) for x in p)


def _join_signed(pieces: list[tuple[int, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for c, body in pieces:
        mag = abs(c)
        text = body if mag == 1 else f"{mag}*{body}"
        if not out:
            out.append(text if c > 0 else f"-{text}")
        else:
            out.append(("+ " if c > 0 else "- ") + text)
    return " ".join(out)


def render_bi_text(b: BiSchurPoly) -> str:
    return _join_signed([(c, f"s[{_shape_text(lam)};{_shape_text(mu)}]") for (lam, mu), c in b.sorted_items()])


def render_text(g: GradedBiSchur) -> str:
    """Render as e.g. ``s[2;] + t*s[;2]``."""
    pieces = []
    for d, lam, mu, c in g.terms():
        mono = "" if d == 0 else ("t*" if d == 1 else f"t^{d}*")
        pieces.append((c, f"{mono}s[{_shape_text(lam)};{_shape_text(mu)}]"))
    return _join_signed(pieces)


def _shape_latex(p: tuple) -> str:
    if not p:
        return r"\varnothing"
    return "(" + ",".join(str(x) for x in p) + ")"


def render_latex(g: GradedBiSchur) -> str:
    """Render in the ``V_{lam,mu} t^k`` notation for irreducible representations."""
    pieces = []
    for d, lam, mu, c in g.terms():
        mono = "" if d == 0 else (r"\,t" if d == 1 else rf"\,t^{{{d}}}")
        pieces.append((c, rf"V_{{{_shape_latex(lam)},{_shape_latex(mu)}}}{mono}"))
    return _join_signed(pieces).replace("*", "")


def h_twisted(n: int) -> GradedBiSchur:
    """``h_n[(t-1)X - Y]`` as a polynomial in ``t``.

    Uses ``h_j[(t-1)X] = sum_b (-1)^(j-b) t^b h_b[X] e_{j-b}[X]`` followed by the
    difference rule ``h_n[E - F] = sum_j (-1)^(n-j) h_j[E] e_{n-j}[F]``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    out = GradedBiSchur.zero()
    for j in range(n + 1):
        ypart = BiSchurPoly.in_y(e_gen(n - j)).scale((-1) ** (n - j))
        for b in range(j + 1):
            xpart = BiSchurPoly.in_x(schur_multiply(h_gen(b), e_gen(j - b))).scale((-1) ** (j - b))
            out = out + GradedBiSchur.monomial(b, bi_multiply(xpart, ypart))
    return out


def homogeneous_degree(g: GradedBiSchur) -> int:
    """The common total degree ``n`` of every coefficient of ``g``."""
    degs = g.total_degrees()
    if len(degs) > 1:
        raise MixedDegreeError(f"coefficients mix total degrees {sorted(degs)}")
    return degs.pop() if degs else 0


def dimension_poly(g: GradedBiSchur) -> intpoly.IntPoly:
    """Replace each ``s_lam[X] s_mu[Y]`` by ``dim V_{lam,mu}``."""
    homogeneous_degree(g)
    coeffs = [0] * (g.degree + 1)
    for d, b in g.coeffs.items():
        coeffs[d] = sum(c * bipartition_dimension(key) for key, c in b.terms.items())
    return intpoly.trim(coeffs)


def is_palindromic(g: GradedBiSchur, r: int) -> bool:
    """True iff ``g(t) = t^r g(1/t)`` coefficientwise (so in particular ``deg g <= r``)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if g.degree > r:
        return False
    return all(g.coeff(i) == g.coeff(r - i) for i in range(r + 1))


class TruncatedBiSeries:
    """Series in ``u`` truncated above ``order``, with Laurent polynomials in ``t``.

    Stored as a map ``(u_degree, t_degree) -> BiSchurPoly``.
    """

    __slots__ = ("order", "cells")

    def __init__(self, order: int = DEFAULT_SERIES_ORDER, cells: Mapping | None = None):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        self.order = order
        self.cells = {(int(m), int(d)): b for (m, d), b in (cells or {}).items() if b and 0 <= m <= order}

    @classmethod
    def from_graded(cls, seq: Mapping[int, GradedBiSchur], order: int = DEFAULT_SERIES_ORDER) -> "TruncatedBiSeries":
        """``sum_m seq[m] * u^m``."""
        cells = {}
        for m, g in seq.items():
            for d, b in g.coeffs.items():
                cells[(m, d)] = b
        return cls(order, cells)

    @classmethod
    def monomial(cls, t_deg: int, u_deg: int, b: BiSchurPoly | None = None,
                 order: int = DEFAULT_SERIES_ORDER) -> "TruncatedBiSeries":
        return cls(order, {(u_deg, t_deg): BiSchurPoly.one() if b is None else b})

    @classmethod
    def one(cls, order: int = DEFAULT_SERIES_ORDER) -> "TruncatedBiSeries":
        return cls.monomial(0, 0, order=order)

    def _check(self, other: "TruncatedBiSeries") -> None:
        if not isinstance(other, TruncatedBiSeries):
            raise TypeError("expected a TruncatedBiSeries")
        if other.order != self.order:
            raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        self._check(other)
        out = dict(self.cells)
        for k, b in other.cells.items():
            out[k] = out[k] + b if k in out else b
        return TruncatedBiSeries(self.order, out)

    def __neg__(self) -> "TruncatedBiSeries":
        return TruncatedBiSeries(self.order, {k: -b for k, b in self.cells.items()})

    def __sub__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedBiSeries") -> "TruncatedBiSeries":
        self._check(other)
        out: dict = {}
        for (m1, d1), b1 in self.cells.items():
            for (m2, d2), b2 in other.cells.items():
                m = m1 + m2
                if m > self.order:
                    continue
                key = (m, d1 + d2)
                prod = bi_multiply(b1, b2)
                out[key] = out[key] + prod if key in out else prod
        return TruncatedBiSeries(self.order, out)

    def times_monomial(self, t_deg: int, u_deg: int) -> "TruncatedBiSeries":
        if u_deg < 0:
            raise ValueError("cannot divide a truncated series by u")
        return TruncatedBiSeries(self.order, {(m + u_deg, d + t_deg): b for (m, d), b in self.cells.items()})

    def substitute(self) -> "TruncatedBiSeries":
        """Apply ``(t, u) -> (1/t, t u)``: the cell ``t^d u^m`` goes to ``t^(m-d) u^m``."""
        return TruncatedBiSeries(self.order, {(m, m - d): b for (m, d), b in self.cells.items()})

    def u_coefficient(self, m: int) -> dict[int, BiSchurPoly]:
        return {d: b for (mm, d), b in self.cells.items() if mm == m}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedBiSeries):
            return NotImplemented
        self._check(other)
        return self.cells == other.cells

    def differing_cells(self, other: "TruncatedBiSeries") -> list[tuple[int, int]]:
        self._check(other)
        keys = set(self.cells) | set(other.cells)
        return sorted(k for k in keys if self.cells.get(k, BiSchurPoly.zero()) != other.cells.get(k, BiSchurPoly.zero()))

    def __repr__(self) -> str:
        return f"TruncatedBiSeries(order={self.order}, cells={len(self.cells)})"


def series_multiply(a: TruncatedBiSeries, b: TruncatedBiSeries) -> TruncatedBiSeries:
    return a * b


def series_substitute(a: TruncatedBiSeries) -> TruncatedBiSeries:
    return a.substitute()


def series_equal(a: TruncatedBiSeries, b: TruncatedBiSeries) -> bool:
    return a == b


def h_series(alphabet: str, t_weight: int, order: int = DEFAULT_SERIES_ORDER) -> TruncatedBiSeries:
    """``H_A(t^w u) = sum_n h_n[A] t^(w n) u^n`` for ``A`` in ``"X"``, ``"Y"``, ``"X+Y"``."""
    cells = {}
    for n in range(order + 1):
        if alphabet == "X":
            b = BiSchurPoly.in_x(h_gen(n))
        elif alphabet == "Y":
            b = BiSchurPoly.in_y(h_gen(n))
        elif alphabet == "X+Y":
            b = h_sum_alphabets(n)
        else:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        cells[(n, t_weight * n)] = b
    return TruncatedBiSeries(order, cells)


def e_series(alphabet: str, t_weight: int, sign: int = 1, order: int = DEFAULT_SERIES_ORDER) -> TruncatedBiSeries:
    """``E_A(sign * t^w u)``."""
    cells = {}
    for n in range(order + 1):
        if alphabet == "X":
            b = BiSchurPoly.in_x(e_gen(n))
        elif alphabet == "Y":
            b = BiSchurPoly.in_y(e_gen(n))
        elif alphabet == "X+Y":
            b = e_sum_alphabets(n)
        elif alphabet == "2X+Y":
            b = e_doubled(n)
        else:
            raise ValueError(f"unknown alphabet {alphabet!r}")
        cells[(n, t_weight * n)] = b.scale(sign ** n)
    return TruncatedBiSeries(order, cells)
