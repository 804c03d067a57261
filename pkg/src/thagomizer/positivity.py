"""Schur positivity, multiplicity-freeness and induced log-concavity sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from thagomizer.bi_ring import BiSchurPoly, GradedBiSchur, bi_multiply
from thagomizer import closed_forms, oracle

MAX_ILC_N = 10

Witness = tuple  # (t_degree, (lam, mu), coeff)


def _as_graded(g) -> GradedBiSchur:
    if isinstance(g, BiSchurPoly):
        return GradedBiSchur.constant(g)
    return g


def is_schur_positive(g: GradedBiSchur | BiSchurPoly) -> tuple[bool, Witness | None]:
    """All stored coefficients positive; otherwise the first negative one in canonical order."""
    for d, lam, mu, c in _as_graded(g).terms():
        if c < 1:
            return False, (d, (lam, mu), c)
    return True, None


def is_multiplicity_free(g: GradedBiSchur | BiSchurPoly) -> tuple[bool, Witness | None]:
    """All coefficients in {0, 1}; otherwise the first offending one."""
    for d, lam, mu, c in _as_graded(g).terms():
        if c != 1:
            return False, (d, (lam, mu), c)
    return True, None


_SOURCES: dict[str, Callable[[int], GradedBiSchur]] = {
    "P": closed_forms.p_thagomizer,
    "Q": closed_forms.q_thagomizer,
}
_ORACLE_SOURCES: dict[str, Callable[[int], GradedBiSchur]] = {
    "P": oracle.p_thagomizer_oracle,
    "Q": oracle.q_thagomizer_oracle,
}


def _variant(variant: str) -> str:
    v = variant.upper()
    if v not in _SOURCES:
        raise ValueError(f"variant must be 'P' or 'Q', got {variant!r}")
    return v


def _coeff(poly: GradedBiSchur, n: int, k: int) -> BiSchurPoly:
    # coefficients above floor(n/2) are zero by convention
    if k > n // 2:
        return BiSchurPoly.zero()
    return poly.coeff(k)


def ilc_difference(n: int, i: int, j: int, variant: str = "P", source: GradedBiSchur | None = None) -> BiSchurPoly:
    """``F_i F_j - F_{i-1} F_{j+1}`` for the ``t``-coefficients ``F_k`` of P_n (or Q_n)."""
    if i < 1 or i > j:
        raise ValueError(f"need 1 <= i <= j, got i={i}, j={j}")
    poly = source if source is not None else _SOURCES[_variant(variant)](n)
    return bi_multiply(_coeff(poly, n, i), _coeff(poly, n, j)) - bi_multiply(
        _coeff(poly, n, i - 1), _coeff(poly, n, j + 1)
    )


@dataclass
class ILCEntry:
    n: int
    i: int
    j: int
    variant: str
    positive: bool
    witness: Witness | None = None
    confirmed_by_oracle: bool | None = None

    def to_json_obj(self) -> dict:
        obj = {"n": self.n, "i": self.i, "j": self.j, "variant": self.variant, "positive": self.positive}
        if self.witness is not None:
            d, (lam, mu), c = self.witness
            obj["witness"] = {"t": d, "lambda": list(lam), "mu": list(mu), "coeff": c}
            obj["confirmed_by_oracle"] = self.confirmed_by_oracle
        return obj


@dataclass
class ILCReport:
    max_n: int
    variant: str
    strong: bool
    entries: list[ILCEntry] = field(default_factory=list)

    @property
    def failures(self) -> list[ILCEntry]:
        return [e for e in self.entries if not e.positive]

    def to_json_obj(self) -> list[dict]:
        return [e.to_json_obj() for e in self.entries]


def verify_strong_ilc(max_n: int, variant: str = "P", strong: bool = True) -> ILCReport:
    """Check Schur positivity of every ILC difference for ``n <= max_n``.

    With ``strong=False`` only ``i = j`` is checked.  A failing entry is recomputed
    from the recursion oracle before being reported, so a genuine counterexample
    is marked ``confirmed_by_oracle=True``.
    """
    v = _variant(variant)
    if max_n > MAX_ILC_N:
        raise ValueError(f"max_n is limited to {MAX_ILC_N}")
    report = ILCReport(max_n, v, strong)
    for n in range(max_n + 1):
        half = n // 2
        for i in range(1, half + 1):
            for j in range(i, half + 1 if strong else i + 1):
                ok, wit = is_schur_positive(ilc_difference(n, i, j, v))
                entry = ILCEntry(n, i, j, v, ok, wit)
                if not ok:
                    again = ilc_difference(n, i, j, v, source=_ORACLE_SOURCES[v](n))
                    entry.confirmed_by_oracle = not is_schur_positive(again)[0]
                report.entries.append(entry)
    return report
