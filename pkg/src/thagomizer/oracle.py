"""Recursive equivariant oracles, independent of the closed formulas.

Each polynomial is recovered from its orbit-sum Z-polynomial: with every lower
case known, the palindromicity of Z and the degree bound on P determine P.  The
only shared code with :mod:`thagomizer.closed_forms` is the ring arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

from thagomizer.bi_ring import (
    BiSchurPoly,
    GradedBiSchur,
    bi_multiply,
    e_sum_alphabets,
    h_sum_alphabets,
    is_palindromic,
)
from thagomizer.lattice import InconsistencyError
from thagomizer.schur import h_gen

MAX_ORACLE_N = 10
MAX_CYCLE_K = 14


def _hx(n: int) -> BiSchurPoly:
    return BiSchurPoly.in_x(h_gen(n))


def solve_palindromic(rest: GradedBiSchur, r: int) -> GradedBiSchur:
    """The unique ``P`` with ``deg P < r/2`` making ``P + rest`` palindromic of degree ``r``.

    Raises :class:`InconsistencyError` when no such ``P`` exists, which can only
    happen if ``rest`` is wrong.
    """
    p = GradedBiSchur({i: rest.coeff(r - i) - rest.coeff(i) for i in range(r + 1) if 2 * i < r})
    if not is_palindromic(p + rest, r):
        raise InconsistencyError(f"orbit sum cannot be completed to a palindrome of degree {r}")
    if p and 2 * p.degree >= r:
        raise InconsistencyError("KL polynomial violates the degree bound")
    return p


@lru_cache(maxsize=None)
def _thagomizer_rest(n: int) -> GradedBiSchur:
    """Z-polynomial of ``T_n`` minus the contribution of the empty flat."""
    rest = GradedBiSchur.zero()
    for k in range(1, n + 1):
        rest = rest + (p_thagomizer_oracle(n - k) * h_sum_alphabets(k)).shift(k)
    for k in range(n + 1):
        rest = rest + GradedBiSchur.monomial(k + 1, bi_multiply(_hx(k), _hx(n - k)))
    return rest


@lru_cache(maxsize=None)
def p_thagomizer_oracle(n: int) -> GradedBiSchur:
    if not 0 <= n <= MAX_ORACLE_N:
        raise ValueError(f"oracle needs 0 <= n <= {MAX_ORACLE_N}")
    return solve_palindromic(_thagomizer_rest(n), n + 1)


def z_thagomizer_oracle(n: int) -> GradedBiSchur:
    return p_thagomizer_oracle(n) + _thagomizer_rest(n)


@lru_cache(maxsize=None)
def _cycle_rest(k: int) -> GradedBiSchur:
    hy = lambda m: BiSchurPoly.in_y(h_gen(m))  # noqa: E731
    rest = GradedBiSchur.monomial(k - 1, hy(k))
    for j in range(1, k - 1):
        rest = rest + (p_cycle_oracle(k - j) * hy(j)).shift(j)
    return rest


@lru_cache(maxsize=None)
def p_cycle_oracle(k: int) -> GradedBiSchur:
    """KL polynomial of the ``k``-cycle (``Y`` alphabet) from its Z-polynomial."""
    if not 2 <= k <= MAX_CYCLE_K:
        raise ValueError(f"cycle oracle needs 2 <= k <= {MAX_CYCLE_K}")
    return solve_palindromic(_cycle_rest(k), k - 1)


def z_cycle_oracle(k: int) -> GradedBiSchur:
    return p_cycle_oracle(k) + _cycle_rest(k)


@lru_cache(maxsize=None)
def q_thagomizer_oracle(n: int) -> GradedBiSchur:
    """Inverse KL polynomial from the inversion identity over both orbit types.

    ``sum_k (-1)^k Q_k h_{n-k}[X] = sum_k (-1)^k e_k[X+Y] P_{n-k}``; the ``k = n``
    term on the left is ``(-1)^n Q_n`` and is solved for.
    """
    if not 0 <= n <= MAX_ORACLE_N:
        raise ValueError(f"oracle needs 0 <= n <= {MAX_ORACLE_N}")
    rhs = GradedBiSchur.zero()
    for k in range(n + 1):
        rhs = rhs + (p_thagomizer_oracle(n - k) * e_sum_alphabets(k)).scale((-1) ** k)
    for k in range(n):
        rhs = rhs - (q_thagomizer_oracle(k) * _hx(n - k)).scale((-1) ** k)
    return rhs.scale((-1) ** n)


@lru_cache(maxsize=None)
def char_poly_oracle(n: int) -> GradedBiSchur:
    """Characteristic polynomial from the triangular flat-orbit recursion.

    ``t h_n[tX] = h_n[tX] + sum_k h_k[X+Y] chi_{n-k}``, with ``h_n[tX] = t^n h_n[X]``.
    """
    if not 0 <= n <= MAX_ORACLE_N:
        raise ValueError(f"oracle needs 0 <= n <= {MAX_ORACLE_N}")
    hn = GradedBiSchur.monomial(n, _hx(n))
    out = hn.shift(1) - hn
    for k in range(1, n + 1):
        out = out - char_poly_oracle(n - k) * h_sum_alphabets(k)
    return out
