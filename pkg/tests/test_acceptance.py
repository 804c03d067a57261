"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Caches are cleared before each criterion so the timings cover a cold computation.
Run standalone with ``python tests/test_acceptance.py`` or through pytest.
"""

import sys
import time
from contextlib import contextmanager

import pytest

from thagomizer import bi_ring, closed_forms, intpoly, oracle, schur
from thagomizer.bi_ring import dimension_poly, is_palindromic
from thagomizer.lattice import characteristic_polynomial, inverse_kl, kl_and_z, mobius_from
from thagomizer.model import flats_of_thagomizer
from thagomizer.partitions import rectangle_with_tail
from thagomizer.positivity import is_multiplicity_free, verify_strong_ilc
from thagomizer.schur import SchurPoly

# frozen after being computed from the closed form and, for n <= 5, from the lattice
LINEAR_COEFFICIENT = {2: 1, 3: 4, 4: 11, 5: 26, 6: 57, 7: 120, 8: 247}


def _clear_caches():
    schur.clear_cache()
    for mod in (bi_ring, closed_forms, oracle):
        for obj in vars(mod).values():
            if hasattr(obj, "cache_clear"):
                obj.cache_clear()


@contextmanager
def criterion(number, title, budget, capsys=None):
    _clear_caches()
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
        status = "PASS"
    finally:
        line = f"[{status}] criterion {number:>2}: {title} ({time.perf_counter() - start:.2f}s)"
        if capsys is not None:
            with capsys.disabled():
                print("\n" + line, end="")
        else:
            print(line)


def _chi_product(n):
    return intpoly.mul((-1, 1), intpoly.power((-2, 1), n))


def test_01_p_closed_form_matches_oracle(capsys):
    with criterion(1, "P closed form = orbit-sum oracle, n <= 8", 30, capsys):
        for n in range(9):
            assert closed_forms.p_thagomizer(n) == oracle.p_thagomizer_oracle(n), n


def test_02_cycle_closed_form_matches_oracle(capsys):
    with criterion(2, "cycle closed form = oracle, 2 <= k <= 12", 10, capsys):
        for k in range(2, 13):
            assert closed_forms.c_cycle(k) == oracle.p_cycle_oracle(k), k


def test_03_q_chain(capsys):
    with criterion(3, "Q closed form = alternating sum = inversion oracle, n <= 8", 30, capsys):
        for n in range(9):
            q = closed_forms.q_thagomizer(n)
            assert q == closed_forms.q_from_p(n), n
            assert q == oracle.q_thagomizer_oracle(n), n


def test_04_dimensions_match_lattice(capsys):
    with criterion(4, "dimensions of P, Z, Q, chi = lattice oracle, n <= 5", 60, capsys):
        for n in range(6):
            L = flats_of_thagomizer(n)
            assert len(L) == 3 ** n + 2 ** n
            p, z = kl_and_z(L)
            assert dimension_poly(closed_forms.p_thagomizer(n)) == p, n
            assert dimension_poly(closed_forms.z_thagomizer(n)) == z, n
            assert dimension_poly(closed_forms.q_thagomizer(n)) == inverse_kl(L), n
            assert dimension_poly(closed_forms.char_poly_thagomizer(n)) == characteristic_polynomial(L), n


def test_05_multiplicity_free(capsys):
    with criterion(5, "P and Q multiplicity-free, n <= 10", 10, capsys):
        for n in range(11):
            assert is_multiplicity_free(closed_forms.p_thagomizer(n))[0], n
            assert is_multiplicity_free(closed_forms.q_thagomizer(n))[0], n


def test_06_palindromic(capsys):
    with criterion(6, "Z palindromic: thagomizer n <= 8, cycle k <= 12", 30, capsys):
        for n in range(9):
            assert is_palindromic(closed_forms.z_thagomizer(n), n + 1), n
        for k in range(2, 13):
            assert is_palindromic(closed_forms.z_cycle(k), k - 1), k


def test_07_alternating_pieri(capsys):
    with criterion(7, "alternating Pieri sum = s_(2^k,1^m), m <= 8, k <= 5", 30, capsys):
        for k in range(1, 6):
            for m in range(9):
                assert closed_forms.pieri_alternating_lhs(m, k) == SchurPoly.s(rectangle_with_tail(2, k, m)), (m, k)


def test_08_series_identities(capsys):
    with criterion(8, "five generating-series identities to order 9", 60, capsys):
        report = closed_forms.verify_series_identities(9)
        assert len(report.checks) == 5
        assert report.passed, [c.name for c in report.checks if not c.passed]


def test_09_characteristic_polynomial(capsys):
    with criterion(9, "dimensions of chi = (t-1)(t-2)^n, n <= 8; product checked by Mobius, n <= 3", 30, capsys):
        for n in range(4):
            L = flats_of_thagomizer(n)
            r = L.rank_top
            coeffs = [0] * (r + 1)
            for f, m in mobius_from(L, L.bottom).items():
                coeffs[r - L.rank(f)] += m
            assert intpoly.trim(coeffs) == _chi_product(n), n
        for n in range(9):
            assert dimension_poly(closed_forms.char_poly_thagomizer(n)) == _chi_product(n), n


def test_10_ilc_sweep(capsys):
    with criterion(10, "ILC differences Schur positive, both variants, max_n = 6", 60, capsys):
        for variant in "PQ":
            report = verify_strong_ilc(6, variant, strong=True)
            assert report.entries and not report.failures, [e.to_json_obj() for e in report.failures]


@pytest.mark.slow
def test_10_ilc_sweep_slow_tier(capsys):
    with criterion(10, "ILC slow tier, max_n = 8", 600, capsys):
        for variant in "PQ":
            report = verify_strong_ilc(8, variant, strong=True)
            assert not report.failures, [e.to_json_obj() for e in report.failures]


def test_11_type_a_consistency(capsys):
    with criterion(11, "dimensions of the S_n and B_n polynomials agree, n <= 6", 30, capsys):
        for n in range(7):
            assert dimension_poly(closed_forms.p_type_a(n)) == dimension_poly(closed_forms.p_thagomizer(n)), n


def test_12_linear_coefficient(capsys):
    with criterion(12, "t^1 coefficient of dim P = 2^n - n - 1, 2 <= n <= 8", 60, capsys):
        for n in range(2, 9):
            dims = dimension_poly(closed_forms.p_thagomizer(n))
            assert dims[1] == LINEAR_COEFFICIENT[n] == 2 ** n - n - 1, n
            if n <= 5:
                assert kl_and_z(flats_of_thagomizer(n))[0][1] == LINEAR_COEFFICIENT[n], n


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
