import pytest

from thagomizer.bi_ring import BiSchurPoly, GradedBiSchur, dimension_poly
from thagomizer.closed_forms import c_cycle, char_poly_thagomizer, p_thagomizer, q_thagomizer, z_thagomizer
from thagomizer.lattice import InconsistencyError, inverse_kl, kl_and_z
from thagomizer.model import flats_of_thagomizer
from thagomizer.oracle import (
    char_poly_oracle,
    p_cycle_oracle,
    p_thagomizer_oracle,
    q_thagomizer_oracle,
    solve_palindromic,
    z_thagomizer_oracle,
)
from thagomizer.positivity import is_schur_positive

G = GradedBiSchur.from_terms


def test_p_examples():
    assert p_thagomizer_oracle(0) == GradedBiSchur.one()
    assert p_thagomizer_oracle(1) == G([(0, (1,), (), 1)])
    assert p_thagomizer_oracle(2) == G([(0, (2,), (), 1), (1, (), (2,), 1)])


def test_cycle_examples():
    # the trivial representation of S_2, dimension one
    assert p_cycle_oracle(2) == G([(0, (), (2,), 1)])
    assert p_cycle_oracle(4) == G([(0, (), (4,), 1), (1, (), (2, 2), 1)])
    assert p_cycle_oracle(6).coeff(2) == BiSchurPoly.s((), (2, 2, 2))


def test_q_examples():
    assert q_thagomizer_oracle(0) == GradedBiSchur.one()
    # the sign convention is pinned down at n = 1 before trusting larger n
    assert q_thagomizer_oracle(1) == G([(0, (1,), (), 1), (0, (), (1,), 1)])
    assert q_thagomizer_oracle(3) == q_thagomizer(3)


@pytest.mark.parametrize("n", range(11))
def test_oracles_match_closed_forms(n):
    assert p_thagomizer_oracle(n) == p_thagomizer(n)
    assert q_thagomizer_oracle(n) == q_thagomizer(n)
    assert z_thagomizer_oracle(n) == z_thagomizer(n)
    assert char_poly_oracle(n) == char_poly_thagomizer(n)


@pytest.mark.parametrize("k", range(2, 15))
def test_cycle_oracle_matches_closed_form(k):
    assert p_cycle_oracle(k) == c_cycle(k)


@pytest.mark.parametrize("n", range(6))
def test_dimensions_match_lattice(n):
    L = flats_of_thagomizer(n)
    p, z = kl_and_z(L)
    assert dimension_poly(p_thagomizer_oracle(n)) == p
    assert dimension_poly(z_thagomizer_oracle(n)) == z
    assert dimension_poly(q_thagomizer_oracle(n)) == inverse_kl(L)


@pytest.mark.parametrize("n", range(11))
def test_oracle_outputs_are_honest(n):
    assert is_schur_positive(p_thagomizer_oracle(n))[0]
    assert is_schur_positive(q_thagomizer_oracle(n))[0]


def test_ranges():
    for fn in (p_thagomizer_oracle, q_thagomizer_oracle, char_poly_oracle):
        with pytest.raises(ValueError):
            fn(11)
        with pytest.raises(ValueError):
            fn(-1)
    for k in (1, 15):
        with pytest.raises(ValueError):
            p_cycle_oracle(k)


def test_solver_rejects_overlong_input():
    rest = G([(3, (), (), 1)])
    with pytest.raises(InconsistencyError):
        solve_palindromic(rest, 2)
