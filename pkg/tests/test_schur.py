import pytest
from hypothesis import given, settings, strategies as st

from thagomizer.partitions import Partition, contains, partitions_of
from thagomizer.schur import SchurPoly, e_gen, h_gen, lr_coefficient, omega, schur_multiply

from tableaux import lr_by_monomials

s = SchurPoly.s


def small_partitions(max_n):
    return st.integers(0, max_n).flatmap(lambda n: st.sampled_from(list(partitions_of(n))))


def schur_poly_st(max_n=4):
    return st.dictionaries(small_partitions(max_n), st.integers(-3, 3), max_size=3).map(SchurPoly)


def test_examples(lr_backend):
    assert s((1,)) * s((1,)) == s((2,)) + s((1, 1))
    assert schur_multiply(e_gen(1), s((2,))) == s((3,)) + s((2, 1))
    assert lr_coefficient((), (2, 1), (2, 1)) == 1
    assert lr_coefficient((1,), (1, 1), (2, 1)) == 1
    assert lr_coefficient((2,), (2,), (3, 2)) == 0


def test_known_square(lr_backend):
    got = s((2, 1)) * s((2, 1))
    want = {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1}
    assert got == SchurPoly(want)


@pytest.mark.parametrize("a, b", [(a, b) for n in range(1, 4) for m in range(1, 7 - n)
                                  for a in partitions_of(n) for b in partitions_of(m)])
def test_lr_matches_monomial_expansion(lr_backend, a, b):
    assert (s(a) * s(b)).terms == lr_by_monomials(a, b)


def test_generators():
    assert h_gen(0) == SchurPoly.one() == e_gen(0)
    assert h_gen(3) == s((3,))
    assert e_gen(3) == s((1, 1, 1))
    with pytest.raises(ValueError):
        h_gen(-1)
    with pytest.raises(ValueError):
        e_gen(-2)


def test_zero_coefficients_not_stored():
    p = s((2,)) - s((2,))
    assert not p and p.terms == {}
    assert SchurPoly({(1,): 0}) == SchurPoly.zero()


@settings(max_examples=40, deadline=None)
@given(schur_poly_st(), schur_poly_st(), schur_poly_st())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * SchurPoly.one() == a


@settings(max_examples=40, deadline=None)
@given(small_partitions(4), small_partitions(4))
def test_products_are_homogeneous(a, b):
    assert (s(a) * s(b)).degrees() == {sum(a) + sum(b)}


def _is_horizontal_strip(nu, lam):
    nu, lam = list(nu), list(lam) + [0] * (len(nu) - len(lam))
    return contains(nu, lam) and all(nu[i + 1] <= lam[i] for i in range(len(nu) - 1))


@pytest.mark.parametrize("n", range(9))
def test_pieri_adds_strips(n):
    for lam in partitions_of(n):
        for r in range(1, 5):
            for nu, c in (s(lam) * h_gen(r)).items():
                assert c == 1 and _is_horizontal_strip(nu, lam)
            for nu, c in (s(lam) * e_gen(r)).items():
                assert c == 1 and _is_horizontal_strip(Partition(nu).conjugate(), Partition(lam).conjugate())


@pytest.mark.parametrize("n", range(1, 11))
def test_h_times_e_alternating_vanishes(n):
    total = SchurPoly.zero()
    for b in range(n + 1):
        total = total + (h_gen(n - b) * e_gen(b)).scale((-1) ** b)
    assert not total


@settings(max_examples=30, deadline=None)
@given(schur_poly_st(), schur_poly_st())
def test_omega_is_a_ring_involution(a, b):
    assert omega(omega(a)) == a
    assert omega(a * b) == omega(a) * omega(b)
