"""Brute-force tableau helpers shared by the tests; deliberately naive."""

from collections import Counter
from itertools import product


def standard_tableaux_count(shape):
    """Count SYT by removing the largest entry from a corner, recursively."""
    shape = tuple(shape)
    if sum(shape) == 0:
        return 1
    total = 0
    for r, row in enumerate(shape):
        if row and (r + 1 == len(shape) or shape[r + 1] < row):
            smaller = list(shape)
            smaller[r] -= 1
            total += standard_tableaux_count(tuple(x for x in smaller if x))
    return total


def ssyt(shape, nvars):
    """Yield the content vector of every semistandard tableau of ``shape`` in ``nvars`` letters."""
    cells = [(r, c) for r, row in enumerate(shape) for c in range(row)]
    filling = {}

    def rec(i):
        if i == len(cells):
            counts = Counter(filling.values())
            yield tuple(counts.get(v, 0) for v in range(nvars))
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, nvars):
            filling[(r, c)] = v
            yield from rec(i + 1)
        filling.pop((r, c), None)

    yield from rec(0)


def schur_monomials(shape, nvars):
    return Counter(ssyt(shape, nvars))


def multiply_monomials(a, b):
    out = Counter()
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return out


def decompose(poly, nvars):
    """Peel off leading monomials to express a symmetric polynomial in the Schur basis."""
    poly = Counter({k: v for k, v in poly.items() if v})
    out = {}
    while poly:
        lead = max(poly)
        c = poly[lead]
        shape = tuple(x for x in lead if x)
        out[shape] = c
        for e, m in schur_monomials(shape, nvars).items():
            poly[e] -= c * m
            if poly[e] == 0:
                del poly[e]
    return out


def lr_by_monomials(lam, mu):
    n = sum(lam) + sum(mu)
    return decompose(multiply_monomials(schur_monomials(lam, n), schur_monomials(mu, n)), n)


def all_standard_bitableaux(lam, mu):
    """Count pairs of standard fillings using disjoint label sets from [n] by brute force."""
    n = sum(lam) + sum(mu)
    a = sum(lam)
    count = 0
    for mask in product((0, 1), repeat=n):
        if sum(mask) == a:
            count += 1
    return count * standard_tableaux_count(lam) * standard_tableaux_count(mu)
