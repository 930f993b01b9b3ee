from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngchains.core_poset import Monomial, PosetError, enumerate_monomials, tau
from youngchains.tropical import (
    components,
    deg_r,
    deg_vector,
    deg_vector_from_f,
    divisible_by_generator,
    f_dp,
    f_oracle,
    f_vector,
    facet_vertices,
    facets,
    generators,
    max_cover,
    symbolic_member,
    symbolic_member_direct,
)

MU = Monomial.of(4, 3, 2, 1, 1, 4)
NU = Monomial.of(1, 1, 1, 0, 1, 1)


def monomials(max_n=8, max_entry=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.integers(0, max_entry), min_size=n + 1, max_size=n + 1)
    ).map(Monomial)


def test_facets_examples():
    assert facets(5, 2) == [(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)]
    assert facets(2, 1) == [(0,), (1,)]
    assert facets(4, 0) == [()]


@pytest.mark.parametrize("n", range(1, 10))
def test_facet_count(n):
    for r in range(n // 2 + 1):
        assert len(facets(n, r)) == comb(n - r + 1, r)


def test_facets_reject_bad_r():
    with pytest.raises(PosetError):
        facets(5, 3)
    with pytest.raises(PosetError):
        facets(5, -1)


def test_components_examples():
    assert set(components(5, 2)) == {(0, 1), (0, 3), (0, 5), (2, 3), (2, 5), (4, 5)}
    assert set(components(5, 1)) == {
        (0, 1, 2, 3), (0, 1, 2, 5), (0, 1, 4, 5), (0, 3, 4, 5), (2, 3, 4, 5)
    }
    assert set(components(2, 1)) == {(0,), (2,)}


@pytest.mark.parametrize("n", range(1, 10))
def test_components_are_facet_complements(n):
    for r in range(1, n // 2 + 1):
        comps = {frozenset(c) for c in components(n, r)}
        compl = {frozenset(range(n + 1)) - facet_vertices(f) for f in facets(n, r)}
        assert comps == compl
        assert all(len(c) == n + 1 - 2 * r for c in comps)


def test_generators_examples():
    assert generators(5, 2) == [(0, 2, 4), (0, 2, 5), (0, 3, 5), (1, 3, 5)]
    g51 = generators(5, 1)
    assert len(g51) == 10 and all(j >= i + 2 for i, j in g51)
    assert generators(2, 1) == [(0, 2)]
    assert generators(3, 0) == [(0,), (1,), (2,), (3,)]


def test_generators_are_minimal_nonfaces():
    # a set is a non-face of the r-edge complex iff it contains a gap>=2 chain of length r+1
    for n in range(1, 8):
        for r in range(n // 2 + 1):
            faces = set()
            for f in facets(n, r):
                v = sorted(facet_vertices(f))
                for k in range(len(v) + 1):
                    faces.update(frozenset(s) for s in combinations(v, k))
            minimal = set()
            for k in range(1, n + 2):
                for s in combinations(range(n + 1), k):
                    s = frozenset(s)
                    if s not in faces and all(s - {x} in faces for x in s):
                        minimal.add(s)
            assert minimal == {frozenset(g) for g in generators(n, r)}


def test_f_examples():
    assert f_oracle(MU, 1) == 8 and f_dp(MU, 1) == 8
    assert f_oracle(MU, 2) == 3 and f_dp(MU, 2) == 3
    assert f_dp(MU, 0) == f_oracle(MU, 0) == 15
    assert f_dp(NU, 1) == 3 and f_dp(NU, 2) == 1


def test_max_cover_example():
    assert max_cover(MU.a, 2) == (12, (0, 4))


@given(monomials())
def test_max_cover_facet_is_valid(mu):
    for r in range(mu.n // 2 + 1):
        value, facet = max_cover(mu.a, r)
        assert facet in facets(mu.n, r)
        assert sum(mu.a[v] for v in facet_vertices(facet)) == value


@given(monomials())
def test_dp_matches_oracle(mu):
    for r in range(mu.n // 2 + 1):
        assert f_dp(mu, r) == f_oracle(mu, r)


@given(monomials())
def test_tau_invariance(mu):
    assert f_vector(mu) == f_vector(tau(mu))


@given(monomials())
def test_f_monotone_and_convex(mu):
    f = list(f_vector(mu)) + [0, 0]
    assert all(x >= y >= 0 for x, y in zip(f, f[1:]))
    assert all(f[r] - 2 * f[r + 1] + f[r + 2] >= 0 for r in range(len(f) - 2))


@given(monomials())
def test_f_from_deg(mu):
    d = deg_vector(mu)
    f = f_vector(mu)
    for r in range(len(f)):
        assert f[r] == sum((j + 1 - r) * d[j] for j in range(r, len(d)))
    assert sum(dj * (j + 1) for j, dj in enumerate(d)) == mu.degree


def test_symbolic_member_examples():
    assert symbolic_member(MU, 2, 3) and not symbolic_member(MU, 2, 4)
    assert symbolic_member(MU, 2, 0)
    assert symbolic_member(NU, 2, 1)
    assert divisible_by_generator(NU, 2)
    with pytest.raises(PosetError):
        symbolic_member(MU, 1, -1)


@pytest.mark.parametrize("n", range(1, 7))
def test_symbolic_member_direct_definition(n):
    for m in range(5):
        for mu in enumerate_monomials(n, m):
            for r in range(1, n // 2 + 1):
                for s in range(m + 2):
                    assert symbolic_member(mu, r, s) == symbolic_member_direct(mu, r, s)
                # first symbolic power is the ideal itself
                assert symbolic_member(mu, r, 1) == divisible_by_generator(mu, r)


def test_deg_examples():
    assert deg_vector(MU) == (2, 2, 3)
    assert [deg_r(MU, r) for r in range(3)] == [2, 2, 3]
    assert deg_vector(NU) == (0, 1, 1)
    for n in range(1, 9):
        for r in range(n // 2 + 1):
            gen = [0] * (n + 1)
            for j in range(r + 1):
                gen[2 * j] = 1
            d = deg_vector(Monomial(gen))
            assert d[r] == 1 and sum(d) == 1


def test_negative_second_difference_is_a_bug():
    with pytest.raises(AssertionError):
        deg_vector_from_f((3, 3, 0))
