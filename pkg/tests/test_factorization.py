import pytest
from hypothesis import given
from hypothesis import strategies as st

from youngchains.core_poset import Monomial, enumerate_monomials
from youngchains.factorization import Tableau, canonical_tableau, verify_tableau
from youngchains.tropical import deg_vector, f_vector

MU = Monomial.of(4, 3, 2, 1, 1, 4)
TABLEAU_ROWS = ((0, 2, 4), (0, 2, 5), (0, 3, 5), (0, 5), (1, 5), (1,), (1,))


def test_worked_tableau():
    tab = canonical_tableau(MU)
    assert tab.rows == TABLEAU_ROWS
    assert verify_tableau(MU, tab)
    assert tab.to_json() == [list(r) for r in TABLEAU_ROWS]


def test_power_of_z0():
    assert canonical_tableau(Monomial.of(5, 0, 0, 0)).rows == ((0,),) * 5


def test_small_example_census():
    mu = Monomial.of(1, 1, 1, 0, 1, 1)
    tab = canonical_tableau(mu)
    assert tab.census_vector(2) == (0, 1, 1)
    assert sorted(x for row in tab.rows for x in row) == [0, 1, 2, 4, 5]
    assert tab.rows == ((0, 2, 4), (1, 5))


def test_gap_violation_rejected():
    bad = Tableau(((0, 1, 4), (0, 2, 5), (0, 3, 5), (0, 5), (2, 5), (1,), (1,)))
    assert not verify_tableau(MU, bad)


def test_wrong_row_lengths_rejected():
    # same multiset, one long row split into shorter rows
    bad = Tableau(((0, 2, 4), (0, 2, 5), (0, 5), (0, 5), (1, 5), (1,), (1,), (3,)))
    assert sorted(x for r in bad.rows for x in r) == sorted(x for r in TABLEAU_ROWS for x in r)
    assert not verify_tableau(MU, bad)


def test_non_minimal_rejected():
    mu = Monomial.of(1, 1, 0, 1, 0)
    assert canonical_tableau(mu).rows == ((0, 3), (1,))
    assert not verify_tableau(mu, Tableau(((1, 3), (0,))))


@pytest.mark.parametrize("n", range(1, 7))
def test_census_matches_deg_vector(n):
    for m in range(9):
        for mu in enumerate_monomials(n, m):
            tab = canonical_tableau(mu)
            assert tab.census_vector(n // 2) == deg_vector(mu)
            f = f_vector(mu)
            assert all(tab.boxes_beyond(r) == f[r] for r in range(len(f)))


@given(
    st.integers(1, 8).flatmap(
        lambda n: st.lists(st.integers(0, 4), min_size=n + 1, max_size=n + 1)
    )
)
def test_canonical_tableau_verifies(a):
    mu = Monomial(a)
    tab = canonical_tableau(mu)
    assert verify_tableau(mu, tab)
    assert canonical_tableau(Monomial(a)) == tab
