from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngchains.core_poset import (
    IllegalMove,
    Monomial,
    Partition,
    PosetError,
    SizeCapExceeded,
    apply_color,
    color_between,
    enumerate_monomials,
    enumerate_partitions,
    from_partition,
    hasse_edges,
    leq,
    parse_monomial,
    rank,
    tau,
    to_partition,
    unapply_color,
    weight,
)


def monomials(max_n=6, max_entry=4):
    return st.integers(0, max_n).flatmap(
        lambda n: st.lists(st.integers(0, max_entry), min_size=n + 1, max_size=n + 1)
    ).map(Monomial)


def test_monomial_rejects_negative_and_empty():
    with pytest.raises(PosetError):
        Monomial((1, -1))
    with pytest.raises(PosetError):
        Monomial(())


def test_monomial_degree_and_value_semantics():
    mu = Monomial.of(4, 3, 2, 1, 1, 4)
    assert mu.n == 5 and mu.degree == 15
    assert mu == Monomial([4, 3, 2, 1, 1, 4])
    assert hash(mu) == hash(Monomial((4, 3, 2, 1, 1, 4)))
    assert mu.to_json() == [4, 3, 2, 1, 1, 4]


def test_from_partition_examples():
    assert from_partition(Partition((0, 1, 2, 4, 5), 5)).a == (1, 1, 1, 0, 1, 1)
    assert from_partition(Partition((), 3)).a == (0, 0, 0, 0)
    assert from_partition(Partition((0, 0, 0), 1)).a == (3, 0)


def test_to_partition_examples():
    assert to_partition(Monomial.of(1, 1, 1, 0, 1, 1)).parts == (0, 1, 2, 4, 5)
    assert to_partition(Monomial.of(3, 0, 0)).parts == (0, 0, 0)
    assert to_partition(Monomial.of(0, 0, 2)).parts == (2, 2)


def test_partition_validation():
    with pytest.raises(PosetError):
        Partition((2, 1), 3)
    with pytest.raises(PosetError):
        Partition((0, 4), 3)


@given(monomials())
def test_partition_roundtrip(mu):
    assert from_partition(to_partition(mu)) == mu


def test_weight_rank_examples():
    mu = Monomial.of(2, 0, 2, 0, 1, 0)
    assert (weight(mu), rank(mu)) == (9, 8)
    assert weight(Monomial.of(3, 0, 0, 0)) == 9 and rank(Monomial.of(3, 0, 0, 0)) == 0
    nu = Monomial.of(1, 1, 1, 0, 1, 1)
    assert rank(nu) == 12 and weight(nu) == 1


@given(monomials())
def test_weight_rank_relation(mu):
    assert weight(mu) == mu.degree * mu.n - 2 * rank(mu)


def test_leq_examples():
    assert leq(Monomial.of(2, 0), Monomial.of(1, 1))
    assert not leq(Monomial.of(1, 1), Monomial.of(2, 0))
    mu = Monomial.of(1, 1, 1, 0, 1, 1)
    assert leq(mu, mu)
    assert not leq(mu, Monomial.of(2, 0, 1, 0, 1, 1))
    assert leq(Monomial.of(2, 0, 1, 0, 1, 1), mu)


def test_leq_mismatch_errors():
    with pytest.raises(PosetError):
        leq(Monomial.of(1, 0), Monomial.of(1, 0, 0))
    with pytest.raises(PosetError):
        leq(Monomial.of(1, 0), Monomial.of(2, 0))


@pytest.mark.parametrize("n,m", [(n, m) for n in range(5) for m in range(5) if n + m <= 8])
def test_leq_is_partial_order(n, m):
    elems = list(enumerate_monomials(n, m))
    rel = {(x, y): leq(x, y) for x in elems for y in elems}
    for x, y in product(elems, repeat=2):
        if x != y:
            assert not (rel[x, y] and rel[y, x])
    for x, y, z in product(elems, repeat=3):
        if rel[x, y] and rel[y, z]:
            assert rel[x, z]


def test_leq_matches_partition_order():
    # the suffix-sum order is the componentwise order on partitions
    for n, m in [(3, 3), (4, 2), (2, 4)]:
        elems = list(enumerate_monomials(n, m))
        for x, y in product(elems, repeat=2):
            assert leq(x, y) == to_partition(x).leq(to_partition(y))


def test_apply_color_examples():
    assert apply_color(Monomial.of(2, 0, 1, 1, 1, 0), 1).a == (1, 1, 1, 1, 1, 0)
    assert apply_color(Monomial.of(1, 0), 1).a == (0, 1)
    assert apply_color(Monomial.of(1, 1, 1, 0, 2, 0), 5).a == (1, 1, 1, 0, 1, 1)


def test_apply_color_illegal():
    with pytest.raises(IllegalMove):
        apply_color(Monomial.of(0, 1), 1)
    with pytest.raises(IllegalMove):
        apply_color(Monomial.of(1, 1), 2)
    with pytest.raises(IllegalMove):
        unapply_color(Monomial.of(1, 0), 1)


@given(monomials(), st.integers(1, 6))
def test_apply_color_shifts_rank_and_weight(mu, c):
    if c > mu.n or mu.a[c - 1] == 0:
        return
    nu = apply_color(mu, c)
    assert rank(nu) == rank(mu) + 1
    assert weight(nu) == weight(mu) - 2
    assert unapply_color(nu, c) == mu
    assert color_between(mu, nu) == c


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 6) for m in range(1, 6) if n + m <= 8])
def test_covers_are_exactly_color_moves(n, m):
    elems = list(enumerate_monomials(n, m))
    for x in elems:
        # brute-force covers: y above x in rank with nothing in between
        ups = [y for y in elems if y != x and leq(x, y)]
        covers = {y for y in ups if not any(z != y and leq(x, z) and leq(z, y) for z in ups)}
        moves = {apply_color(x, c) for c in range(1, n + 1) if x.a[c - 1] > 0}
        assert covers == moves
        for y in covers:
            assert sum(1 for c in range(1, n + 1) if x.a[c - 1] and apply_color(x, c) == y) == 1


def test_tau_examples():
    assert tau(Monomial.of(4, 3, 2, 1, 1, 4)).a == (4, 1, 1, 2, 3, 4)
    assert tau(Monomial.of(1, 2, 1)) == Monomial.of(1, 2, 1)
    mu = Monomial.of(2, 0, 2, 0, 1, 0)
    assert tau(mu).a == (0, 1, 0, 2, 0, 2)
    assert (weight(mu), weight(tau(mu))) == (9, -9)


@given(monomials(), st.data())
def test_tau_reverses_order(mu, data):
    nu = Monomial(data.draw(st.permutations(mu.a)))
    assert tau(tau(mu)) == mu
    assert weight(tau(mu)) == -weight(mu)
    assert leq(mu, nu) == leq(tau(nu), tau(mu))


def test_enumerate_examples():
    assert [mu.a for mu in enumerate_monomials(1, 2)] == [(2, 0), (1, 1), (0, 2)]
    assert sum(1 for _ in enumerate_monomials(5, 5)) == 252
    assert [mu.a for mu in enumerate_monomials(0, 7)] == [(7,)]


@pytest.mark.parametrize("n,m", [(n, m) for n in range(7) for m in range(7)])
def test_enumerate_count_and_order(n, m):
    elems = [mu.a for mu in enumerate_monomials(n, m)]
    assert len(elems) == len(set(elems)) == comb(n + m, n)
    assert elems == sorted(elems, reverse=True)
    assert all(sum(a) == m for a in elems)


def test_hasse_examples():
    assert [(u.a, l.a, c) for u, l, c in hasse_edges(1, 1)] == [((1, 0), (0, 1), 1)]
    assert [(u.a, l.a, c) for u, l, c in hasse_edges(2, 1)] == [
        ((1, 0, 0), (0, 1, 0), 1),
        ((0, 1, 0), (0, 0, 1), 2),
    ]


def test_hasse_edge_count_n3_m2():
    # counted by hand: sum over the 10 monomials of the nonzero slots below n
    expected = 0
    for a in product(range(3), repeat=4):
        if sum(a) == 2:
            expected += sum(1 for i in range(3) if a[i] > 0)
    edges = list(hasse_edges(3, 2))
    assert len(edges) == expected == 12
    assert len(set((u, l) for u, l, _ in edges)) == len(edges)


def test_hasse_cap():
    with pytest.raises(SizeCapExceeded):
        list(hasse_edges(10, 10, cap=100))


def test_size_cap_env(monkeypatch):
    from youngchains.core_poset import max_poset_size

    monkeypatch.setenv("TY_MAX_POSET", "17")
    assert max_poset_size() == 17


def test_parse_monomial():
    assert parse_monomial("[1, 2,0]").a == (1, 2, 0)
    assert parse_monomial((1, 2), n=1).a == (1, 2)
    with pytest.raises(PosetError):
        parse_monomial("1,2", n=3)
    with pytest.raises(PosetError):
        parse_monomial("1,a")


@pytest.mark.parametrize("m,n", [(m, n) for m in range(5) for n in range(9)])
def test_conjugation_duality(m, n):
    # L(m,n) and L(n,m) are isomorphic through conjugation
    src = list(enumerate_partitions(m, n))
    img = [p.conjugate() for p in src]
    assert len(set(img)) == len(src) == comb(m + n, m)
    assert all(q.m == n and q.n == m for q in img)
    assert all(p.conjugate().conjugate() == p for p in src)
    for p, q in product(src, repeat=2):
        assert p.leq(q) == p.conjugate().leq(q.conjugate())
