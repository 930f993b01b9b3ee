"""Secant complexes of the path graph and their tropical polynomials.

``f_{n,r}(mu)`` is the amount of ``mu`` left over after covering as much of
it as possible with ``r`` disjoint edges ``{i, i+1}``.  It is computed two
ways: ``f_oracle`` minimises over the irreducible components directly, and
``f_dp`` runs a max-weight disjoint-edge dynamic program.  Everything
downstream uses the DP; the oracle exists so the two can be cross-checked.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .core_poset import Monomial, PosetError

Facet = tuple[int, ...]  # left endpoints of r disjoint edges
Component = tuple[int, ...]  # sorted variable indices
Generator = tuple[int, ...]  # index sequence with gaps >= 2


def top_index(n: int) -> int:
    """``k = floor(n/2)``, the largest secant index."""
    return n // 2


def _check_r(n: int, r: int, lo: int = 0) -> None:
    if not lo <= r <= n // 2:
        raise PosetError(f"r={r} outside [{lo}, {n // 2}] for n={n}")


def facets(n: int, r: int) -> list[Facet]:
    """Facets of the r-th secant complex, as sorted left endpoints.

    There are ``C(n-r, r)`` of them.
    """
    _check_r(n, r)
    out: list[Facet] = []

    def rec(start: int, left: int, acc: tuple[int, ...]) -> None:
        if left == 0:
            out.append(acc)
            return
        # the remaining ``left`` edges need 2*left vertices from ``start``
        for i in range(start, n - 2 * left + 2):
            rec(i + 2, left - 1, acc + (i,))

    rec(0, r, ())
    return out


def facet_vertices(facet: Facet) -> frozenset[int]:
    return frozenset(v for i in facet for v in (i, i + 1))


def components(n: int, r: int) -> list[Component]:
    """Supports of the irreducible components of ``I_{n,r}``.

    One component ``{2*l_0, 2*l_1 + 1, ..., 2*l_{n-2r} + (n-2r)}`` per weakly
    increasing sequence ``0 <= l_0 <= ... <= l_{n-2r} <= r``.
    """
    _check_r(n, r)
    out = [
        tuple(2 * lam + j for j, lam in enumerate(seq))
        for seq in combinations_with_replacement(range(r + 1), n - 2 * r + 1)
    ]
    return sorted(out)


def generators(n: int, r: int) -> list[Generator]:
    """Minimal generators of ``I_{n,r}``: index chains with consecutive gaps >= 2."""
    _check_r(n, r)
    return [
        g
        for g in combinations(range(n + 1), r + 1)
        if all(y - x >= 2 for x, y in zip(g, g[1:]))
    ]


def f_oracle(mu: Monomial, r: int) -> int:
    """Minimum over all components of the exponent mass on that component."""
    n = mu.n
    _check_r(n, r)
    a = mu.a
    return min(
        sum(a[2 * lam + j] for j, lam in enumerate(seq))
        for seq in combinations_with_replacement(range(r + 1), n - 2 * r + 1)
    )


def max_cover(a: tuple[int, ...], r: int) -> tuple[int, Facet]:
    """Largest mass coverable by ``r`` disjoint edges, with a maximising facet.

    ``best[i][t]`` is the best cover of slots ``0..i`` with at most ``t`` edges:
    ``best[i][t] = max(best[i-1][t], best[i-2][t-1] + a[i-1] + a[i])``.
    Exponents are nonnegative, so "at most r" and "exactly r" agree whenever
    ``r`` edges fit, which holds for ``r <= n/2``.
    """
    n = len(a) - 1
    best = [[0] * (r + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for t in range(1, r + 1):
            skip = best[i - 1][t]
            take = (best[i - 2][t - 1] if i >= 2 else 0) + a[i - 1] + a[i]
            best[i][t] = max(skip, take)
    chosen: list[int] = []
    i, t = n, r
    while t > 0 and i >= 1:
        take = (best[i - 2][t - 1] if i >= 2 else 0) + a[i - 1] + a[i]
        if best[i][t] == take:
            chosen.append(i - 1)
            i, t = i - 2, t - 1
        else:
            i -= 1
    facet = sorted(chosen)
    if len(facet) < r:
        facet = _complete_facet(facet, n, r)
    return best[n][r], tuple(facet)


def _complete_facet(partial: list[int], n: int, r: int) -> list[int]:
    used = facet_vertices(tuple(partial))
    out = list(partial)
    for i in range(n):
        if len(out) == r:
            break
        if i not in used and i + 1 not in used:
            out.append(i)
            used = used | {i, i + 1}
    if len(out) < r:
        # cannot happen for r <= n/2, kept as a bug trap
        raise AssertionError(f"could not complete facet {partial} to {r} edges")
    return sorted(out)


def f_dp(mu: Monomial, r: int) -> int:
    _check_r(mu.n, r)
    return mu.degree - max_cover(mu.a, r)[0]


@lru_cache(maxsize=1 << 18)
def _f_vector(a: tuple[int, ...]) -> tuple[int, ...]:
    n = len(a) - 1
    deg = sum(a)
    return tuple(deg - max_cover(a, r)[0] for r in range(n // 2 + 1))


def f_vector(mu: Monomial) -> tuple[int, ...]:
    """``(f_{n,0}, ..., f_{n,k})``, memoised on the exponent vector."""
    return _f_vector(mu.a)


def symbolic_member(mu: Monomial, r: int, s: int) -> bool:
    """Membership of ``mu`` in the ``s``-th symbolic power of ``I_{n,r}``."""
    if s < 0:
        raise PosetError("symbolic power exponent must be nonnegative")
    return f_dp(mu, r) >= s


def symbolic_member_direct(mu: Monomial, r: int, s: int) -> bool:
    """Same membership, straight from the intersection of powers of primes."""
    return all(sum(mu.a[i] for i in comp) >= s for comp in components(mu.n, r))


def divisible_by_generator(mu: Monomial, r: int) -> bool:
    return any(all(mu.a[i] >= 1 for i in g) for g in generators(mu.n, r))


def deg_vector_from_f(f: tuple[int, ...]) -> tuple[int, ...]:
    """Second differences ``f_r - 2 f_{r+1} + f_{r+2}`` with ``f_j = 0`` past the end."""
    ext = tuple(f) + (0, 0)
    out = tuple(ext[r] - 2 * ext[r + 1] + ext[r + 2] for r in range(len(f)))
    if any(d < 0 for d in out):
        raise AssertionError(f"negative second difference in f-vector {f}")
    return out


def deg_vector(mu: Monomial) -> tuple[int, ...]:
    return deg_vector_from_f(f_vector(mu))


def deg_r(mu: Monomial, r: int) -> int:
    _check_r(mu.n, r)
    return deg_vector(mu)[r]
