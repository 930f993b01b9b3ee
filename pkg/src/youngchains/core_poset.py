"""Monomial model of Young's lattice.

A partition with ``m`` parts bounded by ``n`` is stored as the exponent
vector ``(a_0, ..., a_n)`` of the degree-``m`` monomial ``z_0^a_0 ... z_n^a_n``,
where ``a_i`` counts how often ``i`` occurs among the parts.  The order is
the suffix-sum order, which is the containment order on Young diagrams.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Iterator, Sequence


class PosetError(ValueError):
    """Base class for invalid inputs to poset operations."""


class IllegalMove(PosetError):
    pass


class SizeCapExceeded(PosetError):
    pass


DEFAULT_MAX_POSET = 200_000


def max_poset_size() -> int:
    """Size cap for brute-force slices, overridable with ``TY_MAX_POSET``."""
    raw = os.environ.get("TY_MAX_POSET")
    if raw is None:
        return DEFAULT_MAX_POSET
    cap = int(raw)
    if cap <= 0:
        raise PosetError(f"TY_MAX_POSET must be positive, got {raw!r}")
    return cap


def check_size(n: int, m: int, cap: int | None = None) -> int:
    size = comb(n + m, n)
    cap = max_poset_size() if cap is None else cap
    if size > cap:
        raise SizeCapExceeded(f"A_{n}({m}) has {size} elements, cap is {cap}")
    return size


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent vector of a monomial in ``z_0, ..., z_n``.

    Equality is structural and ordering is lexicographic on the exponents,
    which gives a deterministic tie-break wherever one is needed.
    """

    a: tuple[int, ...]

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.a)
        if not a:
            raise PosetError("exponent vector must have at least one entry")
        if any(x < 0 for x in a):
            raise PosetError(f"negative exponent in {a}")
        object.__setattr__(self, "a", a)

    @classmethod
    def of(cls, *a: int) -> "Monomial":
        return cls(a)

    @property
    def n(self) -> int:
        return len(self.a) - 1

    @cached_property
    def degree(self) -> int:
        return sum(self.a)

    def __len__(self) -> int:
        return len(self.a)

    def __getitem__(self, i: int) -> int:
        return self.a[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.a)

    def __repr__(self) -> str:
        return f"Monomial({list(self.a)})"

    def __mul__(self, other: "Monomial") -> "Monomial":
        if other.n != self.n:
            raise PosetError("cannot multiply monomials in different rings")
        return Monomial(x + y for x, y in zip(self.a, other.a))

    def to_json(self) -> list[int]:
        return list(self.a)


@dataclass(frozen=True)
class Partition:
    """Weakly increasing parts ``0 <= p_1 <= ... <= p_m <= n``."""

    parts: tuple[int, ...]
    n: int
    m: int = field(init=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 or p > self.n for p in parts):
            raise PosetError(f"parts {parts} not within [0, {self.n}]")
        if any(x > y for x, y in zip(parts, parts[1:])):
            raise PosetError(f"parts {parts} are not weakly increasing")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "m", len(parts))

    def leq(self, other: "Partition") -> bool:
        if (self.m, self.n) != (other.m, other.n):
            raise PosetError("partitions live in different lattices")
        return all(x <= y for x, y in zip(self.parts, other.parts))

    def conjugate(self) -> "Partition":
        """Transpose inside the ``m x n`` box, an isomorphism L(m,n) -> L(n,m)."""
        cols = [sum(1 for p in self.parts if p >= t) for t in range(1, self.n + 1)]
        return Partition(tuple(sorted(cols)), self.m)


def from_partition(p: Partition) -> Monomial:
    a = [0] * (p.n + 1)
    for part in p.parts:
        a[part] += 1
    return Monomial(a)


def to_partition(mu: Monomial) -> Partition:
    parts: list[int] = []
    for i, ai in enumerate(mu.a):
        parts.extend([i] * ai)
    return Partition(tuple(parts), mu.n)


def weight(mu: Monomial) -> int:
    n = mu.n
    return sum(ai * (n - 2 * i) for i, ai in enumerate(mu.a))


def rank(mu: Monomial) -> int:
    return sum(i * ai for i, ai in enumerate(mu.a))


def _suffix_sums(a: Sequence[int]) -> list[int]:
    out = [0] * len(a)
    acc = 0
    for i in range(len(a) - 1, -1, -1):
        acc += a[i]
        out[i] = acc
    return out


def leq(mu: Monomial, nu: Monomial) -> bool:
    """Suffix-sum comparison: ``sum_{i>=j} a_i <= sum_{i>=j} b_i`` for ``1 <= j <= n``."""
    if mu.n != nu.n:
        raise PosetError(f"dimension mismatch: n={mu.n} vs n={nu.n}")
    if mu.degree != nu.degree:
        raise PosetError(f"degree mismatch: {mu.degree} vs {nu.degree}")
    su, sv = _suffix_sums(mu.a), _suffix_sums(nu.a)
    return all(su[j] <= sv[j] for j in range(1, mu.n + 1))


def apply_color(mu: Monomial, color: int) -> Monomial:
    """Move one unit from slot ``color - 1`` to slot ``color``."""
    if not 1 <= color <= mu.n:
        raise IllegalMove(f"color {color} outside [1, {mu.n}]")
    if mu.a[color - 1] == 0:
        raise IllegalMove(f"slot {color - 1} of {list(mu.a)} is empty")
    a = list(mu.a)
    a[color - 1] -= 1
    a[color] += 1
    return Monomial(a)


def unapply_color(mu: Monomial, color: int) -> Monomial:
    """Inverse of :func:`apply_color`."""
    if not 1 <= color <= mu.n:
        raise IllegalMove(f"color {color} outside [1, {mu.n}]")
    if mu.a[color] == 0:
        raise IllegalMove(f"slot {color} of {list(mu.a)} is empty")
    a = list(mu.a)
    a[color] -= 1
    a[color - 1] += 1
    return Monomial(a)


def color_between(upper: Monomial, lower: Monomial) -> int | None:
    """Color ``c`` with ``apply_color(upper, c) == lower``, or None."""
    if upper.n != lower.n:
        return None
    diff = [y - x for x, y in zip(upper.a, lower.a)]
    nonzero = [i for i, d in enumerate(diff) if d]
    if len(nonzero) == 2 and nonzero[1] == nonzero[0] + 1:
        i = nonzero[0]
        if diff[i] == -1 and diff[i + 1] == 1:
            return i + 1
    return None


def tau(mu: Monomial) -> Monomial:
    """The involution ``z_i -> z_{n-i}``."""
    return Monomial(reversed(mu.a))


def shift_up(mu: Monomial, by: int = 2) -> Monomial:
    """``z_i -> z_{i+by}`` into a ring with ``by`` more variables."""
    return Monomial((0,) * by + mu.a)


def enumerate_monomials(n: int, m: int) -> Iterator[Monomial]:
    """All degree-``m`` monomials in ``n+1`` variables, lexicographically descending.

    Lexicographic order here is on exponent vectors read from ``a_0``; the
    sequence starts at ``z_0^m`` and ends at ``z_n^m``.
    """
    if n < 0 or m < 0:
        raise PosetError("n and m must be nonnegative")

    def rec(slot: int, left: int) -> Iterator[tuple[int, ...]]:
        if slot == n:
            yield (left,)
            return
        for x in range(left, -1, -1):
            for rest in rec(slot + 1, left - x):
                yield (x,) + rest

    for a in rec(0, m):
        yield Monomial(a)


def enumerate_partitions(m: int, n: int) -> Iterator[Partition]:
    for parts in combinations_with_replacement(range(n + 1), m):
        yield Partition(parts, n)


def hasse_edges(
    n: int, m: int, cap: int | None = None
) -> Iterator[tuple[Monomial, Monomial, int]]:
    """Colored Hasse edges ``(upper, lower, color)``; ``upper`` has the larger weight."""
    check_size(n, m, cap)
    for mu in enumerate_monomials(n, m):
        for c in range(1, n + 1):
            if mu.a[c - 1] > 0:
                yield mu, apply_color(mu, c), c


def parse_monomial(text: str | Iterable[int], n: int | None = None) -> Monomial:
    """Parse ``"1,1,0"`` or ``"[1,1,0]"`` (or an int sequence) into a Monomial."""
    if isinstance(text, str):
        body = text.strip().strip("[]()")
        try:
            values = [int(x) for x in body.split(",") if x.strip()]
        except ValueError:
            raise PosetError(f"cannot parse monomial {text!r}") from None
    else:
        values = [int(x) for x in text]
    mu = Monomial(values)
    if n is not None and mu.n != n:
        raise PosetError(f"monomial {values} has {len(values)} entries, expected {n + 1}")
    return mu
