"""Canonical (lexicographically minimal) maximal factorization of a monomial."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .core_poset import Monomial
from .tropical import deg_vector, f_vector


class TableauCensusError(AssertionError):
    """Greedy extraction disagreed with the tropical degree vector."""


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    @property
    def census(self) -> Counter:
        return Counter(len(row) for row in self.rows)

    def census_vector(self, k: int) -> tuple[int, ...]:
        c = self.census
        return tuple(c.get(r + 1, 0) for r in range(k + 1))

    def boxes_beyond(self, r: int) -> int:
        """Number of boxes outside the first ``r`` columns."""
        return sum(max(len(row) - r, 0) for row in self.rows)

    def to_json(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _smallest_chain(counts: list[int], length: int) -> tuple[int, ...] | None:
    """Lexicographically smallest gap->=2 chain of ``length`` available indices."""
    n = len(counts) - 1

    def rec(start: int, left: int) -> tuple[int, ...] | None:
        if left == 0:
            return ()
        for i in range(start, n - 2 * (left - 1) + 1):
            if counts[i] > 0:
                rest = rec(i + 2, left - 1)
                if rest is not None:
                    return (i,) + rest
        return None

    return rec(0, length)


def canonical_tableau(mu: Monomial) -> Tableau:
    """Factor out lex-smallest generators of ``I_{n,r}``, ``r`` from ``k`` down to 0.

    Raises TableauCensusError if the row-length census differs from
    ``deg_vector(mu)``.
    """
    counts = list(mu.a)
    k = mu.n // 2
    rows: list[tuple[int, ...]] = []
    for r in range(k, -1, -1):
        while True:
            chain = _smallest_chain(counts, r + 1)
            if chain is None:
                break
            for i in chain:
                counts[i] -= 1
            rows.append(chain)
    tab = Tableau(tuple(rows))
    expected = deg_vector(mu)
    if tab.census_vector(k) != expected:
        raise TableauCensusError(
            f"greedy census {tab.census_vector(k)} != deg vector {expected} for {list(mu.a)}"
        )
    return tab


def _is_gap_chain(row: tuple[int, ...]) -> bool:
    return all(y - x >= 2 for x, y in zip(row, row[1:]))


def verify_tableau(mu: Monomial, tab: Tableau) -> bool:
    rows = tab.rows
    if any(len(row) == 0 for row in rows):
        return False
    if any(len(x) < len(y) for x, y in zip(rows, rows[1:])):
        return False
    if not all(_is_gap_chain(row) for row in rows):
        return False
    if any(i < 0 or i > mu.n for row in rows for i in row):
        return False
    entries = Counter(i for row in rows for i in row)
    if entries != Counter({i: ai for i, ai in enumerate(mu.a) if ai}):
        return False
    # minimality: each entry x has x or x-1 in every earlier row
    for t, row in enumerate(rows):
        for x in row:
            for prev in rows[:t]:
                if x not in prev and x - 1 not in prev:
                    return False
    k = mu.n // 2
    if any(len(row) > k + 1 for row in rows):
        return False
    if tab.census_vector(k) != deg_vector(mu):
        return False
    f = f_vector(mu)
    return all(tab.boxes_beyond(r) == f[r] for r in range(k + 1))
