"""Tropical level sets ``Q_n(d_0, ..., d_k)`` and their structure maps."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core_poset import (
    Monomial,
    Partition,
    PosetError,
    check_size,
    enumerate_monomials,
    from_partition,
    leq,
    rank,
    tau,
    weight,
)
from .factorization import canonical_tableau
from .tropical import deg_vector


class IsomorphismError(RuntimeError):
    """A structure map failed its runtime bijectivity/order check."""


@dataclass(frozen=True)
class Signature:
    n: int
    d: tuple[int, ...]

    def __post_init__(self) -> None:
        d = tuple(int(x) for x in self.d)
        if self.n < 0:
            raise PosetError("n must be nonnegative")
        if len(d) != self.n // 2 + 1:
            raise PosetError(f"signature for n={self.n} needs {self.n // 2 + 1} entries, got {len(d)}")
        if any(x < 0 for x in d):
            raise PosetError(f"negative entry in signature {d}")
        object.__setattr__(self, "d", d)

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def degree(self) -> int:
        return sum(dj * (j + 1) for j, dj in enumerate(self.d))

    @property
    def total(self) -> int:
        """``d = d_0 + ... + d_k``, the exponent used by the embeddings."""
        return sum(self.d)

    def below(self) -> "Signature":
        """``(d_1, ..., d_k)`` over ``n - 2``."""
        if self.n < 2:
            raise PosetError(f"no level below n={self.n}")
        return Signature(self.n - 2, self.d[1:])

    def f_values(self) -> tuple[int, ...]:
        """``f_{n,r} = sum_{j>=r} (j+1-r) d_j`` on the level set."""
        return tuple(
            sum((j + 1 - r) * self.d[j] for j in range(r, self.k + 1))
            for r in range(self.k + 1)
        )

    def nonzero_blocks(self) -> list[int]:
        return [j for j, dj in enumerate(self.d) if dj]

    def stitch_bound(self) -> int:
        """Right-hand side ``sum_{j>=1} d_j (n-2j) j`` of the stitching inequality."""
        return sum(self.d[j] * (self.n - 2 * j) * j for j in range(1, self.k + 1))

    def satisfies_stitch_inequality(self) -> bool:
        return 1 + 2 * self.d[0] >= self.stitch_bound()

    def to_json(self) -> list[int]:
        return list(self.d)


def signature(mu: Monomial) -> Signature:
    return Signature(mu.n, deg_vector(mu))


def signatures(n: int, m: int) -> list[Signature]:
    """All signatures over ``n`` whose level sets sit in degree ``m``."""
    k = n // 2
    out: list[Signature] = []

    def rec(j: int, left: int, acc: tuple[int, ...]) -> None:
        if j < 0:
            if left == 0:
                out.append(Signature(n, acc))
            return
        for dj in range(left // (j + 1), -1, -1):
            rec(j - 1, left - dj * (j + 1), (dj,) + acc)

    rec(k, m, ())
    return sorted(out, key=lambda s: s.d, reverse=True)


def member_order(mu: Monomial) -> tuple:
    """Weight descending, then lexicographic."""
    return (-weight(mu), mu.a)


@lru_cache(maxsize=256)
def slice_by_signature(n: int, m: int) -> dict[tuple[int, ...], tuple[Monomial, ...]]:
    """Partition ``A_n(m)`` by signature, members in :func:`member_order`."""
    check_size(n, m)
    groups: dict[tuple[int, ...], list[Monomial]] = defaultdict(list)
    for mu in enumerate_monomials(n, m):
        groups[deg_vector(mu)].append(mu)
    return {d: tuple(sorted(ms, key=member_order)) for d, ms in groups.items()}


@dataclass(frozen=True)
class LevelSet:
    signature: Signature
    members: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.members)

    def __contains__(self, mu: object) -> bool:
        return mu in self.member_set

    @property
    def member_set(self) -> frozenset[Monomial]:
        return frozenset(self.members)

    def to_json(self) -> dict:
        mx, mn = extremes(self.signature)
        return {
            "n": self.signature.n,
            "signature": self.signature.to_json(),
            "size": len(self.members),
            "members": [mu.to_json() for mu in self.members],
            "max": mx.to_json(),
            "min": mn.to_json(),
        }


def level_set(sig: Signature) -> LevelSet:
    members = slice_by_signature(sig.n, sig.degree).get(sig.d, ())
    return LevelSet(sig, members)


def highest_generator(n: int, r: int) -> Monomial:
    """``z_0 z_2 ... z_{2r}``."""
    a = [0] * (n + 1)
    for j in range(r + 1):
        a[2 * j] += 1
    return Monomial(a)


def extremes(sig: Signature) -> tuple[Monomial, Monomial]:
    """Unique highest- and lowest-weight members of ``Q_n(sig)``."""
    a = [0] * (sig.n + 1)
    for r, dr in enumerate(sig.d):
        for j in range(r + 1):
            a[2 * j] += dr
    top = Monomial(a)
    return top, tau(top)


def _check_below(sig: Signature, mu0: Monomial) -> None:
    if mu0.n != sig.n - 2:
        raise PosetError(f"{list(mu0.a)} is not over n={sig.n - 2}")
    if deg_vector(mu0) != sig.d[1:]:
        raise PosetError(
            f"{list(mu0.a)} has signature {deg_vector(mu0)}, expected {sig.d[1:]}"
        )


def embed_low(sig: Signature, mu0: Monomial) -> Monomial:
    """Multiply by ``z_n^d`` (after padding ``mu0`` to ``n+1`` slots)."""
    _check_below(sig, mu0)
    return Monomial(mu0.a + (0, sig.total))


def embed_high(sig: Signature, mu0: Monomial) -> Monomial:
    """``z_0^d`` times ``mu0`` with every index shifted up by two."""
    _check_below(sig, mu0)
    return Monomial((sig.total, 0) + mu0.a)


def pair_max(mu: Monomial) -> int:
    return max(x + y for x, y in zip(mu.a, mu.a[1:]))


def image_membership(mu: Monomial, side: str) -> bool:
    """``high``: ``a_0`` equals the max adjacent-pair sum; ``low``: ``a_n`` does."""
    if mu.n < 1:
        raise PosetError("pair sums need n >= 1")
    if side == "high":
        return mu.a[0] == pair_max(mu)
    if side == "low":
        return mu.a[-1] == pair_max(mu)
    raise PosetError(f"side must be 'high' or 'low', got {side!r}")


def preimage(mu: Monomial, side: str) -> Monomial:
    """Inverse of the embedding on its image."""
    if side == "high":
        return Monomial(mu.a[2:])
    if side == "low":
        return Monomial(mu.a[:-2])
    raise PosetError(f"side must be 'high' or 'low', got {side!r}")


# --- single-block isomorphisms -------------------------------------------------


def generator_to_partition(gen: tuple[int, ...], n: int) -> Partition:
    """``(i_0, ..., i_r) -> (i_0, i_1 - 2, ..., i_r - 2r)`` in ``L(r+1, n-2r)``."""
    r = len(gen) - 1
    return Partition(tuple(i - 2 * j for j, i in enumerate(gen)), n - 2 * r)


def _row_image(gen: tuple[int, ...], n: int) -> Monomial:
    # L(r+1, n-2r) -> L(n-2r, r+1) ~ A_{r+1}(n-2r)
    return from_partition(generator_to_partition(gen, n).conjugate())


@dataclass(frozen=True)
class BlockIsomorphism:
    """Verified order isomorphism ``Q_n(0,..,d_r,..,0) -> A_{r+1}(d_r (n-2r))``."""

    signature: Signature
    r: int
    forward: dict[Monomial, Monomial]

    @property
    def target(self) -> tuple[int, int]:
        return self.r + 1, self.signature.d[self.r] * (self.signature.n - 2 * self.r)

    def backward(self) -> dict[Monomial, Monomial]:
        return {v: k for k, v in self.forward.items()}


def single_block_iso(sig: Signature) -> BlockIsomorphism:
    """Tableau-row map onto ``A_{r+1}(d_r (n-2r))``, checked before it is returned.

    Each canonical-tableau row is sent through ``generator_to_partition``,
    conjugated into ``A_{r+1}(n-2r)``, and the row images are multiplied.
    The result must be a bijection that preserves order in both directions
    and shifts rank by a constant; otherwise IsomorphismError is raised.
    """
    blocks = sig.nonzero_blocks()
    if len(blocks) != 1:
        raise PosetError(f"signature {sig.d} does not have exactly one nonzero block")
    r = blocks[0]
    dr = sig.d[r]
    n = sig.n
    tn, tm = r + 1, dr * (n - 2 * r)
    members = level_set(sig).members
    fwd: dict[Monomial, Monomial] = {}
    for mu in members:
        img = Monomial((0,) * (tn + 1))
        for row in canonical_tableau(mu).rows:
            img = img * _row_image(row, n)
        fwd[mu] = img
    target = set(enumerate_monomials(tn, tm))
    if len(set(fwd.values())) != len(members) or set(fwd.values()) != target:
        raise IsomorphismError(
            f"Q_{n}{sig.d}: tableau map is not a bijection onto A_{tn}({tm})"
        )
    top = members[0]
    shift = rank(fwd[top]) - rank(top)
    for mu in members:
        if rank(fwd[mu]) - rank(mu) != shift:
            raise IsomorphismError(f"Q_{n}{sig.d}: rank shift not constant at {list(mu.a)}")
    for mu in members:
        for nu in members:
            if leq(mu, nu) != leq(fwd[mu], fwd[nu]):
                raise IsomorphismError(
                    f"Q_{n}{sig.d}: order not preserved at {list(mu.a)}, {list(nu.a)}"
                )
    return BlockIsomorphism(sig, r, fwd)
