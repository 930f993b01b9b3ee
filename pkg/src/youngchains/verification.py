"""Independent checkers for chains, chain families and rank statistics.

Nothing here trusts a producer: cover relations are re-derived from the
suffix-sum order and ranks, colors from suffix sums, and signatures from
the component-minimum oracle rather than the dynamic program.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .core_poset import Monomial, PosetError, SizeCapExceeded, enumerate_monomials, leq, rank, weight
from .tropical import f_oracle

DEFAULT_SPERNER_CAP = 2000


@lru_cache(maxsize=1 << 16)
def _oracle_signature(a: tuple[int, ...]) -> tuple[int, ...]:
    mu = Monomial(a)
    k = mu.n // 2
    f = [f_oracle(mu, r) for r in range(k + 1)] + [0, 0]
    return tuple(f[r] - 2 * f[r + 1] + f[r + 2] for r in range(k + 1))


def oracle_signature(mu: Monomial) -> tuple[int, ...]:
    return _oracle_signature(mu.a)


def oracle_level_set(n: int, d: Sequence[int]) -> frozenset[Monomial]:
    m = sum(dj * (j + 1) for j, dj in enumerate(d))
    d = tuple(d)
    return frozenset(mu for mu in enumerate_monomials(n, m) if oracle_signature(mu) == d)


def _suffix(a: tuple[int, ...]) -> list[int]:
    out, acc = [], 0
    for x in reversed(a):
        acc += x
        out.append(acc)
    return out[::-1]


def cover_color(lower_rank: Monomial, upper_rank: Monomial) -> int | None:
    """Color of the cover ``lower_rank < upper_rank`` in rank, or None if not a cover.

    ``lower_rank`` is the element of larger weight.  A cover raises exactly
    one suffix sum by one, and its index is the color.
    """
    if lower_rank.n != upper_rank.n or lower_rank.degree != upper_rank.degree:
        return None
    if not leq(lower_rank, upper_rank) or rank(upper_rank) != rank(lower_rank) + 1:
        return None
    sx, sy = _suffix(lower_rank.a), _suffix(upper_rank.a)
    changed = [j for j in range(1, lower_rank.n + 1) if sy[j] != sx[j]]
    return changed[0] if len(changed) == 1 else None


@dataclass
class ChainReport:
    length: int
    saturated: bool
    monotonic: bool
    signature_constant: bool
    symmetric: bool
    colors: list[int]
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.saturated and self.monotonic and self.signature_constant

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "saturated": self.saturated,
            "monotonic": self.monotonic,
            "signature_constant": self.signature_constant,
            "symmetric": self.symmetric,
            "colors": self.colors,
            "problems": self.problems,
        }


def _elements(chain) -> list[Monomial]:
    return list(getattr(chain, "elements", chain))


def check_chain(chain, ambient: Sequence[int] | None = None) -> ChainReport:
    """Check a weight-descending chain.

    ``ambient`` is the signature every element should carry; when omitted
    the first element's signature is used.
    """
    elems = _elements(chain)
    problems: list[str] = []
    colors: list[int] = []
    saturated = True
    for x, y in zip(elems, elems[1:]):
        c = cover_color(x, y)
        if c is None:
            saturated = False
            problems.append(f"{list(x.a)} -> {list(y.a)} is not a cover")
        else:
            colors.append(c)
    monotonic = saturated and all(c1 <= c2 for c1, c2 in zip(colors, colors[1:]))
    if saturated and not monotonic:
        problems.append(f"colors {colors} not weakly increasing")
    if elems:
        target = tuple(ambient) if ambient is not None else oracle_signature(elems[0])
        sig_ok = all(oracle_signature(mu) == target for mu in elems)
        if not sig_ok:
            problems.append(f"signature drifts from {list(target)}")
        symmetric = weight(elems[0]) == -weight(elems[-1])
    else:
        sig_ok, symmetric = True, True
    return ChainReport(len(elems), saturated, monotonic, sig_ok, symmetric, colors, problems)


@dataclass
class FamilyReport:
    kind: str
    union_ok: bool
    disjoint: bool
    all_saturated: bool
    all_monotonic: bool
    all_symmetric: bool
    signature_constant: bool
    chain_count: int
    element_count: int
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        base = self.union_ok and self.all_saturated and self.signature_constant
        if self.kind == "cover":
            return base
        if self.kind == "partition":
            return base and self.disjoint
        if self.kind == "symmetric-decomposition":
            return base and self.disjoint and self.all_symmetric
        return False

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "union": self.union_ok,
            "disjoint": self.disjoint,
            "saturated": self.all_saturated,
            "monotonic": self.all_monotonic,
            "symmetric": self.all_symmetric,
            "signature_constant": self.signature_constant,
            "chains": self.chain_count,
            "elements": self.element_count,
            "problems": self.problems[:20],
        }


def check_family(
    chains: Iterable,
    kind: str,
    n: int,
    signature: Sequence[int] | None = None,
    members: Iterable[Monomial] | None = None,
    check_signature: bool = True,
) -> FamilyReport:
    """Verify that ``chains`` is a cover / partition / symmetric decomposition.

    The ground set is ``members`` if given, else the oracle level set of
    ``signature``; one of the two is required.
    """
    if kind not in ("cover", "partition", "symmetric-decomposition"):
        raise PosetError(f"unknown family kind {kind!r}")
    chain_lists = [_elements(c) for c in chains]
    if members is not None:
        ground = frozenset(members)
    elif signature is not None:
        ground = oracle_level_set(n, signature)
    else:
        raise PosetError("check_family needs a signature or an explicit ground set")
    problems: list[str] = []
    seen = Counter(mu for elems in chain_lists for mu in elems)
    union = frozenset(seen)
    union_ok = union == ground
    if not union_ok:
        missing = sorted(ground - union)[:5]
        extra = sorted(union - ground)[:5]
        if missing:
            problems.append(f"uncovered: {[list(m.a) for m in missing]}")
        if extra:
            problems.append(f"outside ground set: {[list(m.a) for m in extra]}")
    repeated = [mu for mu, c in seen.items() if c > 1]
    disjoint = not repeated
    if not disjoint and kind != "cover":
        problems.append(f"{len(repeated)} elements in several chains, e.g. {list(repeated[0].a)}")
    saturated = monotonic = symmetric = sig_ok = True
    for elems in chain_lists:
        rep = check_chain(elems, signature)
        saturated &= rep.saturated
        monotonic &= rep.monotonic
        symmetric &= rep.symmetric
        if check_signature:
            sig_ok &= rep.signature_constant
        if rep.problems and (check_signature or not rep.saturated):
            problems.extend(rep.problems[:2])
        if kind == "symmetric-decomposition" and not rep.symmetric:
            problems.append(
                f"asymmetric chain {list(elems[0].a)} .. {list(elems[-1].a)}"
            )
    return FamilyReport(
        kind,
        union_ok,
        disjoint,
        saturated,
        monotonic,
        symmetric,
        sig_ok,
        len(chain_lists),
        sum(len(e) for e in chain_lists),
        problems,
    )


# --- rank statistics ----------------------------------------------------------


@dataclass
class RankProfile:
    sizes: dict[int, int]  # weight -> count

    @property
    def total(self) -> int:
        return sum(self.sizes.values())

    def levels(self) -> list[int]:
        """Sizes from the highest weight down, parity-consistent steps of 2."""
        if not self.sizes:
            return []
        hi, lo = max(self.sizes), min(self.sizes)
        return [self.sizes.get(w, 0) for w in range(hi, lo - 1, -2)]

    @property
    def symmetric(self) -> bool:
        return all(self.sizes.get(-w, 0) == c for w, c in self.sizes.items())

    @property
    def unimodal(self) -> bool:
        seq = self.levels()
        i = 0
        while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
            i += 1
        while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
            i += 1
        return i == len(seq) - 1 or not seq

    @property
    def max_level(self) -> int:
        return max(self.sizes.values(), default=0)

    def to_json(self) -> dict:
        return {
            "levels": self.levels(),
            "total": self.total,
            "symmetric": self.symmetric,
            "unimodal": self.unimodal,
        }


def rank_profile(monomials: Iterable[Monomial]) -> RankProfile:
    return RankProfile(dict(Counter(weight(mu) for mu in monomials)))


def gaussian_binomial(N: int, K: int) -> list[int]:
    """Coefficients of ``[N choose K]_q`` by the q-Pascal rule."""
    if K < 0 or K > N:
        return [0]
    # table[j] holds [i choose j]_q for the current i
    table: list[list[int]] = [[1]] + [[0] for _ in range(K)]
    for i in range(1, N + 1):
        new = [[1]]
        for j in range(1, K + 1):
            a = table[j - 1]
            b = [0] * j + table[j]  # q^j [i-1 choose j]
            size = max(len(a), len(b))
            new.append([
                (a[t] if t < len(a) else 0) + (b[t] if t < len(b) else 0)
                for t in range(size)
            ])
        table = new
    coeffs = table[K]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass
class SpernerReport:
    size: int
    max_antichain: int
    max_level: int

    @property
    def ok(self) -> bool:
        return self.max_antichain == self.max_level

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "max_antichain": self.max_antichain,
            "max_level": self.max_level,
            "sperner": self.ok,
        }


def max_antichain_size(monomials: Sequence[Monomial]) -> int:
    """Width of the poset via Dilworth: ``N - (maximum matching in the comparability graph)``."""
    N = len(monomials)
    if N == 0:
        return 0
    suffix = np.array([np.cumsum(mu.a[::-1])[::-1] for mu in monomials], dtype=np.int64)
    below = (suffix[:, None, :] <= suffix[None, :, :]).all(axis=2)
    np.fill_diagonal(below, False)
    match = maximum_bipartite_matching(csr_matrix(below.astype(np.int8)), perm_type="column")
    return N - int((match >= 0).sum())


def sperner_check(monomials: Iterable[Monomial], cap: int = DEFAULT_SPERNER_CAP) -> SpernerReport:
    """Compare the largest antichain with the largest weight level."""
    ms = list(monomials)
    if len(ms) > cap:
        raise SizeCapExceeded(f"Sperner check on {len(ms)} elements exceeds cap {cap}")
    if ms:
        n, m = ms[0].n, ms[0].degree
        if any(mu.n != n or mu.degree != m for mu in ms):
            raise PosetError("Sperner check needs a single degree slice")
    return SpernerReport(len(ms), max_antichain_size(ms), rank_profile(ms).max_level)
