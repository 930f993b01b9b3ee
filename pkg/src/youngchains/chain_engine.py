"""Raising/lowering algorithm, transversal chains and symmetric chain decompositions."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .core_poset import Monomial, PosetError, color_between, weight
from .level_sets import (
    IsomorphismError,
    Signature,
    embed_high,
    embed_low,
    highest_generator,
    level_set,
    member_order,
    pair_max,
    signatures,
    single_block_iso,
)
from .verification import check_family

log = logging.getLogger(__name__)

COVER = "cover"
PARTITION = "partition"
SYMMETRIC = "symmetric-decomposition"


class ChainError(RuntimeError):
    """A produced chain or family failed verification."""


class StitchError(ChainError):
    pass


class InequalityError(PosetError):
    pass


@dataclass(frozen=True)
class Chain:
    """Weight-descending saturated chain; colors are read from top to bottom."""

    elements: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))

    @property
    def colors(self) -> tuple[int, ...]:
        out = []
        for x, y in zip(self.elements, self.elements[1:]):
            c = color_between(x, y)
            if c is None:
                raise ChainError(f"{list(x.a)} -> {list(y.a)} is not a color move")
            out.append(c)
        return tuple(out)

    @property
    def monotonic(self) -> bool:
        cs = self.colors
        return all(x <= y for x, y in zip(cs, cs[1:]))

    @property
    def top(self) -> Monomial:
        return self.elements[0]

    @property
    def bottom(self) -> Monomial:
        return self.elements[-1]

    @property
    def symmetric(self) -> bool:
        return weight(self.top) == -weight(self.bottom)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def to_json(self) -> dict:
        return {
            "elements": [mu.to_json() for mu in self.elements],
            "colors": list(self.colors),
            "monotonic": self.monotonic,
        }


@dataclass(frozen=True)
class ChainFamily:
    signature: Signature
    chains: tuple[Chain, ...]
    kind: str

    def elements(self) -> list[Monomial]:
        return [mu for c in self.chains for mu in c]

    def verify(self):
        return check_family(self.chains, self.kind, self.signature.n, self.signature.d)

    def to_json(self) -> dict:
        return {
            "n": self.signature.n,
            "signature": self.signature.to_json(),
            "kind": self.kind,
            "chains": [c.to_json() for c in self.chains],
        }


@dataclass(frozen=True)
class Unavailable:
    signature: Signature
    reason: str

    def to_json(self) -> dict:
        return {"n": self.signature.n, "signature": self.signature.to_json(), "unavailable": self.reason}


# --- the raising / lowering algorithm ------------------------------------------


def maximal_pairs(mu: Monomial) -> list[int]:
    """Indices ``i`` with ``a_i + a_{i+1}`` maximal."""
    if mu.n < 1:
        raise PosetError("maximal pairs need n >= 1")
    best = pair_max(mu)
    return [i for i in range(mu.n) if mu.a[i] + mu.a[i + 1] == best]


def _check_start(mu: Monomial, start: int) -> None:
    if start not in maximal_pairs(mu):
        raise PosetError(f"pair {start} is not a maximal pair of {list(mu.a)}")


def right_moving(mu: Monomial, start: int) -> Chain:
    """Lower ``mu`` from the maximal pair ``(start, start+1)`` to the low image."""
    _check_start(mu, start)
    n = mu.n
    a = list(mu.a)
    out = [mu]
    i = start
    while True:
        moves = a[n - 1] if i == n - 1 else a[i] - a[i + 2]
        if moves < 0:
            raise ChainError(f"negative move count at pair {i} of {a}")
        for _ in range(moves):
            a[i] -= 1
            a[i + 1] += 1
            out.append(Monomial(a))
        if i == n - 1:
            return Chain(out)
        i += 1


def left_moving(mu: Monomial, start: int) -> Chain:
    """Raise ``mu`` from the maximal pair ``(start, start+1)`` to the high image.

    The result is returned weight-descending, so it ends at ``mu``.
    """
    _check_start(mu, start)
    a = list(mu.a)
    out = [mu]
    i = start + 1
    while True:
        moves = a[1] if i == 1 else a[i] - a[i - 2]
        if moves < 0:
            raise ChainError(f"negative move count at pair {i - 1} of {a}")
        for _ in range(moves):
            a[i] -= 1
            a[i - 1] += 1
            out.append(Monomial(a))
        if i == 1:
            return Chain(reversed(out))
        i -= 1


def transversal(mu: Monomial, side: str) -> Chain:
    """Left (``side='left'``) or right transversal chain through ``mu``."""
    if side not in ("left", "right"):
        raise PosetError(f"side must be 'left' or 'right', got {side!r}")
    if mu.n == 0:
        return Chain((mu,))
    pairs = maximal_pairs(mu)
    start = pairs[0] if side == "left" else pairs[-1]
    up = left_moving(mu, start)
    down = right_moving(mu, start)
    return Chain(up.elements + down.elements[1:])


def _chain_key(c: Chain) -> tuple:
    return (member_order(c.top), tuple(mu.a for mu in c.elements))


def transversal_family(sig: Signature, verify: bool = True) -> ChainFamily:
    """All left and right transversal chains of ``Q_n(sig)``, deduplicated.

    A cover in general and a partition when ``d_0 > 0``.
    """
    return _transversal_family(sig, verify)


@lru_cache(maxsize=1024)
def _transversal_family(sig: Signature, verify: bool) -> ChainFamily:
    chains: dict[tuple[Monomial, ...], Chain] = {}
    for mu in level_set(sig):
        for side in ("left", "right"):
            c = transversal(mu, side)
            chains.setdefault(c.elements, c)
    kind = PARTITION if sig.d[0] > 0 else COVER
    fam = ChainFamily(sig, tuple(sorted(chains.values(), key=_chain_key)), kind)
    if verify:
        rep = fam.verify()
        if not (rep.ok and rep.all_monotonic):
            raise ChainError(f"transversal family of Q_{sig.n}{sig.d} failed: {rep.problems[:3]}")
    return fam


# --- rectangles and stitching --------------------------------------------------


@dataclass
class Rectangle:
    """Transversal rows hanging off one base chain of the level below.

    ``rows[s][t]`` is the element at depth ``t`` of the transversal chain whose
    top is ``embed_high`` of the ``s``-th base element.  Moving one step in
    either coordinate lowers the weight by two.
    """

    base: Chain
    rows: list[tuple[Monomial, ...]]
    _cross: dict[tuple[int, int], bool] = field(default_factory=dict, repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        """Edge counts ``(p, q)``: base length and transversal length."""
        return len(self.rows) - 1, len(self.rows[0]) - 1

    def cross_ok(self, depth: int, lo: int = 0, hi: int | None = None) -> bool:
        """Whether row ``s`` covers row ``s+1`` at ``depth`` for ``lo <= s < hi``."""
        hi = len(self.rows) - 1 if hi is None else hi
        for s in range(lo, hi):
            key = (s, depth)
            if key not in self._cross:
                self._cross[key] = color_between(self.rows[s][depth], self.rows[s + 1][depth]) is not None
            if not self._cross[key]:
                return False
        return True

    def peel(self) -> list[Chain]:
        """Split into symmetric chains by peeling two boundary chains at a time.

        With the current window ``[a..b] x [c..e]`` one chain runs down row
        ``a`` and across depth ``e``; the other runs across depth ``c`` and
        down row ``b``.  Only the cross edges at depths ``c`` and ``e`` are
        used, so those are the only ones required to be genuine covers.
        """
        p, q = self.shape
        a, b, c, e = 0, p, 0, q
        out: list[Chain] = []
        while a <= b and c <= e:
            if a == b:
                out.append(Chain(self.rows[a][c : e + 1]))
                break
            if c == e:
                self._require_cross(c, a, b)
                out.append(Chain(self.rows[s][c] for s in range(a, b + 1)))
                break
            self._require_cross(c, a + 1, b)
            self._require_cross(e, a, b)
            first = list(self.rows[a][c : e + 1]) + [self.rows[s][e] for s in range(a + 1, b + 1)]
            second = [self.rows[s][c] for s in range(a + 1, b + 1)] + list(self.rows[b][c + 1 : e])
            out.append(Chain(first))
            out.append(Chain(second))
            a, b, c, e = a + 1, b - 1, c + 1, e - 1
        return out

    def _require_cross(self, depth: int, lo: int, hi: int) -> None:
        if not self.cross_ok(depth, lo, hi):
            raise StitchError(
                f"rows {lo}..{hi} of the rectangle over {list(self.base.top.a)}"
                f" are not linked by covers at depth {depth}"
            )


def build_rectangles(sig: Signature, below: ChainFamily) -> list[Rectangle]:
    """Group the transversal partition of ``Q_n(sig)`` by base chain and check grid laws."""
    fam = transversal_family(sig)
    by_top = {c.top: c for c in fam.chains}
    rects: list[Rectangle] = []
    length = None
    for base in below.chains:
        rows = []
        for mu0 in base:
            row = by_top.get(embed_high(sig, mu0))
            if row is None:
                raise StitchError(f"no transversal chain starts at embed_high({list(mu0.a)})")
            if row.bottom != embed_low(sig, mu0):
                raise StitchError(f"transversal from {list(row.top.a)} does not end at embed_low")
            if length is None:
                length = len(row)
            elif len(row) != length:
                raise StitchError("transversal rows have unequal lengths")
            rows.append(row.elements)
        for s in range(len(rows) - 1):
            if weight(rows[s][0]) - weight(rows[s + 1][0]) != 2:
                raise StitchError("row tops do not descend in weight steps of 2")
        rects.append(Rectangle(base, rows))
    used = sum(len(r.rows) for r in rects)
    if used != len(fam.chains):
        raise StitchError(f"{used} rows assigned but the family has {len(fam.chains)} chains")
    return rects


def stitch_rectangles(
    sig: Signature, below: ChainFamily, require_inequality: bool = True
) -> ChainFamily:
    """Symmetric chain decomposition of ``Q_n(sig)`` from one of ``Q_{n-2}(d_1..d_k)``.

    With ``require_inequality`` the stitching inequality
    ``1 + 2 d_0 >= sum_{j>=1} d_j (n-2j) j`` is enforced; without it the
    peeling is attempted anyway and succeeds whenever the cross edges it
    needs turn out to exist.
    """
    if sig.n < 2 or sig.d[0] == 0:
        raise PosetError(f"stitching needs n >= 2 and d_0 > 0, got Q_{sig.n}{sig.d}")
    if require_inequality and not sig.satisfies_stitch_inequality():
        raise InequalityError(
            f"Q_{sig.n}{sig.d}: 1 + 2*{sig.d[0]} < {sig.stitch_bound()}"
        )
    if below.signature != sig.below() or below.kind != SYMMETRIC:
        raise PosetError("below-family must be a symmetric decomposition of Q_{n-2}(d_1..d_k)")
    chains: list[Chain] = []
    for rect in build_rectangles(sig, below):
        chains.extend(rect.peel())
    return _verified(sig, chains, "stitched")


def _verified(sig: Signature, chains, how: str) -> ChainFamily:
    fam = ChainFamily(sig, tuple(sorted(chains, key=_chain_key)), SYMMETRIC)
    rep = fam.verify()
    if not rep.ok:
        raise StitchError(f"{how} family of Q_{sig.n}{sig.d} failed the SCD check: {rep.problems[:3]}")
    return fam


# --- recursive synthesis -------------------------------------------------------


def _as_single_chain(sig: Signature) -> ChainFamily | None:
    members = level_set(sig).members
    if not members:
        return ChainFamily(sig, (), SYMMETRIC)
    c = Chain(members)
    if all(color_between(x, y) is not None for x, y in zip(members, members[1:])) and c.symmetric:
        return ChainFamily(sig, (c,), SYMMETRIC)
    return None


def slice_scd(n: int, m: int) -> list[Chain] | None:
    """SCD of all of ``A_n(m)`` as the union of per-level-set SCDs, if every one exists."""
    chains: list[Chain] = []
    for s in signatures(n, m):
        fam = scd(s)
        if isinstance(fam, Unavailable):
            return None
        chains.extend(fam.chains)
    return chains


def _via_block_iso(sig: Signature) -> ChainFamily:
    iso = single_block_iso(sig)
    tn, tm = iso.target
    target = slice_scd(tn, tm)
    if target is None:
        raise StitchError(f"A_{tn}({tm}) has no SCD available")
    back = iso.backward()
    chains = [Chain(back[mu] for mu in c) for c in target]
    return _verified(sig, chains, "block-isomorphism")


def _via_top_factor(sig: Signature) -> ChainFamily:
    """Even ``n`` with ``d_k > 0``: divide out ``(z_0 z_2 ... z_n)^{d_k}``."""
    k = sig.k
    rest = Signature(sig.n, sig.d[:k] + (0,))
    fam = scd(rest)
    if isinstance(fam, Unavailable):
        raise StitchError(f"Q_{rest.n}{rest.d} has no SCD available")
    factor = Monomial(x * sig.d[k] for x in highest_generator(sig.n, k).a)
    chains = [Chain(mu * factor for mu in c) for c in fam.chains]
    return _verified(sig, chains, "top-factor")


def scd(sig: Signature) -> ChainFamily | Unavailable:
    """Recursive symmetric chain decomposition of ``Q_n(sig)``, or Unavailable.

    Strategies, in order: the level set is itself a symmetric saturated chain;
    a single nonzero block transported from ``A_{r+1}(d_r (n-2r))``;
    stitching over the level below when ``d_0 > 0`` (first under the
    inequality, then by unconditional peeling); for even ``n`` dividing out
    the top block, which is a single monomial.
    """
    return _scd(sig)


@lru_cache(maxsize=4096)
def _scd(sig: Signature) -> ChainFamily | Unavailable:
    reasons: list[str] = []
    fam = _as_single_chain(sig)
    if fam is not None:
        return fam
    if sig.n <= 1:
        return Unavailable(sig, "level set of A_1 is not a chain")  # cannot happen
    if len(sig.nonzero_blocks()) == 1:
        try:
            return _via_block_iso(sig)
        except (IsomorphismError, StitchError) as exc:
            reasons.append(f"block isomorphism: {exc}")
    if sig.d[0] > 0:
        below = scd(sig.below())
        if isinstance(below, Unavailable):
            reasons.append(f"level below unavailable ({below.reason})")
        else:
            try:
                return stitch_rectangles(sig, below, require_inequality=sig.satisfies_stitch_inequality())
            except StitchError as exc:
                reasons.append(f"stitching: {exc}")
    if sig.n % 2 == 0 and sig.d[-1] > 0 and len(sig.nonzero_blocks()) > 1:
        try:
            return _via_top_factor(sig)
        except StitchError as exc:
            reasons.append(f"top factor: {exc}")
    if not reasons:
        reasons.append("no strategy applies")
    log.debug("Q_%d%s unavailable: %s", sig.n, sig.d, reasons)
    return Unavailable(sig, "; ".join(reasons))


@dataclass
class SplitReport:
    n: int
    m: int
    generic: list[Signature]
    singular: list[Signature]
    families: dict[tuple[int, ...], ChainFamily]
    reasons: dict[tuple[int, ...], str]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "generic": [s.to_json() for s in self.generic],
            "singular": [s.to_json() for s in self.singular],
            "families": [self.families[s.d].to_json() for s in self.generic + self.singular],
            "unavailable": {",".join(map(str, d)): r for d, r in self.reasons.items()},
        }


def split_generic(n: int, m: int) -> SplitReport:
    """Sort the level sets of ``A_n(m)`` by whether the recursive SCD succeeds.

    Generic signatures carry their SCD; singular ones carry the verified
    transversal cover.
    """
    generic: list[Signature] = []
    singular: list[Signature] = []
    families: dict[tuple[int, ...], ChainFamily] = {}
    reasons: dict[tuple[int, ...], str] = {}
    for s in signatures(n, m):
        fam = scd(s)
        if isinstance(fam, Unavailable):
            singular.append(s)
            reasons[s.d] = fam.reason
            families[s.d] = transversal_family(s)
        else:
            generic.append(s)
            families[s.d] = fam
    return SplitReport(n, m, generic, singular, families, reasons)
