"""Command-line interface.

JSON goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a verification fails, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from math import comb
from typing import Sequence

from . import chain_engine as ce
from .core_poset import (
    Monomial,
    PosetError,
    SizeCapExceeded,
    enumerate_monomials,
    hasse_edges,
    max_poset_size,
    parse_monomial,
    weight,
)
from .factorization import canonical_tableau
from .level_sets import (
    Signature,
    embed_low,
    image_membership,
    level_set,
    signature,
    signatures,
)
from .tropical import components, f_dp, generators, max_cover
from .verification import (
    DEFAULT_SPERNER_CAP,
    check_family,
    gaussian_binomial,
    rank_profile,
    sperner_check,
)

log = logging.getLogger("youngchains")

# fixed palette for DOT export, indexed by (color - 1) % 10
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    max_poset: int
    max_sperner: int = DEFAULT_SPERNER_CAP
    fmt: str = "json"

    def __post_init__(self) -> None:
        if self.max_poset <= 0 or self.max_sperner <= 0:
            raise UsageError("size caps must be positive")
        if self.fmt not in ("json", "dot", "text"):
            raise UsageError(f"unknown format {self.fmt!r}")


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _ints(text: str, flag: str) -> tuple[int, ...]:
    body = text.strip().strip("[]()")
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{flag}: cannot parse {text!r}") from None


def _read_input(path: str) -> dict | list:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--input: {exc}") from None


def _monomial(args) -> Monomial:
    n = getattr(args, "n", None)
    if getattr(args, "input", None):
        data = _read_input(args.input)
        if isinstance(data, dict):
            if "monomial" not in data:
                raise UsageError("--input: object has no 'monomial' entry")
            data = data["monomial"]
        try:
            return parse_monomial(data, n)
        except (PosetError, TypeError, ValueError) as exc:
            raise UsageError(f"--input: {exc}") from None
    if args.monomial is None:
        raise UsageError("--monomial (or --input) is required")
    try:
        return parse_monomial(args.monomial, n)
    except PosetError as exc:
        raise UsageError(f"--monomial: {exc}") from None


def _signature(args) -> Signature:
    n = args.n
    if getattr(args, "input", None):
        data = _read_input(args.input)
        d = data.get("signature") if isinstance(data, dict) else data
        if n is None and isinstance(data, dict):
            n = data.get("n")
    else:
        if args.signature is None:
            raise UsageError("--signature (or --input) is required")
        d = _ints(args.signature, "--signature")
    if n is None:
        raise UsageError("--n is required")
    try:
        return Signature(n, tuple(d))
    except (PosetError, TypeError) as exc:
        raise UsageError(f"--signature: {exc}") from None


def _check_slice(n: int, m: int, cfg: Config) -> None:
    if n < 0 or m < 0:
        raise UsageError("--n and --m must be nonnegative")
    if comb(n + m, n) > cfg.max_poset:
        raise UsageError(f"A_{n}({m}) has {comb(n + m, n)} elements, cap is {cfg.max_poset}")


# --- subcommands ---------------------------------------------------------------


def cmd_enumerate(args, cfg: Config) -> int:
    _check_slice(args.n, args.m, cfg)
    ms = [mu.to_json() for mu in enumerate_monomials(args.n, args.m)]
    print(dumps({"n": args.n, "m": args.m, "count": len(ms), "monomials": ms}))
    return 0


def cmd_signature(args, cfg: Config) -> int:
    mu = _monomial(args)
    print(dumps({"signature": signature(mu).to_json()}))
    return 0


def cmd_tropical(args, cfg: Config) -> int:
    mu = _monomial(args)
    if not 0 <= args.r <= mu.n // 2:
        raise UsageError(f"--r must lie in [0, {mu.n // 2}]")
    covered, facet = max_cover(mu.a, args.r)
    print(dumps({
        "n": mu.n,
        "r": args.r,
        "monomial": mu.to_json(),
        "f": f_dp(mu, args.r),
        "covered": covered,
        "facet": [[i, i + 1] for i in facet],
    }))
    return 0


def cmd_ideal(args, cfg: Config) -> int:
    if not 0 <= args.r <= args.n // 2:
        raise UsageError(f"--r must lie in [0, {args.n // 2}]")
    gens = [list(g) for g in generators(args.n, args.r)]
    comps = [list(c) for c in components(args.n, args.r)]
    if args.components and not args.generators:
        print(dumps(comps))
    elif args.generators and not args.components:
        print(dumps(gens))
    else:
        print(dumps({"n": args.n, "r": args.r, "generators": gens, "components": comps}))
    return 0


def cmd_tableau(args, cfg: Config) -> int:
    mu = _monomial(args)
    print(dumps(canonical_tableau(mu).to_json()))
    return 0


def cmd_levelset(args, cfg: Config) -> int:
    sig = _signature(args)
    _check_slice(sig.n, sig.degree, cfg)
    print(dumps(level_set(sig).to_json()))
    return 0


def cmd_chain(args, cfg: Config) -> int:
    mu = _monomial(args)
    c = ce.transversal(mu, args.side)
    out = c.to_json()
    out["n"] = mu.n
    out["monomial"] = mu.to_json()
    out["side"] = args.side
    out["signature"] = signature(mu).to_json()
    print(dumps(out))
    return 0


def cmd_decompose(args, cfg: Config) -> int:
    sig = _signature(args)
    _check_slice(sig.n, sig.degree, cfg)
    if args.symmetric:
        fam = ce.scd(sig)
        print(dumps(fam.to_json()))
        return 1 if isinstance(fam, ce.Unavailable) else 0
    fam = ce.transversal_family(sig)
    print(dumps(fam.to_json()))
    return 0


def cmd_scd(args, cfg: Config) -> int:
    _check_slice(args.n, args.m, cfg)
    print(dumps(ce.split_generic(args.n, args.m).to_json()))
    return 0


def cmd_check(args, cfg: Config) -> int:
    data = _read_input(args.input)
    try:
        n = data["n"]
        d = tuple(data["signature"])
        kind = data["kind"]
        chains = [[Monomial(e) for e in c["elements"]] for c in data["chains"]]
    except (KeyError, TypeError, PosetError) as exc:
        raise UsageError(f"--input: not a chain family ({exc})") from None
    rep = check_family(chains, kind, n, d)
    print(dumps(rep.to_json()))
    return 0 if rep.ok else 1


def verify_report(n: int, m: int, full: bool, cfg: Config) -> dict:
    """Brute-force report on ``A_n(m)``; ``report['ok']`` is the overall verdict."""
    sigs = signatures(n, m)
    total = sum(len(level_set(s)) for s in sigs)
    partition_ok = total == comb(n + m, n)
    transversal = []
    for s in sigs:
        fam = ce.transversal_family(s, verify=False)
        rep = fam.verify()
        ok = rep.ok and rep.all_monotonic
        transversal.append({"signature": s.to_json(), "kind": fam.kind, "chains": rep.chain_count, "ok": ok})
    split = ce.split_generic(n, m)
    scd_reports = []
    for s in split.generic:
        rep = split.families[s.d].verify()
        scd_reports.append({"signature": s.to_json(), "chains": rep.chain_count, "ok": rep.ok})
    slice_ = list(enumerate_monomials(n, m))
    profile = rank_profile(slice_)
    gauss_ok = profile.levels() == gaussian_binomial(n + m, n)
    report = {
        "n": n,
        "m": m,
        "partition_identity": {"sum": total, "expected": comb(n + m, n), "ok": partition_ok},
        "transversal": transversal,
        "scd": scd_reports,
        "generic": [s.to_json() for s in split.generic],
        "singular": [s.to_json() for s in split.singular],
        "rank_profile": dict(profile.to_json(), gaussian_binomial=gauss_ok),
    }
    checks = [partition_ok, gauss_ok, profile.symmetric, profile.unimodal]
    checks += [t["ok"] for t in transversal] + [t["ok"] for t in scd_reports]
    if len(slice_) <= cfg.max_sperner:
        sp = sperner_check(slice_, cfg.max_sperner)
        report["sperner"] = sp.to_json()
        checks.append(sp.ok)
    else:
        report["sperner"] = {"skipped": f"{len(slice_)} elements exceed cap {cfg.max_sperner}"}
    if full:
        level_profiles = []
        for s in sigs:
            prof = rank_profile(level_set(s))
            level_profiles.append({"signature": s.to_json(), **prof.to_json()})
            checks.append(prof.symmetric)
        report["level_profiles"] = level_profiles
        if n >= 2:
            emb = []
            for s in sigs:
                below = level_set(s.below())
                image = {embed_low(s, mu0) for mu0 in below}
                expected = {mu for mu in level_set(s) if image_membership(mu, "low")}
                emb.append({"signature": s.to_json(), "ok": image == expected})
                checks.append(image == expected)
            report["embedding"] = emb
    report["ok"] = all(checks)
    return report


def cmd_verify(args, cfg: Config) -> int:
    _check_slice(args.n, args.m, cfg)
    report = verify_report(args.n, args.m, args.full, cfg)
    print(dumps(report))
    if not report["ok"]:
        print("verification failed", file=sys.stderr)
        return 1
    return 0


def _node(mu: Monomial) -> str:
    return '"' + ",".join(map(str, mu.a)) + '"'


def export_dot(n: int, m: int, sig: Signature | None = None, chains: str = "transversal") -> str:
    """Hasse diagram of ``A_n(m)`` (or one level set) ranked by weight.

    Hasse edges are colored by color index; chain edges are drawn bold.
    """
    if sig is not None:
        nodes = list(level_set(sig))
        sigs = [sig]
    else:
        nodes = list(enumerate_monomials(n, m))
        sigs = signatures(n, m)
    node_set = set(nodes)
    chain_edges: set[tuple[Monomial, Monomial]] = set()
    if chains != "none":
        for s in sigs:
            fam = ce.transversal_family(s) if chains == "transversal" else ce.scd(s)
            if isinstance(fam, ce.Unavailable):
                fam = ce.transversal_family(s)
            for c in fam.chains:
                chain_edges.update(zip(c.elements, c.elements[1:]))
    title = f"A_{n}({m})" if sig is None else f"Q_{n}({','.join(map(str, sig.d))})"
    lines = [f'digraph "{title}" {{', "  rankdir=TB;", '  node [shape=box, fontname="monospace"];']
    by_weight: dict[int, list[Monomial]] = {}
    for mu in nodes:
        by_weight.setdefault(weight(mu), []).append(mu)
    for w in sorted(by_weight, reverse=True):
        members = " ".join(_node(mu) for mu in sorted(by_weight[w]))
        lines.append(f"  {{ rank=same; {members} }}")
    for upper, lower, c in hasse_edges(n, m):
        if upper not in node_set or lower not in node_set:
            continue
        attrs = f'color="{PALETTE[(c - 1) % len(PALETTE)]}", label="{c}"'
        if (upper, lower) in chain_edges:
            attrs += ", penwidth=3"
        else:
            attrs += ", style=dashed"
        lines.append(f"  {_node(upper)} -> {_node(lower)} [{attrs}];")
    lines.append("}")
    return "\n".join(lines)


def cmd_export(args, cfg: Config) -> int:
    if args.format != "dot":
        raise UsageError("export supports --format dot only")
    sig = None
    if args.signature is not None:
        sig = _signature(args)
        n, m = sig.n, sig.degree
    else:
        if args.m is None:
            raise UsageError("export needs --m or --signature")
        n, m = args.n, args.m
    _check_slice(n, m, cfg)
    print(export_dot(n, m, sig, args.chains))
    return 0


# --- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="youngchains",
        description="Tropical level sets and chain decompositions of Young's lattice L(m,n).",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--format", dest="global_format", default="json", choices=["json", "dot", "text"])
    sub = parser.add_subparsers(dest="command", required=True)

    def mono(p, n_required=False):
        p.add_argument("--n", type=int, required=n_required)
        p.add_argument("--monomial", help="exponent vector a0,a1,...")
        p.add_argument("--input", help="JSON file ('-' for stdin) holding a monomial")

    p = sub.add_parser("enumerate", help="list A_n(m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("signature", help="tropical signature (d_0,...,d_k) of a monomial")
    mono(p)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("tropical", help="evaluate f_{n,r} and a maximising facet")
    mono(p)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_tropical)

    p = sub.add_parser("ideal", help="generators / irreducible components of I_{n,r}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--components", action="store_true")
    p.add_argument("--generators", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("tableau", help="canonical tableau of a monomial")
    mono(p)
    p.set_defaults(func=cmd_tableau)

    def sig_args(p):
        p.add_argument("--n", type=int)
        p.add_argument("--signature", help="d0,d1,...")
        p.add_argument("--input", help="JSON file ('-' for stdin) holding a signature")

    p = sub.add_parser("levelset", help="members and extremes of Q_n(d)")
    sig_args(p)
    p.set_defaults(func=cmd_levelset)

    p = sub.add_parser("chain", help="left or right transversal chain")
    mono(p)
    p.add_argument("--side", choices=["left", "right"], default="left")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("decompose", help="transversal family (or SCD) of a level set")
    sig_args(p)
    p.add_argument("--symmetric", action="store_true", help="symmetric chain decomposition instead")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("scd", help="per-signature families and generic/singular split of A_n(m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_scd)

    p = sub.add_parser("verify", help="brute-force verification report for A_n(m)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--full", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", help="independently check a chain family JSON")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("export", help="Hasse diagram export")
    p.add_argument("--format", default="dot", choices=["dot"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--signature")
    p.add_argument("--input", help=argparse.SUPPRESS)
    p.add_argument("--chains", choices=["transversal", "scd", "none"], default="transversal")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        cfg = Config(max_poset=max_poset_size(), fmt=args.global_format)
        return args.func(args, cfg)
    except (UsageError, SizeCapExceeded) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except PosetError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ce.ChainError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
