"""
Command-line front end.

Subcommands expose the graph builder, beta sequences, path enumeration,
specializations, characters, dimensions, and a verification harness that
re-runs the structural identities on small ranks.  All output is
deterministic for a fixed invocation.

Exit codes: 0 success, 2 argument/parse error, 3 size-cap exceeded,
4 identity-verification failure.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import re
import sys
from dataclasses import dataclass, field

from .lattice import RootDatum, build_datum, neg, sub
from . import weylgroup as wg
from . import affine as af
from . import qbg
from . import paths as pth
from . import genfun as gf
from . import macdonald as mac

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_IDENTITY = 4


@dataclass
class JobConfig:
    family: str
    rank: int
    weight: tuple | None = None
    sigma: tuple = ()
    fmt: str = "table"
    workers: int = 1
    cache_dir: str | None = None
    extra: dict = field(default_factory=dict)


class CliError(Exception):
    def __init__(self, msg, code=EXIT_PARSE):
        super().__init__(msg)
        self.code = code


def _parse_type(s: str):
    m = re.fullmatch(r"([A-G])(\d+)", s.strip())
    if not m:
        raise CliError(f"bad --type {s!r}; expected e.g. A2, C3, G2")
    return m.group(1), int(m.group(2))


def _parse_ints(s: str) -> tuple:
    s = s.strip()
    if not s:
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise CliError(f"bad integer list {s!r}") from None


def _config(args) -> JobConfig:
    family, rank = _parse_type(args.type)
    cfg = JobConfig(
        family=family,
        rank=rank,
        fmt=getattr(args, "format", "table"),
        workers=getattr(args, "workers", 1),
        cache_dir=getattr(args, "cache_dir", None)
        or os.environ.get("ALCOVEPATHS_CACHE_DIR"),
    )
    if getattr(args, "weight", None) is not None:
        cfg.weight = _parse_ints(args.weight)
        if len(cfg.weight) != rank:
            raise CliError(
                f"weight has {len(cfg.weight)} coordinates, expected {rank}"
            )
    if getattr(args, "sigma", None):
        cfg.sigma = _parse_ints(args.sigma)
        if any(not 1 <= i <= rank for i in cfg.sigma):
            raise CliError(f"sigma word uses invalid indices: {cfg.sigma}")
    return cfg


def _datum_graph(cfg: JobConfig):
    datum = build_datum(cfg.family, cfg.rank)
    if cfg.cache_dir:
        graph = qbg.load_or_build(datum, cfg.cache_dir)
    else:
        graph = qbg.build(datum)
    return datum, graph


def _print_poly(datum, poly, fmt: str) -> None:
    if fmt == "json":
        print(gf.to_json(poly))
    else:
        print(repr(poly))


def cmd_qbg(args) -> int:
    cfg = _config(args)
    datum, graph = _datum_graph(cfg)
    if cfg.fmt == "dot":
        print(qbg.export_dot(graph), end="")
    elif cfg.fmt == "json":
        print(qbg.export_json(graph))
    else:
        kinds = list(graph.edges.values())
        print(f"vertices: {len(graph.vertices)}")
        print(f"bruhat edges: {kinds.count(qbg.BRUHAT)}")
        print(f"quantum edges: {kinds.count(qbg.QUANTUM)}")
    return EXIT_OK


def cmd_beta(args) -> int:
    cfg = _config(args)
    datum, _ = _datum_graph(cfg)
    i = args.index
    if not 1 <= i <= datum.rank:
        raise CliError(f"--index out of range for rank {datum.rank}")
    betas = af.canonical_beta_order(datum, i)
    if cfg.fmt == "json":
        print(json.dumps([{"re": list(b.re), "deg": b.deg} for b in betas]))
    else:
        for b in betas:
            print(f"{list(b.re)} + {b.deg}*delta")
    return EXIT_OK


def _paths_input(cfg: JobConfig, datum, args):
    """Start element and betas for the paths command."""
    sigma = wg.from_word(datum, cfg.sigma)
    u = af.ExtAffineElt((0,) * datum.rank, sigma)
    if getattr(args, "word", None) is not None:
        word = _parse_ints(args.word)
        if any(not 0 <= j <= datum.rank for j in word):
            raise CliError(f"word uses invalid affine indices: {word}")
        w = af.from_word_ext(datum, word)
    else:
        if cfg.weight is None:
            raise CliError("need --weight or --word")
        if any(x > 0 for x in cfg.weight):
            raise CliError(f"weight must be anti-dominant: {cfg.weight}")
        w = af.translation(datum, cfg.weight)
        _, word = af.reduced_word_ext(datum, w)
    return af.multiply(u, w), af.beta_sequence(datum, word)


def cmd_paths(args) -> int:
    cfg = _config(args)
    datum, graph = _datum_graph(cfg)
    z0, betas = _paths_input(cfg, datum, args)
    stream = pth.enumerate_paths(datum, graph, z0, betas, reversed=args.reversed)
    if cfg.fmt == "json":
        print(pth.export_json(datum, stream))
    elif cfg.fmt == "csv":
        print(pth.export_csv(datum, stream), end="")
    else:
        total = 0
        for p in stream:
            rec = pth.path_record(datum, p)
            print(
                f"J={rec['folds']} J-={rec['quantum_folds']} "
                f"wt={rec['end_weight']} dir={rec['end_dir']} "
                f"qdeg={rec['qwt_degree']}"
            )
            total += 1
        print(f"total: {total}")
    return EXIT_OK


def cmd_emac(args) -> int:
    cfg = _config(args)
    if cfg.weight is None:
        raise CliError("need --weight")
    datum, graph = _datum_graph(cfg)
    if any(x > 0 for x in cfg.weight):
        raise CliError(f"weight must be anti-dominant: {cfg.weight}")
    try:
        if args.spec == "zero":
            poly = mac.e_zero(datum, graph, cfg.weight)
        elif args.spec == "infinity":
            poly = mac.e_infinity(datum, graph, cfg.weight)
        else:
            report = mac.specialization_report(datum, graph, cfg.weight)
            print(report.to_json())
            return EXIT_OK if report.agree else EXIT_IDENTITY
    except mac.SpecializationMismatch as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_IDENTITY
    if args.eval:
        coords = _parse_ints(args.eval)
        if coords != (1, 1):
            raise CliError("only --eval 1,1 is supported")
        print(gf.evaluate(poly))
    else:
        _print_poly(datum, poly, cfg.fmt)
    return EXIT_OK


def cmd_char(args) -> int:
    cfg = _config(args)
    if cfg.weight is None:
        raise CliError("need --weight")
    datum, graph = _datum_graph(cfg)
    if any(x > 0 for x in cfg.weight):
        raise CliError(f"weight must be anti-dominant: {cfg.weight}")
    sigma = wg.from_word(datum, cfg.sigma)
    _print_poly(
        datum, mac.weyl_character(datum, graph, sigma, cfg.weight), cfg.fmt
    )
    return EXIT_OK


def cmd_dims(args) -> int:
    cfg = _config(args)
    if cfg.weight is None:
        raise CliError("need --weight")
    datum, graph = _datum_graph(cfg)
    if any(x > 0 for x in cfg.weight):
        raise CliError(f"weight must be anti-dominant: {cfg.weight}")
    sigma = wg.from_word(datum, cfg.sigma)
    print(mac.weyl_dimension(datum, graph, sigma, cfg.weight))
    return EXIT_OK


# --- verification suites -------------------------------------------------

def _suite_shift(report):
    d = build_datum("A", 2)
    g = qbg.build(d)
    w = af.translation(d, (-1, 0))
    for uw in [(), (1,), (2,), (1, 2)]:
        u = wg.from_word(d, uw)
        for mu in [(1, 0), (0, -1), (2, -1)]:
            lhs = gf.c_function(d, g, af.ExtAffineElt(mu, u), w)
            rhs = gf.shift(
                gf.c_function(d, g, af.ExtAffineElt((0, 0), u), w), mu
            )
            if lhs != rhs:
                report.append({"suite": "shift", "u": list(uw), "mu": list(mu)})


def _suite_recursion(report):
    for fam, rank in (("A", 2), ("C", 2)):
        d = build_datum(fam, rank)
        g = qbg.build(d)
        cache: dict = {}
        for u in wg.enumerate_group(d):
            for i in (1, 2):
                for lam in [(0, 0), (-1, 0), (-1, -1)]:
                    _, _, ok = gf.recursion_check(d, g, u, i, lam, cache)
                    if not ok:
                        report.append({
                            "suite": "recursion", "type": fam + str(rank),
                            "u": list(wg.reduced_word(d, u)), "i": i,
                            "lam": list(lam),
                        })


def _suite_w0_inversion(report):
    for fam, rank in (("A", 2), ("C", 2)):
        d = build_datum(fam, rank)
        g = qbg.build(d)
        w0 = wg.longest_element(d)
        for (w, gam), kind in g.edges.items():
            # the reversed edge through w_0 exists and has the same kind
            dual = g.edges.get(
                (wg.multiply(w0, wg.multiply(w, wg.reflection_of(d, gam))),
                 gam)
            )
            if dual != kind:
                report.append({
                    "suite": "w0_inversion", "type": fam + str(rank),
                    "w": list(wg.reduced_word(d, w)), "gamma": list(gam),
                })


def _suite_lenart(report):
    for n in (2, 3):
        d = build_datum("A", n)
        g = qbg.build(d)
        for w in wg.enumerate_group(d):
            for i in range(1, n + 1):
                for j in range(i + 1, n + 2):
                    got = qbg.lenart_edge_typeA(d, w, i, j)
                    label = d.coroot_of_root(qbg.typeA_root(d, i, j))
                    want = g.edges.get((w, label))
                    if got != want:
                        report.append({
                            "suite": "lenart", "type": f"A{n}",
                            "w": list(wg.reduced_word(d, w)), "ij": [i, j],
                        })
    d = build_datum("C", 2)
    g = qbg.build(d)
    for w in wg.enumerate_group(d):
        for cls, pairs in (
            (1, [(1, 2)]), (2, [(1, 2)]), (3, [(1,), (2,)])
        ):
            for p in pairs:
                got = qbg.lenart_edge_typeC(d, w, cls, *p)
                label = d.coroot_of_root(qbg.typeC_root(d, cls, *p))
                want = g.edges.get((w, label))
                if got != want:
                    report.append({
                        "suite": "lenart", "type": "C2", "class": cls,
                        "w": list(wg.reduced_word(d, w)), "pos": list(p),
                    })


def _suite_beta(report):
    for fam, rank in (("A", 2), ("C", 2), ("G", 2)):
        d = build_datum(fam, rank)
        for i in range(1, rank + 1):
            betas = af.canonical_beta_order(d, i)
            omega = d.fundamental_weight(i)
            want = sorted(
                (tuple(neg(gm)), k)
                for gm in d.pos_coroots
                for k in range(1, d.pair(gm, omega) + 1)
            )
            got = sorted((b.re, b.deg) for b in betas)
            if got != want:
                report.append({"suite": "beta", "type": fam + str(rank), "i": i})


def _suite_dual_route(report):
    for fam, rank in (("A", 1), ("A", 2)):
        d = build_datum(fam, rank)
        g = qbg.build(d)
        for lam in itertools.product(range(-1, 1), repeat=rank):
            r = mac.specialization_report(d, g, lam)
            if not r.agree:
                report.append({
                    "suite": "dual_route", "type": fam + str(rank),
                    "lam": list(lam),
                })


def _suite_twist(report):
    cases = [("A", 1, 1, 2), ("A", 2, 1, 1), ("A", 2, 2, 1), ("C", 2, 2, 1)]
    for fam, rank, i, mmax in cases:
        d = build_datum(fam, rank)
        g = qbg.build(d)
        for m in range(1, mmax + 1):
            if not mac.cominuscule_twist_check(d, g, i, m):
                report.append({
                    "suite": "twist", "type": fam + str(rank), "i": i, "m": m,
                })


_SUITES = {
    "shift": _suite_shift,
    "recursion": _suite_recursion,
    "w0_inversion": _suite_w0_inversion,
    "lenart": _suite_lenart,
    "beta": _suite_beta,
    "dual_route": _suite_dual_route,
    "twist": _suite_twist,
}


def cmd_verify(args) -> int:
    names = args.suites.split(",") if args.suites else sorted(_SUITES)
    failures: list = []
    for name in names:
        if name not in _SUITES:
            raise CliError(f"unknown suite {name!r}; have {sorted(_SUITES)}")
        _SUITES[name](failures)
    print(json.dumps({
        "suites": names, "ok": not failures, "failures": failures,
    }))
    return EXIT_OK if not failures else EXIT_IDENTITY


def _add_common(p, weight=True, sigma=False):
    p.add_argument("--type", required=True, help="simple type, e.g. A2")
    p.add_argument("--format", default="table",
                   choices=["table", "json", "csv", "dot"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--cache-dir", default=None)
    if weight:
        p.add_argument("--weight", default=None,
                       help="comma-separated fundamental coordinates")
    if sigma:
        p.add_argument("--sigma", default=None,
                       help="reduced word of the finite twist, e.g. 1,2")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="alcovepaths",
        description="Quantum Bruhat graphs, folded alcove paths, and "
                    "specialized Macdonald polynomials.",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    p = sp.add_parser("qbg", help="build and export the graph")
    _add_common(p, weight=False)
    p.set_defaults(func=cmd_qbg)

    p = sp.add_parser("beta", help="canonical coroot sequence of a fundamental")
    _add_common(p, weight=False)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=cmd_beta)

    p = sp.add_parser("paths", help="enumerate folded paths")
    _add_common(p, sigma=True)
    p.add_argument("--word", default=None,
                   help="explicit affine word (0-based letters), overrides --weight")
    p.add_argument("--reversed", action="store_true")
    p.set_defaults(func=cmd_paths)

    p = sp.add_parser("emac", help="specialized Macdonald polynomial")
    _add_common(p)
    p.add_argument("--spec", default="zero",
                   choices=["zero", "infinity", "both"])
    p.add_argument("--eval", default=None, help="evaluate at x,q (only 1,1)")
    p.set_defaults(func=cmd_emac)

    p = sp.add_parser("char", help="generalized Weyl module character")
    _add_common(p, sigma=True)
    p.set_defaults(func=cmd_char)

    p = sp.add_parser("dims", help="generalized Weyl module dimension")
    _add_common(p, sigma=True)
    p.set_defaults(func=cmd_dims)

    p = sp.add_parser("verify", help="run identity suites")
    p.add_argument("--suites", default=None,
                   help="comma-separated subset of " + ",".join(sorted(_SUITES)))
    p.set_defaults(func=cmd_verify)
    return ap


def _join_negative_values(argv):
    """Glue values like ``--weight -1,0`` into ``--weight=-1,0`` so argparse
    does not mistake the leading minus for an option."""
    flags = {"--weight", "--sigma", "--word", "--eval"}
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in flags and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = ap.parse_args(_join_negative_values(list(argv)))
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except RuntimeError as exc:
        if "cap" in str(exc):
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CAP
        raise


if __name__ == "__main__":
    sys.exit(main())
