"""
Folded alcove paths over a fixed sequence of affine coroots.

A path is a choice of fold positions J inside the beta sequence of a
(translated) Weyl group element.  Folding at position j multiplies the
running element by the reflection in the *original* coroot ``beta_j``;
positions that are skipped leave the element unchanged.  A fold set is
admissible when each folded step projects to an edge of the quantum
Bruhat graph, and the fold is quantum exactly when that edge is.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .lattice import RootDatum
from . import weylgroup as wg
from . import affine as af
from .affine import AffineCoroot, ExtAffineElt
from . import qbg
from .qbg import QuantumBruhatGraph

__all__ = [
    "AlcovePath", "enumerate_paths", "count", "end_weight", "end_dir",
    "qwt_degree", "path_record", "export_json", "export_csv",
]


@dataclass(frozen=True)
class AlcovePath:
    """A folded path: start element, coroot sequence, and fold data.

    ``folds`` is the strictly increasing tuple of 1-based fold positions;
    ``ends`` lists the running elements z_0, ..., z_r (one per fold, plus
    the start); ``quantum_folds`` is the subset of folds whose projected
    edge is quantum.
    """
    start: ExtAffineElt
    betas: tuple
    folds: tuple
    ends: tuple
    quantum_folds: tuple


def _check_betas(datum: RootDatum, betas) -> None:
    for b in betas:
        if not any(b.re):
            raise ValueError(f"beta with zero real part: {b!r}")
        if not datum.is_coroot(b.re):
            raise ValueError(f"beta real part is not a coroot: {b!r}")


def enumerate_paths(
    datum: RootDatum,
    graph: QuantumBruhatGraph,
    z0: ExtAffineElt,
    betas,
    reversed: bool = False,
):
    """Yield every admissible fold set, in lexicographic order on J.

    Admissibility is prefix-closed, so the search folds at position p only
    when the step dir(z) -> dir(z) s_{|Re beta_p|} is an edge (of the
    reversed graph when ``reversed`` is set); the subtree is pruned
    otherwise.  The empty fold set is always admissible and comes first.
    """
    betas = tuple(betas)
    _check_betas(datum, betas)
    refl = [af.affine_reflection(datum, b) for b in betas]

    def walk(z, pos, folds, ends, qfolds):
        yield AlcovePath(z0, betas, folds, ends, qfolds)
        for p in range(pos, len(betas)):
            kind = qbg.edge_kind(graph, z.dir, betas[p].re, reversed=reversed)
            if kind is None:
                continue
            z1 = af.multiply(z, refl[p])
            q1 = qfolds + (p + 1,) if kind == qbg.QUANTUM else qfolds
            yield from walk(z1, p + 1, folds + (p + 1,), ends + (z1,), q1)

    yield from walk(z0, 0, (), (z0,), ())


def count(
    datum: RootDatum,
    graph: QuantumBruhatGraph,
    z0: ExtAffineElt,
    betas,
    reversed: bool = False,
) -> int:
    """Number of admissible fold sets, without materializing the paths."""
    betas = tuple(betas)
    _check_betas(datum, betas)
    refl = [af.affine_reflection(datum, b) for b in betas]
    # the subtree below (z, pos) depends only on (dir(z), pos): folding
    # multiplies on the right, so the translation part never feeds back
    memo: dict = {}

    def walk(v, pos):
        key = (v, pos)
        if key not in memo:
            total = 1
            for p in range(pos, len(betas)):
                if qbg.edge_kind(graph, v, betas[p].re, reversed=reversed):
                    total += walk(wg.multiply(v, refl[p].dir), p + 1)
            memo[key] = total
        return memo[key]

    return walk(z0.dir, 0)


def end_weight(p: AlcovePath):
    return p.ends[-1].wt


def end_dir(p: AlcovePath) -> wg.WeylElt:
    return p.ends[-1].dir


def qwt_degree(p: AlcovePath) -> int:
    """Total delta-degree of the coroots folded at quantum positions."""
    return sum(p.betas[j - 1].deg for j in p.quantum_folds)


def path_record(datum: RootDatum, p: AlcovePath) -> dict:
    """Flat export record for one path."""
    word = wg.reduced_word(datum, end_dir(p))
    return {
        "folds": list(p.folds),
        "quantum_folds": list(p.quantum_folds),
        "end_weight": list(end_weight(p)),
        "end_dir": ",".join(map(str, word)) if word else "e",
        "qwt_degree": qwt_degree(p),
    }


def export_json(datum: RootDatum, paths) -> str:
    return json.dumps([path_record(datum, p) for p in paths], indent=1)


def export_csv(datum: RootDatum, paths) -> str:
    buf = io.StringIO()
    fields = ["folds", "quantum_folds", "end_weight", "end_dir", "qwt_degree"]
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for p in paths:
        rec = path_record(datum, p)
        rec["folds"] = " ".join(map(str, rec["folds"]))
        rec["quantum_folds"] = " ".join(map(str, rec["quantum_folds"]))
        rec["end_weight"] = " ".join(map(str, rec["end_weight"]))
        writer.writerow(rec)
    return buf.getvalue()
