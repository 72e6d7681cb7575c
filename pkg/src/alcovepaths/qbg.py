"""
Quantum Bruhat graph on the dual root system.

Vertices are the Weyl group elements; an edge ``w -> w s_gamma`` with
label a positive coroot ``gamma`` is Bruhat when the length goes up by
one and quantum when it drops by ``<2 rho, gamma> - 1``.  Besides the
generic length-based construction the module carries Lenart's one-line
criteria in types A and C and an obstruction-based existence test, used
to cross-validate each other.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .lattice import RootDatum, neg
from . import weylgroup as wg
from .weylgroup import WeylElt

__all__ = [
    "QuantumBruhatGraph", "build", "edge_kind", "signed_one_line",
    "lenart_edge_typeA", "lenart_edge_typeC", "criterion_edge",
    "export_dot", "export_json", "load_or_build",
]

BRUHAT = "bruhat"
QUANTUM = "quantum"


@dataclass(frozen=True)
class QuantumBruhatGraph:
    datum: RootDatum
    vertices: tuple           # all WeylElt, sorted by (length, word)
    edges: dict               # (WeylElt, positive Coroot) -> BRUHAT | QUANTUM


def _edge_kind_raw(datum: RootDatum, w: WeylElt, gamma) -> str | None:
    ws = wg.multiply(w, wg.reflection_of(datum, gamma))
    lw, lws = wg.length(datum, w), wg.length(datum, ws)
    if lws == lw + 1:
        return BRUHAT
    if lws == lw - datum.two_rho_pair(gamma) + 1:
        return QUANTUM
    return None


def build(datum: RootDatum) -> QuantumBruhatGraph:
    vertices = tuple(wg.enumerate_group(datum))
    edges = {}
    for w in vertices:
        for gamma in datum.pos_coroots:
            kind = _edge_kind_raw(datum, w, gamma)
            if kind is not None:
                edges[(w, gamma)] = kind
    return QuantumBruhatGraph(datum, vertices, edges)


def edge_kind(graph: QuantumBruhatGraph, w: WeylElt, gamma, reversed=False):
    """Kind of the edge ``w -> w s_gamma`` (or ``w s_gamma -> w`` when reversed).

    The label may be given with either sign; ``s_gamma = s_{-gamma}``.
    """
    d = graph.datum
    if not d.is_coroot(gamma):
        raise ValueError(f"not a coroot: {gamma!r}")
    g = tuple(gamma) if d.is_pos_coroot(gamma) else neg(gamma)
    if reversed:
        src = wg.multiply(w, wg.reflection_of(d, g))
        return graph.edges.get((src, g))
    return graph.edges.get((w, g))


# ---------------------------------------------------------------------------
# Lenart's explicit criteria


def one_line(datum: RootDatum, w: WeylElt) -> tuple:
    """Type A one-line notation of w as a permutation of 1..n+1."""
    if datum.family != "A":
        raise ValueError("one_line requires type A")
    perm = list(range(1, datum.rank + 2))
    for i in wg.reduced_word(datum, w):
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def signed_one_line(datum: RootDatum, w: WeylElt) -> tuple:
    """Type C one-line notation over the alphabet 1..n, bar(n)..bar(1).

    Barred letters are encoded as 2n+1-i, so the alphabet order is the
    plain integer order on 1..2n and position bar(i) is position 2n+1-i.
    """
    if datum.family != "C":
        raise ValueError("signed_one_line requires type C")
    n = datum.rank
    perm = list(range(1, 2 * n + 1))
    for i in wg.reduced_word(datum, w):
        if i < n:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
            perm[2 * n - i - 1], perm[2 * n - i] = perm[2 * n - i], perm[2 * n - i - 1]
        else:
            perm[n - 1], perm[n] = perm[n], perm[n - 1]
    return tuple(perm)


def _circ_less(start, a, b, modulus):
    """a strictly before b in the circular order starting at ``start``."""
    return (a - start) % modulus < (b - start) % modulus


def lenart_edge_typeA(datum: RootDatum, w: WeylElt, i: int, j: int):
    """Edge ``w -> w s`` for the type A root e_i - e_j, 1 <= i < j <= n+1."""
    n1 = datum.rank + 1
    if not 1 <= i < j <= n1:
        raise ValueError(f"need 1 <= i < j <= {n1}")
    p = one_line(datum, w)
    wi, wj = p[i - 1], p[j - 1]
    for k in range(i + 1, j):
        wk = p[k - 1]
        if _circ_less(wi, wk, wj, n1) and wk != wi:
            return None
    return QUANTUM if wi > wj else BRUHAT


def typeA_root(datum: RootDatum, i: int, j: int) -> tuple:
    """Root coordinates of e_i - e_j = alpha_i + ... + alpha_{j-1}."""
    return tuple(int(i <= k <= j - 1) for k in range(1, datum.rank + 1))


def lenart_edge_typeC(datum: RootDatum, w: WeylElt, cls: int, i: int, j: int = 0):
    """Edge test for type C, split by root class.

    cls=1: e_i - e_j (1<=i<j<=n); cls=2: e_i + e_j (1<=i<j<=n);
    cls=3: 2 e_i (j ignored).  Positions are unbarred indices.
    """
    n = datum.rank
    p = signed_one_line(datum, w)
    N = 2 * n
    if cls == 1:
        if not 1 <= i < j <= n:
            raise ValueError("need 1 <= i < j <= n")
        wi, wj = p[i - 1], p[j - 1]
        for k in range(i + 1, j):
            wk = p[k - 1]
            if wk != wi and _circ_less(wi, wk, wj, N):
                return None
        return QUANTUM if wi > wj else BRUHAT
    if cls == 2:
        if not 1 <= i < j <= n:
            raise ValueError("need 1 <= i < j <= n")
        # reflection swaps positions (i, bar j) and (j, bar i); the edge is a
        # cover exactly when the window from i to bar(j) is clean and the
        # mirrored entry at bar(i) does not interleave
        jbar, ibar = N + 1 - j, N + 1 - i
        wi, wjbar, wibar = p[i - 1], p[jbar - 1], p[ibar - 1]
        if not wi < wjbar:
            return None
        for k in range(i + 1, jbar):
            if wi < p[k - 1] < wjbar:
                return None
        if wi < wibar < wjbar:
            return None
        return BRUHAT      # no quantum edges in this class
    if cls == 3:
        if not 1 <= i <= n:
            raise ValueError("need 1 <= i <= n")
        wi, wibar = p[i - 1], p[N - i]
        for k in range(i + 1, N - i + 1):
            wk = p[k - 1]
            if wk != wi and _circ_less(wi, wk, wibar, N):
                return None
        return QUANTUM if wi > wibar else BRUHAT
    raise ValueError(f"invalid class: {cls}")


def typeC_root(datum: RootDatum, cls: int, i: int, j: int = 0) -> tuple:
    """Root coordinates of the class-1/2/3 positive roots of type C."""
    n = datum.rank
    a = [0] * n
    if cls == 1:
        for k in range(i, j):
            a[k - 1] = 1
    elif cls == 2:
        for k in range(i, j):
            a[k - 1] = 1
        for k in range(j, n):
            a[k - 1] += 2
        a[n - 1] += 1
    elif cls == 3:
        for k in range(i, n):
            a[k - 1] = 2
        a[n - 1] += 1
    else:
        raise ValueError(f"invalid class: {cls}")
    return tuple(a)


# ---------------------------------------------------------------------------
# Obstruction-based existence test


def _sigma_hat(datum: RootDatum, sigma: WeylElt, alpha):
    """sigma(alpha) shifted into the positive affine cone: deg 1 if it lands
    negative, deg 0 otherwise."""
    img = wg.act_coroot(sigma, alpha)
    if datum.is_pos_coroot(img):
        return (img, 0)
    return (img, 1)


_SUBSYSTEM_CACHE: dict = {}


def _rank2_subsystems(datum: RootDatum):
    """All sets of positive coroots closed under the rank-2 span of a pair."""
    key = (datum.family, datum.rank)
    if key in _SUBSYSTEM_CACHE:
        return _SUBSYSTEM_CACHE[key]
    out = []
    pos = list(datum.pos_coroots)
    seen = set()
    for a in pos:
        for b in pos:
            if a >= b:
                continue
            # span test: collect positive coroots that are rational combos
            sub = tuple(
                g for g in pos
                if _in_rational_span(a, b, g)
            )
            if sub not in seen:
                seen.add(sub)
                out.append(sub)
    _SUBSYSTEM_CACHE[key] = out
    return out


def _in_rational_span(a, b, g):
    # g = x a + y b over Q: solve via two independent coordinates
    n = len(a)
    for p in range(n):
        for q in range(p + 1, n):
            det = a[p] * b[q] - a[q] * b[p]
            if det != 0:
                x_num = g[p] * b[q] - g[q] * b[p]
                y_num = a[p] * g[q] - a[q] * g[p]
                return all(
                    det * g[r] == x_num * a[r] + y_num * b[r] for r in range(n)
                )
    return False


_EXCLUDED_CACHE: dict = {}


def _quantum_excluded(datum: RootDatum, gamma) -> bool:
    """Whether gamma can never label a quantum edge: it is a short
    non-simple member of some rank-2 subsystem, "short" measured through
    the underlying roots (another member has a strictly longer root)."""
    key = (datum.family, datum.rank, tuple(gamma))
    if key in _EXCLUDED_CACHE:
        return _EXCLUDED_CACHE[key]
    glen = datum.root_length2(datum.root_of_coroot(gamma))
    for sub in _rank2_subsystems(datum):
        if gamma not in sub or gamma in _rank2_simples(sub):
            continue
        if any(
            datum.root_length2(datum.root_of_coroot(g)) > glen for g in sub
        ):
            return True
    return False


def criterion_edge(datum: RootDatum, sigma: WeylElt, gamma) -> bool:
    """Existence of an edge ``sigma -> sigma s_gamma`` via the obstruction test.

    Let S = {alpha positive, alpha != gamma, s_gamma(alpha) negative}; the
    reflection pairs alpha with beta = c*gamma - alpha, c = <alpha,
    root(gamma)>.  When sigma(gamma) stays positive the edge exists unless
    some pair keeps both members positive under sigma; when sigma(gamma)
    turns negative the edge exists iff sigma sends all of S negative and
    gamma is not excluded from carrying quantum edges.
    """
    if not datum.is_pos_coroot(gamma):
        raise ValueError(f"not a positive coroot: {gamma!r}")
    groot_wt = datum.coroot_weight(gamma)
    support = [
        a for a in datum.pos_coroots
        if a != tuple(gamma) and not datum.is_pos_coroot(
            tuple(ai - datum.pair(a, groot_wt) * gi for ai, gi in zip(a, gamma))
        )
    ]

    def stays_positive(a):
        return datum.is_pos_coroot(wg.act_coroot(sigma, a))

    if datum.is_pos_coroot(wg.act_coroot(sigma, gamma)):
        for alpha in support:
            c = datum.pair(alpha, groot_wt)
            beta = tuple(c * gi - ai for gi, ai in zip(gamma, alpha))
            if stays_positive(alpha) and stays_positive(beta):
                return False
        return True
    if _quantum_excluded(datum, gamma):
        return False
    return not any(stays_positive(a) for a in support)


def _rank2_simples(sub):
    """The two indecomposable members of a rank-2 positive system."""
    s = set(sub)
    out = []
    for g in sub:
        dec = False
        for a in sub:
            b = tuple(x - y for x, y in zip(g, a))
            if b in s:
                dec = True
                break
        if not dec:
            out.append(g)
    return tuple(out)


# ---------------------------------------------------------------------------
# Export and cache


def _word_str(datum: RootDatum, w: WeylElt) -> str:
    word = wg.reduced_word(datum, w)
    return ",".join(map(str, word)) if word else "e"


def export_json(graph: QuantumBruhatGraph) -> str:
    d = graph.datum
    vertices = sorted(_word_str(d, w) for w in graph.vertices)
    edges = sorted(
        (
            {"src": _word_str(d, w), "label": list(g), "kind": kind}
            for (w, g), kind in graph.edges.items()
        ),
        key=lambda e: (e["src"], e["label"], e["kind"]),
    )
    return json.dumps({"vertices": vertices, "edges": edges}, indent=1)


def export_dot(graph: QuantumBruhatGraph) -> str:
    d = graph.datum
    lines = ["digraph qbg {"]
    for w in sorted(graph.vertices, key=lambda w: _word_str(d, w)):
        lines.append(f'  "{_word_str(d, w)}";')
    items = sorted(
        (_word_str(d, w), list(g), kind, w, g)
        for (w, g), kind in graph.edges.items()
    )
    for src, label, kind, w, g in items:
        dst = _word_str(d, wg.multiply(w, wg.reflection_of(d, g)))
        style = ' style=dashed kind="quantum"' if kind == QUANTUM else ""
        lines.append(f'  "{src}" -> "{dst}" [label="{label}"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_or_build(datum: RootDatum, cache_dir: str | None = None) -> QuantumBruhatGraph:
    """Build the graph, consulting/refreshing a JSON cache when a directory
    is given.  A cached file is trusted only if its edge count checksum
    matches a rebuilt count; on any mismatch it is silently rebuilt."""
    if cache_dir is None:
        return build(datum)
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, f"qbg_{datum.family}{datum.rank}.json")
    graph = build(datum)
    payload = {
        "family": datum.family,
        "rank": datum.rank,
        "edge_count": len(graph.edges),
        "graph": json.loads(export_json(graph)),
    }
    if os.path.exists(path):
        try:
            with open(path) as fh:
                cached = json.load(fh)
            if (
                cached.get("edge_count") == payload["edge_count"]
                and cached.get("graph") == payload["graph"]
            ):
                return graph
        except (json.JSONDecodeError, OSError):
            pass
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=1)
    return graph
