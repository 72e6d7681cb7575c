"""
Exact Laurent polynomials in (x, q) and the path generating function.

The generating function attached to a pair (u, w) of extended affine
elements sums ``x^{wt(end)} q^{qwt-degree}`` over the admissible folded
paths built from a reduced word of w, started at u*w.  A typed variant
runs over the shifted beta sequence of a fundamental direction and feeds
the one-step recursion that peels off one ``t_{-omega_i}`` factor.
"""

from __future__ import annotations

import json

from .lattice import RootDatum, add, sub, neg
from . import weylgroup as wg
from .weylgroup import WeylElt
from . import affine as af
from .affine import ExtAffineElt
from . import qbg
from .qbg import QuantumBruhatGraph
from . import paths as pth

__all__ = [
    "LaurentPoly", "c_function", "c_function_typed", "recursion_check",
    "shift", "w0_twist", "evaluate", "to_json",
]


class LaurentPoly:
    """Integer Laurent polynomial; terms map (weight, q-exponent) -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def monomial(cls, weight, qexp: int = 0, coeff: int = 1) -> "LaurentPoly":
        return cls({(tuple(weight), qexp): coeff})

    @classmethod
    def one(cls, rank: int) -> "LaurentPoly":
        return cls.monomial((0,) * rank)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) - v
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict = {}
        for (w1, q1), c1 in self.terms.items():
            for (w2, q2), c2 in other.terms.items():
                k = (add(w1, w2), q1 + q2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly(out)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly({k: c * v for k, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (w, q), c in self.sorted_terms():
            mono = [f"x{i + 1}^{e}" for i, e in enumerate(w) if e]
            if q:
                mono.append(f"q^{q}")
            if c != 1 or not mono:
                mono.insert(0, str(c))
            bits.append("*".join(mono))
        return " + ".join(bits)


def shift(poly: LaurentPoly, mu) -> LaurentPoly:
    """Multiply by the monomial x^mu."""
    mu = tuple(mu)
    return LaurentPoly({(add(w, mu), q): c for (w, q), c in poly.terms.items()})


def w0_twist(datum: RootDatum, poly: LaurentPoly) -> LaurentPoly:
    """Apply the longest element to every x-exponent, leaving q alone."""
    w0 = wg.longest_element(datum)
    return LaurentPoly(
        {(wg.act_weight(w0, w), q): c for (w, q), c in poly.terms.items()}
    )


def evaluate(poly: LaurentPoly) -> int:
    """The value at x = 1, q = 1, i.e. the sum of all coefficients."""
    return sum(poly.terms.values())


def to_json(poly: LaurentPoly) -> str:
    recs = [
        {"x": list(w), "q": q, "c": c} for (w, q), c in poly.sorted_terms()
    ]
    return json.dumps(recs)


def c_function(
    datum: RootDatum,
    graph: QuantumBruhatGraph,
    u: ExtAffineElt,
    w: ExtAffineElt,
    word=None,
    reversed: bool = False,
) -> LaurentPoly:
    """Generating function over folded paths of the beta type of w.

    The word is derived from w unless an explicit reduced word is passed;
    the value is independent of the choice.
    """
    if word is None:
        _, word = af.reduced_word_ext(datum, w)
    betas = af.beta_sequence(datum, word)
    z0 = af.multiply(u, w)
    refl = [af.affine_reflection(datum, b) for b in betas]
    zero = (0,) * datum.rank

    # Subtree sums factor through (dir, position): if z = t_nu * v then the
    # sum over completions from (z, pos) is x^nu times a value depending
    # only on (v, pos), since folds multiply on the right.
    memo: dict = {}

    def walk(v: WeylElt, pos: int) -> LaurentPoly:
        key = (v, pos)
        if key not in memo:
            total = LaurentPoly.monomial(zero)
            for p in range(pos, len(betas)):
                kind = qbg.edge_kind(graph, v, betas[p].re, reversed=reversed)
                if kind is None:
                    continue
                qdeg = betas[p].deg if kind == qbg.QUANTUM else 0
                sub_sum = walk(wg.multiply(v, refl[p].dir), p + 1)
                step_wt = wg.act_weight(v, refl[p].wt)
                total = total + shift(sub_sum, step_wt) * LaurentPoly.monomial(
                    zero, qdeg
                )
            memo[key] = total
        return memo[key]

    return shift(walk(z0.dir, 0), z0.wt)


def c_function_typed(
    datum: RootDatum,
    graph: QuantumBruhatGraph,
    u: ExtAffineElt,
    i: int,
    lam,
):
    """Paths of the shifted fundamental type, started at u*t_{lam-omega_i}.

    Returns one (path, q-degree, end) triple per admissible fold set.
    """
    betas = af.shifted_beta(datum, i, lam)
    z0 = af.multiply(
        u, af.translation(datum, sub(lam, datum.fundamental_weight(i)))
    )
    return [
        (p, pth.qwt_degree(p), p.ends[-1])
        for p in pth.enumerate_paths(datum, graph, z0, betas)
    ]


def recursion_check(
    datum: RootDatum,
    graph: QuantumBruhatGraph,
    u: WeylElt,
    i: int,
    lam,
    cache: dict | None = None,
):
    """One-step peeling identity for anti-dominant lam and finite u.

    The direct value for t_{lam - omega_i} must equal the sum, over typed
    paths, of q^{deg} * C^{t_lam}_{dir(end)} * x^{wt(end) - dir(end)(lam)}.
    Returns (lhs, rhs, equal).
    """
    if cache is None:
        cache = {}
    zero = (0,) * datum.rank

    def c_translated(v: WeylElt, mu) -> LaurentPoly:
        # cache C_v^{t_mu}; both sides of the identity are values of this
        key = (v, tuple(mu))
        if key not in cache:
            cache[key] = c_function(
                datum, graph, ExtAffineElt(zero, v), af.translation(datum, mu)
            )
        return cache[key]

    u_ext = ExtAffineElt(zero, u)
    lhs = c_translated(u, sub(lam, datum.fundamental_weight(i)))

    rhs = LaurentPoly()
    for _, qdeg, end in c_function_typed(datum, graph, u_ext, i, lam):
        corr = sub(end.wt, wg.act_weight(end.dir, lam))
        q_mono = LaurentPoly.monomial(zero, qdeg)
        rhs = rhs + shift(c_translated(end.dir, lam), corr) * q_mono
    return lhs, rhs, lhs == rhs
