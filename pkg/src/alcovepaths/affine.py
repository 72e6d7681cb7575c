"""
Extended affine Weyl group and affine coroots.

Elements are stored in the normal form ``t_mu * v`` with ``mu`` a weight
(translation part) and ``v`` a finite Weyl group element, so the length
zero subgroup never needs to be materialized: it simply consists of the
elements whose closed length formula evaluates to zero.

Affine real coroots are pairs ``gamma + m*delta`` with ``gamma`` a finite
coroot and ``m`` an integer.  The element ``t_mu * v`` acts by

    gamma + m*delta  |->  v(gamma) + (m - <v(gamma), mu>) * delta

and the reflection in ``gamma + N*delta`` is ``t_{-N*alpha_gamma} s_gamma``
(with ``alpha_gamma`` the root of ``gamma`` written as a weight).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .lattice import RootDatum, add, neg
from . import weylgroup as wg
from .weylgroup import WeylElt

__all__ = [
    "AffineCoroot", "ExtAffineElt", "translation", "ext_identity",
    "multiply", "inverse", "act_on_affine_coroot", "affine_reflection",
    "affine_simple_coroot", "affine_simple_reflection", "length_ext",
    "is_right_descent_ext", "reduced_word_ext", "from_word_ext",
    "beta_sequence", "canonical_beta_order", "word_from_beta",
    "shifted_beta", "word_for_translation",
]


@dataclass(frozen=True)
class AffineCoroot:
    """A real affine coroot ``re + deg*delta``."""
    re: tuple
    deg: int

    def is_positive(self) -> bool:
        return self.deg > 0 or (
            self.deg == 0 and all(x >= 0 for x in self.re) and any(self.re)
        )


@dataclass(frozen=True)
class ExtAffineElt:
    """Extended affine element ``t_wt * dir`` in translation normal form."""
    wt: tuple
    dir: WeylElt


def translation(datum: RootDatum, mu) -> ExtAffineElt:
    datum.check_rank(mu)
    return ExtAffineElt(tuple(mu), wg.identity(datum))


def ext_identity(datum: RootDatum) -> ExtAffineElt:
    return ExtAffineElt((0,) * datum.rank, wg.identity(datum))


def multiply(a: ExtAffineElt, b: ExtAffineElt) -> ExtAffineElt:
    # (t_mu u)(t_nu v) = t_{mu + u(nu)} (u v)
    return ExtAffineElt(
        add(a.wt, wg.act_weight(a.dir, b.wt)), wg.multiply(a.dir, b.dir)
    )


def inverse(a: ExtAffineElt) -> ExtAffineElt:
    u_inv = wg.inverse(a.dir)
    return ExtAffineElt(neg(wg.act_weight(u_inv, a.wt)), u_inv)


def act_on_affine_coroot(datum: RootDatum, a: ExtAffineElt, c: AffineCoroot) -> AffineCoroot:
    vg = wg.act_coroot(a.dir, c.re)
    return AffineCoroot(vg, c.deg - datum.pair(vg, a.wt))


def affine_reflection(datum: RootDatum, c: AffineCoroot) -> ExtAffineElt:
    """The reflection in the affine hyperplane of ``c = gamma + N*delta``."""
    alpha_wt = datum.coroot_weight(c.re)
    return ExtAffineElt(
        tuple(-c.deg * x for x in alpha_wt),
        wg.reflection_of(datum, c.re),
    )


def affine_simple_coroot(datum: RootDatum, i: int) -> AffineCoroot:
    """a_i for i = 1..n; a_0 = -theta + delta with theta the highest coroot."""
    if i == 0:
        return AffineCoroot(neg(datum.highest_dual_root()), 1)
    return AffineCoroot(datum.simple_coroot(i), 0)


def affine_simple_reflection(datum: RootDatum, i: int) -> ExtAffineElt:
    if i == 0:
        return affine_reflection(datum, affine_simple_coroot(datum, 0))
    return ExtAffineElt((0,) * datum.rank, wg.simple_reflection(datum, i))


def length_ext(datum: RootDatum, a: ExtAffineElt) -> int:
    """Closed length formula for ``t_mu v``."""
    v_inv = wg.inverse(a.dir)
    total = 0
    for g in datum.pos_coroots:
        chi = int(wg._is_negative(wg.act_coroot(v_inv, g)))
        total += abs(datum.pair(g, a.wt) - chi)
    return total


def is_right_descent_ext(datum: RootDatum, a: ExtAffineElt, i: int) -> bool:
    s = affine_simple_reflection(datum, i)
    return length_ext(datum, multiply(a, s)) < length_ext(datum, a)


def reduced_word_ext(datum: RootDatum, a: ExtAffineElt):
    """Normal form ``a = pi * s_{i_1} ... s_{i_l}`` with ``pi`` of length zero.

    Returns ``(pi, word)`` where the word is the lexicographically smallest
    one obtained by repeatedly peeling the smallest right descent.
    """
    word = []
    cur = a
    while length_ext(datum, cur) > 0:
        for i in range(datum.rank + 1):
            if is_right_descent_ext(datum, cur, i):
                word.append(i)
                cur = multiply(cur, affine_simple_reflection(datum, i))
                break
        else:
            raise AssertionError("positive length element with no descent")
    word.reverse()
    return cur, tuple(word)


def from_word_ext(datum: RootDatum, word, pi: ExtAffineElt | None = None) -> ExtAffineElt:
    out = pi if pi is not None else ext_identity(datum)
    for i in word:
        out = multiply(out, affine_simple_reflection(datum, i))
    return out


def beta_sequence(datum: RootDatum, word) -> tuple:
    """beta_k = s_{i_l} ... s_{i_{k+1}} (a_{i_k}) for a reduced word (i_1..i_l)."""
    out = [None] * len(word)
    p = ext_identity(datum)
    for k in range(len(word) - 1, -1, -1):
        out[k] = act_on_affine_coroot(
            datum, p, affine_simple_coroot(datum, word[k])
        )
        p = multiply(p, affine_simple_reflection(datum, word[k]))
    return tuple(out)


def _chain_quadruples(datum: RootDatum):
    """Pairs (tau, eta) of positive coroots with tau+eta, tau+2eta coroots."""
    pos = set(datum.pos_coroots)
    return [
        (t, e)
        for t in sorted(pos)
        for e in sorted(pos)
        if add(t, e) in pos and add(t, add(e, e)) in pos
    ]


_canonical_cache: dict = {}


def _canonical_beta_cached(datum: RootDatum, i: int, tail: tuple) -> tuple:
    key = (datum.family, datum.rank, i, tail)
    if key not in _canonical_cache:
        _canonical_cache[key] = _canonical_beta_build(datum, i, tail)
    return _canonical_cache[key]


def _canonical_beta_build(datum: RootDatum, i: int, tail: tuple) -> tuple:
    pos = set(datum.pos_coroots)
    omega = datum.fundamental_weight(i)
    mult = {
        g: datum.pair(g, omega)
        for g in datum.pos_coroots
        if datum.pair(g, omega) > 0
    }
    decomps = {
        g: [
            (t, e)
            for t in pos
            for e in [tuple(a - b for a, b in zip(g, t))]
            if e in pos and t <= e
        ]
        for g in mult
    }
    quads = [
        (t, e, add(t, e), add(t, add(e, e)))
        for t, e in _chain_quadruples(datum)
        if any(x in mult for x in (t, e, add(t, e), add(t, add(e, e))))
    ]

    def pref_key(g, placed):
        # crossing order: decreasing deg/<g, omega_i>, then coordinate ratios
        ai = g[i - 1]
        head = -Fraction(mult[g] - placed[g], ai)
        return (head,) + tuple(Fraction(g[j - 1], ai) for j in tail)

    placed = {g: 0 for g in mult}
    states = [()] * len(quads)  # expected tail of the current chain block
    seq: list = []
    total = sum(mult.values())

    def advance(g):
        new = list(states)
        for k, (t, e, te, t2e) in enumerate(quads):
            if g not in (t, e, te, t2e):
                continue
            st = new[k]
            if st:
                if st[0] != g:
                    return None
                new[k] = st[1:]
            elif g == e:
                new[k] = (t2e, te, t2e)
            elif g == t:
                new[k] = (te, t2e)
            else:
                return None
        return new

    def dfs():
        nonlocal states
        if len(seq) == total:
            return all(st == () for st in states)
        for g in sorted(
            (g for g in mult if placed[g] < mult[g]),
            key=lambda g: pref_key(g, placed),
        ):
            if not seq and g != datum.simple_coroot(i):
                continue
            if any(
                placed[g] + 1 != placed.get(t, 0) + placed.get(e, 0)
                for t, e in decomps[g]
            ):
                continue
            new_states = advance(g)
            if new_states is None:
                continue
            save = states
            states = new_states
            placed[g] += 1
            seq.append(AffineCoroot(neg(g), mult[g] - placed[g] + 1))
            if dfs():
                return True
            seq.pop()
            placed[g] -= 1
            states = save
        return False

    if not dfs():
        raise ValueError(
            f"no admissible beta layout for index {i} in "
            f"{datum.family}{datum.rank}"
        )
    return tuple(seq)


def canonical_beta_order(datum: RootDatum, i: int, tail_order=None) -> tuple:
    """The beta sequence of ``t_{-omega_i}`` in its canonical reduced word.

    The underlying multiset is ``{-gamma + k*delta}`` over positive coroots
    gamma with ``<gamma, omega_i> > 0`` and ``1 <= k <= <gamma, omega_i>``.
    It is laid out greedily in decreasing order of the wall-crossing
    parameter ``deg / <gamma, omega_i>`` (ties broken by the coordinate
    ratios ``gamma_j / gamma_i`` over ``tail_order``, the remaining indices
    in increasing order by default), backtracking where necessary to keep
    two structural properties:

    - count additivity: whenever ``-gamma`` is placed and ``gamma`` splits
      as ``tau + eta`` with both summands positive coroots, the numbers of
      earlier ``tau``- and ``eta``-entries add up to the number of
      ``gamma``-entries placed so far;
    - chain factorization: for positive coroots ``tau, eta`` with
      ``tau + 2*eta`` also a coroot, the entries drawn from
      ``{tau, eta, tau+eta, tau+2eta}`` factor into blocks
      ``(eta, tau+2eta, tau+eta, tau+2eta)`` and ``(tau, tau+eta, tau+2eta)``.

    The result is always the beta sequence of an actual reduced word of
    ``t_{-omega_i}`` and matches the hand-computed rank-two sequences.
    """
    if not 1 <= i <= datum.rank:
        raise ValueError(f"fundamental index out of range: {i}")
    if tail_order is None:
        tail = tuple(j for j in range(1, datum.rank + 1) if j != i)
    else:
        tail = tuple(tail_order)
        if sorted(tail) != [j for j in range(1, datum.rank + 1) if j != i]:
            raise ValueError(f"tail_order must permute the indices other than {i}")
    return _canonical_beta_cached(datum, i, tail)


def word_from_beta(datum: RootDatum, betas):
    """Recover ``(pi, word)`` from a beta sequence; raises if it is not one."""
    l = len(betas)
    word = [0] * l
    p = ext_identity(datum)
    simples = [affine_simple_coroot(datum, j) for j in range(datum.rank + 1)]
    for k in range(l - 1, -1, -1):
        c = act_on_affine_coroot(datum, inverse(p), betas[k])
        try:
            word[k] = simples.index(c)
        except ValueError:
            raise ValueError(
                f"not a valid beta sequence: step {k + 1} is not simple"
            ) from None
        p = multiply(p, affine_simple_reflection(datum, word[k]))
    elt = from_word_ext(datum, word)
    # elt = s_{i_1}...s_{i_l}; the full element is pi * elt for the unique pi
    # making the word a reduced word, but pi is determined by the caller's
    # target element, so return the word element itself alongside the word.
    return elt, tuple(word)


def shifted_beta(datum: RootDatum, i: int, lam, tail_order=None) -> tuple:
    """Beta prefix for ``t_{lam - omega_i}`` relative to ``t_lam``, lam anti-dominant.

    Each canonical beta of ``t_{-omega_i}`` has its degree raised by
    ``<re(beta), lam> >= 0``.
    """
    datum.check_rank(lam)
    if any(x > 0 for x in lam):
        raise ValueError(f"weight is not anti-dominant: {lam!r}")
    out = []
    for b in canonical_beta_order(datum, i, tail_order):
        out.append(AffineCoroot(b.re, b.deg + datum.pair(b.re, lam)))
    return tuple(out)


def _conjugation_table(datum: RootDatum, pi: ExtAffineElt) -> dict:
    """j -> c with pi^{-1} s_j pi = s_c, for a length-zero pi."""
    simples = [affine_simple_coroot(datum, j) for j in range(datum.rank + 1)]
    pi_inv = inverse(pi)
    table = {}
    for j in range(datum.rank + 1):
        c = act_on_affine_coroot(datum, pi_inv, simples[j])
        table[j] = simples.index(c)
    return table


def word_for_translation(datum: RootDatum, lam, lead_index=None):
    """``(pi, word)`` for ``t_lam`` with anti-dominant ``lam``, built by
    concatenating reduced words of the ``t_{-omega_i}`` factors (the lengths
    add, so the concatenation is again reduced after conjugating the earlier
    letters through the later length-zero parts).

    ``lead_index`` puts that fundamental factor first; the rest follow in
    increasing index order.
    """
    datum.check_rank(lam)
    if any(x > 0 for x in lam):
        raise ValueError(f"weight is not anti-dominant: {lam!r}")
    order = list(range(1, datum.rank + 1))
    if lead_index is not None:
        order.remove(lead_index)
        order.insert(0, lead_index)
    pieces = []
    for i in order:
        target = translation(datum, neg(datum.fundamental_weight(i)))
        pi_i, w_i = reduced_word_ext(datum, target)
        for _ in range(-lam[i - 1]):
            pieces.append((pi_i, w_i))
    pi_tot = ext_identity(datum)
    word_tot: list = []
    for pi_i, w_i in pieces:
        table = _conjugation_table(datum, pi_i)
        word_tot = [table[j] for j in word_tot] + list(w_i)
        pi_tot = multiply(pi_tot, pi_i)
    return pi_tot, tuple(word_tot)
