"""Folded alcove path enumeration: counts, ordering, records, exports."""

import csv
import io
import json

import pytest

from alcovepaths.lattice import neg
from alcovepaths import weylgroup as wg
from alcovepaths import affine as af
from alcovepaths.affine import AffineCoroot
from alcovepaths import paths as pth
from conftest import datum_of, graph_of


def _translation_input(family, rank, lam):
    d = datum_of(family, rank)
    g = graph_of(family, rank)
    t = af.translation(d, lam)
    _, word = af.reduced_word_ext(d, t)
    return d, g, t, af.beta_sequence(d, word)


def test_g2_fundamental_counts():
    for i, want in ((1, 15), (2, 7)):
        d, g, t, betas = _translation_input(
            "G", 2, neg(datum_of("G", 2).fundamental_weight(i))
        )
        assert pth.count(d, g, t, betas) == want


@pytest.mark.parametrize("n", range(1, 5))
def test_a1_counts_powers_of_two(n):
    d, g, t, betas = _translation_input("A", 1, (-n,))
    assert pth.count(d, g, t, betas) == 2 ** n


@pytest.mark.parametrize("lam", [(-1, 0), (0, -1), (-1, -1), (-2, -1)])
def test_a2_counts_powers_of_three(lam):
    d, g, t, betas = _translation_input("A", 2, lam)
    assert pth.count(d, g, t, betas) == 3 ** (-lam[0] - lam[1])


@pytest.mark.parametrize("family,rank,lam", [
    ("A", 2, (-1, -1)), ("C", 2, (-1, 0)), ("C", 2, (0, -1)), ("G", 2, (0, -1)),
])
def test_count_matches_enumeration(family, rank, lam):
    d, g, t, betas = _translation_input(family, rank, lam)
    paths = list(pth.enumerate_paths(d, g, t, betas))
    assert len(paths) == pth.count(d, g, t, betas)
    # fold sets are distinct and lexicographically ordered
    folds = [p.folds for p in paths]
    assert folds == sorted(set(folds))
    assert folds[0] == ()


def test_enumeration_prefix_closed():
    d, g, t, betas = _translation_input("C", 2, (-1, -1))
    folds = {p.folds for p in pth.enumerate_paths(d, g, t, betas)}
    for J in folds:
        for k in range(len(J)):
            assert J[:k] in folds


def test_path_invariants():
    d, g, t, betas = _translation_input("A", 2, (-1, -1))
    refl = [af.affine_reflection(d, b) for b in betas]
    for p in pth.enumerate_paths(d, g, t, betas):
        assert p.start == t
        assert len(p.ends) == len(p.folds) + 1
        assert set(p.quantum_folds) <= set(p.folds)
        # ends is the running product of reflections at the folds
        z = t
        for j, end in zip(p.folds, p.ends[1:]):
            z = af.multiply(z, refl[j - 1])
            assert end == z
        assert pth.end_weight(p) == p.ends[-1].wt
        assert pth.end_dir(p) == p.ends[-1].dir
        assert pth.qwt_degree(p) == sum(betas[j - 1].deg for j in p.quantum_folds)


def test_reversed_enumeration_swaps_edge_kinds():
    d, g, t, betas = _translation_input("A", 1, (-1,))
    fwd = list(pth.enumerate_paths(d, g, t, betas))
    rev = list(pth.enumerate_paths(d, g, t, betas, reversed=True))
    assert [p.folds for p in fwd] == [(), (1,)]
    assert [p.folds for p in rev] == [(), (1,)]
    # forward, the fold at 1 rides a covering edge; reversed, a quantum one
    assert fwd[1].quantum_folds == ()
    assert rev[1].quantum_folds == (1,)


def test_malformed_betas_rejected():
    d = datum_of("A", 2)
    g = graph_of("A", 2)
    z0 = af.ext_identity(d)
    with pytest.raises(ValueError, match="zero real part"):
        pth.count(d, g, z0, [AffineCoroot((0, 0), 1)])
    with pytest.raises(ValueError, match="not a coroot"):
        pth.count(d, g, z0, [AffineCoroot((2, 0), 1)])


def test_export_json_records():
    d, g, t, betas = _translation_input("A", 1, (-1,))
    out = json.loads(pth.export_json(d, pth.enumerate_paths(d, g, t, betas)))
    assert len(out) == 2
    assert out[0] == {
        "folds": [], "quantum_folds": [], "end_weight": [-1],
        "end_dir": "e", "qwt_degree": 0,
    }
    assert out[1]["folds"] == [1]
    assert out[1]["end_weight"] == [1]


def test_export_csv_parses_back():
    d, g, t, betas = _translation_input("A", 2, (-1, 0))
    text = pth.export_csv(d, pth.enumerate_paths(d, g, t, betas))
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 3
    assert rows[0]["end_dir"] == "e"
    assert {r["end_weight"] for r in rows} == {"-1 0", "1 -1", "0 1"}
