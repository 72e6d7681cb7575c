"""Shared fixtures: root data and quantum Bruhat graphs are expensive to
rebuild, so they are cached per type for the whole session."""

from functools import lru_cache

import pytest

from alcovepaths.lattice import build_datum
from alcovepaths import qbg


@lru_cache(maxsize=None)
def datum_of(family: str, rank: int):
    return build_datum(family, rank)


@lru_cache(maxsize=None)
def graph_of(family: str, rank: int):
    return qbg.build(datum_of(family, rank))


@pytest.fixture
def datum():
    return datum_of


@pytest.fixture
def graph():
    return graph_of
