"""
Exact combinatorics of quantum Bruhat graphs and folded alcove paths.

The package computes, over the integers: quantum Bruhat graphs of the
simple types, beta sequences of (extended) affine Weyl group elements,
folded alcove path enumerations, their generating functions, the t=0 and
t=infinity specializations of nonsymmetric Macdonald polynomials, and
characters and dimensions of generalized Weyl modules.
"""

from .lattice import RootDatum, build_datum
from .weylgroup import WeylElt
from .affine import AffineCoroot, ExtAffineElt
from .qbg import QuantumBruhatGraph
from .paths import AlcovePath
from .genfun import LaurentPoly
from .macdonald import SpecializationReport

__version__ = "0.1.0"

__all__ = [
    "RootDatum", "build_datum", "WeylElt", "AffineCoroot", "ExtAffineElt",
    "QuantumBruhatGraph", "AlcovePath", "LaurentPoly", "SpecializationReport",
    "__version__",
]
