"""Exact lattice-polytope computations: Gorenstein duality, Cayley and
nef-partition structure, stringy E-polynomials."""

try:
    from ._gorkit import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _gorkit import *  # noqa: F401,F403  (build-tree layout)
