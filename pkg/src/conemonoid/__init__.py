"""Exact analysis of submonoids of finite-rank free commutative monoids.

The package computes conic hulls and face lattices over exact rational
(and real quadratic) arithmetic, enumerates atoms and factorizations of
submonoids of N^d, and classifies factorization-theoretic properties with
machine-checkable witnesses.
"""

__version__ = "0.1.0"

from .exactarith import QuadScalar, Rational, sqrt_int  # noqa: F401
from .cone import Cone, realize, interior_simplex, triangulate, is_rational_ray  # noqa: F401
