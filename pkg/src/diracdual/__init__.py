"""Exact spin norms, Dirac cohomology and unitarity decisions for the
complex classical groups.

Everything is integer arithmetic on doubled half-integer coordinates;
see :mod:`diracdual.weights` for the conventions.
"""

from .weights import HalfIntVec, RootDatum, ZhParam, vec

__all__ = ["HalfIntVec", "RootDatum", "ZhParam", "vec"]

__version__ = "0.1.0"
