"""Exact computational Lie theory for simple Lie algebras.

Root systems in Bourbaki numbering, Weyl dimensions, Freudenthal
multiplicities, Klimyk tensor decompositions, enumeration of irreps by
dimension, and the arithmetic around Tannaka groups of theta divisors.
"""

__version__ = "0.1.0"

from lierep._backend import BACKEND, BudgetExceeded
from lierep.reps import Irrep, dual, freudenthal_multiplicities, weyl_dimension
from lierep.rootsys import (
    RootSystem,
    SimpleType,
    build,
    dominant_conjugate,
    dual_weight,
    format_weight,
    parse_weight,
    weight_pairing,
)
from lierep.tensor import contains_summand_of_dim, decompose

__all__ = [
    "BACKEND",
    "BudgetExceeded",
    "Irrep",
    "RootSystem",
    "SimpleType",
    "build",
    "contains_summand_of_dim",
    "decompose",
    "dominant_conjugate",
    "dual",
    "dual_weight",
    "format_weight",
    "freudenthal_multiplicities",
    "parse_weight",
    "weight_pairing",
    "weyl_dimension",
]
