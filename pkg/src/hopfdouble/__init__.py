"""Exact computations with semisimple Hopf algebras and their Drinfeld doubles.

Scalars live in cyclotomic fields and every identity is checked exactly.
The main entry points are re-exported here.
"""

from __future__ import annotations

from .double import DoubleContext, drinfeld_double, fourier_check
from .examples import (
    bismash_product,
    builtin,
    dual_group_algebra,
    group_algebra,
    kac_paljutkin_h8,
)
from .hopf import HopfAlgebra, classify_subspace, dual, quotient, verify_axioms
from .io import load, save
from .linalg import Subspace
from .repthy import enumerate_fusion_subcategories, irreducible_characters
from .scalars import CycScalar, cyc, zeta
from .verify import THEOREMS, Report, verify_theorem

__all__ = [
    "CycScalar", "DoubleContext", "HopfAlgebra", "Report", "Subspace", "THEOREMS",
    "bismash_product", "builtin", "classify_subspace", "cyc", "drinfeld_double", "dual",
    "dual_group_algebra", "enumerate_fusion_subcategories", "fourier_check", "group_algebra",
    "irreducible_characters", "kac_paljutkin_h8", "load", "quotient", "save", "verify_axioms",
    "verify_theorem", "zeta",
]
