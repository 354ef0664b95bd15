"""Exact-arithmetic calculus for generating-function dualities.

Everything is computed over arbitrary-precision rationals: polynomial
arithmetic and Sturm chains (exactpoly), the Euler transform and its
reciprocity statements (eulerxform), the classical and discrete
orthogonal families with their identity registry (families), hill
polynomials (hills), root-localization certificates (rootloc) and the
type-A dimension polynomials (weyl).  The `hillpoly` console command
exposes families, transforms, verification suites and the exhaustive
certified sweep.
"""

from .exactpoly import NEG_INF, Poly, SturmChain, sturm_root_count
from .eulerxform import (
    CheckResult,
    EulerPair,
    defect,
    euler_transform,
    hecke_symmetry_check,
    inverse_euler,
    popoviciu_check,
)
from .hills import Hill, YoungDiagram, double, enumerate_hills, undouble
from .rootloc import (
    DiffeqResult,
    LineCertificate,
    RootCheck,
    critical_line_check,
    diffeq_search,
    negative_simple_roots_check,
)

__all__ = [
    "NEG_INF",
    "Poly",
    "SturmChain",
    "sturm_root_count",
    "CheckResult",
    "EulerPair",
    "defect",
    "euler_transform",
    "hecke_symmetry_check",
    "inverse_euler",
    "popoviciu_check",
    "Hill",
    "YoungDiagram",
    "double",
    "enumerate_hills",
    "undouble",
    "DiffeqResult",
    "LineCertificate",
    "RootCheck",
    "critical_line_check",
    "diffeq_search",
    "negative_simple_roots_check",
]

__version__ = "0.1.0"
