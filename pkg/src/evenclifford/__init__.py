"""Even Clifford hermitian structures on R^N, as exact linear algebra.

Explicit integer matrix realizations of the even Clifford bivector
images, exact centralizers and normalizers of the embedded spin(r) inside
so(N), dimension bounds for the automorphism group, the gap inequality,
and the catalog of maximal-symmetry model spaces.
"""

from .linalg import (
    Matrix,
    Rational,
    SubalgebraBasis,
    antisym_basis,
    commutator,
    nullspace_basis,
    project_off_span,
    rank,
)
from .clifford import (
    CliffordMonomial,
    GammaSet,
    IrrepInfo,
    build_even_generators,
    clifford_product,
    irrep_info,
    schur_check,
)
from .structures import (
    EvenCliffordStructure,
    Multiplicities,
    R4Split,
    VerifyReport,
    build,
    r4_quaternionic_split,
    structure_from_json_dict,
    structure_to_json_dict,
    verify,
)
from .normalizers import (
    centralizer_basis,
    expected_dims,
    isotropy_dim,
    normalizer_basis,
    numerical_commutant_dims,
)
from .bounds import (
    BoundsReport,
    UndefinedForRankClass,
    bounds_report,
    constraints_ok,
    d_C,
    d_M,
    d_max,
    gap_inequality_holds,
    gap_threshold,
)
from .atlas import SymmetricSpaceModel, cross_check, models_for

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "Rational",
    "SubalgebraBasis",
    "antisym_basis",
    "commutator",
    "nullspace_basis",
    "project_off_span",
    "rank",
    "CliffordMonomial",
    "GammaSet",
    "IrrepInfo",
    "build_even_generators",
    "clifford_product",
    "irrep_info",
    "schur_check",
    "EvenCliffordStructure",
    "Multiplicities",
    "R4Split",
    "VerifyReport",
    "build",
    "r4_quaternionic_split",
    "structure_from_json_dict",
    "structure_to_json_dict",
    "verify",
    "centralizer_basis",
    "expected_dims",
    "isotropy_dim",
    "normalizer_basis",
    "numerical_commutant_dims",
    "BoundsReport",
    "UndefinedForRankClass",
    "bounds_report",
    "constraints_ok",
    "d_C",
    "d_M",
    "d_max",
    "gap_inequality_holds",
    "gap_threshold",
    "SymmetricSpaceModel",
    "cross_check",
    "models_for",
]
