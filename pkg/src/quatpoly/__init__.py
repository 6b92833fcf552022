"""quatpoly: central polynomials over the quaternions.

Exact (rational) and floating quaternion arithmetic, the central polynomial
ring with its ordered evaluation, embedded spheres, conjugation-orbit zero
set membership, and witness-tree certificates for the vanishing propagation
from commuting zeros to all quaternionic zeros.
"""

from ._kernel import BACKEND as KERNEL_BACKEND
from .errors import (
    AllReal,
    ArityExceeded,
    ArityMismatch,
    DivisionByZero,
    ExactConjugatorUnavailable,
    ExactnessError,
    ExactSphereUnavailable,
    Inconsistent,
    InvariantViolation,
    NotCommuting,
    NotUnitImaginary,
    ParseError,
    QuatpolyError,
    Underdetermined,
    VerificationFailed,
    ZeroCoordinate,
    ZeroDirection,
)
from .ideals import (
    LeftIdeal,
    OrbitResult,
    Verdict,
    characteristic_ideal,
    in_V,
    in_Vc,
    interpolate_vanishing,
    maximal_ideal_gens,
    orbit_closure,
    suffix_conjugate,
)
from .linalg import HMatrix, nullspace_left, residual_left, solve_left
from .poly import CentralPoly, evaluate, partial_evaluate_prefix, poly_mul
from .quaternion import (
    PureDirection,
    QI,
    QJ,
    QK,
    Quaternion,
    SliceForm,
    commutes,
    conjugate_point,
    conjugator_pair,
    in_S,
    pairwise_commuting,
    qinv,
    qmul,
    same_direction,
    slice_split,
)
from .scalarmode import DEFAULT_EPSILON, epsilon, get_epsilon, set_epsilon
from .spheres import (
    EmbeddedSphere,
    affine_coeffs,
    contains,
    point_at,
    sphere_of,
    vanishes_on_sphere,
)
from .witness import (
    BlockDecomposition,
    Certificate,
    NullstellensatzReport,
    WitnessNode,
    WitnessTree,
    build_tree,
    decompose,
    nullstellensatz_check,
    propagate,
    verify_tree_in_V,
)

__version__ = "0.1.0"
