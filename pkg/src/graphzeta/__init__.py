"""Exact zeta and L-functions of abelian multigraph covers.

The package constructs abelian covers of multigraphs from voltage
assignments, computes reciprocal Ihara zeta and Artin-Ihara L-polynomials
through the three-term determinant formulas, assembles the equivariant
special-value element of the integral group ring, and machine-verifies
the identities these objects satisfy (factorization, annihilation of the
Jacobian, the augmentation-ideal index, spanning-tree relations, and the
norm-kernel order).  Every computation is exact; floating point is never
used.
"""

from .covers import (
    DerivedCover,
    DisconnectedCoverError,
    VoltageAssignment,
    a_chi,
    cor,
    derive,
    is_connected_cover,
    quotient,
    res,
    sigma_matrices,
    voltages_from_json,
    voltages_to_json,
)
from .exact import (
    Character,
    CycPoly,
    CyclotomicInteger,
    FiniteAbelianGroup,
    GroupRingElement,
    IntMatrix,
    IntPoly,
    adjugate,
    char_eval,
    cyc_matrix_det,
    cyc_poly_matrix_det,
    cyclotomic_polynomial,
    gr_det,
    int_det,
    kernel_basis,
    lattice_contains,
    poly_matrix_det,
    smith_normal_form,
    taylor_at_one,
)
from .lfunctions import (
    LData,
    SpecialValueMismatchError,
    ThetaElement,
    ZetaData,
    l_reciprocal,
    product_check,
    theta_element,
    zeta_reciprocal,
    zeta_reciprocal_hashimoto,
)
from .multigraph import (
    GraphFormatError,
    GraphValidationError,
    JacobianStructure,
    Multigraph,
    betti,
    complete_graph,
    cycle_graph,
    graph_from_json,
    graph_to_json,
    jacobian,
    kappa,
    kappa_bruteforce,
    matrices,
    require_valid,
    validate,
)
from .verifier import (
    CheckOutcome,
    KurodaNotApplicableError,
    VerificationReport,
    jac0_order,
    run_checks,
    verify_annihilation,
    verify_divisibility,
    verify_index,
    verify_jac0,
    verify_kuroda,
    verify_product,
)

__version__ = "0.1.0"
