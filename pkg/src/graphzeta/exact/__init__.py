"""Exact integer, polynomial, cyclotomic, and group-ring arithmetic."""

from .cyclotomic import (
    CycPoly,
    CyclotomicInteger,
    cyc_matrix_det,
    cyc_poly_matrix_det,
    divexact,
)
from .groupring import GroupRingElement, gr_det
from .groups import (
    Character,
    FiniteAbelianGroup,
    char_eval,
    quotient_group,
    subgroup_closure,
)
from .intmatrix import (
    IntMatrix,
    SmithNormalForm,
    adjugate,
    in_column_span,
    int_det,
    kernel_basis,
    lattice_contains,
    smith_normal_form,
)
from .polynomials import (
    IntPoly,
    cyclotomic_polynomial,
    poly_matrix_det,
    taylor_at_one,
)

__all__ = [
    "Character",
    "CycPoly",
    "CyclotomicInteger",
    "FiniteAbelianGroup",
    "GroupRingElement",
    "IntMatrix",
    "IntPoly",
    "SmithNormalForm",
    "adjugate",
    "char_eval",
    "in_column_span",
    "cyc_matrix_det",
    "cyc_poly_matrix_det",
    "cyclotomic_polynomial",
    "divexact",
    "gr_det",
    "int_det",
    "kernel_basis",
    "lattice_contains",
    "poly_matrix_det",
    "quotient_group",
    "smith_normal_form",
    "subgroup_closure",
    "taylor_at_one",
]
