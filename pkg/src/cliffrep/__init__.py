"""Clifford algebra tables and faithful real matrix representations.

Blade arithmetic and multivectors live in :mod:`cliffrep.blades`, the
multiplication/scalar tables in :mod:`cliffrep.tables`, the canonical
signed-permutation representation and exact inversion in
:mod:`cliffrep.matrep`, expression parsing and formatting in
:mod:`cliffrep.expr`, and the command-line interface in
:mod:`cliffrep.cli`.
"""

from .blades import (
    Multivector,
    SignedBlade,
    Signature,
    basis_ordinal,
    blade_product,
    blade_square_sign,
    dual_blade,
    duality_coefficient,
    geometric_product,
    grade,
    grade_projection,
    indices_of,
    mask_from_indices,
    ordinal_to_indexset,
    permutation_sign,
    pseudoscalar,
    quadratic_form,
    scalar_product,
    sigma,
)
from .errors import (
    CapExceeded,
    CliffrepError,
    DegenerateDual,
    DegenerateSignature,
    IndexOutOfRange,
    ParseError,
    SignatureMismatch,
    Singular,
    ZeroDenominator,
    ZeroDivisor,
)
from .expr import (
    format_matrix,
    format_mult_table,
    format_multivector,
    format_rep_matrix,
    format_scalar_table,
    parse,
)
from .matrep import (
    RepMatrix,
    matrix_inverse_exact,
    mv_inverse,
    rep_blade,
    rep_multivector,
    unrep,
    verify_representation,
)
from .tables import (
    MultTable,
    ScalarTable,
    SparseSignedMatrix,
    build_mult_table,
    build_scalar_table,
    check_table_lemmas,
    coefficient_matrix,
    mirror_ordinal,
)

__version__ = "0.1.0"
