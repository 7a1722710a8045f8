"""qid: exact verification of q-series identities in the field Q(q).

The library proves, in exact arithmetic, the classical q-identities that
follow from Newton and Lagrange interpolation, together with the general
two-parameter identity over the rational alphabet (a - b q^i)/(c - z q^i)
that specializes to all of them.
"""

from .algebra import (
    DivisionByZero,
    NonExactDivision,
    PoleAtEvaluation,
    Polynomial,
    Rational,
    RationalFunction,
    UndefinedGcd,
    balanced_product,
    balanced_sum,
    one_like,
    poly_gcd,
    ratfunc_normalize,
    zero_like,
)
from .identities import (
    GridExhausted,
    GridIdentity,
    GridProof,
    IDENTITY_IDS,
    IdentityParams,
    IdentityReport,
    ParameterError,
    grid_prove,
    proposition1_degree_bounds,
    proposition1_grid_identity,
    verify_dilcher,
    verify_eq8_x1,
    verify_newton_lagrange_eq7,
    verify_power_sum,
    verify_prodinger,
    verify_proposition1,
    verify_uchimura,
    verify_uchimura_generalized,
    verify_van_hamme,
)
from .interpolation import (
    Alphabet,
    DividedDifferenceTable,
    DuplicatePoint,
    Interpolant,
    divided_difference_apply,
    lagrange_interpolant,
    newton_interpolant,
    newton_remainder,
    newton_table,
    r_product,
    swap_divided_difference,
    top_divided_difference,
    verify_cauchy_kernel,
    verify_power_sum_h,
)
from .qseries import (
    complete_homogeneous,
    complete_homogeneous_recurrence,
    gauss_binomial,
    pochhammer,
    q_power,
    q_var,
)

__version__ = "0.1.0"
