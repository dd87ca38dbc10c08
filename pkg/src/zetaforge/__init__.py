"""Exact zeta functions of varieties over finite fields.

Point counts over GF(q^n), rational zeta functions rebuilt from them,
Weil-conjecture checks, and Hasse-Weil coefficients of elliptic curves.
"""

__version__ = "0.1.0"

from .characters import MultChar, jacobi_sum
from .counting import (
    CountSeries,
    PolynomialTerm,
    VarietySpec,
    closed_point_degrees,
    count_affine,
    count_diagonal_charsum,
    count_elliptic,
    count_projective,
    count_series,
    weierstrass_spec,
)
from .cyclotomic import CyclotomicInt
from .field import FieldDesc, FieldElement, construct_field, discrete_log, field_arithmetic
from .hasse_weil import IntegerCurve, LocalFactor, dirichlet_expand, euler_partial_value, local_factor, reduce_mod_p
from .series import PowerSeriesQ
from .weil import (
    WeilReport,
    betti_profile,
    check_functional_equation,
    check_integrality,
    check_point_bounds,
    check_riemann_hypothesis,
    classify_weil_number,
    weil_report,
)
from .zeta import (
    RationalZeta,
    WeilFactorization,
    abelian_exterior_factor,
    assemble_alternating_product,
    counts_from_zeta,
    curve_numerator_from_counts,
    diagonal_middle_degree,
    reconstruct_rational,
    zeta_series_from_counts,
)
