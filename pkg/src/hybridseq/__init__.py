"""Exact arithmetic for hybrid numbers and their Fibonacci-type sequences.

The ring adjoins three units to the rationals — imaginary i (i² = −1),
dual ε (ε² = 0) and hyperbolic h (h² = 1) — glued together by
i·h = −h·i = ε + i.  On top of it the package provides (p,q)-Fibonacci,
(p,q)-Lucas and seed-generalized (Horadam) sequences with hybrid values,
a closed-form evaluator over the quadratic extension ring Q[s]/(s²−D),
a generating-function expansion, and a grid verifier that recomputes both
sides of every product identity through independent code paths.
"""

from .binet import (
    BinetContext,
    LemmaMismatchError,
    alphabar_squared,
    betabar_squared,
    binet_fib,
    binet_horadam,
    binet_lucas,
    make_context,
    product_alphabar_betabar,
    product_betabar_alphabar,
)
from .exactarith import (
    IrrationalResidueError,
    QuadExt,
    Rational,
    format_rational,
    parse_rational,
    roots,
)
from .genfunc import ExpansionReport, SeriesExpansion, binomial_series_coeff, check_expansion, expand
from .hybrid import (
    BASIS,
    BASIS_LABELS,
    HybridNorm,
    HybridNumber,
    basis_table,
    commutator,
    format_basis_product,
)
from .identities import (
    DEFAULT_GRID,
    SUITES,
    GridConfig,
    GridConfigError,
    IdentityCase,
    SuiteResult,
    VariantResult,
    VerificationReport,
    adjacent_commutator,
    cassini,
    catalan,
    diag_commutator,
    docagne,
    grid_param_sets,
    horadam_commutator,
    lucas_fib_exchange,
    parse_grid_file,
    parse_grid_text,
    run_suite,
    square_difference,
)
from .sequences import (
    HoradamParams,
    ScalarIdentityReport,
    SeqCache,
    fib,
    fib_params,
    horadam,
    horadam_fast,
    hybrid_seq,
    lucas,
    lucas_params,
    verify_scalar_identities,
)

__version__ = "0.1.0"

__all__ = [
    "BASIS",
    "BASIS_LABELS",
    "BinetContext",
    "DEFAULT_GRID",
    "ExpansionReport",
    "GridConfig",
    "GridConfigError",
    "HoradamParams",
    "HybridNorm",
    "HybridNumber",
    "IdentityCase",
    "IrrationalResidueError",
    "LemmaMismatchError",
    "QuadExt",
    "Rational",
    "ScalarIdentityReport",
    "SeqCache",
    "SeriesExpansion",
    "SUITES",
    "SuiteResult",
    "VariantResult",
    "VerificationReport",
    "adjacent_commutator",
    "alphabar_squared",
    "basis_table",
    "betabar_squared",
    "binet_fib",
    "binet_horadam",
    "binet_lucas",
    "binomial_series_coeff",
    "cassini",
    "catalan",
    "check_expansion",
    "commutator",
    "diag_commutator",
    "docagne",
    "expand",
    "fib",
    "fib_params",
    "format_basis_product",
    "format_rational",
    "grid_param_sets",
    "horadam",
    "horadam_commutator",
    "horadam_fast",
    "hybrid_seq",
    "lucas",
    "lucas_fib_exchange",
    "lucas_params",
    "make_context",
    "parse_grid_file",
    "parse_grid_text",
    "parse_rational",
    "product_alphabar_betabar",
    "product_betabar_alphabar",
    "roots",
    "run_suite",
    "square_difference",
    "verify_scalar_identities",
]
