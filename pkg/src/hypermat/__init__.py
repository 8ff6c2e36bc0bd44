"""Gauss and Appell hypergeometric functions of matrix arguments.

Truncated-series evaluation with non-commuting square matrix parameters, a
catalog of parameter-shift recursion identities, and machinery to verify
every catalogued identity numerically on commuting parameter families.
"""

from .calculus import (
    CommutingFamily,
    PochhammerChain,
    gamma_limit,
    multinomial,
    pochhammer,
    pochhammer_c_decrement_residual,
    pochhammer_inverse,
    pochhammer_inverse_step,
    pochhammer_shift_identity_residual,
    random_commuting_family,
    reciprocal_gamma_shift_residual,
    scalar_gamma,
)
from .errors import (
    DimensionMismatch,
    DomainViolation,
    GenerationFailed,
    HypermatError,
    HypothesisViolated,
    NonConvergent,
    NotConverged,
    Overflow,
    ParseError,
    SingularMatrix,
    SingularShift,
    UnknownIdentity,
)
from .linalg import (
    LuFactorization,
    commutator_norm,
    frobenius_norm,
    inverse,
    is_invertible,
    is_positive_stable,
    lu_factor,
    mat_exp,
    matmul,
    solve,
    spectrum,
)
from .recursions import (
    IdentityDescriptor,
    VerificationReport,
    catalog,
    check_hypotheses,
    eval_rhs,
    run_campaign,
    verify_identity,
)
from .series import (
    DEFAULT_CONFIG,
    EvalPoint,
    EvalReport,
    FunctionKind,
    ParameterSet,
    SeriesConfig,
    appell_f1,
    appell_f2,
    appell_f3,
    appell_f4,
    check_domain,
    evaluate,
    gauss_2f1,
)

__version__ = "0.1.0"

__all__ = [
    "CommutingFamily",
    "DEFAULT_CONFIG",
    "DimensionMismatch",
    "DomainViolation",
    "EvalPoint",
    "EvalReport",
    "FunctionKind",
    "GenerationFailed",
    "HypermatError",
    "HypothesisViolated",
    "IdentityDescriptor",
    "LuFactorization",
    "NonConvergent",
    "NotConverged",
    "Overflow",
    "ParameterSet",
    "ParseError",
    "PochhammerChain",
    "SeriesConfig",
    "SingularMatrix",
    "SingularShift",
    "UnknownIdentity",
    "VerificationReport",
    "appell_f1",
    "appell_f2",
    "appell_f3",
    "appell_f4",
    "catalog",
    "check_domain",
    "check_hypotheses",
    "commutator_norm",
    "eval_rhs",
    "evaluate",
    "frobenius_norm",
    "gamma_limit",
    "gauss_2f1",
    "inverse",
    "is_invertible",
    "is_positive_stable",
    "lu_factor",
    "mat_exp",
    "matmul",
    "multinomial",
    "pochhammer",
    "pochhammer_c_decrement_residual",
    "pochhammer_inverse",
    "pochhammer_inverse_step",
    "pochhammer_shift_identity_residual",
    "random_commuting_family",
    "reciprocal_gamma_shift_residual",
    "run_campaign",
    "scalar_gamma",
    "solve",
    "spectrum",
    "verify_identity",
    "__version__",
]
