"""Euler-Maclaurin continuation of the Riemann zeta function.

Exact correction coefficients, a closed evaluator for the critical strip,
critical-line zero finding, symmetry-residual audits for hypothetical
off-line zeros, and independent oracles to check all of it.
"""

__version__ = "0.1.0"

from .coefficients import CoefficientTable, build_alpha_table, scale_beta
from .errors import (
    CapabilityError,
    ConvergenceError,
    DomainError,
    PoleError,
    SingularError,
    ZetaError,
)
from .oracle import eta, zeta_oracle
from .symmetry_audit import audit, make_quadruplet
from .zero_finder import enumerate_zeros
from .zeta_em import ExtensionParams, choose_params, evaluate

__all__ = [
    "CapabilityError",
    "CoefficientTable",
    "ConvergenceError",
    "DomainError",
    "ExtensionParams",
    "PoleError",
    "SingularError",
    "ZetaError",
    "audit",
    "build_alpha_table",
    "choose_params",
    "enumerate_zeros",
    "eta",
    "evaluate",
    "make_quadruplet",
    "scale_beta",
    "zeta_oracle",
]
