"""Correction coefficients of the midpoint Euler-Maclaurin continuation.

The alpha coefficients come from the recurrence

    alpha_{2k+1} = -sum_{j=1..k} alpha_{2(k-j)+1} * c_{j-1} + c_k,
    c_j = 1 / (2**(2j+2) * (2j+3)!),

evaluated in exact rational arithmetic. ``c_j`` is also the weight of the
``(s)_{2j+2} x**(-s-2j-2)`` term in the Taylor expansion of the per-unit
remainder integral (see :func:`a8_term_coefficient`). The same numbers equal
``-B_{2k+2}(1/2) / (2k+2)!`` with ``B`` the Bernoulli polynomials; that
identity is checked in the tests but not used here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DataError, DomainError

DEFAULT_ORDER = 25


def a8_term_coefficient(k: int) -> Fraction:
    """Exact ``1 / (2**(2k+2) * (2k+3)!)``."""
    if k < 0:
        raise DomainError(f"k must be nonnegative, got {k}")
    return Fraction(1, 2 ** (2 * k + 2) * math.factorial(2 * k + 3))


@dataclass(frozen=True)
class CoefficientTable:
    order: int
    alpha: tuple[Fraction, ...]
    alpha_float: tuple[float, ...]

    def __len__(self):
        return len(self.alpha)

    def truncated(self, order: int) -> "CoefficientTable":
        if not 0 <= order <= self.order:
            raise DomainError(f"cannot truncate order {self.order} table to {order}")
        return CoefficientTable(order, self.alpha[: order + 1], self.alpha_float[: order + 1])


@lru_cache(maxsize=None)
def _alpha_list(K: int) -> tuple[Fraction, ...]:
    if K == 0:
        return (Fraction(1, 24),)
    prev = _alpha_list(K - 1)
    acc = a8_term_coefficient(K)
    for j in range(1, K + 1):
        acc -= prev[K - j] * a8_term_coefficient(j - 1)
    return prev + (acc,)


def build_alpha_table(K: int) -> CoefficientTable:
    """Exact alpha_{2k+1} for k = 0..K with correctly rounded float shadows."""
    if K < 0:
        raise DomainError(f"order must be nonnegative, got {K}")
    alpha = _alpha_list(K)
    for k, a in enumerate(alpha):
        if a == 0 or (a > 0) != (k % 2 == 0):
            raise DataError(f"alpha_{2 * k + 1} = {a} breaks sign alternation")
    # float(Fraction) rounds to nearest
    return CoefficientTable(K, alpha, tuple(float(a) for a in alpha))


def scale_beta_exact(table: CoefficientTable, x0) -> list[Fraction]:
    """Exact ``alpha_{2k+1} * x0**-(2k+1)`` with ``x0`` taken as its exact rational value."""
    if not x0 > 0:
        raise DomainError(f"x0 must be positive, got {x0!r}")
    x = Fraction(x0)
    return [a / x ** (2 * k + 1) for k, a in enumerate(table.alpha)]


def scale_beta(table: CoefficientTable, x0: float) -> list[float]:
    """beta_{2k+1} = alpha_{2k+1} * x0**-(2k+1), correctly rounded."""
    return [float(b) for b in scale_beta_exact(table, x0)]


def ratio_sequence(table: CoefficientTable) -> list[float]:
    """Consecutive ratios alpha_{2k+1}/alpha_{2k-1} for k = 1..K.

    These approach -1/(4 pi^2) as k grows.
    """
    if table.order < 1:
        raise DomainError("ratio sequence needs order >= 1")
    out = []
    for k in range(1, table.order + 1):
        if table.alpha[k - 1] == 0:
            raise DataError(f"alpha_{2 * k - 1} vanishes")
        out.append(float(table.alpha[k] / table.alpha[k - 1]))
    return out


RATIO_LIMIT = -1.0 / (4.0 * math.pi**2)
