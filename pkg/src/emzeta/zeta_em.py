"""Euler-Maclaurin continuation of zeta into the critical strip.

With the split point ``x0 = N + 1/2``::

    Z(s) = sum_{n<=N} n**-s - x0**(1-s)/(1-s)
           - x0**-s * sum_{k<=K} beta_{2k+1} (s)_{2k+1},
    beta_{2k+1} = alpha_{2k+1} x0**-(2k+1).

Multiplying out the bracketed form ``x0**-s [x0/(s-1) - sum beta (s)_{2k+1}
+ sum (n/x0)**-s]`` gives the same expression, so the sign convention is the
one that reproduces zeta(2). Dividing that bracket by ``x0 s`` splits it into
``1/(s(s-1)) + G(s) + F(s)``, so ``Z = 0`` iff ``s**2 - s + q(s) = 0`` with
``q = 1/(G + F)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .coefficients import DEFAULT_ORDER, build_alpha_table, scale_beta
from .errors import CapabilityError, DomainError, PoleError, SingularError
from .numerics import as_complex, pow_neg_s

MAX_ORDER = DEFAULT_ORDER
MAX_IMAG = 100.0
POLE_RADIUS = 1e-12


@dataclass(frozen=True)
class ExtensionParams:
    N: int
    K: int
    x0: float = field(init=False)

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise DomainError(f"N must be a positive integer, got {self.N!r}")
        if int(self.K) != self.K or self.K < 0:
            raise DomainError(f"K must be a nonnegative integer, got {self.K!r}")
        # every n <= N then satisfies n < x0
        object.__setattr__(self, "x0", self.N + 0.5)


@dataclass(frozen=True)
class EvaluationResult:
    value: complex
    params: ExtensionParams
    truncation_estimate: float


@lru_cache(maxsize=None)
def _alpha_floats(K: int) -> tuple[float, ...]:
    return build_alpha_table(K).alpha_float


@lru_cache(maxsize=512)
def beta_coefficients(N: int, K: int) -> tuple[float, ...]:
    """beta_{2k+1} for x0 = N + 1/2, correctly rounded from exact rationals."""
    return tuple(scale_beta(build_alpha_table(K), N + 0.5))


@lru_cache(maxsize=512)
def beta_over_x0(N: int, K: int) -> tuple[float, ...]:
    """beta_{2k+1}/x0 = alpha_{2k+1} x0**-(2k+2), correctly rounded."""
    table = build_alpha_table(K)
    x0 = 2 * N + 1  # x0 = x0_num / 2
    return tuple(float(a * 2 ** (2 * k + 2) / x0 ** (2 * k + 2)) for k, a in enumerate(table.alpha))


def correction_magnitudes(s: complex, N: int, kmax: int) -> list[float]:
    """|x0**-s beta_{2k+1} (s)_{2k+1}| for k = 0..kmax."""
    x0 = N + 0.5
    alphas = _alpha_floats(kmax)
    logx = math.log(x0)
    mags = []
    rf = abs(s)
    for k in range(kmax + 1):
        if k > 0:
            rf *= abs(s + 2 * k - 1) * abs(s + 2 * k)
        mags.append(abs(alphas[k]) * rf * math.exp(-(s.real + 2 * k + 1) * logx))
    return mags


def choose_params(s, target_tol: float = 1e-10) -> ExtensionParams:
    """Pick (N, K) for an evaluation at ``s``.

    N starts at ``max(10, ceil(|Im s|/pi))``. K is the first index whose next
    correction term is below ``target_tol``, or the index where the terms
    stop decreasing (optimal truncation), capped at 25. If the smallest
    term is still above ``target_tol`` the cut N is enlarged.
    """
    s = as_complex(s)
    if not 0 < target_tol < 1:
        raise DomainError("target_tol must lie in (0, 1)")
    if abs(s.imag) > MAX_IMAG:
        raise CapabilityError(f"|Im s| = {abs(s.imag):g} exceeds the binary64 cap of {MAX_IMAG:g}")
    N = max(10, math.ceil(abs(s.imag) / math.pi))
    for _ in range(12):
        mags = correction_magnitudes(s, N, MAX_ORDER + 1)
        K = MAX_ORDER
        for k in range(MAX_ORDER + 1):
            if mags[k + 1] <= target_tol or mags[k + 1] >= mags[k]:
                K = k
                break
        if mags[K + 1] <= target_tol:
            return ExtensionParams(N, K)
        N = int(math.ceil(N * 1.5))
    raise CapabilityError(f"no (N, K) reaches tol={target_tol:g} at s={s}")


def _fsum_complex(parts) -> complex:
    parts = list(parts)
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def _correction_terms(s: complex, params: ExtensionParams, coeffs) -> list[complex]:
    """coeffs[k] * (s)_{2k+1} for k = 0..K, ascending k."""
    terms = []
    rf = s
    for k in range(params.K + 1):
        if k > 0:
            rf = rf * (s + (2 * k - 1)) * (s + 2 * k)
        terms.append(coeffs[k] * rf)
    return terms


def evaluate(s, params: ExtensionParams | None = None) -> EvaluationResult:
    s = as_complex(s)
    if abs(s - 1.0) <= POLE_RADIUS:
        raise PoleError("Z has a pole at s = 1")
    if params is None:
        params = choose_params(s)
    N, x0 = params.N, params.x0
    betas = beta_coefficients(N, params.K)
    x0_ms = pow_neg_s(x0, s)
    parts = [pow_neg_s(n, s) for n in range(1, N + 1)]
    parts.append(-x0 * x0_ms / (1.0 - s))
    parts.extend(-x0_ms * t for t in _correction_terms(s, params, betas))
    value = _fsum_complex(parts)
    estimate = correction_magnitudes(s, N, params.K + 1)[-1]
    return EvaluationResult(value, params, estimate)


def F_term(s, params: ExtensionParams) -> complex:
    """F(s, N) = sum_{n<=N} (n/x0)**-s / (x0 s)."""
    s = as_complex(s)
    if s == 0:
        raise DomainError("F(s, N) is undefined at s = 0")
    x0 = params.x0
    return _fsum_complex(pow_neg_s(n / x0, s) for n in range(1, params.N + 1)) / (x0 * s)


def G_term(s, params: ExtensionParams) -> complex:
    """G(s, K) = -(1/x0) sum_k beta_{2k+1} (s+1)(s+2)...(s+2k)."""
    s = as_complex(s)
    coeffs = beta_over_x0(params.N, params.K)
    terms = []
    rf = complex(1.0)
    for k in range(params.K + 1):
        if k > 0:
            rf = rf * (s + (2 * k - 1)) * (s + 2 * k)
        terms.append(coeffs[k] * rf)
    return -_fsum_complex(terms)


def q_em(s, params: ExtensionParams) -> complex:
    denom = G_term(s, params) + F_term(s, params)
    if abs(denom) <= 1e-300:
        raise SingularError(f"G + F vanishes at s = {s}")
    return 1.0 / denom


def zero_residual(s, params: ExtensionParams) -> complex:
    """s**2 - s + q(s); vanishes exactly at zeros of the extension."""
    s = as_complex(s)
    return s * s - s + q_em(s, params)
