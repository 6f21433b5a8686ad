"""Independent reference values used as ground truth in the tests.

Nothing here touches the Euler-Maclaurin machinery. The strip oracle is the
alternating eta series accelerated with Chebyshev weights (the
Cohen/Rodriguez-Villegas/Zagier scheme): for a moment sequence
``a_k = int x**k dmu`` the weighted sum with ``n`` terms has error at most
``int |dmu| / T_n(3)``. For ``a_k = (k+1)**-s`` the total variation of ``mu``
is ``Gamma(sigma)/|Gamma(s)|``. Left of ``Re s = 0`` the series is first
differenced ``m`` times, which keeps the measure finite down to
``Re s > -m``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate

from . import coefficients
from .errors import (
    AmbiguousBracketError,
    ConditioningError,
    ConvergenceError,
    DomainError,
    NotFoundError,
    PoleError,
)
from .numerics import as_complex, pow_neg_s, rgamma_abs, rising_factorial

_UNIT_ROUNDOFF = 2.0**-53
_LOG_CHEB = math.log(3.0 + math.sqrt(8.0))
MAX_TERMS = 400
MIN_TOL = 1e-13


@dataclass(frozen=True)
class OracleResult:
    value: complex
    abs_error_bound: float
    terms_used: int


@lru_cache(maxsize=64)
def _cheb_weights(n: int) -> tuple[float, ...]:
    """Weights ``1 - d_k/d_n`` for k < n, with d_n = T_n(3)."""
    d = []
    acc = Fraction(0)
    for i in range(n + 1):
        acc += Fraction(math.factorial(n + i - 1) * 4**i, math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    return tuple(float(1 - dk / dn) for dk in d[:n])


def _log_cheb_dn(n: int) -> float:
    # log T_n(3) >= n log(3 + sqrt 8) - log 2
    return n * _LOG_CHEB - math.log(2.0)


def eta(s, tol: float = 1e-12) -> OracleResult:
    """Dirichlet eta with a guaranteed error bound, valid for Re s > -2."""
    s = as_complex(s)
    if tol < MIN_TOL:
        raise DomainError(f"tol must be >= {MIN_TOL:g}")
    sigma = s.real
    if sigma <= -2.0:
        raise DomainError("eta oracle is limited to Re s > -2")
    m = 0 if sigma > 0 else (1 if sigma > -1 else 2)

    rg = rgamma_abs(s)
    if rg == 0.0:
        log_mass = -math.inf
    else:
        log_mass = math.lgamma(sigma + m) + math.log(rg) - m * math.log(2.0)

    abs_s = abs(s)
    binom = [math.comb(m, j) for j in range(m + 1)]
    cache: dict[int, complex] = {}

    def a(k):
        if k not in cache:
            cache[k] = pow_neg_s(k + 1, s)
        return cache[k]

    def term_err(k):
        return (5.0 + 2.0 * abs_s * math.log(k + 1)) * _UNIT_ROUNDOFF

    # head: sum_{j<m} (Delta^j a)_0 / 2^{j+1}
    head = []
    head_err = 0.0
    for j in range(m):
        for i in range(j + 1):
            c = (-1) ** i * math.comb(j, i) / 2 ** (j + 1)
            head.append(c * a(i))
            head_err += abs(c * a(i)) * term_err(i)

    n = 8
    while True:
        trunc = 0.0 if log_mass == -math.inf else math.exp(log_mass - _log_cheb_dn(n))
        weights = _cheb_weights(n)
        parts = list(head)
        round_err = head_err
        for k in range(n):
            b = 0j
            for j in range(m + 1):
                c = (-1) ** j * binom[j] / 2**m
                b += c * a(k + j)
                round_err += weights[k] * abs(c * a(k + j)) * term_err(k + j)
            parts.append((-1) ** k * weights[k] * b)
        value = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
        round_err = 1.01 * (round_err + (2 * m + 2) * _UNIT_ROUNDOFF * sum(abs(p) for p in parts)) \
            + _UNIT_ROUNDOFF * abs(value)
        bound = trunc + round_err
        if bound <= tol:
            return OracleResult(value, bound, n + m)
        if n >= MAX_TERMS or (trunc < 0.01 * round_err):
            raise ConvergenceError(
                f"eta({s}) cannot reach tol={tol:g}: truncation {trunc:.3g}, rounding {round_err:.3g}"
            )
        n = min(MAX_TERMS, n + 8)


def zeta_oracle(s, tol: float = 1e-12) -> OracleResult:
    """zeta(s) = eta(s) / (1 - 2**(1-s))."""
    s = as_complex(s)
    if abs(s - 1.0) <= 1e-12:
        raise PoleError("zeta has a pole at s = 1")
    factor = 1.0 - pow_neg_s(2.0, s - 1.0)
    if abs(factor) < math.log(2.0) * 1e-9:
        raise ConditioningError(f"1 - 2^(1-s) vanishes near s = {s}; use dirichlet_partial for Re s > 1")
    res = eta(s, max(MIN_TOL, tol * min(1.0, abs(factor))))
    value = res.value / factor
    bound = res.abs_error_bound / abs(factor) + 4.0 * (1.0 + abs(s)) * _UNIT_ROUNDOFF * abs(value)
    if bound > tol:
        raise ConvergenceError(f"zeta({s}) bound {bound:.3g} exceeds tol={tol:g}")
    return OracleResult(value, bound, res.terms_used)


def dirichlet_partial(s, M: int) -> complex:
    """Partial sum of n**-s for n = 1..M."""
    if M < 1:
        raise DomainError(f"M must be >= 1, got {M}")
    s = as_complex(s)
    n = np.arange(1, M + 1, dtype=float)
    # ascending n, pairwise summation
    terms = np.exp(-s * np.log(n))
    return complex(terms.sum())


def _primes_upto(n: int) -> np.ndarray:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve)


def euler_product_partial(s, p_max: int) -> complex:
    """Product of 1/(1 - P**-s) over primes P <= p_max; needs Re s > 1."""
    s = as_complex(s)
    if s.real <= 1.0:
        raise DomainError("Euler product diverges for Re s <= 1")
    if p_max < 2:
        raise DomainError("p_max must be >= 2")
    result = complex(1.0)
    for p in _primes_upto(int(p_max)):
        result /= 1.0 - pow_neg_s(float(p), s)
    return result


def quadrature_a7_a8(N_plus_m: float, s, K: int) -> tuple[complex, complex]:
    """Remainder integral over one unit cell and its even-power Taylor series.

    Returns ``(integral, series)`` where ``integral`` is
    ``int_{-1/2}^{1/2} [x**-s - (x+eta)**-s] d eta`` at ``x = N_plus_m`` by
    adaptive Gauss-Kronrod quadrature, and ``series`` is
    ``-sum_k c_k (s)_{2k+2} x**(-s-2k-2)`` for k = 0..K.
    """
    if N_plus_m < 2:
        raise DomainError("N_plus_m must be >= 2")
    if K < 0:
        raise DomainError("K must be >= 0")
    s = as_complex(s)
    x = float(N_plus_m)
    base = pow_neg_s(x, s)

    def integrand(eta_):
        return base - pow_neg_s(x + eta_, s)

    parts = []
    for part in (lambda e: integrand(e).real, lambda e: integrand(e).imag):
        val, err, info = integrate.quad(part, -0.5, 0.5, epsabs=1e-13, epsrel=0.0, limit=200, full_output=1)[:3]
        if err > 1e-12:
            raise ConvergenceError(f"quadrature error estimate {err:.3g} exceeds 1e-12")
        parts.append(val)
    integral = complex(parts[0], parts[1])

    series = 0j
    for k in range(K + 1):
        c = float(coefficients.a8_term_coefficient(k))
        series -= c * rising_factorial(s, 2 * k + 2) * pow_neg_s(x, s + 2 * k + 2)
    return integral, series


ZERO_THRESHOLD = 1e-9


def _golden_min(f, a: float, b: float, xtol: float = 1e-11, max_iter: int = 200) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= xtol:
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return c if fc <= fd else d


def critical_line_abs(t: float, tol: float = 1e-11) -> float:
    return abs(zeta_oracle(complex(0.5, t), tol).value)


def find_zero_oracle(t_lo: float, t_hi: float, sample_step: float = 0.01) -> float:
    """Ordinate of the single zeta zero on Re s = 1/2 with t in (t_lo, t_hi).

    Samples |zeta(1/2+it)|, refines every interior local minimum by
    golden-section search and keeps those where |zeta| < 1e-9.
    """
    if not 0 < t_lo < t_hi:
        raise DomainError("need 0 < t_lo < t_hi")
    count = max(20, int(math.ceil((t_hi - t_lo) / sample_step)))
    ts = np.linspace(t_lo, t_hi, count + 1)
    vals = [critical_line_abs(float(t)) for t in ts]
    found = []
    for i in range(1, count):
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]:
            t_star = _golden_min(critical_line_abs, float(ts[i - 1]), float(ts[i + 1]))
            if critical_line_abs(t_star) < ZERO_THRESHOLD:
                found.append(t_star)
    if not found:
        raise NotFoundError(f"no zero of zeta(1/2+it) for t in ({t_lo}, {t_hi})")
    if len(found) > 1:
        raise AmbiguousBracketError(f"{len(found)} zeros in ({t_lo}, {t_hi}): {found}")
    return found[0]
