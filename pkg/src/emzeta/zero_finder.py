"""Zeros of the continuation on the critical line.

The search runs only on Re s = 1/2: |Z(1/2+it)| is sampled, each local
minimum below 0.5 becomes a bracket, and a damped Newton iteration in the
real unknown t drives Z to zero. Off-line questions belong to
:mod:`emzeta.symmetry_audit`.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .coefficients import build_alpha_table
from .errors import DomainError, RefinementError, SingularError
from .zeta_em import ExtensionParams, beta_over_x0, choose_params, evaluate
from .numerics import pow_neg_s

CANDIDATE_THRESHOLD = 0.5
VERIFIED_THRESHOLD = 1e-8
CONVERGED_ABS = 1e-9
MAX_ITER = 50
DEDUP_SEPARATION = 1e-4
DEFAULT_STEP = 0.05


class CoarseScanWarning(UserWarning):
    """Two candidate brackets sit so close that the step may merge zeros."""


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float


@dataclass(frozen=True)
class ZeroRecord:
    ordinate: float
    residual_abs: float
    a18_residual: float
    params: ExtensionParams
    iterations: int


@dataclass(frozen=True)
class OrdinateResidual:
    lhs: float
    rhs: complex
    mismatch: float

    @property
    def rhs_real(self) -> float:
        return self.rhs.real

    @property
    def rhs_imag(self) -> float:
        return self.rhs.imag


def default_policy(t: float) -> ExtensionParams:
    return choose_params(complex(0.5, t), 1e-10)


def _abs_z(t: float, policy) -> float:
    return abs(evaluate(complex(0.5, t), policy(t)).value)


def scan_candidates(t_min: float, t_max: float, step: float = DEFAULT_STEP,
                    params_policy: Callable[[float], ExtensionParams] = default_policy) -> list[Bracket]:
    """Brackets [t_i, t_i + step] around local minima of |Z(1/2+it)| below 0.5."""
    if t_min < 0:
        raise DomainError("t_min must be >= 0")
    if not 0 < step <= 0.1:
        raise DomainError("step must lie in (0, 0.1]")
    if t_max <= t_min:
        return []
    count = int(math.ceil((t_max - t_min) / step - 1e-9))
    ts = [t_min + i * step for i in range(count + 1)]
    ts[-1] = min(ts[-1], t_max)
    vals = [_abs_z(t, params_policy) for t in ts]
    brackets = []
    for i in range(1, len(ts) - 1):
        if vals[i] < CANDIDATE_THRESHOLD and vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]:
            # for a V-shaped |Z| the zero sits on the side of the smaller neighbour
            if vals[i - 1] < vals[i + 1]:
                brackets.append(Bracket(ts[i - 1], ts[i]))
            else:
                brackets.append(Bracket(ts[i], ts[i + 1]))
    for a, b in zip(brackets, brackets[1:]):
        if b.lo - a.hi < 2 * step:
            warnings.warn(f"brackets {a} and {b} are within two steps; refine the scan step",
                          CoarseScanWarning, stacklevel=2)
    return brackets


def refine_zero(bracket: Bracket, params: ExtensionParams | None = None) -> ZeroRecord:
    """Damped Newton iteration on Z(1/2+it) over real t, started mid-bracket."""
    lo, hi = bracket.lo, bracket.hi
    if params is None:
        params = default_policy(0.5 * (lo + hi))
    width = hi - lo
    window = (lo - 2 * width, hi + 2 * width)

    def z(t):
        return evaluate(complex(0.5, t), params).value

    t = 0.5 * (lo + hi)
    zt = z(t)
    for it in range(1, MAX_ITER + 1):
        h = 1e-6 * max(1.0, abs(t))
        dz = (z(t + h) - z(t - h)) / (2 * h)
        if dz == 0:
            break
        # Z(1/2+it) is a real rotation of a real function; the real part of
        # the complex step is the real Newton update
        delta = (zt / dz).real
        lam = 1.0
        while True:
            t_new = t - lam * delta
            z_new = z(t_new)
            if abs(z_new) < abs(zt) or lam < 1e-4:
                break
            lam *= 0.5
        moved = abs(t_new - t)
        t, zt = t_new, z_new
        if not window[0] <= t <= window[1]:
            raise RefinementError(f"iteration left the bracket around ({lo}, {hi})", bracket)
        if abs(zt) < CONVERGED_ABS and moved < 1e-9:
            return ZeroRecord(t, abs(zt), residual_a18(t, params).mismatch, params, it)
    raise RefinementError(f"no convergence in bracket ({lo}, {hi}); |Z| = {abs(zt):.3g}", bracket)


def residual_a18(Y: float, params: ExtensionParams, *, form: str = "beta") -> OrdinateResidual:
    """Both sides of the explicit ordinate equation at s = 1/2 + iY.

    ``lhs = 1/4 + Y**2``; ``rhs = -s / (sum_k c_k (s)_{2k+1} - sum_n n**-s / x0**(1-s))``
    after dividing numerator and denominator by Gamma(s). ``c_k`` is
    ``beta_{2k+1}/x0`` (``form="beta"``) or ``alpha_{2k+1} x0**-2(k+1)``
    (``form="alpha"``); both are rounded from the same exact rational.
    """
    if not Y > 0:
        raise DomainError("Y must be positive")
    s = complex(0.5, Y)
    N, x0 = params.N, params.x0
    if form == "beta":
        coeffs = beta_over_x0(N, params.K)
    elif form == "alpha":
        coeffs = _alpha_x0_coefficients(N, params.K)
    else:
        raise DomainError(f"unknown form {form!r}")
    parts = []
    rf = s
    for k in range(params.K + 1):
        if k > 0:
            rf = rf * (s + (2 * k - 1)) * (s + 2 * k)
        parts.append(coeffs[k] * rf)
    x0_pow = pow_neg_s(x0, 1.0 - s)
    parts.extend(-pow_neg_s(n, s) * x0_pow for n in range(1, N + 1))
    denom = complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))
    if abs(denom) <= 1e-300:
        raise SingularError(f"ordinate-equation denominator vanishes at Y = {Y}")
    rhs = -s / denom
    lhs = 0.25 + Y * Y
    return OrdinateResidual(lhs, rhs, abs(lhs - rhs.real))


def _alpha_x0_coefficients(N: int, K: int) -> tuple[float, ...]:
    x0 = Fraction(2 * N + 1, 2)
    return tuple(float(a * x0 ** (-2 * (k + 1))) for k, a in enumerate(build_alpha_table(K).alpha))


def enumerate_zeros(t_min: float, t_max: float, target_count: int | None = None,
                    step: float = DEFAULT_STEP) -> list[ZeroRecord]:
    """Sorted, deduplicated, verified zero records with ordinates in [t_min, t_max].

    With ``target_count`` the scan step is halved (down to step/8) until at
    least that many zeros are found; the list is cut to ``target_count``.
    """
    records: list[ZeroRecord] = []
    for attempt in range(4):
        records = []
        for br in scan_candidates(t_min, t_max, step):
            try:
                rec = refine_zero(br)
            except RefinementError:
                continue
            if rec.residual_abs < VERIFIED_THRESHOLD and t_min <= rec.ordinate <= t_max:
                records.append(rec)
        records.sort(key=lambda r: r.ordinate)
        deduped: list[ZeroRecord] = []
        for rec in records:
            if deduped and rec.ordinate - deduped[-1].ordinate < DEDUP_SEPARATION:
                if rec.residual_abs < deduped[-1].residual_abs:
                    deduped[-1] = rec
                continue
            deduped.append(rec)
        records = deduped
        if target_count is None or len(records) >= target_count:
            break
        step /= 2
    if target_count is not None:
        records = records[:target_count]
    return records
