"""Symmetry residuals for a hypothetical off-line quadruplet of zeros.

A candidate is fixed by its offset ``xi`` from the critical line and its
ordinate ``y0``; the four points are ``1/2 +- xi +- i y0``. The audit
computes the residuals that an off-line quadruplet would have to annul and
compares them with the on-line (``xi = 0``) case at the same ordinate.
It measures; it does not prove anything about where zeros lie.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field

from .errors import DomainError, SingularError
from .numerics import pow_neg_s, rising_factorial
from .zeta_em import ExtensionParams, choose_params, evaluate, q_em, zero_residual


class Verdict(str, enum.Enum):
    ON_LINE_CONSISTENT = "on-line-consistent"
    OFF_LINE_ASYMMETRIC = "off-line-asymmetric"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class QuadrupletCandidate:
    xi: float
    y0: float
    s1: complex
    s2: complex
    s3: complex
    s4: complex
    rho: float
    alpha_angle: float

    @property
    def W(self) -> complex:
        """s1 - 1/2 = U + iV with U = rho sin(alpha), V = rho cos(alpha)."""
        return complex(self.xi, self.y0)

    @property
    def points(self) -> tuple[complex, complex, complex, complex]:
        return (self.s1, self.s2, self.s3, self.s4)


def make_quadruplet(xi: float, y0: float) -> QuadrupletCandidate:
    if not -0.5 < xi < 0.5:
        raise DomainError(f"xi must lie in (-1/2, 1/2), got {xi!r}")
    if not y0 > 0:
        raise DomainError(f"y0 must be positive, got {y0!r}")
    # hi in [1/2, 1) so 1 - hi is exact and hi + (1 - hi) == 1 in floats
    hi = 0.5 + abs(xi)
    lo = 1.0 - hi
    right, left = (hi, lo) if xi >= 0 else (lo, hi)
    s1 = complex(right, y0)
    s2 = complex(left, y0)
    return QuadrupletCandidate(
        xi=xi, y0=y0, s1=s1, s2=s2, s3=s1.conjugate(), s4=s2.conjugate(),
        rho=math.hypot(xi, y0), alpha_angle=math.atan2(xi, y0),
    )


def check_identities(q: QuadrupletCandidate) -> list[float]:
    """Magnitudes of the six reflection identities linking s1..s4."""
    s1, s2, s3, s4 = q.points
    c = complex.conjugate
    return [
        abs(1 - s1 - s4),
        abs(1 - s2 - s3),
        abs(s1 * (1 - s1) - s1 * c(s2)),
        abs(s3 * (1 - s3) - s2 * c(s1)),
        abs(s2 * (1 - s2) - c(s1 * (1 - s1))),
        abs(s4 * (1 - s4) - c(s3 * (1 - s3))),
    ]


def identity_scale(q: QuadrupletCandidate) -> float:
    return 1.0 + abs(q.s1) ** 2


@dataclass(frozen=True)
class FResidual:
    """Per-term mismatch of x0 F(s) under s -> 1 - s, in two algebraic forms."""

    n: int
    direct: complex
    closed: complex

    @property
    def value(self) -> complex:
        return self.direct

    @property
    def relative_disagreement(self) -> float:
        return abs(self.direct - self.closed) / max(abs(self.direct), 1e-300)


def f_symmetry_residual(n: int, x0: float, q: QuadrupletCandidate) -> FResidual:
    """(n/x0)**-s/s - (n/x0)**(s-1)/(1-s) at s = s1, directly and in cosh/sinh form.

    The closed form is ``sqrt(x0/n) (2W cosh(WL) + sinh(WL)) / (W**2 - 1/4)``
    with ``W = s - 1/2`` and ``L = ln(n/x0)``.
    """
    if not 1 <= n < x0:
        raise DomainError(f"need 1 <= n < x0, got n={n}, x0={x0}")
    s = q.s1
    r = n / x0
    direct = pow_neg_s(r, s) / s - pow_neg_s(r, 1.0 - s) / (1.0 - s)
    W = q.W
    denom = W * W - 0.25
    if abs(denom) < 1e-12:
        raise SingularError("W**2 - 1/4 vanishes")
    L = math.log(r)
    closed = math.sqrt(x0 / n) * (2.0 * W * cmath.cosh(W * L) + cmath.sinh(W * L)) / denom
    return FResidual(n, direct, closed)


@dataclass(frozen=True)
class Eq30Result:
    lhs1: float
    lhs2: float
    det: float


def eq30_system(U: float, V: float, n: int, x0: float) -> Eq30Result:
    """The two printed scalar conditions on (U, V) and their 2x2 determinant."""
    if not 1 <= n < x0:
        raise DomainError(f"need 1 <= n < x0, got n={n}, x0={x0}")
    L = math.log(n / x0)
    sh2u = math.sinh(2 * U * L)
    sin2v = math.sin(2 * V * L)
    lhs1 = (U * math.cosh(U * L) ** 2 * sin2v
            - V * sh2u * math.sin(V * L) ** 2
            + 0.25 * sh2u * sin2v)
    lhs2 = (V * sh2u * math.cos(V * L) ** 2
            + U * math.sinh(U * L) ** 2 * sin2v
            + 0.25 * sh2u * sin2v)
    # rows (1, -sh) and (-1, sh)
    det = 1.0 * sh2u - (-sh2u) * (-1.0)
    return Eq30Result(lhs1, lhs2, det)


def cosh_sinh_numerator(U: float, V: float, n: int, x0: float) -> complex:
    """2W cosh(WL) + sinh(WL); the cosh/sinh residual vanishes iff this does."""
    W = complex(U, V)
    L = math.log(n / x0)
    return 2.0 * W * cmath.cosh(W * L) + cmath.sinh(W * L)


def g_symmetry_residual(k: int, q: QuadrupletCandidate) -> complex:
    """(s+1)(s+2)...(s+2k) - (s-2)(s-3)...(s-2k-1) at s = s1."""
    if k < 1:
        raise DomainError("k must be >= 1")
    s = q.s1
    upper = rising_factorial(s + 1.0, 2 * k)
    lower = complex(1.0)
    for j in range(2, 2 * k + 2):
        lower *= s - j
    return upper - lower


def eq37_value(rho: float, k: int) -> complex:
    """prod_{j=1..2k} (i rho + j + 1/2) - prod_{j=1..2k} (i rho - j - 1/2)."""
    if k < 1:
        raise DomainError("k must be >= 1")
    upper = complex(1.0)
    lower = complex(1.0)
    for j in range(1, 2 * k + 1):
        upper *= complex(j + 0.5, rho)
        lower *= complex(-(j + 0.5), rho)
    return upper - lower


@dataclass(frozen=True)
class AuditConfig:
    asymmetry_factor: float = 10.0
    imaginary_rel_tol: float = 1e-13
    zero_rel_tol: float = 1e-3
    identity_rel_tol: float = 1e-14


@dataclass
class SymmetryReport:
    candidate: QuadrupletCandidate
    params: ExtensionParams
    identity_residuals: list[float]
    f_residuals: list[FResidual]
    eq30_values: list[tuple[int, Eq30Result, complex]]
    g_residuals: list[tuple[int, complex]]
    eq37: complex
    q_values: list[complex]
    q_pairing_residuals: dict[str, float]
    z_abs: float
    zero_residual_rel: float
    verdict: Verdict = Verdict.INCONCLUSIVE
    asymmetry_ratios: list[float] = field(default_factory=list)

    def real_parts(self) -> list[float]:
        """|Re| of every F and G symmetry residual, F first."""
        return [abs(f.value.real) for f in self.f_residuals] + [abs(g.real) for _, g in self.g_residuals]

    def imaginary_structure_holds(self, rel_tol: float) -> bool:
        vals = [f.value for f in self.f_residuals] + [g for _, g in self.g_residuals]
        return all(abs(v.real) <= rel_tol * abs(v) for v in vals)

    def to_dict(self) -> dict:
        def cx(z):
            return [z.real, z.imag]

        return {
            "xi": self.candidate.xi,
            "y0": self.candidate.y0,
            "N": self.params.N,
            "K": self.params.K,
            "identity_residuals": list(self.identity_residuals),
            "f_residuals": [
                {"n": f.n, "direct": cx(f.direct), "closed": cx(f.closed)} for f in self.f_residuals
            ],
            "eq30": [
                {"n": n, "lhs1": r.lhs1, "lhs2": r.lhs2, "det": r.det, "cosh_sinh_numerator": cx(num)}
                for n, r, num in self.eq30_values
            ],
            "g_residuals": [{"k": k, "value": cx(g)} for k, g in self.g_residuals],
            "eq37": cx(self.eq37),
            "q": [cx(v) for v in self.q_values],
            "q_pairing": dict(self.q_pairing_residuals),
            "abs_Z": self.z_abs,
            "zero_residual_rel": self.zero_residual_rel,
            "asymmetry_ratios": list(self.asymmetry_ratios),
            "verdict": self.verdict.value,
        }


def _raw_report(xi: float, y0: float, params: ExtensionParams) -> SymmetryReport:
    cand = make_quadruplet(xi, y0)
    x0 = params.x0
    f_res = [f_symmetry_residual(n, x0, cand) for n in range(1, params.N + 1)]
    eq30 = [
        (n, eq30_system(cand.xi, cand.y0, n, x0), cosh_sinh_numerator(cand.xi, cand.y0, n, x0))
        for n in range(1, params.N + 1)
    ]
    kmax = max(params.K, 1)
    g_res = [(k, g_symmetry_residual(k, cand)) for k in range(1, kmax + 1)]
    qs = [q_em(s, params) for s in cand.points]
    q1, q2, q3, q4 = qs
    pairing = {
        "q1_minus_conj_q2": abs(q1 - q2.conjugate()),
        "q3_minus_conj_q4": abs(q3 - q4.conjugate()),
        "q3_minus_conj_q1": abs(q3 - q1.conjugate()),
    }
    s1 = cand.s1
    z_abs = abs(evaluate(s1, params).value)
    zr = abs(zero_residual(s1, params)) / abs(s1 * s1 - s1)
    return SymmetryReport(
        candidate=cand, params=params, identity_residuals=check_identities(cand),
        f_residuals=f_res, eq30_values=eq30, g_residuals=g_res,
        eq37=eq37_value(cand.rho, kmax), q_values=qs, q_pairing_residuals=pairing,
        z_abs=z_abs, zero_residual_rel=zr,
    )


def audit(xi: float, y0: float, params: ExtensionParams | None = None,
          config: AuditConfig = AuditConfig()) -> SymmetryReport:
    """Full residual report for the candidate (xi, y0) with a verdict.

    ``xi = 0``: on-line-consistent when the F and G residuals are purely
    imaginary, the identities hold and the point is a zero of the
    continuation. ``xi != 0``: off-line-asymmetric when some real-part
    residual exceeds ``asymmetry_factor`` times its ``xi = 0`` counterpart.
    Anything else is inconclusive.
    """
    if params is None:
        params = choose_params(complex(0.5 + abs(xi), y0), 1e-10)
    report = _raw_report(xi, y0, params)
    scale = identity_scale(report.candidate)
    identities_ok = all(r < config.identity_rel_tol * scale for r in report.identity_residuals)
    if xi == 0:
        if (identities_ok and report.imaginary_structure_holds(config.imaginary_rel_tol)
                and report.zero_residual_rel < config.zero_rel_tol):
            report.verdict = Verdict.ON_LINE_CONSISTENT
        return report
    baseline = _raw_report(0.0, y0, params)
    ratios = [
        r / b if b > 0 else math.inf
        for r, b in zip(report.real_parts(), baseline.real_parts())
    ]
    report.asymmetry_ratios = ratios
    if any(r > config.asymmetry_factor for r in ratios):
        report.verdict = Verdict.OFF_LINE_ASYMMETRIC
    return report
