import math
import random

import mpmath
import pytest
from hypothesis import given, strategies as st

from emzeta.errors import DomainError
from emzeta.symmetry_audit import (
    AuditConfig,
    Verdict,
    audit,
    check_identities,
    cosh_sinh_numerator,
    eq30_system,
    eq37_value,
    f_symmetry_residual,
    g_symmetry_residual,
    identity_scale,
    make_quadruplet,
)
from emzeta.zeta_em import ExtensionParams, q_em

ZERO1 = 14.134725
xis = st.floats(-0.499, 0.499, allow_nan=False)
ys = st.floats(0.01, 60, allow_nan=False)


def test_make_quadruplet():
    q = make_quadruplet(0.1, 20)
    assert q.points == (0.6 + 20j, 0.4 + 20j, 0.6 - 20j, 0.4 - 20j)
    q = make_quadruplet(0, ZERO1)
    assert q.s1 == q.s2 and q.s3 == q.s4
    with pytest.raises(DomainError):
        make_quadruplet(0.5, 1)
    with pytest.raises(DomainError):
        make_quadruplet(0.1, 0)


@given(xis, ys)
def test_quadruplet_invariants(xi, y0):
    q = make_quadruplet(xi, y0)
    assert (q.s1 + q.s4).real == 1.0 and (q.s2 + q.s3).real == 1.0
    assert q.s3 == q.s1.conjugate() and q.s4 == q.s2.conjugate()
    assert q.rho == pytest.approx(math.hypot(xi, y0))
    assert q.rho * math.sin(q.alpha_angle) == pytest.approx(xi, abs=1e-14 * q.rho)
    assert q.rho * math.cos(q.alpha_angle) == pytest.approx(y0, rel=1e-14)


@given(xis, ys)
def test_identities_hold(xi, y0):
    q = make_quadruplet(xi, y0)
    assert all(r < 1e-14 * identity_scale(q) for r in check_identities(q))


def test_identities_random_candidates():
    rng = random.Random(20150307)
    for _ in range(100):
        q = make_quadruplet(rng.uniform(-0.49, 0.49), rng.uniform(0.1, 100))
        assert max(check_identities(q)) < 1e-14 * identity_scale(q)


def _f_reference(n, x0, s):
    mpmath.mp.dps = 40
    r = mpmath.mpf(n) / mpmath.mpf(x0)
    s = mpmath.mpc(s.real, s.imag)
    return complex(r ** (-s) / s - r ** (s - 1) / (1 - s))


@pytest.mark.parametrize("y0", [10, 15, 20, 30])
def test_f_residual_purely_imaginary_on_line(y0):
    q = make_quadruplet(0, y0)
    for n in range(1, 11):
        f = f_symmetry_residual(n, 10.5, q)
        assert abs(f.value.real) < 1e-13 * abs(f.value)
        assert abs(f.closed.real) < 1e-13 * abs(f.closed)


def test_f_residual_off_line_has_real_part():
    q = make_quadruplet(0.2, 15)
    f = f_symmetry_residual(3, 10.5, q)
    ref = _f_reference(3, 10.5, q.s1)
    assert f.direct == pytest.approx(ref, rel=1e-13)
    assert abs(f.direct.real) > 1e-3


@given(xis, st.floats(0.5, 60), st.integers(1, 30))
def test_f_closed_form_matches_direct(xi, y0, n):
    x0 = n + 0.5 + 3
    f = f_symmetry_residual(n, x0, make_quadruplet(xi, y0))
    assert f.relative_disagreement < 1e-12


def test_f_residual_domain():
    with pytest.raises(DomainError):
        f_symmetry_residual(11, 10.5, make_quadruplet(0, 5))


def test_eq30_vanishes_at_zero_offset_and_det_is_zero():
    for V in (0.3, 7.0, 25.0):
        for n in (1, 4, 10):
            r = eq30_system(0.0, V, n, 10.5)
            assert r.lhs1 == 0 and r.lhs2 == 0 and r.det == 0
    assert eq30_system(0.37, 12.0, 2, 10.5).det == 0


def test_eq30_measured_against_numerator_condition():
    # printed system vs the real/imaginary parts of 2W cosh(WL) + sinh(WL):
    # the measured values differ, recorded here as a regression
    r = eq30_system(0.1, 15, 3, 10.5)
    num = cosh_sinh_numerator(0.1, 15, 3, 10.5)
    assert r.lhs1 == pytest.approx(0.017249508679524784, rel=1e-12)
    assert r.lhs2 == pytest.approx(-3.7920812394867185, rel=1e-12)
    mpmath.mp.dps = 40
    W = mpmath.mpc(0.1, 15)
    L = mpmath.log(mpmath.mpf(3) / mpmath.mpf(10.5))
    ref = complex(2 * W * mpmath.cosh(W * L) + mpmath.sinh(W * L))
    assert num == pytest.approx(ref, rel=1e-12)
    assert abs(r.lhs1 - num.real) > 0.1 and abs(r.lhs2 - num.imag) > 1
    # on the line the printed system is satisfied while the numerator is not
    assert abs(cosh_sinh_numerator(0.0, 15, 3, 10.5)) > 1


def test_g_residual():
    q = make_quadruplet(0, ZERO1)
    g = g_symmetry_residual(3, q)
    assert abs(g.real) < 1e-12 * abs(g)
    assert g == eq37_value(ZERO1, 3)
    g = g_symmetry_residual(3, make_quadruplet(0.2, ZERO1))
    assert abs(g.real) > 1
    s = 0.5
    assert (s + 1) * (s + 2) - (s - 2) * (s - 3) == 0
    with pytest.raises(DomainError):
        g_symmetry_residual(0, q)


def test_eq37_values():
    assert eq37_value(1, 1) == 8j
    assert eq37_value(0, 1) == 0
    v = eq37_value(14, 2)
    assert abs(v.real) <= 1e-13 * abs(v)


@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("rho", [0.5, 1, 14, 33.3, 50])
def test_eq37_purely_imaginary(k, rho):
    v = eq37_value(rho, k)
    assert abs(v.real) <= 1e-13 * abs(v)


def test_eq37_against_expansion():
    # (i+3/2)(i+5/2) = 11/4 + 4i and (i-3/2)(i-5/2) = 11/4 - 4i
    assert (1j + 1.5) * (1j + 2.5) == 2.75 + 4j
    assert (1j - 1.5) * (1j - 2.5) == 2.75 - 4j


def test_q_reflection_at_quadruplet():
    p = ExtensionParams(10, 8)
    q = make_quadruplet(0.2, 18)
    assert abs(q_em(q.s3, p) - q_em(q.s1, p).conjugate()) <= 1e-12 * abs(q_em(q.s1, p))


def test_audit_on_line_zero():
    r = audit(0, ZERO1)
    assert r.verdict is Verdict.ON_LINE_CONSISTENT
    d = r.to_dict()
    for key in ("identity_residuals", "f_residuals", "eq30", "g_residuals", "eq37", "q", "verdict"):
        assert key in d
    assert d["verdict"] == "on-line-consistent"


@pytest.mark.parametrize("xi", [0.1, -0.1, 0.25, -0.25])
def test_audit_off_line(xi):
    r = audit(xi, ZERO1)
    assert r.verdict is Verdict.OFF_LINE_ASYMMETRIC
    assert all(ratio > 10 for ratio in r.asymmetry_ratios)
    # q(s1) = conj q(s2) fails away from the line while the reflection pair holds
    assert r.q_pairing_residuals["q1_minus_conj_q2"] > 1
    assert r.q_pairing_residuals["q3_minus_conj_q1"] < 1e-12 * abs(r.q_values[0])


def test_audit_on_line_non_zero_is_inconclusive():
    r = audit(0, 10)
    assert r.verdict is Verdict.INCONCLUSIVE
    assert r.z_abs > 0.1
    assert max(r.identity_residuals) < 1e-14 * identity_scale(r.candidate)


def test_audit_threshold_is_configurable():
    r = audit(0.1, ZERO1, config=AuditConfig(asymmetry_factor=math.inf))
    assert r.verdict is Verdict.INCONCLUSIVE
