"""Oracle layer: identity suite, PDE residual, quadrature, cross-checks."""
import math

import numpy as np
import pytest

from morse_pdcm import (
    MassKind,
    MassProfile,
    MorseParams,
    PhasePoint,
    ReCase,
    SpecialCase,
    case_ia,
    case_iia,
    constant_mass,
    potential_at,
)
from morse_pdcm.errors import DomainError, NegativeRadicand, NotNormalizable
from morse_pdcm.verify import (
    long_form_energy_gap,
    coefficient_identity_residuals,
    pde_convergence_order,
    pde_residual,
    quadrature_norm_check,
    reality_crosscheck,
    specialization_check,
)

ORIGIN = PhasePoint(0.0, 0.0)


def grid_points(lo, hi, n):
    return [PhasePoint(x, p)
            for p in np.linspace(lo, hi, n) for x in np.linspace(lo, hi, n)]


# ------------------------------------------------------- identity suite

def test_identities_constant_mass_all_six_tiny():
    res = coefficient_identity_residuals(MorseParams(0.5, 0.0, 1.0, 0.0),
                                         constant_mass(1.0), ORIGIN)
    assert len(res) == 6
    assert max(res) < 1e-12


def test_identities_random_general_linear():
    rng = np.random.default_rng(101)
    n_ok = 0
    while n_ok < 300:
        prof = MassProfile(
            MassKind.GENERAL_LINEAR,
            c=rng.uniform(-0.3, 0.3), d=rng.uniform(-0.3, 0.3),
            e1=rng.uniform(0.4, 1.8), e2=rng.uniform(-0.8, 0.8),
        )
        params = MorseParams(rng.uniform(0.05, 1.5), 0.0,
                             rng.uniform(0.3, 1.5), rng.uniform(-1.2, 1.2),
                             hbar=rng.uniform(0.7, 1.4))
        at = PhasePoint(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        try:
            res = coefficient_identity_residuals(params, prof, at)
        except Exception:
            continue
        assert max(res) < 1e-10
        n_ok += 1


def test_identities_propagate_negative_radicand():
    with pytest.raises(NegativeRadicand):
        coefficient_identity_residuals(MorseParams(-0.5, 0.0, 1.0, 0.0),
                                       constant_mass(1.0), ORIGIN)


def test_identities_hold_across_sign_regimes():
    # negative well depth (real amplitude whenever v0r and the denominator
    # share a sign), negative a_r, |a_i| > |a_r|: the algebra is sign-blind.
    rng = np.random.default_rng(99)
    n_ok = 0
    seen_neg_v0r = seen_neg_ar = False
    while n_ok < 500:
        prof = MassProfile(
            MassKind.GENERAL_LINEAR,
            c=rng.uniform(-0.5, 0.5), d=rng.uniform(-0.5, 0.5),
            e1=rng.uniform(0.3, 2.2), e2=rng.uniform(-1.2, 1.2),
        )
        params = MorseParams(v0r=rng.uniform(-1.5, 1.5), v0i=rng.uniform(-1, 1),
                             a_r=rng.uniform(-1.5, 1.5), a_i=rng.uniform(-1.5, 1.5),
                             hbar=rng.uniform(0.5, 2.0))
        at = PhasePoint(rng.uniform(-2, 2), rng.uniform(-2, 2))
        try:
            res = coefficient_identity_residuals(params, prof, at)
        except (DomainError, ValueError):
            continue
        n_ok += 1
        seen_neg_v0r |= params.v0r < 0
        seen_neg_ar |= params.a_r < 0
        assert max(res) < 1e-10
    assert seen_neg_v0r and seen_neg_ar


# --------------------------------------------------------- PDE residual

def test_pde_residual_constant_mass_equals_twice_potential():
    # Constant complex mass: the closed form solves the sign-inverted
    # potential, so the residual converges to (2 V_r, -2 V_i).
    ratio = 0.6 / 0.91  # constraint-consistent v0i/v0r for m=(1,0), a=(1,0.3)
    params = MorseParams(0.5, 0.5 * ratio, 1.0, 0.3)
    prof = constant_mass(1.0)
    at = PhasePoint(0.25, -0.15)
    v = potential_at(params, at)
    res_r, res_i = pde_residual(params, prof, at, step=2.5e-4)
    assert res_r == pytest.approx(2.0 * v.real, rel=1e-6)
    assert res_i == pytest.approx(-2.0 * v.imag, rel=1e-6)


def test_pde_residual_real_morse_case():
    # a_i = 0, v0i = 0, real constant mass: the classic sub-case from the
    # design notes.  Residual -> 2 V_r, imaginary residual -> 0.
    params = MorseParams(0.5, 0.0, 1.0, 0.0)
    prof = constant_mass(1.0)
    at = PhasePoint(0.25, -0.15)
    v = potential_at(params, at)
    res_r, res_i = pde_residual(params, prof, at, step=2.5e-4)
    assert res_r == pytest.approx(2.0 * v.real, rel=1e-6)
    assert abs(res_i) < 0.06  # pure phase-oscillation leftover, not ~2V scale


def test_pde_residual_pdcm_profile_differs_from_twice_potential():
    # Position-dependent ansatz parameters contribute extra derivative
    # terms: the residual is finite but no longer 2V.
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = MassProfile(MassKind.GENERAL_LINEAR, c=0.1, d=0.05, e1=1.0, e2=0.2)
    at = PhasePoint(0.3, -0.2)
    v = potential_at(params, at)
    res_r, _ = pde_residual(params, prof, at, step=2.5e-4)
    assert math.isfinite(res_r)
    assert abs(res_r - 2.0 * v.real) > 0.01


def test_pde_convergence_order_second_order_stencil():
    params = MorseParams(0.5, 0.0, 1.0, 0.0)
    prof = constant_mass(1.0)
    order_r, order_i = pde_convergence_order(params, prof, PhasePoint(0.25, -0.15))
    assert 1.5 < order_r < 2.5
    # the imaginary half may sit at roundoff here; only check when defined
    if math.isfinite(order_i):
        assert 0.5 < order_i < 3.5


def test_pde_convergence_order_pdcm():
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = MassProfile(MassKind.GENERAL_LINEAR, c=0.1, d=0.05, e1=1.0, e2=0.2)
    order_r, order_i = pde_convergence_order(params, prof, PhasePoint(0.3, -0.2))
    assert 1.5 < order_r < 2.5
    assert 1.5 < order_i < 2.5


# ----------------------------------------------------------- quadrature

def test_quadrature_unit_pair():
    numeric, closed, rel = quadrature_norm_check(1.0, 1.0)
    assert numeric == pytest.approx(1.0, rel=1e-10)
    assert closed == 1.0
    assert rel < 1e-10


def test_quadrature_four_one():
    numeric, closed, rel = quadrature_norm_check(4.0, 1.0)
    assert closed == pytest.approx(0.25)
    assert rel < 1e-10


def test_quadrature_random_pairs():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a1, b1 = rng.uniform(0.1, 5.0, size=2)
        numeric, closed, rel = quadrature_norm_check(a1, b1)
        assert rel < 1e-8


def test_quadrature_symmetry():
    n1, _, _ = quadrature_norm_check(0.7, 2.3)
    n2, _, _ = quadrature_norm_check(2.3, 0.7)
    assert n1 == pytest.approx(n2, rel=1e-13)


def test_quadrature_rejects_nonpositive():
    with pytest.raises(NotNormalizable):
        quadrature_norm_check(-1.0, 1.0)


# ------------------------------------------------------- specialization

def test_specialization_case_ia_grid():
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = case_ia(d=0.05, e1=1.0, e2=0.2)
    rep = specialization_check(SpecialCase.IA, params, prof, grid_points(-2, 2, 50))
    assert rep.n_points > 2000
    assert rep.max_alpha_gap < 1e-12
    assert rep.max_beta_gap < 1e-12
    # energy gap is a report; at hbar = 1 it happens to be tiny
    assert rep.max_er_gap < 1e-10
    assert rep.max_ei_gap < 1e-10


def test_specialization_case_iia_grid():
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = case_iia(c=0.1, e1=1.0, e2=0.2)
    rep = specialization_check(SpecialCase.IIA, params, prof, grid_points(-2, 2, 50))
    assert rep.n_points > 2000
    assert rep.max_alpha_gap < 1e-12
    assert rep.max_beta_gap < 1e-12


def test_specialization_energy_gap_reported_for_nonunit_hbar():
    # The printed one-sided energies drop hbar, so hbar != 1 opens a gap;
    # the check reports it without failing.
    params = MorseParams(0.5, 0.0, 1.0, 0.3, hbar=2.0)
    prof = case_ia(d=0.05, e1=1.0, e2=0.2)
    rep = specialization_check(SpecialCase.IA, params, prof, grid_points(-1, 1, 10))
    assert rep.max_alpha_gap < 1e-12 and rep.max_beta_gap < 1e-12
    assert rep.max_er_gap > 0.1


# ---------------------------------------------------- reality crosscheck

def test_reality_crosscheck_constant_mass_printed_agrees():
    params = MorseParams(0.5, 0.0, 1.0, 0.5)
    rep = reality_crosscheck(ReCase.IB, params, constant_mass(1.0), grid_points(-1, 1, 8))
    assert rep.n_points == 64
    assert rep.n_root_verified == 64
    assert rep.n_printed_agree == 64


def test_reality_crosscheck_case_ib_statistics():
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = case_ia(d=0.05, e1=1.0, e2=0.2)
    rep = reality_crosscheck(ReCase.IB, params, prof, grid_points(-1, 1, 8))
    assert rep.n_points == 64
    assert rep.n_root_verified == 64
    assert rep.max_ei_at_root < 1e-9
    # printed roots disagree away from constant mass (slope-power typo)
    assert rep.n_printed_agree < rep.n_points
    assert rep.max_printed_gap > 1e-4


def test_reality_crosscheck_lambda2_degenerate_line():
    params = MorseParams(0.5, 0.0, 1.0, 0.0)  # lambda2 = 0 everywhere
    rep = reality_crosscheck(ReCase.IB, params, constant_mass(1.0), grid_points(-1, 1, 4))
    assert rep.n_points == 16
    assert rep.n_printed_degenerate == 16
    assert rep.n_root_verified == 16  # canonical linear fallback still fine


# -------------------------------------------------------------- long-form energy gap

def test_long_form_energy_gap_constant_mass():
    gap = long_form_energy_gap(MorseParams(0.5, 0.0, 1.0, 0.0), constant_mass(1.0), ORIGIN)
    assert gap.real == pytest.approx(0.0, abs=1e-14)
    assert gap.imag == pytest.approx(1.0, abs=1e-14)


# ------------------------------------------------------ bundled report

def test_kinetic_intermediates_composites():
    # A = m_r psi_r'' + m_i psi_i'' etc., assembled from the same stencil.
    from morse_pdcm import mass_at
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = MassProfile(MassKind.GENERAL_LINEAR, c=0.1, d=0.05, e1=1.0, e2=0.2)
    at = PhasePoint(0.3, -0.2)
    res_r, res_i, kin = pde_residual(params, prof, at, step=1e-3,
                                     with_intermediates=True)
    mass = mass_at(prof, at)
    # C and D are built from first-derivative psi values and exact slopes:
    # cross-check the linear relations between them.
    assert math.isfinite(kin.A) and math.isfinite(kin.B)
    lhs = mass.dm_r * kin.C + mass.dm_i * kin.D
    # (dm_r^2 + dm_i^2) psi_r' == dm_r*C + dm_i*D by construction
    psi_r1 = lhs / (mass.dm_r**2 + mass.dm_i**2)
    assert math.isfinite(psi_r1)


def test_collect_residual_report():
    from morse_pdcm.verify import collect_residual_report
    params = MorseParams(0.5, 0.0, 1.0, 0.0)
    rep = collect_residual_report(params, constant_mass(1.0), PhasePoint(0.25, -0.15))
    assert len(rep.identity_residuals) == 6 and max(rep.identity_residuals) < 1e-10
    assert math.isfinite(rep.pde_res_r)
    assert 1.5 < rep.order_r < 2.5
    assert rep.long_form_energy_gap.imag == pytest.approx(1.0, abs=1e-12)
    assert any("sign-inverted" in n for n in rep.notes)
    # constant mass: residual matches (2V_r, -2V_i) to stencil accuracy
    v = potential_at(params, PhasePoint(0.25, -0.15))
    assert rep.pde_res_r == pytest.approx(2.0 * v.real, rel=1e-5)
