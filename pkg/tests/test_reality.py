"""Reality-of-spectrum roots and the printed special-case closed forms.

Independent oracles used here:
* closed-form quadratic coefficients of E_i in the amplitude, derived
  separately from the complex energy expression:
      q2 =  hbar^2 N / (2 m^2)
      q1 = -hbar^2 D / (2 m^2)
      q0 = -(hbar^2/(8 m^2)) (N - Im(M'^2 conj(M)^3)/m^4)
  with D + iN = a^2 conj(M);
* a dense least-squares polynomial fit over 7 amplitude samples;
* hand-derived constant-mass roots {-a_i/(2 a_r), a_r/(2 a_i)} and the
  energies -|a|^4/(8 m a_r^2), +|a|^4/(8 m a_i^2) at them.
"""
import math

import numpy as np
import pytest

from morse_pdcm import (
    MassKind,
    MassProfile,
    MorseParams,
    PhasePoint,
    ReCase,
    case_ia,
    case_iia,
    constant_mass,
    ei_quadratic_coeffs,
    reality_condition_product,
    mass_at,
    real_energy_at_root,
    reality_roots,
    special_case_roots,
)
from morse_pdcm.errors import (
    CaseMismatch,
    DegenerateLambda2,
    DivisionByZero,
    NegativeUnderRoot,
    NoRealRoots,
)
from morse_pdcm.reality import ei_of_beta3
from morse_pdcm.solution import ansatz_from_beta3, energy_from_ansatz

ORIGIN = PhasePoint(0.0, 0.0)


def closed_form_coeffs(params, mass):
    M = complex(mass.m_r, mass.m_i)
    Mp = complex(mass.dm_r, mass.dm_i)
    m2 = mass.m_sq
    a2 = params.a ** 2
    DN = a2 * M.conjugate()
    D, N = DN.real, DN.imag
    h2 = params.hbar ** 2
    q2 = h2 * N / (2 * m2)
    q1 = -h2 * D / (2 * m2)
    q0 = -(h2 / (8 * m2)) * (N - (Mp * Mp * M.conjugate() ** 3).imag / (m2 * m2))
    return q2, q1, q0


def test_quadratic_coeffs_match_closed_form_oracle():
    rng = np.random.default_rng(17)
    for _ in range(300):
        prof = MassProfile(
            MassKind.GENERAL_LINEAR,
            c=rng.uniform(-0.5, 0.5), d=rng.uniform(-0.5, 0.5),
            e1=rng.uniform(0.4, 2.0), e2=rng.uniform(-0.8, 0.8),
        )
        params = MorseParams(0.5, 0.0, rng.uniform(0.3, 1.5), rng.uniform(-1.0, 1.0),
                             hbar=rng.uniform(0.7, 1.4))
        at = PhasePoint(rng.uniform(-1, 1), rng.uniform(-1, 1))
        try:
            mass = mass_at(prof, at)
        except Exception:
            continue
        got = ei_quadratic_coeffs(params, prof, at)
        want = closed_form_coeffs(params, mass)
        scale = params.hbar ** 2 * abs(params.a) ** 2 / (2 * math.sqrt(mass.m_sq))
        for g, w in zip(got, want):
            assert abs(g - w) < 1e-12 * max(1.0, scale)


def test_quadratic_exactness_against_dense_fit():
    # E_i really is a polynomial of degree <= 2 in the amplitude.
    prof = MassProfile(MassKind.GENERAL_LINEAR, c=0.1, d=0.05, e1=1.0, e2=0.2)
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    at = PhasePoint(0.3, -0.2)
    mass = mass_at(prof, at)
    q2, q1, q0 = ei_quadratic_coeffs(params, prof, at)
    samples = np.linspace(-3.0, 3.0, 7)
    fit = np.polyfit(samples, [ei_of_beta3(b, params, mass) for b in samples], 2)
    assert fit[0] == pytest.approx(q2, rel=1e-10, abs=1e-12)
    assert fit[1] == pytest.approx(q1, rel=1e-10, abs=1e-12)
    assert fit[2] == pytest.approx(q0, rel=1e-10, abs=1e-12)
    rng = np.random.default_rng(23)
    for b in rng.uniform(-5, 5, size=20):
        poly = q2 * b * b + q1 * b + q0
        assert poly == pytest.approx(ei_of_beta3(b, params, mass), rel=1e-12, abs=1e-14)


def test_constant_real_mass_real_a_gives_single_zero_root():
    state = reality_roots(MorseParams(0.5, 0.0, 1.0, 0.0), constant_mass(1.0), ORIGIN)
    assert state.root_lo == state.root_hi == pytest.approx(0.0, abs=1e-14)


def test_constant_mass_roots_and_boundary_placement():
    params = MorseParams(0.5, 0.0, 1.0, 0.5)
    state = reality_roots(params, constant_mass(1.0), ORIGIN)
    assert state.root_lo == pytest.approx(-0.25, abs=1e-12)
    assert state.root_hi == pytest.approx(1.0, abs=1e-12)
    mass = mass_at(constant_mass(1.0), ORIGIN)
    # each root sits exactly on a normalization-region boundary
    lo = ansatz_from_beta3(state.root_lo, params, mass)
    hi = ansatz_from_beta3(state.root_hi, params, mass)
    assert abs(lo.beta1) < 1e-12
    assert abs(hi.alpha1) < 1e-12
    assert state.admissible == (False, False)
    # imaginary energy annihilated at each root
    for b3 in (state.root_lo, state.root_hi):
        e = energy_from_ansatz(ansatz_from_beta3(b3, params, mass), mass, 1.0)
        assert abs(e.E_i) < 1e-12


def test_constant_mass_energies_at_roots():
    params = MorseParams(0.5, 0.0, 1.0, 0.5)
    mass = mass_at(constant_mass(1.0), ORIGIN)
    state = reality_roots(params, constant_mass(1.0), ORIGIN)
    a4 = (1.0 + 0.25) ** 2
    e_lo = energy_from_ansatz(ansatz_from_beta3(state.root_lo, params, mass), mass, 1.0)
    e_hi = energy_from_ansatz(ansatz_from_beta3(state.root_hi, params, mass), mass, 1.0)
    assert e_lo.E_r == pytest.approx(-a4 / 8.0, rel=1e-12)          # -0.1953125
    assert e_hi.E_r == pytest.approx(a4 / (8.0 * 0.25), rel=1e-12)  # +0.78125


def test_roots_verified_over_random_profiles():
    rng = np.random.default_rng(29)
    n_ok = 0
    while n_ok < 200:
        prof = MassProfile(
            MassKind.GENERAL_LINEAR,
            c=rng.uniform(-0.4, 0.4), d=rng.uniform(-0.4, 0.4),
            e1=rng.uniform(0.4, 2.0), e2=rng.uniform(-0.8, 0.8),
        )
        params = MorseParams(0.5, 0.0, rng.uniform(0.3, 1.5), rng.uniform(-1.0, 1.0))
        at = PhasePoint(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        try:
            mass = mass_at(prof, at)
            state = reality_roots(params, prof, at)
        except Exception:
            continue
        for b3 in (state.root_lo, state.root_hi):
            e = energy_from_ansatz(ansatz_from_beta3(b3, params, mass), mass, params.hbar)
            assert abs(e.E_i) < 1e-9 * max(1.0, abs(e.E_r))
        n_ok += 1


def test_no_real_roots_detected():
    prof = MassProfile(MassKind.GENERAL_LINEAR, c=2.0, d=3.0, e1=0.4, e2=0.1)
    with pytest.raises(NoRealRoots):
        reality_roots(MorseParams(0.5, 0.0, 1.0, 0.3), prof, ORIGIN)


def test_mu_fields():
    state = reality_roots(MorseParams(0.5, 0.0, 1.0, 0.5),
                          constant_mass(1.0, 0.5), ORIGIN)
    assert state.mu == pytest.approx(2.0)
    assert state.dmu == pytest.approx(0.0)
    state0 = reality_roots(MorseParams(0.5, 0.0, 1.0, 0.5), constant_mass(1.0), ORIGIN)
    assert math.isnan(state0.mu) and math.isnan(state0.dmu)


# ------------------------------------------------ printed special cases

def test_printed_roots_constant_mass_match_canonical():
    params = MorseParams(0.5, 0.0, 1.0, 0.5)
    prof = constant_mass(1.0)
    lo, hi, coeffs = special_case_roots(ReCase.IB, params, prof, ORIGIN)
    assert lo == pytest.approx(-0.25, abs=1e-14)
    assert hi == pytest.approx(1.0, abs=1e-14)
    # gamma collapses to |a|^2 m^3 when the slope vanishes
    assert coeffs.gamma == pytest.approx(1.25, rel=1e-14)
    state = reality_roots(params, prof, ORIGIN)
    assert (lo, hi) == pytest.approx((state.root_lo, state.root_hi), abs=1e-12)


def test_printed_roots_degenerate_for_real_a():
    with pytest.raises(DegenerateLambda2):
        special_case_roots(ReCase.IB, MorseParams(0.5, 0.0, 1.0, 0.0),
                           constant_mass(1.0), ORIGIN)


def test_printed_roots_case_ib_frozen_disagreement():
    # Verbatim printed radicand carries the slope to the FIRST power; the
    # canonical quadratic requires its square, so the printed roots are
    # close but distinct here (both frozen from independent evaluation).
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = case_ia(d=0.05, e1=1.0, e2=0.2)
    at = PhasePoint(0.2, 0.1)
    lo, hi, _ = special_case_roots(ReCase.IB, params, prof, at)
    assert lo == pytest.approx(-0.08834629260196646, rel=1e-12)
    assert hi == pytest.approx(2.629489431306081, rel=1e-12)
    state = reality_roots(params, prof, at)
    assert state.root_lo == pytest.approx(-0.09451721713047292, rel=1e-10)
    assert state.root_hi == pytest.approx(2.6356603558345872, rel=1e-10)
    assert abs(lo - state.root_lo) > 1e-3  # the printed form really differs


def test_printed_roots_case_mismatch():
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    with pytest.raises(CaseMismatch):
        special_case_roots(ReCase.IB, params, case_iia(0.1, 1.0, 0.2), ORIGIN)


def test_printed_roots_negative_under_root():
    # steep slope drives the printed gamma radicand negative
    params = MorseParams(0.5, 0.0, 0.5, 0.15)
    prof = case_ia(d=-2.0, e1=0.75, e2=-1.5)
    with pytest.raises(NegativeUnderRoot):
        special_case_roots(ReCase.IB, params, prof, PhasePoint(-0.2, 0.6))


def test_printed_energy_at_roots_constant_mass():
    # Verbatim printed E_r at the printed roots (frozen from independent
    # evaluation); canonical values at the same roots differ.
    params = MorseParams(0.5, 0.0, 1.0, 0.5)
    prof = constant_mass(1.0)
    e_first = real_energy_at_root(ReCase.IB, params, prof, ORIGIN, "first")
    e_second = real_energy_at_root(ReCase.IB, params, prof, ORIGIN, "second")
    assert e_first == pytest.approx(-0.01953125, rel=1e-12)
    assert e_second == pytest.approx(0.60546875, rel=1e-12)


def test_printed_energy_propagates_degeneracy():
    with pytest.raises(DegenerateLambda2):
        real_energy_at_root(ReCase.IB, MorseParams(0.5, 0.0, 1.0, 0.0),
                            constant_mass(1.0), ORIGIN, "first")


# ---------------------------------------------------------- reality-condition product

def test_reality_condition_product_smoke_and_errors():
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = case_ia(d=0.05, e1=1.0, e2=0.2)
    value = reality_condition_product(params, prof, PhasePoint(0.2, 0.1), beta3_override=1.0)
    assert math.isfinite(value)
    with pytest.raises(DivisionByZero):
        reality_condition_product(params, constant_mass(1.0), ORIGIN, 1.0)  # m_i = 0
    with pytest.raises(DivisionByZero):
        reality_condition_product(params, constant_mass(1.0, 0.5), ORIGIN, 1.0)  # m_i' = 0


def test_reality_condition_product_at_canonical_root_is_reported_not_zero():
    # The verbatim-product reading need not vanish at genuine roots; we
    # only require a finite value to log.
    params = MorseParams(0.5, 0.0, 1.0, 0.3)
    prof = case_ia(d=0.05, e1=1.0, e2=0.2)
    at = PhasePoint(0.2, 0.1)
    state = reality_roots(params, prof, at)
    value = reality_condition_product(params, prof, at, state.root_hi)
    assert math.isfinite(value)
