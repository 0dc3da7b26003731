"""Closed-form ground-state solution: ansatz parameters, energy fields,
eigenfunction, normalization and probability density.

The ground-state phase is

    g_r = beta1*x1 - alpha1*p2 + beta3 e^{-X} cos Y
    g_i = alpha1*x1 + beta1*p2 - beta3 e^{-X} sin Y

equivalently g = (beta1 + i*alpha1) x + beta3 e^{-ax}, and psi = e^{i g}.
The three parameters come from the coefficient system of the split
Schroedinger equation:

    beta3  = sqrt( 2 m^2 v0r / (hbar^2 D) ),   D = m_r(a_r^2-a_i^2) + 2 m_i a_r a_i
    beta1  = beta3 a_r + a_i/2 + K/(2 m^4)
    alpha1 = beta3 a_i - a_r/2 + J/(2 m^4)

with the mass composites

    K = (m_r^2-m_i^2)(m_r m_i)' + 2 m_r m_i (m_i m_i' - m_r m_r')
      = m^2 (m_r m_i' - m_i m_r')
    J = (m_r^2-m_i^2)(m_i m_i' - m_r m_r') - 2 m_r m_i (m_r m_i)'
      = -m^2 (m_r m_r' + m_i m_i')

and the consistency requirement v0i/v0r = N/D, N = 2 m_r a_r a_i -
m_i(a_r^2-a_i^2).  beta3 is taken as the principal non-negative root;
points with a negative radicand are excluded (NegativeRadicand) rather
than continued into imaginary amplitudes.

Energy convention: the canonical (E_r, E_i) is the constant-coefficient
pair of the split equation with (beta3, beta1, alpha1) substituted,

    E = hbar^2/(2M) * (b^2 + i (M'/M) b),      b = beta1 + i*alpha1,

evaluated componentwise below (energy_at) and in complex arithmetic
(energy_complex) as a cross-check.  A second evaluator (energy_verbose_jk)
transcribes the long printed J/K expansion verbatim; it is retained as a
diagnostic only because its imaginary part disagrees in sign with the
canonical substitution (constant real mass gives -0.5 canonically vs +0.5
verbatim), and the gap is reported, never asserted away.
"""
from __future__ import annotations

import cmath
import math
from enum import Enum
from typing import NamedTuple

from .errors import (
    CaseMismatch,
    DegenerateDenominator,
    NegativeRadicand,
    NotNormalizable,
    OverflowSignal,
)
from .model import MassKind, MassProfile, MassState, MorseParams, mass_at, scaled_coords
from .phasespace import PhasePoint

# Exp(-g_i) overflows double precision past ~709; stay clear of it.
GI_OVERFLOW = 700.0
DEGENERACY_RTOL = 1e-12


class AnsatzParams(NamedTuple):
    beta3: float    # exponential-term amplitude (>= 0 on the 22a branch)
    beta1: float    # x1 slope of g_r
    alpha1: float   # x1 slope of g_i
    J: float
    K: float


class EnergyPair(NamedTuple):
    E_r: float
    E_i: float


class AnsatzPhase(NamedTuple):
    g_r: float
    g_i: float


class WaveSample(NamedTuple):
    psi_r: float
    psi_i: float


class Region(Enum):
    BOTH = "Both"
    ONLY_ALPHA = "OnlyAlpha"
    ONLY_BETA = "OnlyBeta"
    NEITHER = "Neither"


class NormalizationInfo(NamedTuple):
    N: float           # sqrt(alpha1*beta1) when region is Both, else nan
    alpha_pos: bool
    beta_pos: bool
    region: Region


def compute_JK(mass: MassState) -> tuple[float, float]:
    """Mass composites J, K with (m_r m_i)' = m_r' m_i + m_r m_i'."""
    mr, mi, dmr, dmi = mass.m_r, mass.m_i, mass.dm_r, mass.dm_i
    diff_sq = mr * mr - mi * mi
    prod_prime = dmr * mi + mr * dmi
    anti = mi * dmi - mr * dmr
    K = diff_sq * prod_prime + 2.0 * mr * mi * anti
    J = diff_sq * anti - 2.0 * mr * mi * prod_prime
    return J, K


def _denominator(params: MorseParams, mass: MassState) -> float:
    P = params.a_r * params.a_r - params.a_i * params.a_i
    Q = 2.0 * params.a_r * params.a_i
    D = mass.m_r * P + mass.m_i * Q
    scale = mass.m_sq * (params.a_r * params.a_r + params.a_i * params.a_i)
    if abs(D) < DEGENERACY_RTOL * scale:
        raise DegenerateDenominator(
            f"|D| = {abs(D):.3g} below {DEGENERACY_RTOL:g} * m^2 |a|^2"
        )
    return D


def beta3(params: MorseParams, mass: MassState) -> float:
    """Principal non-negative amplitude sqrt(2 m^2 v0r / (hbar^2 D))."""
    D = _denominator(params, mass)
    radicand = 2.0 * mass.m_sq * params.v0r / (params.hbar ** 2 * D)
    if radicand < 0.0:
        raise NegativeRadicand(
            f"2 m^2 v0r / (hbar^2 D) = {radicand:.6g} < 0; amplitude imaginary"
        )
    return math.sqrt(radicand)


def constraint_ratio(params: MorseParams, mass: MassState) -> float:
    """Consistency ratio N/D that v0i/v0r must equal for a real amplitude:

        (2 m_r a_r a_i - m_i (a_r^2 - a_i^2)) / (m_r (a_r^2 - a_i^2) + 2 m_i a_r a_i)
    """
    D = _denominator(params, mass)
    P = params.a_r * params.a_r - params.a_i * params.a_i
    Q = 2.0 * params.a_r * params.a_i
    return (mass.m_r * Q - mass.m_i * P) / D


def ansatz_from_beta3(b3: float, params: MorseParams, mass: MassState) -> AnsatzParams:
    """beta1/alpha1 for a caller-supplied amplitude (free-amplitude mode
    used by the reality analysis; no sign restriction on b3)."""
    J, K = compute_JK(mass)
    m4 = mass.m_sq * mass.m_sq
    b1 = b3 * params.a_r + params.a_i / 2.0 + K / (2.0 * m4)
    a1 = b3 * params.a_i - params.a_r / 2.0 + J / (2.0 * m4)
    return AnsatzParams(b3, b1, a1, J, K)


def ansatz_params(params: MorseParams, profile: MassProfile, at: PhasePoint) -> AnsatzParams:
    mass = mass_at(profile, at)
    return ansatz_from_beta3(beta3(params, mass), params, mass)


def energy_from_ansatz(ansatz: AnsatzParams, mass: MassState, hbar: float) -> EnergyPair:
    """Componentwise constant-coefficient energy (the canonical path)."""
    mr, mi, dmr, dmi = mass.m_r, mass.m_i, mass.dm_r, mass.dm_i
    b1, a1 = ansatz.beta1, ansatz.alpha1
    m2 = mass.m_sq
    pref = hbar * hbar / (2.0 * m2 * m2)
    diff_sq = mr * mr - mi * mi
    e_r = pref * (
        -m2 * (mr * (a1 * a1 - b1 * b1) + mi * (-2.0 * a1 * b1))
        - diff_sq * (dmi * b1 + dmr * a1)
        + 2.0 * mr * mi * (dmr * b1 - dmi * a1)
    )
    e_i = pref * (
        -m2 * (mr * (-2.0 * a1 * b1) - mi * (a1 * a1 - b1 * b1))
        + diff_sq * (dmr * b1 - dmi * a1)
        + 2.0 * mr * mi * (dmi * b1 + dmr * a1)
    )
    return EnergyPair(e_r, e_i)


def energy_complex(ansatz: AnsatzParams, mass: MassState, hbar: float) -> complex:
    """Same energy via E = hbar^2/(2M) (b^2 + i (M'/M) b); oracle twin."""
    b = complex(ansatz.beta1, ansatz.alpha1)
    return hbar * hbar / (2.0 * mass.m) * (b * b + 1j * mass.dm / mass.m * b)


def energy_at(params: MorseParams, profile: MassProfile, at: PhasePoint) -> EnergyPair:
    mass = mass_at(profile, at)
    return energy_from_ansatz(ansatz_params(params, profile, at), mass, params.hbar)


def energy_verbose_jk(params: MorseParams, profile: MassProfile, at: PhasePoint) -> EnergyPair:
    """Verbatim transcription of the long J/K energy expansion (diagnostic).

    Kept character-for-character as printed, including the 2 m_r' m_i'
    prefactor on the last bracket of the imaginary part (where the
    canonical substitution carries 2 m_r m_i).  Compare with energy_at via
    verify.coefficient_identity_residuals / the ledger; never used as the value.
    """
    mass = mass_at(profile, at)
    ans = ansatz_params(params, profile, at)
    b3, b1, a1, J, K = ans
    mr, mi, dmr, dmi = mass.m_r, mass.m_i, mass.dm_r, mass.dm_i
    a_r, a_i = params.a_r, params.a_i
    m2 = mass.m_sq
    m4 = m2 * m2
    m8 = m4 * m4
    P = a_r * a_r - a_i * a_i
    pref = params.hbar ** 2 / (2.0 * m4)
    diff_sq = mr * mr - mi * mi

    term_sym = (
        (0.25 - b3 * b3) * P
        + (J * J - K * K) / (4.0 * m8)
        + b3 * ((J * a_i - K * a_r) / m4 - 2.0 * a_r * a_i)
        - (J * a_r + K * a_i) / (2.0 * m4)
    )
    term_anti = (
        (a_r * a_i / 2.0) * (4.0 * b3 * b3 - 1.0)
        + b3 * P
        + b3 / m4 * (J * a_r + K * a_i)
        + (J * a_i - K * a_r) / (2.0 * m4)
        + J * K / (2.0 * m8)
    )
    e_r = pref * (
        -m2 * (mr * term_sym - mi * term_anti)
        - diff_sq * (dmi * b1 + dmr * a1)
        + 2.0 * mr * mi * (dmr * b1 - dmi * a1)
    )
    e_i = pref * (
        -m2 * (-mr * term_anti - mi * term_sym)
        + diff_sq * (dmr * b1 - dmi * a1)
        + 2.0 * dmr * dmi * (dmi * b1 + dmr * a1)
    )
    return EnergyPair(e_r, e_i)


class SpecialCase(Enum):
    IA = "IA"     # m_r' = 0
    IIA = "IIA"   # m_i' = 0


def _require_case(case: SpecialCase, profile: MassProfile) -> None:
    ok = {
        SpecialCase.IA: (MassKind.CASE_IA, MassKind.CONSTANT),
        SpecialCase.IIA: (MassKind.CASE_IIA, MassKind.CONSTANT),
    }[case]
    if profile.kind not in ok:
        raise CaseMismatch(f"profile kind {profile.kind.value} does not match {case.value}")


def special_case_ansatz(case: SpecialCase, params: MorseParams,
                        profile: MassProfile, at: PhasePoint) -> tuple[float, float]:
    """Printed reduced (alpha1, beta1) for the one-sided profiles:

        IA :  alpha1 = a_i b3 - a_r/2 - m_i m_i'/(2 m^2)
              beta1  = a_r b3 + a_i/2 + m_r m_i'/(2 m^2)
        IIA:  alpha1 = a_i b3 - a_r/2 - m_r m_r'/(2 m^2)
              beta1  = a_r b3 + a_i/2 - m_i m_r'/(2 m^2)
    """
    _require_case(case, profile)
    mass = mass_at(profile, at)
    b3 = beta3(params, mass)
    m2 = mass.m_sq
    if case is SpecialCase.IA:
        a1 = params.a_i * b3 - params.a_r / 2.0 - mass.m_i * mass.dm_i / (2.0 * m2)
        b1 = params.a_r * b3 + params.a_i / 2.0 + mass.m_r * mass.dm_i / (2.0 * m2)
    else:
        a1 = params.a_i * b3 - params.a_r / 2.0 - mass.m_r * mass.dm_r / (2.0 * m2)
        b1 = params.a_r * b3 + params.a_i / 2.0 - mass.m_i * mass.dm_r / (2.0 * m2)
    return a1, b1


def special_case_energy(case: SpecialCase, params: MorseParams,
                        profile: MassProfile, at: PhasePoint) -> EnergyPair:
    """Verbatim printed one-sided energies (diagnostic twin of energy_at;
    note the printed forms carry no hbar factor)."""
    _require_case(case, profile)
    mass = mass_at(profile, at)
    b3 = beta3(params, mass)
    mr, mi = mass.m_r, mass.m_i
    a_r, a_i = params.a_r, params.a_i
    m2 = mass.m_sq
    m4, m6 = m2 * m2, m2 * m2 * m2
    P = a_r * a_r - a_i * a_i
    bracket_i = (
        P * ((1.0 - 4.0 * b3 * b3) * mi - 4.0 * b3 * mr)
        - 2.0 * a_i * a_r * ((1.0 - 4.0 * b3 * b3) * mr + 4.0 * b3 * mi)
    )
    bracket_r = (
        P * ((4.0 * b3 * b3 - 1.0) * mr - 4.0 * b3 * mi)
        + 2.0 * a_i * a_r * ((4.0 * b3 * b3 - 1.0) * mi + 4.0 * b3 * mr)
    )
    if case is SpecialCase.IA:
        dd = mass.dm_i * mass.dm_i
        e_i = (m4 * bracket_i + (3.0 * mr * mr * mi - mi ** 3) * dd) / (8.0 * m6)
        e_r = (m4 * bracket_r + (3.0 * mr * mi * mi - mr ** 3) * dd) / (8.0 * m6)
    else:
        dd = mass.dm_r * mass.dm_r
        e_i = (m4 * bracket_i - (3.0 * mr * mr * mi - mi ** 3) * dd) / (8.0 * m6)
        e_r = (m4 * bracket_r - (3.0 * mr * mi * mi - mr ** 3) * dd) / (8.0 * m6)
    return EnergyPair(e_r, e_i)


def phase_from_ansatz(ansatz: AnsatzParams, params: MorseParams, at: PhasePoint) -> AnsatzPhase:
    X, Y = scaled_coords(params, at)
    envelope = ansatz.beta3 * math.exp(-X)
    g_r = ansatz.beta1 * at.x1 - ansatz.alpha1 * at.p2 + envelope * math.cos(Y)
    g_i = ansatz.alpha1 * at.x1 + ansatz.beta1 * at.p2 - envelope * math.sin(Y)
    return AnsatzPhase(g_r, g_i)


def phase_at(params: MorseParams, profile: MassProfile, at: PhasePoint) -> AnsatzPhase:
    return phase_from_ansatz(ansatz_params(params, profile, at), params, at)


def psi_at(params: MorseParams, profile: MassProfile, at: PhasePoint) -> WaveSample:
    """Unnormalized psi = e^{-g_i} (cos g_r, sin g_r)."""
    g_r, g_i = phase_at(params, profile, at)
    if abs(g_i) > GI_OVERFLOW:
        raise OverflowSignal(f"|g_i| = {abs(g_i):.3g} > {GI_OVERFLOW:g}")
    env = math.exp(-g_i)
    return WaveSample(env * math.cos(g_r), env * math.sin(g_r))


def psi_exponent_complex(params: MorseParams, profile: MassProfile, at: PhasePoint) -> complex:
    """The closed-form exponent {(1/2 + i b3) a - (J - iK)/(2 m^4)} x
    + i b3 e^{-ax}, in complex arithmetic.  exp() of it is the oracle twin
    of psi_at (identical to i*g when beta1/alpha1 are expanded)."""
    mass = mass_at(profile, at)
    ans = ansatz_params(params, profile, at)
    m4 = mass.m_sq * mass.m_sq
    x = at.as_complex()
    slope = (0.5 + 1j * ans.beta3) * params.a - (ans.J - 1j * ans.K) / (2.0 * m4)
    return slope * x + 1j * ans.beta3 * cmath.exp(-params.a * x)


def norm_constant(alpha1: float, beta1: float) -> float:
    """N = sqrt(alpha1 * beta1); defined only when both factors are positive."""
    if not (alpha1 > 0.0 and beta1 > 0.0):
        raise NotNormalizable(f"alpha1 = {alpha1:.6g}, beta1 = {beta1:.6g}")
    return math.sqrt(alpha1 * beta1)


def density_at(alpha1: float, beta1: float, at: PhasePoint) -> float:
    """Normalized probability density alpha1 beta1 e^{-2(alpha1|x1| + beta1|p2|)}."""
    if not (alpha1 > 0.0 and beta1 > 0.0):
        raise NotNormalizable(f"alpha1 = {alpha1:.6g}, beta1 = {beta1:.6g}")
    return alpha1 * beta1 * math.exp(-2.0 * (alpha1 * abs(at.x1) + beta1 * abs(at.p2)))


def classify_region(alpha1: float, beta1: float) -> NormalizationInfo:
    """Direct sign classification of the two normalization conditions."""
    alpha_pos = alpha1 > 0.0
    beta_pos = beta1 > 0.0
    if alpha_pos and beta_pos:
        return NormalizationInfo(math.sqrt(alpha1 * beta1), True, True, Region.BOTH)
    if alpha_pos:
        return NormalizationInfo(math.nan, True, False, Region.ONLY_ALPHA)
    if beta_pos:
        return NormalizationInfo(math.nan, False, True, Region.ONLY_BETA)
    return NormalizationInfo(math.nan, False, False, Region.NEITHER)


def region_by_inequalities(b3: float, params: MorseParams, mass: MassState) -> Region:
    """Region via the printed amplitude inequalities (figure parity only):

        beta1 > 0  <=>  b3 > -a_i/(2 a_r) - K/(2 m^4 a_r)
        alpha1 > 0 <=>  b3 >  a_r/(2 a_i) - J/(2 m^4 a_i)

    Valid only when a_r > 0 and a_i > 0 (dividing by them must preserve
    the inequality direction).
    """
    if not (params.a_r > 0.0 and params.a_i > 0.0):
        raise ValueError("inequality form requires a_r > 0 and a_i > 0")
    J, K = compute_JK(mass)
    m4 = mass.m_sq * mass.m_sq
    beta_ok = b3 > -params.a_i / (2.0 * params.a_r) - K / (2.0 * m4 * params.a_r)
    alpha_ok = b3 > params.a_r / (2.0 * params.a_i) - J / (2.0 * m4 * params.a_i)
    if alpha_ok and beta_ok:
        return Region.BOTH
    if alpha_ok:
        return Region.ONLY_ALPHA
    if beta_ok:
        return Region.ONLY_BETA
    return Region.NEITHER
