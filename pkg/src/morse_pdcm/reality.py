"""Reality-of-spectrum analysis: amplitude roots of E_i = 0.

In reality mode the exponential amplitude b3 is a free unknown (no longer
fixed by the well depth); beta1/alpha1 remain the affine functions of b3
from the coefficient system, so the imaginary energy

    E_i(b3) = Im[ hbar^2/(2M) (b(b3)^2 + i (M'/M) b(b3)) ]

is a polynomial of degree <= 2 in b3.  The canonical root finder recovers
its exact coefficients by sampling at b3 in {0, 1, -1} (a Vandermonde
solve, exact for a quadratic) and solves the quadratic with the usual
numerically stable formula, falling back to the linear equation when the
leading coefficient is negligible.

The printed closed-form roots for the one-sided profiles (Cases I(b) and
II(b)) are transcribed verbatim and kept as diagnostics: they divide by
lambda_2 (undefined for a real range parameter) and their gamma radicand
carries the mass slope to the first power where the canonical quadratic
requires the square, so disagreement away from constant mass is expected
and is reported, not asserted away.
"""
from __future__ import annotations

import math
from typing import NamedTuple

from .errors import (
    CaseMismatch,
    DegenerateIdentically,
    DegenerateLambda2,
    DivisionByZero,
    NegativeUnderRoot,
    NoRealRoots,
)
from .model import MassKind, MassProfile, MassState, MorseParams, mass_at
from .phasespace import PhasePoint
from .solution import (
    Region,
    ansatz_from_beta3,
    classify_region,
    energy_from_ansatz,
)

DEGENERACY_RTOL = 1e-14


class RealityState(NamedTuple):
    mu: float        # m_r/m_i (nan when m_i = 0)
    dmu: float       # mu' = (m_r' - mu m_i')/m_i (nan when m_i = 0)
    root_lo: float
    root_hi: float   # == root_lo when the quadratic degenerates to linear
    admissible: tuple[bool, bool]  # classify_region(...) == Both per root


class SpecialCaseCoeffs(NamedTuple):
    lambda1: float   # m_r (a_r^2 - a_i^2) + 2 m_i a_i a_r
    lambda2: float   # m_i (a_i^2 - a_r^2) + 2 m_r a_i a_r
    lambda3: float   # m_i (a_i^2 - a_r^2) - 2 m_r a_i a_r
    gamma: float     # sign-bearing square-root composite


class RootChoice:
    FIRST = "first"    # minus branch of the printed -/+ pair
    SECOND = "second"  # plus branch


def ei_of_beta3(b3: float, params: MorseParams, mass: MassState) -> float:
    ans = ansatz_from_beta3(b3, params, mass)
    return energy_from_ansatz(ans, mass, params.hbar).E_i


def ei_quadratic_coeffs(params: MorseParams, profile: MassProfile,
                        at: PhasePoint) -> tuple[float, float, float]:
    """(q2, q1, q0) of E_i(b3) from samples at b3 = 0, 1, -1 (exact)."""
    mass = mass_at(profile, at)
    e0 = ei_of_beta3(0.0, params, mass)
    ep = ei_of_beta3(1.0, params, mass)
    em = ei_of_beta3(-1.0, params, mass)
    return (ep + em) / 2.0 - e0, (ep - em) / 2.0, e0


def _coeff_scale(params: MorseParams, mass: MassState) -> float:
    # q2 = hbar^2 N/(2 m^2) with |N| <= |a|^2 m, so this bounds it.
    a_sq = params.a_r * params.a_r + params.a_i * params.a_i
    return params.hbar ** 2 * a_sq / (2.0 * math.sqrt(mass.m_sq))


def reality_roots(params: MorseParams, profile: MassProfile, at: PhasePoint) -> RealityState:
    """Solve E_i(b3) = 0; raises NoRealRoots / DegenerateIdentically."""
    mass = mass_at(profile, at)
    q2, q1, q0 = ei_quadratic_coeffs(params, profile, at)
    scale = _coeff_scale(params, mass)
    if abs(q2) < DEGENERACY_RTOL * scale:
        if abs(q1) < DEGENERACY_RTOL * scale and abs(q0) < DEGENERACY_RTOL * scale:
            raise DegenerateIdentically("E_i vanishes identically in the amplitude")
        if abs(q1) < DEGENERACY_RTOL * scale:
            raise NoRealRoots(f"E_i(b3) = {q0:.6g} is a nonzero constant")
        root = -q0 / q1
        roots = (root, root)
    else:
        disc = q1 * q1 - 4.0 * q2 * q0
        if disc < 0.0:
            raise NoRealRoots(f"discriminant {disc:.6g} < 0")
        # Stable split: avoid cancellation between -q1 and the square root.
        s = math.sqrt(disc)
        qq = -(q1 + math.copysign(s, q1)) / 2.0
        if qq == 0.0:
            r = -q1 / (2.0 * q2)
            roots = (r, r)
        else:
            roots = tuple(sorted((qq / q2, q0 / qq)))

    def is_admissible(b3: float) -> bool:
        ans = ansatz_from_beta3(b3, params, mass)
        return classify_region(ans.alpha1, ans.beta1).region is Region.BOTH

    mu = mass.m_r / mass.m_i if mass.m_i != 0.0 else math.nan
    dmu = (mass.dm_r - mu * mass.dm_i) / mass.m_i if mass.m_i != 0.0 else math.nan
    return RealityState(
        mu, dmu, roots[0], roots[1],
        (is_admissible(roots[0]), is_admissible(roots[1])),
    )


class ReCase:
    IB = "IB"      # requires m_r' = 0
    IIB = "IIB"    # requires m_i' = 0


def _require_case(case: str, profile: MassProfile) -> None:
    ok = {
        ReCase.IB: (MassKind.CASE_IA, MassKind.CONSTANT),
        ReCase.IIB: (MassKind.CASE_IIA, MassKind.CONSTANT),
    }.get(case)
    if ok is None:
        raise ValueError(f"unknown case {case!r}")
    if profile.kind not in ok:
        raise CaseMismatch(f"profile kind {profile.kind.value} does not match {case}")


def special_case_coeffs(case: str, params: MorseParams, mass: MassState) -> SpecialCaseCoeffs:
    a_r, a_i = params.a_r, params.a_i
    P = a_r * a_r - a_i * a_i
    Q = 2.0 * a_i * a_r
    l1 = mass.m_r * P + mass.m_i * Q
    l2 = -mass.m_i * P + mass.m_r * Q
    l3 = -mass.m_i * P - mass.m_r * Q
    a4 = (a_r * a_r + a_i * a_i) ** 2
    m6 = mass.m_sq ** 3
    # Verbatim printed radicands: the mass slope enters to the FIRST power.
    if case == ReCase.IB:
        radicand = a4 * m6 + l2 * (mass.m_i ** 2 - 3.0 * mass.m_r ** 2) * mass.m_i * mass.dm_i
    else:
        radicand = a4 * m6 - l2 * (mass.m_i ** 2 - 3.0 * mass.m_r ** 2) * mass.m_i * mass.dm_r
    if radicand < 0.0:
        raise NegativeUnderRoot(f"gamma radicand {radicand:.6g} < 0")
    return SpecialCaseCoeffs(l1, l2, l3, math.sqrt(radicand))


def special_case_roots(case: str, params: MorseParams, profile: MassProfile,
                       at: PhasePoint) -> tuple[float, float, SpecialCaseCoeffs]:
    """Verbatim printed roots (m^2 l1 -/+ gamma)/(2 m^2 l2), sorted.

    Raises DegenerateLambda2 where the printed form divides by ~0 and
    NegativeUnderRoot where gamma turns imaginary.
    """
    _require_case(case, profile)
    mass = mass_at(profile, at)
    coeffs = special_case_coeffs(case, params, mass)
    a_sq = params.a_r * params.a_r + params.a_i * params.a_i
    if abs(coeffs.lambda2) < DEGENERACY_RTOL * a_sq * math.sqrt(mass.m_sq):
        raise DegenerateLambda2(f"lambda2 = {coeffs.lambda2:.6g} ~ 0")
    m2 = mass.m_sq
    first = (m2 * coeffs.lambda1 - coeffs.gamma) / (2.0 * m2 * coeffs.lambda2)
    second = (m2 * coeffs.lambda1 + coeffs.gamma) / (2.0 * m2 * coeffs.lambda2)
    lo, hi = sorted((first, second))
    return lo, hi, coeffs


def real_energy_at_root(case: str, params: MorseParams, profile: MassProfile,
                        at: PhasePoint, root_choice: str) -> float:
    """Verbatim printed E_r at the chosen printed root (diagnostic; compare
    against energy_from_ansatz with the amplitude overridden)."""
    _require_case(case, profile)
    if root_choice not in (RootChoice.FIRST, RootChoice.SECOND):
        raise ValueError(f"root_choice must be 'first' or 'second', got {root_choice!r}")
    mass = mass_at(profile, at)
    coeffs = special_case_coeffs(case, params, mass)
    a_sq = params.a_r * params.a_r + params.a_i * params.a_i
    if abs(coeffs.lambda2) < DEGENERACY_RTOL * a_sq * math.sqrt(mass.m_sq):
        raise DegenerateLambda2(f"lambda2 = {coeffs.lambda2:.6g} ~ 0")
    a4 = a_sq * a_sq
    m2 = mass.m_sq
    m4 = m2 * m2
    sign = -1.0 if root_choice == RootChoice.FIRST else 1.0
    slope_sq = mass.dm_i ** 2 if case == ReCase.IB else mass.dm_r ** 2
    cross = (mass.m_i ** 2 * mass.m_r * a4
             + m2 * params.a_i * params.a_r * coeffs.lambda3) * slope_sq
    if case == ReCase.IIB:
        cross = -cross
    return (cross + a4 * m4 * coeffs.lambda1 + sign * m2 * coeffs.gamma) \
        / (4.0 * m4 * coeffs.lambda2 ** 2)


def reality_condition_product(params: MorseParams, profile: MassProfile, at: PhasePoint,
                  beta3_override: float) -> float:
    """Verbatim-product evaluation of the printed reality condition.

    The printed expression lacks binary operators between its bracket
    groups; this reads the juxtaposition as a product and the trailing
    term as printed:

        ((1+mu) m_i'/m_i) * [(alpha1^2-beta1^2) + 2 mu alpha1 beta1]
          * [mu' m_i/m_i' + mu] * [(mu^2-1) beta1 + 2 mu alpha1]
          * (mu^2-1) alpha1  +  2 mu beta1

    DIAGNOSTIC ONLY: the value is reported, never used to locate roots.
    Raises DivisionByZero when m_i = 0 or m_i' = 0.
    """
    mass = mass_at(profile, at)
    if mass.m_i == 0.0:
        raise DivisionByZero("m_i = 0: the printed condition divides by m_i")
    if mass.dm_i == 0.0:
        raise DivisionByZero("m_i' = 0: the printed condition divides by m_i'")
    ans = ansatz_from_beta3(beta3_override, params, mass)
    a1, b1 = ans.alpha1, ans.beta1
    mu = mass.m_r / mass.m_i
    dmu = (mass.dm_r - mu * mass.dm_i) / mass.m_i
    mu_sq = mu * mu
    product = (
        ((1.0 + mu) * mass.dm_i / mass.m_i)
        * ((a1 * a1 - b1 * b1) + 2.0 * mu * a1 * b1)
        * (dmu * mass.m_i / mass.dm_i + mu)
        * ((mu_sq - 1.0) * b1 + 2.0 * mu * a1)
        * (mu_sq - 1.0) * a1
    )
    return product + 2.0 * mu * b1
