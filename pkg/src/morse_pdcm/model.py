"""Parameter sets, linear-analytic mass profiles, and the split complex
Morse potential.

Conventions
-----------
* Potential: V(x) = V0 (e^{-2ax} - 2 e^{-ax}) with complex well depth
  V0 = v0r + i*v0i and complex range parameter a = a_r + i*a_i.
* Scaled coordinates: X = a_r*x1 - a_i*p2, Y = a_i*x1 + a_r*p2, so that
  a*x = X + i*Y.
* Mass: M(x) = m_r + i*m_i with m_r > 0, analytic and linear in x,
      m_r = c*x1 - d*p2 + e1,   m_i = d*x1 + c*p2 + e2,
  i.e. M(x) = (c + i*d)*x + (e1 + i*e2).  Primes denote d/dx1 throughout;
  for an analytic M this coincides with the complex derivative dM/dx, so
  m_r' = c and m_i' = d exactly.  (A Wirtinger d/dx reading of the prime
  would give the same numbers here for the same reason.)
* m^2 always means |M|^2 = m_r^2 + m_i^2, forced by 1/M = (m_r - i*m_i)/m^2.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import MassPositivityViolation, OverflowSignal
from .phasespace import PhasePoint

# |V| values beyond this are reported as Overflow instead of Inf so that
# grid scans stay CSV-clean.
OVERFLOW_LIMIT = 1e300
# Below this X the double-exponential is evaluated in log space first.
LOG_SPACE_X = -300.0


@dataclass(frozen=True)
class MorseParams:
    """Complex Morse well depth and range parameter, plus hbar."""

    v0r: float
    v0i: float
    a_r: float
    a_i: float
    hbar: float = 1.0

    def __post_init__(self):
        if not self.hbar > 0.0:
            raise ValueError("hbar must be positive")
        if self.a_r == 0.0 and self.a_i == 0.0:
            raise ValueError("range parameter a must be nonzero")

    @property
    def v0(self) -> complex:
        return complex(self.v0r, self.v0i)

    @property
    def a(self) -> complex:
        return complex(self.a_r, self.a_i)


class MassKind(Enum):
    GENERAL_LINEAR = "GeneralLinear"
    CASE_IA = "CaseIA"        # m_r' = 0 (c = 0)
    CASE_IIA = "CaseIIA"      # m_i' = 0 (d = 0)
    CONSTANT = "Constant"     # c = d = 0


@dataclass(frozen=True)
class MassProfile:
    """Linear analytic mass profile M(x) = (c + i d) x + (e1 + i e2)."""

    kind: MassKind = MassKind.GENERAL_LINEAR
    c: float = 0.0
    d: float = 0.0
    e1: float = 1.0
    e2: float = 0.0

    def __post_init__(self):
        if self.kind is MassKind.CASE_IA and self.c != 0.0:
            raise ValueError("CaseIA requires c = 0 (m_r independent of x1)")
        if self.kind is MassKind.CASE_IIA and self.d != 0.0:
            raise ValueError("CaseIIA requires d = 0 (m_i independent of x1)")
        if self.kind is MassKind.CONSTANT and (self.c != 0.0 or self.d != 0.0):
            raise ValueError("Constant requires c = d = 0")


def constant_mass(m_r: float, m_i: float = 0.0) -> MassProfile:
    return MassProfile(MassKind.CONSTANT, 0.0, 0.0, m_r, m_i)


def case_ia(d: float, e1: float, e2: float) -> MassProfile:
    return MassProfile(MassKind.CASE_IA, 0.0, d, e1, e2)


def case_iia(c: float, e1: float, e2: float) -> MassProfile:
    return MassProfile(MassKind.CASE_IIA, c, 0.0, e1, e2)


class MassState(NamedTuple):
    """Mass components and their exact x1-slopes at one point."""

    m_r: float
    m_i: float
    dm_r: float   # dm_r/dx1 = c
    dm_i: float   # dm_i/dx1 = d
    m_sq: float   # |M|^2 = m_r^2 + m_i^2

    @property
    def m(self) -> complex:
        return complex(self.m_r, self.m_i)

    @property
    def dm(self) -> complex:
        return complex(self.dm_r, self.dm_i)


class ScaledCoordinates(NamedTuple):
    X: float
    Y: float


def mass_at(profile: MassProfile, at: PhasePoint) -> MassState:
    """Evaluate the profile; raises MassPositivityViolation when m_r <= 0."""
    m_r = profile.c * at.x1 - profile.d * at.p2 + profile.e1
    m_i = profile.d * at.x1 + profile.c * at.p2 + profile.e2
    if not m_r > 0.0:
        raise MassPositivityViolation(
            f"m_r = {m_r:.6g} <= 0 at (x1, p2) = ({at.x1:.6g}, {at.p2:.6g})"
        )
    return MassState(m_r, m_i, profile.c, profile.d, m_r * m_r + m_i * m_i)


def scaled_coords(params: MorseParams, at: PhasePoint) -> ScaledCoordinates:
    """X = a_r x1 - a_i p2, Y = a_i x1 + a_r p2 (exact linear map)."""
    return ScaledCoordinates(
        params.a_r * at.x1 - params.a_i * at.p2,
        params.a_i * at.x1 + params.a_r * at.p2,
    )


def potential_at(params: MorseParams, at: PhasePoint) -> complex:
    """Split evaluation of V = V0 (e^{-2ax} - 2 e^{-ax}) at ``at``.

        V_r = v0r [e^{-2X} cos 2Y - 2 e^{-X} cos Y]
              + v0i [e^{-2X} sin 2Y - 2 e^{-X} sin Y]
        V_i = v0i [e^{-2X} cos 2Y - 2 e^{-X} cos Y]
              - v0r [e^{-2X} sin 2Y - 2 e^{-X} sin Y]

    Agrees with the direct complex-arithmetic evaluation to roundoff.
    Raises OverflowSignal (instead of returning Inf) when the value would
    exceed 1e300 for deeply negative X.
    """
    X, Y = scaled_coords(params, at)
    v0_mag = abs(params.v0)
    if X < LOG_SPACE_X:
        # log10 |V| ~ log10|V0| - 2X*log10(e); decide overflow before exp().
        log10_mag = (math.log10(v0_mag) if v0_mag > 0.0 else -math.inf) \
            - 2.0 * X * math.log10(math.e)
        if log10_mag > 300.0:
            raise OverflowSignal(f"|V| ~ 1e{log10_mag:.0f} at X = {X:.6g}")
    e1 = math.exp(-X)
    e2 = math.exp(-2.0 * X)
    cos_part = e2 * math.cos(2.0 * Y) - 2.0 * e1 * math.cos(Y)
    sin_part = e2 * math.sin(2.0 * Y) - 2.0 * e1 * math.sin(Y)
    v_r = params.v0r * cos_part + params.v0i * sin_part
    v_i = params.v0i * cos_part - params.v0r * sin_part
    if abs(v_r) > OVERFLOW_LIMIT or abs(v_i) > OVERFLOW_LIMIT:
        raise OverflowSignal(f"|V| > {OVERFLOW_LIMIT:g} at X = {X:.6g}")
    return complex(v_r, v_i)


def potential_complex(params: MorseParams, at: PhasePoint) -> complex:
    """Direct complex-arithmetic V0 (e^{-2ax} - 2 e^{-ax}); oracle twin of
    potential_at."""
    ax = params.a * at.as_complex()
    return params.v0 * (cmath.exp(-2.0 * ax) - 2.0 * cmath.exp(-ax))
