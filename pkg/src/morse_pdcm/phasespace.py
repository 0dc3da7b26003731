"""Extended-phase-space coordinates and numerical analyticity checks.

Conventions
-----------
The complexified coordinate is x = x1 + i*p2; every field in this package
lives on the real (x1, p2) plane.  The half-split derivative operator

    d/dx = (1/2) (d/dx1 - i d/dp2)

recovers the complex derivative of an analytic field, and the
Cauchy-Riemann residuals

    r1 = du/dx1 - dv/dp2,   r2 = du/dp2 + dv/dx1

vanish exactly when (u, v) are the real/imaginary parts of an analytic
function of x.  All derivatives here are second-order central differences
of caller-supplied field callbacks; nothing is cached.
"""
from __future__ import annotations

import math
from typing import Callable, NamedTuple

from .errors import NonFiniteField

# Relative step for central differences, scaled per coordinate magnitude.
DEFAULT_STEP = 1e-4


class PhasePoint(NamedTuple):
    """A point (x1, p2) of the extended complex plane, x = x1 + i*p2."""

    x1: float
    p2: float

    def as_complex(self) -> complex:
        return complex(self.x1, self.p2)


ScalarField = Callable[[PhasePoint], float]
ComplexField = Callable[[PhasePoint], complex]


def default_step(coordinate: float, base: float = DEFAULT_STEP) -> float:
    """Step h = base * max(1, |coordinate|)."""
    return base * max(1.0, abs(coordinate))


def _check_finite(value: complex, where: PhasePoint) -> complex:
    v = complex(value)
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise NonFiniteField(f"non-finite field value {v!r} near {where}")
    return v


def partial_x1(field: ComplexField, at: PhasePoint, step: float) -> complex:
    fp = _check_finite(field(PhasePoint(at.x1 + step, at.p2)), at)
    fm = _check_finite(field(PhasePoint(at.x1 - step, at.p2)), at)
    return (fp - fm) / (2.0 * step)


def partial_p2(field: ComplexField, at: PhasePoint, step: float) -> complex:
    fp = _check_finite(field(PhasePoint(at.x1, at.p2 + step)), at)
    fm = _check_finite(field(PhasePoint(at.x1, at.p2 - step)), at)
    return (fp - fm) / (2.0 * step)


def second_x1(field: ComplexField, at: PhasePoint, step: float) -> complex:
    """Central second difference along x1."""
    fp = _check_finite(field(PhasePoint(at.x1 + step, at.p2)), at)
    f0 = _check_finite(field(at), at)
    fm = _check_finite(field(PhasePoint(at.x1 - step, at.p2)), at)
    return (fp - 2.0 * f0 + fm) / (step * step)


def complex_derivative(
    field: ComplexField,
    at: PhasePoint,
    step: float | None = None,
    richardson: bool = False,
) -> complex:
    """(1/2)(d/dx1 - i d/dp2) of ``field`` at ``at`` by central differences.

    ``step`` overrides the per-coordinate default h = 1e-4*max(1, |coord|).
    With ``richardson=True`` the h and h/2 estimates are combined to cancel
    the leading O(h^2) error term.

    Raises NonFiniteField if any stencil evaluation is NaN/Inf.
    """
    if step is not None and not step > 0.0:
        raise ValueError("step must be positive")
    hx = step if step is not None else default_step(at.x1)
    hp = step if step is not None else default_step(at.p2)

    def estimate(hx_: float, hp_: float) -> complex:
        return 0.5 * (partial_x1(field, at, hx_) - 1j * partial_p2(field, at, hp_))

    d = estimate(hx, hp)
    if richardson:
        d_half = estimate(hx / 2.0, hp / 2.0)
        d = d_half + (d_half - d) / 3.0
    return d


class CrResidual(NamedTuple):
    r1: float  # du/dx1 - dv/dp2
    r2: float  # du/dp2 + dv/dx1


def cr_residual(
    u: ScalarField,
    v: ScalarField,
    at: PhasePoint,
    step: float | None = None,
) -> CrResidual:
    """Cauchy-Riemann residuals of the pair (u, v) at ``at``.

    Both residuals are O(step^2)-zero iff u + i*v is analytic in x near
    ``at``.  Raises NonFiniteField on bad stencil values.
    """
    if step is not None and not step > 0.0:
        raise ValueError("step must be positive")
    hx = step if step is not None else default_step(at.x1)
    hp = step if step is not None else default_step(at.p2)

    def real_field(f: ScalarField) -> ComplexField:
        return lambda p: complex(f(p), 0.0)

    du_dx1 = partial_x1(real_field(u), at, hx).real
    du_dp2 = partial_p2(real_field(u), at, hp).real
    dv_dx1 = partial_x1(real_field(v), at, hx).real
    dv_dp2 = partial_p2(real_field(v), at, hp).real
    return CrResidual(du_dx1 - dv_dp2, du_dp2 + dv_dx1)
