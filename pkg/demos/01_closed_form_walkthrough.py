#!/usr/bin/env python3
"""Walk through the closed-form ground state at a single phase-space point.

Shows each stage of the construction: mass state, exponential amplitude,
well-depth consistency ratio, phase slopes, energy, eigenfunction sample
and normalized density.
"""
from morse_pdcm import (
    MassKind,
    MassProfile,
    MorseParams,
    PhasePoint,
    ansatz_params,
    classify_region,
    constraint_ratio,
    density_at,
    energy_at,
    mass_at,
    phase_at,
    potential_at,
    psi_at,
)

params = MorseParams(v0r=0.5, v0i=0.0, a_r=1.0, a_i=0.3)
profile = MassProfile(MassKind.GENERAL_LINEAR, c=0.1, d=0.05, e1=1.0, e2=0.2)
at = PhasePoint(0.3, -0.2)

print(f"point (x1, p2) = ({at.x1}, {at.p2})")
mass = mass_at(profile, at)
print(f"mass: m = {mass.m_r:.6f} + {mass.m_i:.6f} i, slopes (c, d) = "
      f"({mass.dm_r}, {mass.dm_i}), m^2 = {mass.m_sq:.6f}")

v = potential_at(params, at)
print(f"potential: V = {v.real:.6f} + {v.imag:.6f} i")

ratio = constraint_ratio(params, mass)
print(f"well-depth consistency requires v0i/v0r = {ratio:.6f} "
      f"(config uses v0i = {params.v0i})")

ans = ansatz_params(params, profile, at)
print(f"ansatz: beta3 = {ans.beta3:.10f}, beta1 = {ans.beta1:.10f}, "
      f"alpha1 = {ans.alpha1:.10f}")
print(f"mass composites: J = {ans.J:.10f}, K = {ans.K:.10f}")

e = energy_at(params, profile, at)
print(f"energy field: E_r = {e.E_r:.10f}, E_i = {e.E_i:.10f}")

g = phase_at(params, profile, at)
psi = psi_at(params, profile, at)
print(f"phase: g_r = {g.g_r:.10f}, g_i = {g.g_i:.10f}")
print(f"psi (unnormalized) = {psi.psi_r:.10f} + {psi.psi_i:.10f} i")

info = classify_region(ans.alpha1, ans.beta1)
print(f"normalization region: {info.region.value} "
      f"(alpha1 > 0: {info.alpha_pos}, beta1 > 0: {info.beta_pos})")
if info.region.value == "Both":
    print(f"density at the point: {density_at(ans.alpha1, ans.beta1, at):.10f}")
else:
    print("density undefined here (norm integral diverges)")
