"""Rectangular (x1, p2) scans with per-cell status codes and CSV export.

Scans are deterministic: cell coordinates come from the same linear
interpolation formula regardless of worker count, rows are farmed out to
a thread pool but reassembled in row-major order (p2 outer, x1 inner),
and floats are printed with 17 significant digits and LF line endings, so
two runs with different --threads produce byte-identical files.

Non-Ok cells carry the exception's status name and a ``nan`` value.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .errors import ConfigError, DomainError, IoError
from .model import MassProfile, MorseParams, mass_at
from .phasespace import PhasePoint
from .reality import reality_roots
from .solution import (
    Region,
    ansatz_from_beta3,
    ansatz_params,
    beta3,
    classify_region,
    density_at,
    energy_at,
    energy_from_ansatz,
    psi_at,
)
from .verify import pde_residual


@dataclass(frozen=True)
class GridSpec:
    x1_min: float
    x1_max: float
    p2_min: float
    p2_max: float
    nx: int
    np: int

    def __post_init__(self):
        if not self.x1_min < self.x1_max:
            raise ConfigError("grid requires x1_min < x1_max")
        if not self.p2_min < self.p2_max:
            raise ConfigError("grid requires p2_min < p2_max")
        if self.nx < 2 or self.np < 2:
            raise ConfigError("grid requires nx >= 2 and np >= 2")

    def x1_values(self) -> list[float]:
        step = (self.x1_max - self.x1_min) / (self.nx - 1)
        return [self.x1_min + i * step for i in range(self.nx)]

    def p2_values(self) -> list[float]:
        step = (self.p2_max - self.p2_min) / (self.np - 1)
        return [self.p2_min + j * step for j in range(self.np)]


class Quantity(Enum):
    ER = "Er"
    EI = "Ei"
    DENSITY = "Density"
    REGION = "Region"
    BETA3 = "Beta3"
    ALPHA1 = "Alpha1"
    BETA1 = "Beta1"
    ROOT_LO = "RootLo"
    ROOT_HI = "RootHi"
    ER_AT_ROOT = "ErAtRoot"
    PDE_RES_R = "PdeResR"
    PDE_RES_I = "PdeResI"


# Region category codes used in the generic field scan.
REGION_CODES = {
    Region.NEITHER: 0.0,
    Region.ONLY_ALPHA: 1.0,
    Region.ONLY_BETA: 2.0,
    Region.BOTH: 3.0,
}


@dataclass
class FieldGrid:
    spec: GridSpec
    quantity: Quantity
    values: list[float]    # row-major, nan for non-Ok cells
    status: list[str]      # "Ok" or a DomainError status name


def _cell_evaluator(quantity: Quantity, params: MorseParams, profile: MassProfile,
                    pde_step: float) -> Callable[[PhasePoint], float]:
    q = quantity

    def evaluate(at: PhasePoint) -> float:
        if q in (Quantity.ER, Quantity.EI):
            e = energy_at(params, profile, at)
            return e.E_r if q is Quantity.ER else e.E_i
        if q is Quantity.DENSITY:
            ans = ansatz_params(params, profile, at)
            return density_at(ans.alpha1, ans.beta1, at)
        if q is Quantity.REGION:
            ans = ansatz_params(params, profile, at)
            return REGION_CODES[classify_region(ans.alpha1, ans.beta1).region]
        if q is Quantity.BETA3:
            return beta3(params, mass_at(profile, at))
        if q is Quantity.ALPHA1:
            return ansatz_params(params, profile, at).alpha1
        if q is Quantity.BETA1:
            return ansatz_params(params, profile, at).beta1
        if q in (Quantity.ROOT_LO, Quantity.ROOT_HI, Quantity.ER_AT_ROOT):
            state = reality_roots(params, profile, at)
            if q is Quantity.ROOT_LO:
                return state.root_lo
            if q is Quantity.ROOT_HI:
                return state.root_hi
            # preferred root: the admissible one (hi wins ties), else hi
            if state.admissible[1] or not state.admissible[0]:
                root = state.root_hi
            else:
                root = state.root_lo
            mass = mass_at(profile, at)
            ans = ansatz_from_beta3(root, params, mass)
            return energy_from_ansatz(ans, mass, params.hbar).E_r
        if q in (Quantity.PDE_RES_R, Quantity.PDE_RES_I):
            res_r, res_i = pde_residual(params, profile, at, step=pde_step)
            return res_r if q is Quantity.PDE_RES_R else res_i
        raise ValueError(f"unhandled quantity {q}")

    return evaluate


def _scan_rows(spec: GridSpec, threads: int, row_fn: Callable[[float], list]):
    p2s = spec.p2_values()
    if threads <= 1:
        return [row_fn(p2) for p2 in p2s]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(row_fn, p2s))


def scan_field(quantity: Quantity, params: MorseParams, profile: MassProfile,
               spec: GridSpec, threads: int = 1, pde_step: float = 1e-3) -> FieldGrid:
    evaluate = _cell_evaluator(quantity, params, profile, pde_step)
    x1s = spec.x1_values()

    def row(p2: float) -> list[tuple[float, str]]:
        out = []
        for x1 in x1s:
            try:
                out.append((evaluate(PhasePoint(x1, p2)), "Ok"))
            except DomainError as exc:
                out.append((math.nan, exc.status))
        return out

    rows = _scan_rows(spec, threads, row)
    values = [v for r in rows for v, _ in r]
    status = [s for r in rows for _, s in r]
    return FieldGrid(spec, quantity, values, status)


def scan_region_map(params: MorseParams, profile: MassProfile, spec: GridSpec,
                    threads: int = 1) -> list[tuple[float, float, float, float, str]]:
    """Rows (x1, p2, alpha1, beta1, region-or-status), row-major."""
    x1s = spec.x1_values()

    def row(p2: float):
        out = []
        for x1 in x1s:
            at = PhasePoint(x1, p2)
            try:
                ans = ansatz_params(params, profile, at)
                region = classify_region(ans.alpha1, ans.beta1).region.value
                out.append((x1, p2, ans.alpha1, ans.beta1, region))
            except DomainError as exc:
                out.append((x1, p2, math.nan, math.nan, exc.status))
        return out

    return [cell for r in _scan_rows(spec, threads, row) for cell in r]


def scan_reality(params: MorseParams, profile: MassProfile, spec: GridSpec,
                 threads: int = 1):
    """Rows (x1, p2, root_lo, root_hi, er_lo, er_hi, adm_lo, adm_hi, status)."""
    x1s = spec.x1_values()

    def row(p2: float):
        out = []
        for x1 in x1s:
            at = PhasePoint(x1, p2)
            try:
                state = reality_roots(params, profile, at)
                mass = mass_at(profile, at)
                ers = [
                    energy_from_ansatz(ansatz_from_beta3(b3, params, mass),
                                       mass, params.hbar).E_r
                    for b3 in (state.root_lo, state.root_hi)
                ]
                out.append((x1, p2, state.root_lo, state.root_hi, ers[0], ers[1],
                            int(state.admissible[0]), int(state.admissible[1]), "Ok"))
            except DomainError as exc:
                out.append((x1, p2, math.nan, math.nan, math.nan, math.nan,
                            0, 0, exc.status))
        return out

    return [cell for r in _scan_rows(spec, threads, row) for cell in r]


def scan_psi(params: MorseParams, profile: MassProfile, spec: GridSpec,
             along: str, fixed: float = 0.0, threads: int = 1):
    """1-D profile rows (x1, p2, psi_r, psi_i, status) along one axis."""
    if along == "x1":
        points = [PhasePoint(x1, fixed) for x1 in spec.x1_values()]
    elif along == "p2":
        points = [PhasePoint(fixed, p2) for p2 in spec.p2_values()]
    else:
        raise ConfigError(f"--along must be x1 or p2, got {along!r}")
    out = []
    for at in points:
        try:
            psi = psi_at(params, profile, at)
            out.append((at.x1, at.p2, psi.psi_r, psi.psi_i, "Ok"))
        except DomainError as exc:
            out.append((at.x1, at.p2, math.nan, math.nan, exc.status))
    return out


# ------------------------------------------------------------- CSV output

def fmt(x: float) -> str:
    """17-significant-digit float format; nan prints as 'nan'."""
    if isinstance(x, int):
        return str(x)
    return f"{x:.17g}"


def write_csv(path, header: str, rows: Sequence[Sequence]) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(header + "\n")
            for row in rows:
                fh.write(",".join(fmt(v) if not isinstance(v, str) else v
                                  for v in row) + "\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def write_field_csv(path, grid: FieldGrid) -> None:
    x1s = grid.spec.x1_values()
    p2s = grid.spec.p2_values()
    rows = []
    k = 0
    for p2 in p2s:
        for x1 in x1s:
            rows.append((x1, p2, grid.values[k], grid.status[k]))
            k += 1
    write_csv(path, "x1,p2,value,status", rows)
