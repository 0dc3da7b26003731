"""Flat INI-style experiment configuration.

Sections and keys mirror the parameter type fields:

    [potential]  v0r, v0i (default 0), a_r, a_i, hbar (default 1)
    [mass]       kind (GeneralLinear|CaseIA|CaseIIA|Constant),
                 c, d (default 0), e1, e2 (default 0)
    [grid]       x1_min, x1_max, p2_min, p2_max, nx, np
    [run]        ref_x1, ref_p2 (default 0), pde_step (default 1e-3)

'#' starts a comment.  Everything is validated up front; any problem
raises ConfigError (CLI exit code 2).
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError
from .gridscan import GridSpec
from .model import MassKind, MassProfile, MorseParams

_KINDS = {k.value.lower(): k for k in MassKind}


@dataclass
class RunOptions:
    ref_x1: float = 0.0
    ref_p2: float = 0.0
    pde_step: float = 1e-3    # step for residual values
    order_step: float = 4e-3  # coarser base step for order estimates


@dataclass
class Config:
    params: MorseParams
    profile: MassProfile
    grid: GridSpec | None
    run: RunOptions


def _getfloat(section, key, default=None) -> float:
    if key not in section:
        if default is None:
            raise ConfigError(f"missing key '{key}' in [{section.name}]")
        return default
    try:
        return float(section[key])
    except ValueError as exc:
        raise ConfigError(f"bad float for '{key}' in [{section.name}]: "
                          f"{section[key]!r}") from exc


def _getint(section, key) -> int:
    try:
        return int(section[key])
    except KeyError as exc:
        raise ConfigError(f"missing key '{key}' in [{section.name}]") from exc
    except ValueError as exc:
        raise ConfigError(f"bad int for '{key}' in [{section.name}]: "
                          f"{section[key]!r}") from exc


def load_config(path: str | Path) -> Config:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser(inline_comment_prefixes=("#",))
    try:
        parser.read(path)
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc

    if "potential" not in parser:
        raise ConfigError("missing [potential] section")
    if "mass" not in parser:
        raise ConfigError("missing [mass] section")
    pot = parser["potential"]
    try:
        params = MorseParams(
            v0r=_getfloat(pot, "v0r"),
            v0i=_getfloat(pot, "v0i", 0.0),
            a_r=_getfloat(pot, "a_r"),
            a_i=_getfloat(pot, "a_i"),
            hbar=_getfloat(pot, "hbar", 1.0),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    mass = parser["mass"]
    kind_name = mass.get("kind", "GeneralLinear").strip().lower()
    if kind_name not in _KINDS:
        raise ConfigError(f"unknown mass kind {mass.get('kind')!r}")
    try:
        profile = MassProfile(
            kind=_KINDS[kind_name],
            c=_getfloat(mass, "c", 0.0),
            d=_getfloat(mass, "d", 0.0),
            e1=_getfloat(mass, "e1"),
            e2=_getfloat(mass, "e2", 0.0),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    grid = None
    if "grid" in parser:
        g = parser["grid"]
        grid = GridSpec(
            x1_min=_getfloat(g, "x1_min"), x1_max=_getfloat(g, "x1_max"),
            p2_min=_getfloat(g, "p2_min"), p2_max=_getfloat(g, "p2_max"),
            nx=_getint(g, "nx"), np=_getint(g, "np"),
        )

    run = RunOptions()
    if "run" in parser:
        r = parser["run"]
        run = RunOptions(
            ref_x1=_getfloat(r, "ref_x1", 0.0),
            ref_p2=_getfloat(r, "ref_p2", 0.0),
            pde_step=_getfloat(r, "pde_step", 1e-3),
            order_step=_getfloat(r, "order_step", 4e-3),
        )
        if not (run.pde_step > 0 and run.order_step > 0):
            raise ConfigError("pde_step and order_step must be positive")
    return Config(params, profile, grid, run)
