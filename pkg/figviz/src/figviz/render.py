"""Render morse-pdcm CSV scans to raster images.

Input schemas (detected from the header line):

    field scans : x1,p2,value,status
    region maps : x1,p2,alpha1,beta1,region

Styles: ``heatmap``, ``contour``, ``surface`` (field schema) and
``region4`` (region schema).  The region palette follows the figure
convention: purple = both normalization conditions hold, blue = only the
alpha condition, pink = only the beta condition, white = neither (error
statuses also render white).  Non-Ok / nan cells of field scans render
transparent.

Divergent fields are clipped symmetrically at the 2nd..98th percentile
by default; an explicit clip overrides this, and either way the applied
clip is written into the image caption.  Rendering is deterministic:
identical CSV + job produce pixel-identical images (fixed canvas, fixed
dpi, no timestamps in the pixel data).
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import BoundaryNorm, ListedColormap  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402


class SchemaMismatch(Exception):
    """CSV header does not fit the requested style."""


class EmptyGrid(Exception):
    """No data rows, or a degenerate axis."""


FIELD_HEADER = ["x1", "p2", "value", "status"]
REGION_HEADER = ["x1", "p2", "alpha1", "beta1", "region"]

STYLES = ("heatmap", "contour", "surface", "region4")

# Region palette (figure legend convention).
REGION_COLORS = {
    "Neither": "#ffffff",
    "OnlyAlpha": "#6baed6",   # blue
    "OnlyBeta": "#fbb4b9",    # pink
    "Both": "#8856a7",        # purple
}
REGION_ORDER = ["Neither", "OnlyAlpha", "OnlyBeta", "Both"]

DEFAULT_PERCENTILES = (2.0, 98.0)
FIGSIZE = (6.4, 4.8)
DPI = 100


@dataclass(frozen=True)
class PlotJob:
    input_csv: str
    style: str
    out_png: str
    title: str = ""
    clip: tuple[float, float] | None = None

    def __post_init__(self):
        if self.style not in STYLES:
            raise SchemaMismatch(f"unknown style {self.style!r}; pick from {STYLES}")


@dataclass
class GridData:
    kind: str            # "field" | "region"
    x: np.ndarray        # sorted unique x1
    p: np.ndarray        # sorted unique p2
    values: np.ndarray   # (len(p), len(x)) floats, nan where absent/bad
    regions: np.ndarray | None  # (len(p), len(x)) of str, region schema only


def load_csv(path: str | Path) -> GridData:
    path = Path(path)
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyGrid(f"{path} is empty") from None
        rows = list(reader)
    if header == FIELD_HEADER:
        kind = "field"
    elif header == REGION_HEADER:
        kind = "region"
    else:
        raise SchemaMismatch(f"{path}: unrecognized header {header!r}")
    if not rows:
        raise EmptyGrid(f"{path} has a header but no cells")

    x1 = np.array([float(r[0]) for r in rows])
    p2 = np.array([float(r[1]) for r in rows])
    x = np.unique(x1)
    p = np.unique(p2)
    if len(x) < 2 or len(p) < 2:
        raise EmptyGrid(f"{path}: need at least a 2x2 grid, got {len(x)}x{len(p)}")
    ix = np.searchsorted(x, x1)
    ip = np.searchsorted(p, p2)

    values = np.full((len(p), len(x)), np.nan)
    regions = None
    if kind == "field":
        for k, r in enumerate(rows):
            if r[3] == "Ok":
                values[ip[k], ix[k]] = float(r[2])
    else:
        regions = np.full((len(p), len(x)), "", dtype=object)
        for k, r in enumerate(rows):
            regions[ip[k], ix[k]] = r[4]
            if r[4] in REGION_ORDER:
                values[ip[k], ix[k]] = float(REGION_ORDER.index(r[4]))
    return GridData(kind, x, p, values, regions)


def _resolve_clip(values: np.ndarray, clip: tuple[float, float] | None) -> tuple[float, float]:
    finite = values[np.isfinite(values)]
    if finite.size == 0:
        raise EmptyGrid("no finite cells to render")
    if clip is not None:
        lo, hi = clip
    else:
        lo, hi = np.percentile(finite, DEFAULT_PERCENTILES)
    if not lo < hi:
        lo, hi = float(finite.min()), float(finite.max() + 1e-300)
    return float(lo), float(hi)


def render(job: PlotJob) -> Path:
    """Render one job; returns the written image path."""
    data = load_csv(job.input_csv)
    if job.style == "region4" and data.kind != "region":
        raise SchemaMismatch("region4 needs the region-map schema "
                             "(x1,p2,alpha1,beta1,region)")
    if job.style != "region4" and data.kind != "field":
        raise SchemaMismatch(f"{job.style} needs the field schema (x1,p2,value,status)")

    fig, ax = plt.subplots(figsize=FIGSIZE, dpi=DPI,
                           subplot_kw={"projection": "3d"} if job.style == "surface" else None)
    extent = (data.x[0], data.x[-1], data.p[0], data.p[-1])

    if job.style == "region4":
        cmap = ListedColormap([REGION_COLORS[k] for k in REGION_ORDER])
        norm = BoundaryNorm(np.arange(-0.5, 4.0), cmap.N)
        shown = np.where(np.isfinite(data.values), data.values, 0.0)  # errors -> white
        ax.imshow(shown, origin="lower", extent=extent, aspect="auto",
                  cmap=cmap, norm=norm, interpolation="nearest")
        ax.legend(handles=[Patch(facecolor=REGION_COLORS[k], edgecolor="0.4", label=k)
                           for k in REGION_ORDER],
                  loc="upper right", fontsize=8, framealpha=0.9)
    elif job.style == "heatmap":
        lo, hi = _resolve_clip(data.values, job.clip)
        masked = np.ma.masked_invalid(data.values)
        cmap = plt.get_cmap("viridis").copy()
        cmap.set_bad(alpha=0.0)
        im = ax.imshow(np.clip(masked, lo, hi), origin="lower", extent=extent,
                       aspect="auto", cmap=cmap, vmin=lo, vmax=hi,
                       interpolation="nearest")
        fig.colorbar(im, ax=ax)
        fig.text(0.01, 0.005, f"clip=[{lo:.6g}, {hi:.6g}]", fontsize=7)
    elif job.style == "contour":
        lo, hi = _resolve_clip(data.values, job.clip)
        clipped = np.clip(np.ma.masked_invalid(data.values), lo, hi)
        levels = np.linspace(lo, hi, 21)
        cf = ax.contourf(data.x, data.p, clipped, levels=levels, cmap="viridis")
        ax.contour(data.x, data.p, clipped, levels=levels[::4],
                   colors="k", linewidths=0.4)
        fig.colorbar(cf, ax=ax)
        fig.text(0.01, 0.005, f"clip=[{lo:.6g}, {hi:.6g}]", fontsize=7)
    else:  # surface
        lo, hi = _resolve_clip(data.values, job.clip)
        xx, pp = np.meshgrid(data.x, data.p)
        zz = np.where(np.isfinite(data.values),
                      np.clip(data.values, lo, hi), np.nan)
        ax.plot_surface(xx, pp, zz, cmap="viridis", vmin=lo, vmax=hi,
                        linewidth=0, antialiased=False)
        ax.set_zlim(lo, hi)
        fig.text(0.01, 0.005, f"clip=[{lo:.6g}, {hi:.6g}]", fontsize=7)

    ax.set_xlabel("x1")
    ax.set_ylabel("p2")
    if job.title:
        ax.set_title(job.title)
    out = Path(job.out_png)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=DPI, metadata={"Software": "figviz"})
    plt.close(fig)
    return out
