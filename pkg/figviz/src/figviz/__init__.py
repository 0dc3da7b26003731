"""Offline renderer for morse-pdcm CSV scans."""
from .render import (
    REGION_COLORS,
    STYLES,
    EmptyGrid,
    GridData,
    PlotJob,
    SchemaMismatch,
    load_csv,
    render,
)

__version__ = "0.1.0"
