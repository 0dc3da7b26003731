#!/usr/bin/env python3
"""Scan the normalization-region map and summarize the categories.

Reproduces the four-category map (purple/blue/pink/white in the figure
convention) as CSV via the CLI machinery, then prints the census.  The
CSV can be rendered with figviz:

    figviz --csv out/region_map.csv --style region4 --out region.png
"""
from collections import Counter
from pathlib import Path

from morse_pdcm.cli import main

HERE = Path(__file__).parent
OUT = HERE / "out"

rc = main(["region-map", "--config", str(HERE / "fig1.conf"), "--out", str(OUT)])
assert rc == 0

lines = (OUT / "region_map.csv").read_text().splitlines()[1:]
census = Counter(line.rsplit(",", 1)[1] for line in lines)
total = sum(census.values())
print(f"{total} cells:")
for name, count in census.most_common():
    print(f"  {name:>24}: {count:6d} ({100.0 * count / total:5.1f} %)")
