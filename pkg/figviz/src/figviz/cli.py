"""figviz command line.

    figviz --job job.json
    figviz --csv scan.csv --style heatmap --out scan.png [--clip lo,hi] [--title T]

A job file is JSON with keys input_csv, style, out_png and optional
title, clip ([lo, hi]).  Exit codes: 0 success, 2 bad arguments/schema.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .render import STYLES, EmptyGrid, PlotJob, SchemaMismatch, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="figviz",
                                     description="Render morse-pdcm CSV scans.")
    parser.add_argument("--job", help="JSON job file")
    parser.add_argument("--csv", help="input CSV (alternative to --job)")
    parser.add_argument("--style", choices=STYLES)
    parser.add_argument("--out", help="output image path")
    parser.add_argument("--clip", help="lo,hi value clip for divergent fields")
    parser.add_argument("--title", default="")
    return parser


def job_from_args(args) -> PlotJob:
    if args.job:
        try:
            payload = json.loads(Path(args.job).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise SchemaMismatch(f"cannot read job file {args.job}: {exc}") from exc
        clip = payload.get("clip")
        return PlotJob(
            input_csv=payload["input_csv"],
            style=payload["style"],
            out_png=payload["out_png"],
            title=payload.get("title", ""),
            clip=tuple(clip) if clip else None,
        )
    if not (args.csv and args.style and args.out):
        raise SchemaMismatch("need --job, or all of --csv/--style/--out")
    clip = None
    if args.clip:
        try:
            lo, hi = (float(t) for t in args.clip.split(","))
        except ValueError as exc:
            raise SchemaMismatch(f"bad --clip {args.clip!r}, expected lo,hi") from exc
        clip = (lo, hi)
    return PlotJob(input_csv=args.csv, style=args.style, out_png=args.out,
                   title=args.title, clip=clip)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = job_from_args(args)
        out = render(job)
    except (SchemaMismatch, EmptyGrid, KeyError) as exc:
        print(f"figviz: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
