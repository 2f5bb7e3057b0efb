"""Command-line front end.

    zonaldct transform --transform pruned --vector 1,1,1,1,1,1,1,1
    zonaldct compress --in lena.pgm --transform modified-rdct --pruned --out lena_z.pgm
    zonaldct bench-complexity [--savings] [--out counts.csv]
    zonaldct bench-corpus --dir images/ [--average] [--out metrics.csv]
    zonaldct energy --in a.pgm --in b.pgm
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import codec, opbench, zonal2d
from .imageio import load_pgm, save_pgm
from .kernels import REGISTRY, forward_1d, get_spec, prune

log = logging.getLogger("zonaldct")


def _fmt(values) -> str:
    return ",".join(f"{float(v):.4f}" for v in values)


def _numbers(text: str) -> list:
    vals = [float(t) for t in text.replace(";", ",").split(",") if t.strip()]
    # keep integers exact so multiplierless schedules stay in integer arithmetic
    return [int(v) if v.is_integer() else v for v in vals]


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out:
        Path(out).write_text(text)
        log.info("wrote %s", out)
    else:
        sys.stdout.write(text)


def cmd_transform(args) -> None:
    spec = get_spec(args.transform)
    if args.pruned and spec.rows == 8:
        spec = prune(spec)
    if args.vector is not None:
        x = _numbers(args.vector)
        if len(x) != 8:
            raise ValueError(f"--vector needs 8 values, got {len(x)}")
        y, count = forward_1d(spec, x)
        if args.scaled:
            y = [v * d for v, d in zip(y, spec.scaling)]
        lines = [_fmt(y)]
    else:
        a = np.array(_numbers(args.block))
        if a.size != 64:
            raise ValueError(f"--block needs 64 values, got {a.size}")
        b, count = zonal2d.forward_2d(spec, a.reshape(8, 8), scaled=args.scaled)
        lines = [_fmt(row) for row in b]
    log.info("ops: mult=%d add=%d shift=%d", count.mult, count.add, count.shift)
    _emit(lines, args.out)


def _config(args, transform=None) -> codec.CodecConfig:
    return codec.CodecConfig(transform or args.transform, pruned=args.pruned, level_shift=args.level_shift)


def cmd_compress(args) -> None:
    img = load_pgm(args.input)
    cfg = _config(args)
    rec, m = codec.compress_image(img, cfg)
    if args.out:
        save_pgm(rec, args.out)
        log.info("wrote %s", args.out)
    row = codec.CorpusRow(cfg.full_name, cfg.is_pruned, Path(args.input).stem, m)
    _emit([codec.CSV_HEADER, row.csv()], args.csv)


def cmd_bench_complexity(args) -> None:
    if args.savings:
        lines = [opbench.SAVINGS_HEADER] + [s.csv() for s in opbench.savings_report()]
    else:
        lines = [opbench.CSV_HEADER] + [r.csv() for r in opbench.complexity_table()]
    _emit(lines, args.out)


def _load_dir(directory) -> dict:
    paths = sorted(Path(directory).glob("*.pgm"))
    if not paths:
        raise ValueError(f"no .pgm files in {directory}")
    return {p.stem: load_pgm(p) for p in paths}


def cmd_bench_corpus(args) -> None:
    images = _load_dir(args.dir)
    transforms = args.transform or ["dct", "sdct", "rdct", "modified-rdct"]
    configs = [codec.CodecConfig(t, pruned=p, level_shift=args.level_shift)
               for t in transforms for p in (False, True)]
    rows = codec.corpus_rows(images, configs)
    if args.average:
        rows = rows + codec.average_rows(rows)
    _emit([codec.CSV_HEADER] + [r.csv() for r in rows], args.out)


def cmd_energy(args) -> None:
    paths = [Path(p) for p in args.input or []]
    if args.dir:
        paths += sorted(Path(args.dir).glob("*.pgm"))
    if not paths:
        raise ValueError("energy needs --in or --dir")
    lines = ["image,weighted,unweighted,blocks"]
    for p in paths:
        pixels = codec.pad_to_blocks(load_pgm(p).pixels)
        r = zonal2d.image_energy_compaction(pixels)
        lines.append(f"{p.stem},{r.weighted:.4f},{r.unweighted:.4f},{r.blocks}")
    _emit(lines, args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zonaldct", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("-v", "--verbose", action="store_true", help="log run details to stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    names = sorted(REGISTRY)

    p = sub.add_parser("transform", help="transform one vector or 8x8 block, print coefficients")
    p.add_argument("--transform", choices=names, default="pruned")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--vector", help="8 comma-separated samples")
    g.add_argument("--block", help="64 comma-separated samples, row-major")
    p.add_argument("--pruned", action="store_true", help="keep only the 4 lowest-frequency rows")
    p.add_argument("--scaled", action="store_true", help="apply the orthogonalizing diagonal")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("compress", help="compress a PGM, print metrics CSV")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--transform", choices=names, default="modified-rdct")
    p.add_argument("--pruned", action="store_true")
    p.add_argument("--level-shift", action="store_true", help="subtract 128 before the transform")
    p.add_argument("--out", help="reconstructed PGM")
    p.add_argument("--csv", help="write metrics CSV here instead of stdout")
    p.set_defaults(func=cmd_compress)

    p = sub.add_parser("bench-complexity", help="operation-count table as CSV")
    p.add_argument("--savings", action="store_true", help="percentage reductions instead of raw counts")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench_complexity)

    p = sub.add_parser("bench-corpus", help="per-image codec metrics over a directory of PGMs")
    p.add_argument("--dir", required=True)
    p.add_argument("--transform", action="append", choices=[n for n in names if n != "pruned"])
    p.add_argument("--level-shift", action="store_true")
    p.add_argument("--average", action="store_true", help="append per-configuration averages")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench_corpus)

    p = sub.add_parser("energy", help="energy compaction of PGM images")
    p.add_argument("--in", dest="input", action="append")
    p.add_argument("--dir")
    p.add_argument("--out")
    p.set_defaults(func=cmd_energy)
    return parser


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:  # usage errors and --help
        return e.code if isinstance(e.code, int) else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        args.func(args)
    except (OSError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"zonaldct {args.command}: error: {msg}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
