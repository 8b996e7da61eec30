"""Command-line front end: solve instances from text, or run benchmark sweeps.

Exit codes: 0 success, 2 usage or input errors, 3 hash-collision tripwire.
"""

import argparse
import sys
import time
from random import Random

from .subset_sum import BACKENDS, HashCollisionError, Instance, solve_with_stats

STATS_KEYS = ("updates", "diff_visits", "store_ops", "bellman_iterations")
BENCH_COLUMNS = "m,backend,wall_ns,updates,diff_visits,store_ops"


def parse_instance(text: str, modulus: int) -> Instance:
    """Parse one entry per line: "value" or "value multiplicity".

    Blank lines and '#' comments are ignored; values reduce mod ``modulus``
    and repeated residues accumulate.  Raises ValueError with a line number
    on malformed input.
    """
    mult = [0] * modulus
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) > 2:
            raise ValueError(
                f"line {lineno}: expected 'value' or 'value multiplicity'")
        try:
            value = int(parts[0])
            count = int(parts[1]) if len(parts) == 2 else 1
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token") from None
        if count < 0:
            raise ValueError(f"line {lineno}: negative multiplicity {count}")
        mult[value % modulus] += count
    return Instance(modulus, mult)


def dense_instance(m: int, seed: int) -> Instance:
    """Seeded random dense instance: about half the residues present."""
    rng = Random(seed * 1_000_003 + m)
    mult = [0] * m
    for x in range(1, m):
        if rng.random() < 0.5:
            mult[x] = rng.randint(1, 2)
    return Instance(m, mult)


def bench_rows(sizes, backend: str, seed: int) -> list[tuple]:
    """One (m, backend, wall_ns, updates, diff_visits, store_ops) row per size."""
    rows = []
    for m in sizes:
        inst = dense_instance(m, seed)
        start = time.perf_counter_ns()
        result = solve_with_stats(inst, backend=backend, seed=seed)
        wall = time.perf_counter_ns() - start
        s = result.stats
        rows.append((m, backend, wall, s.updates, s.diff_visits, s.store_ops))
    return rows


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="modsum",
        description="Compute all attainable subset sums modulo M.")
    ap.add_argument("--modulus", type=int, default=None,
                    help="modulus M (required unless --bench is given)")
    ap.add_argument("--backend", choices=BACKENDS, default="tagged")
    ap.add_argument("--seed", type=int, default=None,
                    help="hash seed (hashed backend); also seeds --bench instances")
    ap.add_argument("--mode", choices=("list", "count", "stats"), default="list")
    ap.add_argument("--bench", type=str, default=None, metavar="M1,M2,...",
                    help="benchmark the chosen backend on random dense "
                         "instances of these sizes and print CSV")
    ap.add_argument("--input", type=str, default=None, metavar="PATH",
                    help="instance file, one entry per line (default: stdin)")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)

    if args.bench is not None:
        try:
            sizes = [int(tok) for tok in args.bench.split(",") if tok.strip()]
        except ValueError:
            print("error: --bench expects comma-separated integers",
                  file=sys.stderr)
            return 2
        if not sizes or min(sizes) < 1:
            print("error: --bench sizes must be positive", file=sys.stderr)
            return 2
        seed = args.seed if args.seed is not None else 0
        print(BENCH_COLUMNS)
        for row in bench_rows(sizes, args.backend, seed):
            print(",".join(str(v) for v in row))
        return 0

    if args.seed is not None and args.backend != "hashed":
        print(f"warning: --seed is ignored for backend '{args.backend}'",
              file=sys.stderr)
    if args.modulus is None:
        print("error: --modulus is required", file=sys.stderr)
        return 2
    if args.modulus < 1:
        print(f"error: modulus must be >= 1, got {args.modulus}",
              file=sys.stderr)
        return 2

    if args.input is None:
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return 2

    try:
        inst = parse_instance(text, args.modulus)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        result = solve_with_stats(inst, backend=args.backend, seed=args.seed)
    except HashCollisionError as exc:
        print(f"error: hash collision tripwire: {exc}", file=sys.stderr)
        return 3

    if args.mode == "count":
        print(len(result.sums))
    else:
        for residue in result.sums.ascending():
            print(residue)
    if args.mode == "stats":
        for key in STATS_KEYS:
            print(f"{key}={getattr(result.stats, key)}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
