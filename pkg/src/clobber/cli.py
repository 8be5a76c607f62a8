"""Command-line front door for the solitaire clobber engine.

Exit codes: 0 success, 1 usage error, 2 domain error (bad board text, size
limits, illegal replay, inadmissible family size).  With --json exactly one
JSON document goes to stdout and nothing else does.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .board import (
    LEFT,
    RIGHT,
    Conformation,
    Move,
    ReplayError,
    Topology,
    parse,
    pawn_count,
    render,
    replay,
)
from .extremal import check_upper_bound, generate_family
from .oracle import DEFAULT_ORACLE_LIMIT, oracle_value, sweep_max
from .reporting import (
    write_bench_plot,
    write_bound_csv,
    write_bound_plot,
    write_sweep_csv,
)
from .solver import solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; here 2 means domain error, so remap."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _topology(args: argparse.Namespace) -> Topology:
    return Topology.CYCLE if args.cycle else Topology.LINE


def _handle_solve(args: argparse.Namespace) -> int:
    c = parse(args.board, _topology(args))
    res = solve(c, trace=args.trace)
    if args.json:
        doc: dict = {"value": res.value}
        if args.strategy:
            doc["strategy"] = [[m.from_, m.dir] for m in res.strategy]
        doc["n"] = len(c)
        doc["topology"] = c.topology.value
        if args.trace:
            doc["trace"] = res.trace
        print(json.dumps(doc, separators=(",", ":")))
        return EXIT_OK
    print(f"value: {res.value}")
    if args.strategy:
        for m in res.strategy:
            print(f"{m.from_} {m.dir}")
    if args.trace and res.trace is not None:
        for i, seg in enumerate(res.trace["segments"]):
            line = (
                f"segment {i}: offset={seg['offset']} cells={seg['cells']}"
                f" word={seg['word'] or '(empty)'} cover={seg['cover']}"
                f" parts={seg['parts']}"
            )
            if seg.get("seam") is not None:
                line += f" seam={seg['seam']}"
            if "flip" in seg:
                line += f" flip={seg['flip'][0]} {seg['flip'][1]}"
            print(line)
    return EXIT_OK


def _handle_oracle(args: argparse.Namespace) -> int:
    c = parse(args.board, _topology(args))
    print(f"value: {oracle_value(c, limit=args.limit)}")
    return EXIT_OK


def _handle_sweep(args: argparse.Namespace) -> int:
    topology = _topology(args)
    best, argmax = sweep_max(args.n, topology,
                             require_both_colors=args.both_colors)
    print(f"n: {args.n}")
    print(f"topology: {topology.value}")
    print(f"max value: {best}")
    print(f"argmax classes: {len(argmax)}")
    shown = argmax[:10]
    for c in shown:
        print(f"  {render(c)}")
    if len(argmax) > len(shown):
        print(f"  ... ({len(argmax) - len(shown)} more)")
    if args.csv:
        write_sweep_csv(args.csv, args.n, topology, best, argmax)
        print(f"wrote {args.csv}")
    return EXIT_OK


def _handle_family(args: argparse.Namespace) -> int:
    member = generate_family(args.n)
    res = solve(member.conformation)
    print(f"n: {member.n}")
    print(f"cells: {member.conformation.cells}")
    print(f"claimed value: {member.claimed_value}")
    print(f"solver value: {res.value}")
    if res.value != member.claimed_value:
        print("error: solver disagrees with the family claim", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def _handle_bound(args: argparse.Namespace) -> int:
    rows = check_upper_bound(args.nmax)
    print(f"{'n':>4} {'max':>4} {'n//3':>5} {'residual':>9}  flag")
    for r in rows:
        flag = "OVER" if r.flagged else ""
        print(f"{r.n:>4} {r.max_value:>4} {r.n // 3:>5} {r.residual:>9}  {flag}")
    if args.csv:
        write_bound_csv(args.csv, rows)
        print(f"wrote {args.csv}")
    if args.plot:
        write_bound_plot(args.plot, rows)
        print(f"wrote {args.plot}")
    return EXIT_OK


def _bench_sizes(nmin: int, nmax: int, steps: int) -> list[int]:
    if nmin < 1 or nmax < nmin:
        raise ValueError(f"need 1 <= NMIN <= NMAX, got {nmin} and {nmax}")
    if steps < 1:
        raise ValueError("--steps must be at least 1")
    if steps == 1 or nmin == nmax:
        return sorted({nmin, nmax})
    ratio = (nmax / nmin) ** (1.0 / (steps - 1))
    return sorted({round(nmin * ratio**i) for i in range(steps)})


def _random_cells(n: int, rng: np.random.Generator) -> str:
    bits = rng.integers(0, 2, size=n, dtype=np.uint8)
    codes = np.where(bits == 1, np.uint8(ord("x")), np.uint8(ord("o")))
    return codes.tobytes().decode("ascii")


def _handle_bench(args: argparse.Namespace) -> int:
    sizes = _bench_sizes(args.nmin, args.nmax, args.steps)
    rng = np.random.default_rng(args.seed)
    # First solve in each topology pays the kernel compile cost; keep it
    # out of the timings.
    for topology in Topology:
        solve(parse("xo" * 8, topology))
    rows: list[tuple[int, str, float, int]] = []
    print(f"{'n':>10} {'topology':>8} {'seconds':>10} {'ns/cell':>9} {'ops/cell':>9}")
    for n in sizes:
        cells = _random_cells(n, rng)
        for topology in Topology:
            if topology is Topology.CYCLE and n < 3:
                continue
            c = Conformation(cells, topology)
            t0 = time.perf_counter()
            res = solve(c)
            dt = time.perf_counter() - t0
            rows.append((n, topology.value, dt, res.ops))
            print(f"{n:>10} {topology.value:>8} {dt:>10.4f}"
                  f" {dt / n * 1e9:>9.1f} {res.ops / n:>9.2f}")
    if args.plot:
        write_bench_plot(args.plot, rows)
        print(f"wrote {args.plot}")
    return EXIT_OK


def _read_strategy(path: str) -> list[Move]:
    """Strategy file: one `FROM DIR` per line, # starts a comment."""
    moves: list[Move] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2 or fields[1] not in (LEFT, RIGHT):
                raise ValueError(
                    f"{path}:{lineno}: expected 'FROM DIR' with DIR in"
                    f" {{L,R}}, got {line!r}")
            try:
                origin = int(fields[0])
            except ValueError:
                raise ValueError(
                    f"{path}:{lineno}: FROM must be an integer, got"
                    f" {fields[0]!r}") from None
            moves.append(Move(origin, fields[1]))
    return moves


def _handle_verify(args: argparse.Namespace) -> int:
    c = parse(args.board, _topology(args))
    moves = _read_strategy(args.strategy_file)
    final = replay(c, moves)
    print(f"moves: {len(moves)}")
    print(f"final: {render(final)}")
    print(f"pawns: {pawn_count(final)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clobber",
                     description="Solitaire clobber engine: exact values, "
                                 "strategies, sweeps, and benchmarks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="Minimum reachable pawn count, fast path.")
    p.add_argument("board", help="board text over {x,o,-}")
    p.add_argument("--cycle", action="store_true", help="ring topology")
    p.add_argument("--strategy", action="store_true",
                   help="also print a witnessing move sequence")
    p.add_argument("--trace", action="store_true",
                   help="show the per-segment decomposition")
    p.add_argument("--json", action="store_true",
                   help="emit a single JSON document")

    p = sub.add_parser("oracle", help="Exhaustive-search value (small boards).")
    p.add_argument("board", help="board text over {x,o,-}")
    p.add_argument("--cycle", action="store_true", help="ring topology")
    p.add_argument("--limit", type=int, default=DEFAULT_ORACLE_LIMIT,
                   help="refuse boards larger than this")

    p = sub.add_parser("sweep",
                       help="Max value over all fully occupied n-cell boards.")
    p.add_argument("n", type=int)
    p.add_argument("--cycle", action="store_true", help="ring topology")
    p.add_argument("--both-colors", action="store_true",
                   help="skip monochromatic boards")
    p.add_argument("--csv", metavar="PATH", help="also write one CSV row")

    p = sub.add_parser("family",
                       help="The hard-instance ring for an admissible size.")
    p.add_argument("n", type=int)

    p = sub.add_parser("bound",
                       help="Sweep max values up to NMAX against the n/3 line.")
    p.add_argument("nmax", type=int)
    p.add_argument("--csv", metavar="PATH", help="write the table as CSV")
    p.add_argument("--plot", metavar="PATH", help="write a step plot (PNG)")

    p = sub.add_parser("bench",
                       help="Time the solver on random boards of rising size.")
    p.add_argument("nmin", type=int)
    p.add_argument("nmax", type=int)
    p.add_argument("--steps", type=int, default=5,
                   help="number of sizes, geometric between NMIN and NMAX")
    p.add_argument("--seed", type=int, default=42,
                   help="board generator seed, fixed for reproducibility")
    p.add_argument("--plot", metavar="PATH", help="write a log-log plot (PNG)")

    p = sub.add_parser("verify",
                       help="Replay a strategy file against a board.")
    p.add_argument("board", help="board text over {x,o,-}")
    p.add_argument("strategy_file", help="one 'FROM DIR' per line, # comments")
    p.add_argument("--cycle", action="store_true", help="ring topology")

    return parser


_HANDLERS = {
    "solve": _handle_solve,
    "oracle": _handle_oracle,
    "sweep": _handle_sweep,
    "family": _handle_family,
    "bound": _handle_bound,
    "bench": _handle_bench,
    "verify": _handle_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, OSError, ReplayError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
