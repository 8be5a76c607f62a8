"""CSV and figure writers for sweeps, bound reports, and benchmarks."""

from __future__ import annotations

import csv

from .board import Conformation, Topology
from .extremal import BoundRow


def write_sweep_csv(path: str, n: int, topology: Topology, best: int,
                    argmax: list[Conformation]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "topology", "max_value", "count_of_argmax",
                    "one_argmax_rendered"])
        w.writerow([n, topology.value, best, len(argmax),
                    argmax[0].cells if argmax else ""])


def write_bound_csv(path: str, rows: list[BoundRow]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "max_value", "floor_n_over_3", "residual", "flagged"])
        for r in rows:
            w.writerow([r.n, r.max_value, r.n // 3, r.residual, int(r.flagged)])


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def write_bound_plot(path: str, rows: list[BoundRow]) -> None:
    plt = _pyplot()
    ns = [r.n for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.step(ns, [r.max_value for r in rows], where="mid", label="max value")
    ax.step(ns, [r.n // 3 for r in rows], where="mid", linestyle="--",
            label="n/3 floor")
    ax.set_xlabel("ring size n")
    ax.set_ylabel("pawns")
    ax.set_title("Largest reducibility value over all two-colored rings")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_bench_plot(path: str, samples: list[tuple[int, str, float, int]]) -> None:
    """samples: (n, topology, seconds, ops)."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    for topo in ("line", "cycle"):
        pts = [(n, sec) for n, t, sec, _ in samples if t == topo]
        if pts:
            ax.loglog([p[0] for p in pts], [p[1] for p in pts],
                      marker="o", label=topo)
    ax.set_xlabel("board size n")
    ax.set_ylabel("seconds")
    ax.set_title("Solve time (slope 1 = linear)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
