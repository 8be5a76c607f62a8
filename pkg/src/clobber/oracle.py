"""Exhaustive ground truth for small boards.

Memoized depth-first search over every legal move sequence.  Slow by design
and limited in size; the linear solver is tested against it, never the other
way around.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import (
    EMPTY,
    LEFT,
    RIGHT,
    Conformation,
    CycleLengthError,
    Move,
    Topology,
    parse,
)

DEFAULT_ORACLE_LIMIT = 16
DEFAULT_SWEEP_LIMIT = 14


class SizeLimitError(ValueError):
    """Board too large for exhaustive search."""


@dataclass
class SearchStats:
    states_visited: int = 0
    memo_hits: int = 0
    max_depth: int = 0


Memo = dict


def _raw_moves(cells: str, cyclic: bool):
    """(origin, target) pairs in the same order board.legal_moves uses."""
    n = len(cells)
    last = n - 1
    for i, ch in enumerate(cells):
        if ch == EMPTY:
            continue
        j = last if (i == 0 and cyclic) else i - 1
        if j >= 0:
            v = cells[j]
            if v != EMPTY and v != ch:
                yield i, j
        j = 0 if (i == last and cyclic) else i + 1
        if j <= last:
            v = cells[j]
            if v != EMPTY and v != ch:
                yield i, j


def _raw_apply(cells: str, i: int, j: int) -> str:
    out = list(cells)
    out[j] = cells[i]
    out[i] = EMPTY
    return "".join(out)


def _value(cells: str, cyclic: bool, memo: Memo, stats: SearchStats, depth: int) -> int:
    key = cells
    hit = memo.get(key)
    if hit is not None:
        stats.memo_hits += 1
        return hit
    stats.states_visited += 1
    if depth > stats.max_depth:
        stats.max_depth = depth
    best = -1
    for i, j in _raw_moves(cells, cyclic):
        v = _value(_raw_apply(cells, i, j), cyclic, memo, stats, depth + 1)
        if best < 0 or v < best:
            best = v
            if v == 1:
                break  # nothing beats a single pawn
    if best < 0:
        best = len(cells) - cells.count(EMPTY)
    memo[key] = best
    return best


def _check_limit(c: Conformation, limit: int) -> None:
    if len(c.cells) > limit:
        raise SizeLimitError(
            f"board size {len(c.cells)} exceeds the exhaustive-search limit {limit}"
        )


def oracle_value(
    c: Conformation,
    limit: int = DEFAULT_ORACLE_LIMIT,
    stats: SearchStats | None = None,
    memo: Memo | None = None,
) -> int:
    """Exact reducibility value by exhaustive search.

    `memo` may be shared between calls of the same topology to amortize work;
    `stats` is filled in when given.
    """
    _check_limit(c, limit)
    if stats is None:
        stats = SearchStats()
    if memo is None:
        memo = {}
    return _value(c.cells, c.topology is Topology.CYCLE, memo, stats, 0)


def oracle_strategy(
    c: Conformation,
    limit: int = DEFAULT_ORACLE_LIMIT,
    memo: Memo | None = None,
) -> list[Move]:
    """A move sequence reaching oracle_value(c), first-found under the fixed
    move ordering, so deterministic."""
    _check_limit(c, limit)
    if memo is None:
        memo = {}
    stats = SearchStats()
    cyclic = c.topology is Topology.CYCLE
    cells = c.cells
    out: list[Move] = []
    target = _value(cells, cyclic, memo, stats, 0)
    while True:
        advanced = False
        for i, j in _raw_moves(cells, cyclic):
            child = _raw_apply(cells, i, j)
            if _value(child, cyclic, memo, stats, 0) == target:
                step = j - i
                if cyclic and abs(step) != 1:
                    step = -step  # wrap move: sign flips around the seam
                out.append(Move(i, LEFT if step < 0 else RIGHT))
                cells = child
                advanced = True
                break
        if not advanced:
            return out


def canonical_form(cells: str, topology: Topology) -> str:
    """Lexicographic minimum over the topology's symmetry group plus color
    swap.  Used to prune sweeps, never inside a single search."""
    swapped = cells.translate(_SWAP_TABLE)
    if topology is Topology.CYCLE:
        n = len(cells)
        best = cells
        for base in (cells, cells[::-1], swapped, swapped[::-1]):
            doubled = base + base
            for k in range(n):
                cand = doubled[k : k + n]
                if cand < best:
                    best = cand
        return best
    return min(cells, cells[::-1], swapped, swapped[::-1])


_SWAP_TABLE = str.maketrans("xo", "ox")


def sweep_max(
    n: int,
    topology: Topology,
    require_both_colors: bool = True,
    limit: int = DEFAULT_SWEEP_LIMIT,
    histogram: dict[int, int] | None = None,
) -> tuple[int, list[Conformation]]:
    """Maximum oracle value over every fully occupied n-cell coloring.

    Enumeration is canonicalized (rotation/reflection/color swap) to prune;
    the returned argmax list holds one Conformation per canonical class,
    sorted by rendered text.  `histogram`, when given, is filled with
    value -> canonical-class count.
    """
    if n > limit:
        raise SizeLimitError(f"sweep size {n} exceeds the sweep limit {limit}")
    topology = Topology(topology)
    if topology is Topology.CYCLE and n < 3:
        raise CycleLengthError(f"cycle needs at least 3 cells, got {n}")
    if n < 1:
        raise ValueError("board size must be positive")
    memo: Memo = {}
    stats = SearchStats()
    cyclic = topology is Topology.CYCLE
    best = -1
    argmax: list[str] = []
    full = (1 << n) - 1
    for mask in range(1 << n):
        if require_both_colors and mask in (0, full):
            continue
        cells = "".join("x" if mask >> i & 1 else "o" for i in range(n))
        if canonical_form(cells, topology) != cells:
            continue
        v = _value(cells, cyclic, memo, stats, 0)
        if histogram is not None:
            histogram[v] = histogram.get(v, 0) + 1
        if v > best:
            best = v
            argmax = [cells]
        elif v == best:
            argmax.append(cells)
    return best, [parse(s, topology) for s in sorted(argmax)]


__all__ = [
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_SWEEP_LIMIT",
    "SearchStats",
    "SizeLimitError",
    "canonical_form",
    "oracle_strategy",
    "oracle_value",
    "sweep_max",
]
