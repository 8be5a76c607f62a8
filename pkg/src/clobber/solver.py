"""Linear-time exact solver.

The value of a conformation equals cells minus the maximum number of
separations that disjoint, non-adjacent "parts" can cover, where a part is
a token interval whose inner edge word is one of

    s^a d   |   d s^a   |   d s^a d s^b d        (a, b >= 0)

(s = adjacent pawns share a color, d = they differ). Each part is burned
down to a single survivor by directional waves; uncovered tokens survive
untouched. The scan in ``_kernels`` maximizes coverage in one pass; cycles
are handled by conditioning the same scan on the state crossing a fixed
seam (5 cases) plus one special test for reaching a single survivor via a
first move across the seam.

The ``ops`` field of a result counts kernel loop iterations plus the n
reads of the input, so asserting ops = O(n) is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _kernels as K
from .board import Conformation, Move, Topology
from .words import HolesError, one_pawn_word, opening_words

_STATE_NAMES = ("F", "S", "P1", "P2", "C")
_DIRS = ("L", "R")


class Strategy:
    """An ordered move sequence backed by an (m, 2) int32 array."""

    __slots__ = ("_arr",)

    def __init__(self, arr: np.ndarray | None = None):
        if arr is None:
            arr = np.empty((0, 2), dtype=np.int32)
        self._arr = arr

    @classmethod
    def from_moves(cls, moves) -> "Strategy":
        arr = np.empty((len(moves), 2), dtype=np.int32)
        for i, m in enumerate(moves):
            arr[i, 0] = m[0]
            arr[i, 1] = K.RIGHT_CODE if m[1] == "R" else K.LEFT_CODE
        return cls(arr)

    @property
    def array(self) -> np.ndarray:
        return self._arr

    def __len__(self) -> int:
        return self._arr.shape[0]

    def __getitem__(self, i) -> Move:
        if isinstance(i, slice):
            return Strategy(self._arr[i])
        row = self._arr[i]
        return Move(int(row[0]), _DIRS[int(row[1])])

    def __iter__(self) -> Iterator[Move]:
        for row in self._arr:
            yield Move(int(row[0]), _DIRS[int(row[1])])

    def __eq__(self, other) -> bool:
        if isinstance(other, Strategy):
            return self._arr.shape == other._arr.shape and bool(
                (self._arr == other._arr).all()
            )
        return list(self) == list(other)

    def __repr__(self) -> str:
        if len(self) > 8:
            head = ", ".join(f"({m.from_},{m.dir})" for m in self[:4])
            return f"Strategy([{head}, ... {len(self)} moves])"
        body = ", ".join(f"({m.from_},{m.dir})" for m in self)
        return f"Strategy([{body}])"

    def to_pairs(self) -> list[tuple[int, str]]:
        return [(int(r[0]), _DIRS[int(r[1])]) for r in self._arr]


@dataclass
class SolveResult:
    value: int
    strategy: Strategy
    ops: int
    trace: dict | None = None


def _edge_array(cells: str, cyclic: bool) -> np.ndarray:
    b = np.frombuffer(cells.encode("ascii"), dtype=np.uint8)
    if cyclic:
        return (b != np.roll(b, -1)).astype(np.uint8)
    return (b[:-1] != b[1:]).astype(np.uint8)


def _word_str(edges: np.ndarray) -> str:
    return "".join("d" if e else "s" for e in edges)


def _segments(cells: str, cyclic: bool) -> list[tuple[int, str]]:
    """Maximal pawn runs. On a cycle with holes the wrap pair merges."""
    n = len(cells)
    runs: list[tuple[int, str]] = []
    i = 0
    while i < n:
        if cells[i] == "-":
            i += 1
            continue
        j = i
        while j + 1 < n and cells[j + 1] != "-":
            j += 1
        runs.append((i, cells[i : j + 1]))
        i = j + 1
    if cyclic and len(runs) >= 2 and runs[0][0] == 0 and cells[-1] != "-":
        head = runs.pop(0)
        off, seg = runs.pop()
        runs.append((off, seg + head[1]))
    return runs


def _solve_line_segment(cells: str, trace_parts: bool):
    """Full line segment (no holes). Returns (value, moves, ops, info)."""
    n = len(cells)
    edges = _edge_array(cells, False)
    m = edges.shape[0]
    bp = np.zeros((m, 5), dtype=np.uint8)
    dp = K.scan_bp(edges, K.F, bp)
    end_state = K.F
    for st in (K.C, K.P1):
        if dp[st] > dp[end_state]:
            end_state = st
    cover = int(dp[end_state])
    states = K.walk_back(bp, end_state)
    covered = states[1:] != K.F
    out = np.empty((n, 2), dtype=np.int32)
    written = K.emit_moves(edges, covered, 0, n, out)
    ops = 3 * m + written
    info = None
    if trace_parts:
        info = {
            "word": _word_str(edges),
            "cover": cover,
            "parts": _runs_of(covered, 0, m),
            "seam": None,
        }
    return n - cover, out[:written], ops, info


def _runs_of(covered: np.ndarray, start: int, m: int) -> list[list[int]]:
    runs = []
    k = 0
    while k < m:
        idx = (start + k) % m if m else 0
        if not covered[idx]:
            k += 1
            continue
        k0 = k
        while k + 1 < m and covered[(start + k + 1) % m]:
            k += 1
        runs.append([(start + k0) % m, (start + k) % m])
        k += 1
    return runs


def _flip_first_moves(edges: np.ndarray, n: int):
    """Candidate openings that might leave a 1-reducible line.

    Wraps words.opening_words with board bookkeeping: yields
    (first_move, line_edges, base) where line token t sits at ring cell
    (base + t) % n.
    """
    for i, dir_code, line_edges in opening_words(edges):
        if dir_code == K.LEFT_CODE:
            yield Move((i + 1) % n, "L"), line_edges, (i + 2) % n
        else:
            yield Move(i % n, "R"), line_edges, (i + 1) % n


def _solve_cycle(cells: str, trace_parts: bool):
    n = len(cells)
    if len(set(cells)) == 1:
        # monochromatic ring: no move exists, everything survives
        info = {"word": "s" * n, "cover": 0, "parts": [], "seam": None} if trace_parts else None
        return n, np.empty((0, 2), dtype=np.int32), n, info
    edges = _edge_array(cells, True)
    m = n
    best_cover = -1
    best_seam = K.F
    for seam in range(5):
        dp = K.scan_nobp(edges, seam)
        if dp[seam] > best_cover:
            best_cover = int(dp[seam])
            best_seam = seam
    value = n - best_cover
    ops = 5 * m
    d_count = int(edges.sum())
    if value > 1 and d_count <= 6:
        # a single survivor can need its first move to flip an edge; cheap
        # to test because few candidate openings exist
        for first, line_edges, base in _flip_first_moves(edges, n):
            ops += line_edges.shape[0]
            if not one_pawn_word(line_edges):
                continue
            lm = line_edges.shape[0]
            bp = np.zeros((lm, 5), dtype=np.uint8)
            dp = K.scan_bp(line_edges, K.F, bp)
            end_state = max((K.F, K.C, K.P1), key=lambda st: dp[st])
            states = K.walk_back(bp, end_state)
            covered = states[1:] != K.F
            out = np.empty((n, 2), dtype=np.int32)
            written = K.emit_moves(line_edges, covered, 0, lm + 1, out)
            moves = np.empty((written + 1, 2), dtype=np.int32)
            moves[0, 0] = first.from_
            moves[0, 1] = K.RIGHT_CODE if first.dir == "R" else K.LEFT_CODE
            moves[1:, 0] = (out[:written, 0] + base) % n
            moves[1:, 1] = out[:written, 1]
            ops += 3 * lm + written
            info = None
            if trace_parts:
                info = {
                    "word": _word_str(edges),
                    "cover": n - 1,
                    "parts": [],
                    "seam": None,
                    "flip": [first.from_, first.dir],
                }
            return 1, moves, ops, info
    bp = np.zeros((m, 5), dtype=np.uint8)
    K.scan_bp(edges, best_seam, bp)
    states = K.walk_back(bp, best_seam)
    covered = states[1:] != K.F
    uncovered = np.flatnonzero(~covered)
    start = int(uncovered[0]) if uncovered.shape[0] else 0
    out = np.empty((n, 2), dtype=np.int32)
    written = K.emit_moves(edges, covered, start, n, out)
    ops += 3 * m + written
    info = None
    if trace_parts:
        info = {
            "word": _word_str(edges),
            "cover": best_cover,
            "parts": _runs_of(covered, start, m),
            "seam": _STATE_NAMES[best_seam],
        }
    return value, out[:written], ops, info


def _result(value, arr, ops, info, c, trace):
    tr = None
    if trace:
        info["offset"] = 0
        info["cells"] = c.cells
        tr = {"n": len(c.cells), "topology": c.topology.value, "segments": [info]}
    return SolveResult(value=value, strategy=Strategy(arr), ops=len(c.cells) + ops, trace=tr)


def solve_line(c: Conformation, trace: bool = False) -> SolveResult:
    """O(n) value and strategy for a fully occupied line."""
    if c.topology is not Topology.LINE:
        raise ValueError("solve_line requires line topology")
    if "-" in c.cells:
        raise HolesError("holes must be decomposed first; use solve()")
    value, arr, ops, info = _solve_line_segment(c.cells, trace)
    return _result(value, arr, ops, info, c, trace)


def solve_cycle(c: Conformation, trace: bool = False) -> SolveResult:
    """O(n) value and strategy for a fully occupied cycle."""
    if c.topology is not Topology.CYCLE:
        raise ValueError("solve_cycle requires cycle topology")
    if "-" in c.cells:
        raise HolesError("holes must be decomposed first; use solve()")
    value, arr, ops, info = _solve_cycle(c.cells, trace)
    return _result(value, arr, ops, info, c, trace)


def solve(c: Conformation, trace: bool = False) -> SolveResult:
    """Minimum reachable pawn count plus one witnessing strategy."""
    n = len(c.cells)
    cyclic = c.topology is Topology.CYCLE
    ops = n
    pieces: list[np.ndarray] = []
    value = 0
    seg_infos = []
    if "-" in c.cells:
        # holes split the board into independent lines (a vacated cell is
        # never re-entered); on a cycle the run crossing cell 0 wraps
        for off, seg in _segments(c.cells, cyclic):
            v, arr, seg_ops, info = _solve_line_segment(seg, trace)
            value += v
            ops += seg_ops
            if arr.shape[0]:
                arr = arr.copy()
                arr[:, 0] = (arr[:, 0] + off) % n
                pieces.append(arr)
            if trace:
                info["offset"] = off
                info["cells"] = seg
                seg_infos.append(info)
    elif cyclic:
        value, arr, seg_ops, info = _solve_cycle(c.cells, trace)
        ops += seg_ops
        pieces.append(arr)
        if trace:
            info["offset"] = 0
            info["cells"] = c.cells
            seg_infos.append(info)
    else:
        value, arr, seg_ops, info = _solve_line_segment(c.cells, trace)
        ops += seg_ops
        pieces.append(arr)
        if trace:
            info["offset"] = 0
            info["cells"] = c.cells
            seg_infos.append(info)
    if pieces:
        moves = np.concatenate(pieces) if len(pieces) > 1 else pieces[0]
    else:
        moves = np.empty((0, 2), dtype=np.int32)
    tr = None
    if trace:
        tr = {"n": n, "topology": c.topology.value, "segments": seg_infos}
    return SolveResult(value=value, strategy=Strategy(moves), ops=ops, trace=tr)


def fast_replay(c: Conformation, strategy) -> Conformation:
    """Array-based replay; same semantics as board.replay, O(1) per move."""
    from .board import ReplayError, IllegalMove

    buf = np.frombuffer(c.cells.encode("ascii"), dtype=np.uint8).copy()
    if isinstance(strategy, Strategy):
        arr = strategy.array
    else:
        arr = Strategy.from_moves(list(strategy)).array
    bad = K.replay_moves(buf, arr, c.topology is Topology.CYCLE)
    if bad >= 0:
        mv = Move(int(arr[bad, 0]), _DIRS[int(arr[bad, 1])])
        raise ReplayError(int(bad), IllegalMove("illegal", mv))
    return Conformation(buf.tobytes().decode("ascii"), c.topology)
