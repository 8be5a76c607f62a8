"""Rules of solitaire Clobber on a line or a cycle.

A board is a string over 'x' (black pawn), 'o' (white pawn) and '-' (empty
cell).  One player moves pawns of either color; a move pushes a pawn onto an
adjacent pawn of the opposite color, the victim leaves the game, the mover
takes its cell and the origin cell stays empty forever.  The reducibility
value of a board is the smallest pawn count any legal move sequence can reach.

Everything in this module is a pure function over immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

BLACK = "x"
WHITE = "o"
EMPTY = "-"

LEFT = "L"
RIGHT = "R"

_ALPHABET = frozenset((BLACK, WHITE, EMPTY))
_COLOR_SWAP = str.maketrans(BLACK + WHITE, WHITE + BLACK)


class Topology(str, Enum):
    LINE = "line"
    CYCLE = "cycle"


class ParseError(ValueError):
    """Text that does not describe a board."""


class CycleLengthError(ParseError):
    """A cycle needs at least three cells; shorter rings are undefined."""


class Move(NamedTuple):
    from_: int
    dir: str  # LEFT or RIGHT


class IllegalMove(Exception):
    """A move that the rules reject; `reason` is a stable machine code."""

    def __init__(self, reason: str, move: Move):
        super().__init__(f"illegal move ({move.from_} {move.dir}): {reason}")
        self.reason = reason
        self.move = move


class ReplayError(Exception):
    """Replay hit an illegal move; `index` is its position in the sequence."""

    def __init__(self, index: int, cause: IllegalMove):
        super().__init__(f"move {index} is illegal: {cause.reason}")
        self.index = index
        self.reason = cause.reason
        self.move = cause.move


@dataclass(frozen=True)
class Conformation:
    cells: str
    topology: Topology = Topology.LINE

    def __len__(self) -> int:
        return len(self.cells)


def parse(text: str, topology: Topology = Topology.LINE) -> Conformation:
    """Read a board from text; cells appear in index order, 0-based."""
    if not text:
        raise ParseError("empty board")
    for i, ch in enumerate(text):
        if ch not in _ALPHABET:
            raise ParseError(f"illegal character {ch!r} at index {i}")
    topology = Topology(topology)
    if topology is Topology.CYCLE and len(text) < 3:
        raise CycleLengthError(f"cycle needs at least 3 cells, got {len(text)}")
    return Conformation(text, topology)


def render(c: Conformation) -> str:
    """Inverse of parse on the cell sequence."""
    return c.cells


def pawn_count(c: Conformation) -> int:
    return len(c.cells) - c.cells.count(EMPTY)


def _target(c: Conformation, move: Move) -> int:
    """Destination cell index, or -1 when the move falls off a line end."""
    n = len(c.cells)
    step = -1 if move.dir == LEFT else 1
    j = move.from_ + step
    if c.topology is Topology.CYCLE:
        return j % n
    return j if 0 <= j < n else -1


def legal_moves(c: Conformation) -> list[Move]:
    """All legal moves, ascending by origin, left before right."""
    out: list[Move] = []
    cells = c.cells
    for i, ch in enumerate(cells):
        if ch == EMPTY:
            continue
        for d in (LEFT, RIGHT):
            m = Move(i, d)
            j = _target(c, m)
            if j < 0:
                continue
            victim = cells[j]
            if victim != EMPTY and victim != ch:
                out.append(m)
    return out


def apply(c: Conformation, move: Move) -> Conformation:
    """One clobber step.  Raises IllegalMove with a reason code on violations.

    Reason codes: off_board, origin_empty, target_empty, same_color.
    """
    if move.dir not in (LEFT, RIGHT):
        raise ValueError(f"direction must be {LEFT!r} or {RIGHT!r}, got {move.dir!r}")
    cells = c.cells
    if not 0 <= move.from_ < len(cells):
        raise IllegalMove("off_board", move)
    j = _target(c, move)
    if j < 0:
        raise IllegalMove("off_board", move)
    mover = cells[move.from_]
    if mover == EMPTY:
        raise IllegalMove("origin_empty", move)
    victim = cells[j]
    if victim == EMPTY:
        raise IllegalMove("target_empty", move)
    if victim == mover:
        raise IllegalMove("same_color", move)
    out = list(cells)
    out[j] = mover
    out[move.from_] = EMPTY
    return Conformation("".join(out), c.topology)


def replay(c: Conformation, moves: Iterable[Move]) -> Conformation:
    """Fold apply over a move sequence; ReplayError names the first bad move."""
    cur = c
    for i, m in enumerate(moves):
        try:
            cur = apply(cur, Move(int(m[0]), m[1]))
        except IllegalMove as exc:
            raise ReplayError(i, exc) from exc
    return cur


def swap_colors(c: Conformation) -> Conformation:
    return Conformation(c.cells.translate(_COLOR_SWAP), c.topology)


def reverse(c: Conformation) -> Conformation:
    return Conformation(c.cells[::-1], c.topology)


def rotate(c: Conformation, k: int) -> Conformation:
    """Rotate a cycle so that old cell k becomes cell 0."""
    if c.topology is not Topology.CYCLE:
        raise ValueError("only cycles can be rotated")
    k %= len(c.cells)
    return Conformation(c.cells[k:] + c.cells[:k], c.topology)
