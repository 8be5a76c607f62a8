"""Solitaire Clobber: linear-time solving, exhaustive oracle, play service."""

from .board import (
    BLACK,
    EMPTY,
    LEFT,
    RIGHT,
    WHITE,
    Conformation,
    CycleLengthError,
    IllegalMove,
    Move,
    ParseError,
    ReplayError,
    Topology,
    apply,
    legal_moves,
    parse,
    pawn_count,
    render,
    replay,
    reverse,
    rotate,
    swap_colors,
)
from .oracle import (
    SearchStats,
    SizeLimitError,
    canonical_form,
    oracle_strategy,
    oracle_value,
    sweep_max,
)
from .solver import SolveResult, Strategy, fast_replay, solve, solve_cycle, solve_line
from .words import EdgeWord, HolesError, encode, value_from_word

__version__ = "0.1.0"
