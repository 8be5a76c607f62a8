"""Edge-word view of a board.

Every separation between adjacent cells gets one symbol: "s" when the two
pawns share a color, "d" when they differ. A line of n pawns gives a word
of n - 1 symbols; a cycle gives n symbols including the wrap edge. Values
are computed on words alone: the board itself is only needed to encode.

A line reduces to a single pawn exactly when its word lies in

    R  =  { empty }  |  s^a d  |  d s^a  |  d s^a d s^b d      (a, b >= 0)

and a general board's value is cells minus the largest number of edges
coverable by disjoint, non-adjacent intervals whose words lie in R minus
the empty word. Feasible coverings are exactly the annotations of the word
by the role alphabet below that avoid the forbidden adjacent role pairs,
which makes the optimization a pattern-avoidance problem with a finite
pattern set.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as K
from .board import Conformation, Topology

SAME = "s"
DIFF = "d"
ALPHABET = (SAME, DIFF)


class HolesError(ValueError):
    """Raised when an operation needs a fully occupied board."""


@dataclass(frozen=True)
class EdgeWord:
    symbols: str
    topology: Topology

    def __post_init__(self):
        for i, ch in enumerate(self.symbols):
            if ch not in ALPHABET:
                raise ValueError(f"illegal symbol {ch!r} at index {i}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols


# Role alphabet: what an edge does inside a covering.
#
#   U    uncovered (part boundary or isolated survivor)
#   S1   s inside the prefix of an "s^a d" part
#   DA   the d closing an "s^a d" part
#   DL   leading d of "d s^a" or "d s^a d s^b d"
#   SL   s of the first run after DL
#   DM   middle d of the three-d part
#   SM   s of the second run
#   DR   final d of the three-d part
ROLES = ("U", "S1", "DA", "DL", "SL", "DM", "SM", "DR")

SYMBOL_OF_ROLE = {
    "U": None,  # either symbol
    "S1": SAME,
    "DA": DIFF,
    "DL": DIFF,
    "SL": SAME,
    "DM": DIFF,
    "SM": SAME,
    "DR": DIFF,
}

ALLOWED_ROLE_PAIRS = frozenset(
    {
        ("U", "U"), ("U", "S1"), ("U", "DL"),
        ("S1", "S1"), ("S1", "DA"),
        ("DA", "U"),
        ("DL", "U"), ("DL", "SL"), ("DL", "DM"),
        ("SL", "U"), ("SL", "SL"), ("SL", "DM"),
        ("DM", "SM"), ("DM", "DR"),
        ("SM", "SM"), ("SM", "DR"),
        ("DR", "U"),
    }
)

FORBIDDEN_ROLE_PAIRS = frozenset(
    (a, b) for a in ROLES for b in ROLES if (a, b) not in ALLOWED_ROLE_PAIRS
)

# a line behaves as if flanked by uncovered edges
LINE_START_ROLES = frozenset(b for a, b in ALLOWED_ROLE_PAIRS if a == "U")
LINE_END_ROLES = frozenset({"U"} | {a for a, b in ALLOWED_ROLE_PAIRS if b == "U"})


def annotation_is_feasible(roles, word, topology: Topology) -> bool:
    """Whether a role sequence is a valid covering of the word."""
    symbols = word.symbols if isinstance(word, EdgeWord) else word
    m = len(symbols)
    if len(roles) != m:
        return False
    for r, ch in zip(roles, symbols):
        want = SYMBOL_OF_ROLE[r]
        if want is not None and want != ch:
            return False
    if topology is Topology.CYCLE:
        if m and "U" not in roles:
            return False
        return all(
            (roles[i], roles[(i + 1) % m]) in ALLOWED_ROLE_PAIRS for i in range(m)
        )
    if m == 0:
        return True
    if roles[0] not in LINE_START_ROLES or roles[-1] not in LINE_END_ROLES:
        return False
    return all((roles[i], roles[i + 1]) in ALLOWED_ROLE_PAIRS for i in range(m - 1))


def encode(c: Conformation) -> EdgeWord:
    """The word of a fully occupied board."""
    if "-" in c.cells:
        raise HolesError("holes must be decomposed first")
    cells = c.cells
    n = len(cells)
    if c.topology is Topology.CYCLE:
        pairs = range(n)
    else:
        pairs = range(n - 1)
    symbols = "".join(
        DIFF if cells[i] != cells[(i + 1) % n] else SAME for i in pairs
    )
    return EdgeWord(symbols, c.topology)


def edges_of(symbols: str) -> np.ndarray:
    return np.frombuffer(symbols.encode("ascii"), dtype=np.uint8) == ord(DIFF)


def one_pawn_word(edges: np.ndarray) -> bool:
    """Membership in R: can a line with this word burn down to one pawn."""
    ds = np.flatnonzero(edges)
    m = edges.shape[0]
    if ds.shape[0] == 0:
        return m == 0
    if ds.shape[0] == 1:
        return ds[0] == 0 or ds[0] == m - 1
    if ds.shape[0] == 3:
        return ds[0] == 0 and ds[2] == m - 1
    return False


def opening_words(edges: np.ndarray):
    """Post-opening line words of a cycle word, for the one-survivor test.

    A first move across d-edge i opens the ring: one pawn dies, the cell
    behind it empties, and the edge past the victim flips because the mover
    recolors that cell. Yields (i, dir_code, line_edges) for both directions;
    the line's token t sits at ring cell (i + 2 + t) % n for a left move and
    (i + 1 + t) % n for a right move.
    """
    n = edges.shape[0]
    for i in np.flatnonzero(edges):
        i = int(i)
        mid = np.roll(edges, -(i + 2))[: n - 3]
        left = np.empty(n - 2, dtype=edges.dtype)
        left[:-1] = mid
        left[-1] = 1 - edges[(i - 1) % n]
        yield i, K.LEFT_CODE, left
        right = np.empty(n - 2, dtype=edges.dtype)
        right[1:] = mid
        right[0] = 1 - edges[(i + 1) % n]
        yield i, K.RIGHT_CODE, right


def value_from_word(w: EdgeWord, ops: dict | None = None) -> int:
    """Reducibility value of the board the word encodes. Linear time.

    When ``ops`` is given, its "symbol_visits" entry is set to the number
    of symbol reads the evaluation performed.
    """
    edges = edges_of(w.symbols).astype(np.uint8)
    m = edges.shape[0]
    visits = 0
    if w.topology is Topology.LINE:
        dp = K.scan_nobp(edges, K.F)
        visits = m
        cover = max(int(dp[st]) for st in (K.F, K.C, K.P1))
        value = m + 1 - cover
    else:
        d_count = int(edges.sum())
        visits = m
        if d_count == 0:
            value = m
        else:
            best = -1
            for seam in range(5):
                dp = K.scan_nobp(edges, seam)
                score = int(dp[seam])
                if score > best:
                    best = score
            visits += 5 * m
            value = m - best
            if value > 1 and d_count <= 6:
                for _i, _dir, line_edges in opening_words(edges):
                    visits += line_edges.shape[0]
                    if one_pawn_word(line_edges):
                        value = 1
                        break
    if ops is not None:
        ops["symbol_visits"] = visits
    return value
