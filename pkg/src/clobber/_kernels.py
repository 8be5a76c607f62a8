"""Compiled inner loops for the linear-time solver.

Everything here works on plain numpy arrays:

- ``edges``: uint8, one entry per separation, 1 = adjacent pawns differ
  ("d"), 0 = same color ("s").
- ``bp``: (m, 5) uint8 backpointer table, written by the scan.
- ``out``: (cap, 2) int32 move buffer; column 0 = from-cell, column 1 =
  direction (0 = left, 1 = right).

The scan runs a 5-state dynamic program over the edge sequence. States:

    F  = 0   outside any part (edge left uncovered)
    S  = 1   inside the s-prefix of a future "s^a d" part
    P1 = 2   inside "d s^*" (closable at any moment)
    P2 = 3   inside "d s^a d s^*" (needs one more d)
    C  = 4   part closed on this very edge

A part is a maximal interval of tokens absorbed by one surviving pawn; its
inner edge word must be one of  s^a d  |  d s^a  |  d s^a d s^b d.
Score = number of covered edges; survivors = cells - score.
"""

from __future__ import annotations

import numpy as np
from numba import njit

NEG = -(1 << 60)

F, S, P1, P2, C = 0, 1, 2, 3, 4

LEFT_CODE = 0
RIGHT_CODE = 1

_EMPTY_BYTE = 45  # ord("-")


@njit(cache=True, nogil=True)
def scan_nobp(edges, init_state):
    """DP over edges from a fixed initial state; returns the 5 final scores."""
    dp = np.full(5, NEG, dtype=np.int64)
    dp[init_state] = 0
    nxt = np.empty(5, dtype=np.int64)
    for i in range(edges.shape[0]):
        e = edges[i]
        for t in range(5):
            nxt[t] = NEG
        # uncovered edge: allowed after nothing, after "d s^a", after a close
        best = dp[F]
        if dp[P1] > best:
            best = dp[P1]
        if dp[C] > best:
            best = dp[C]
        nxt[F] = best
        if e == 0:
            a = dp[F]
            if dp[S] > a:
                a = dp[S]
            if a > NEG:
                nxt[S] = a + 1
            if dp[P1] > NEG:
                nxt[P1] = dp[P1] + 1
            if dp[P2] > NEG:
                nxt[P2] = dp[P2] + 1
        else:
            if dp[F] > NEG:
                nxt[P1] = dp[F] + 1
            if dp[P1] > NEG:
                nxt[P2] = dp[P1] + 1
            a = dp[S]
            if dp[P2] > a:
                a = dp[P2]
            if a > NEG:
                nxt[C] = a + 1
        for t in range(5):
            dp[t] = nxt[t]
    return dp


@njit(cache=True, nogil=True)
def scan_bp(edges, init_state, bp):
    """Same DP, recording the winning predecessor of every (edge, state)."""
    dp = np.full(5, NEG, dtype=np.int64)
    dp[init_state] = 0
    nxt = np.empty(5, dtype=np.int64)
    for i in range(edges.shape[0]):
        e = edges[i]
        for t in range(5):
            nxt[t] = NEG
        best = dp[F]
        src = F
        if dp[P1] > best:
            best = dp[P1]
            src = P1
        if dp[C] > best:
            best = dp[C]
            src = C
        nxt[F] = best
        bp[i, F] = src
        if e == 0:
            a = dp[F]
            src = F
            if dp[S] > a:
                a = dp[S]
                src = S
            if a > NEG:
                nxt[S] = a + 1
                bp[i, S] = src
            if dp[P1] > NEG:
                nxt[P1] = dp[P1] + 1
                bp[i, P1] = P1
            if dp[P2] > NEG:
                nxt[P2] = dp[P2] + 1
                bp[i, P2] = P2
        else:
            if dp[F] > NEG:
                nxt[P1] = dp[F] + 1
                bp[i, P1] = F
            if dp[P1] > NEG:
                nxt[P2] = dp[P1] + 1
                bp[i, P2] = P1
            a = dp[S]
            src = S
            if dp[P2] > a:
                a = dp[P2]
                src = P2
            if a > NEG:
                nxt[C] = a + 1
                bp[i, C] = src
        for t in range(5):
            dp[t] = nxt[t]
    return dp


@njit(cache=True, nogil=True)
def walk_back(bp, end_state):
    """Recover the state sequence (length m+1) from the backpointers."""
    m = bp.shape[0]
    states = np.empty(m + 1, dtype=np.uint8)
    states[m] = end_state
    for i in range(m - 1, -1, -1):
        states[i] = bp[i, states[i + 1]]
    return states


@njit(cache=True, nogil=True)
def emit_moves(edges, covered, start, n_cells, out):
    """Write the burn sequence of every covered run into ``out``.

    Scans the edges in rotated order beginning at ``start`` (which must be
    uncovered on cycles so no run wraps the scan seam). Indices are taken
    modulo ``n_cells``; on lines start is 0 and nothing ever wraps.
    Returns the number of moves written.
    """
    m = edges.shape[0]
    w = 0
    k = 0
    while k < m:
        idx = start + k
        if idx >= m:
            idx -= m
        if not covered[idx]:
            k += 1
            continue
        k0 = k
        while k + 1 < m:
            j = start + k + 1
            if j >= m:
                j -= m
            if not covered[j]:
                break
            k += 1
        length = k - k0 + 1
        lo = start + k0
        if lo >= m:
            lo -= m
        # locate the d edges inside the run (1 or 3 by construction)
        d0 = -1
        d1 = -1
        d2 = -1
        for off in range(length):
            idx = lo + off
            if idx >= m:
                idx -= m
            if edges[idx] == 1:
                if d0 < 0:
                    d0 = off
                elif d1 < 0:
                    d1 = off
                else:
                    d2 = off
        if d1 < 0:
            if d0 == length - 1:
                # s^a d : the far pawn sweeps left over the run
                for off in range(length, 0, -1):
                    out[w, 0] = (lo + off) % n_cells
                    out[w, 1] = LEFT_CODE
                    w += 1
            else:
                # d s^a : the near pawn sweeps right
                for off in range(length):
                    out[w, 0] = (lo + off) % n_cells
                    out[w, 1] = RIGHT_CODE
                    w += 1
        else:
            # d s^a d s^b d : two waves meet at the middle d, then one hit
            for off in range(d1):
                out[w, 0] = (lo + off) % n_cells
                out[w, 1] = RIGHT_CODE
                w += 1
            for off in range(length, d1 + 1, -1):
                out[w, 0] = (lo + off) % n_cells
                out[w, 1] = LEFT_CODE
                w += 1
            out[w, 0] = (lo + d1) % n_cells
            out[w, 1] = RIGHT_CODE
            w += 1
        k += 1
    return w


@njit(cache=True, nogil=True)
def replay_moves(cells, moves, cyclic):
    """Apply moves in place with full legality checking.

    cells is a uint8 ascii buffer. Returns -1 on success, else the index of
    the first illegal move.
    """
    n = cells.shape[0]
    for i in range(moves.shape[0]):
        f = moves[i, 0]
        if f < 0 or f >= n:
            return i
        t = f + 1 if moves[i, 1] == RIGHT_CODE else f - 1
        if cyclic:
            t %= n
        elif t < 0 or t >= n:
            return i
        a = cells[f]
        b = cells[t]
        if a == _EMPTY_BYTE or b == _EMPTY_BYTE or a == b:
            return i
        cells[t] = a
        cells[f] = _EMPTY_BYTE
    return -1
