"""Oracle tests.

The oracle is the ground truth for everything else, so it gets its own
independent cross-checks: a second memo-free search written here from
scratch, and a proof that its internal move handling agrees with the
rules layer on every small board.
"""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from clobber import (
    Topology,
    apply,
    canonical_form,
    legal_moves,
    oracle_strategy,
    oracle_value,
    parse,
    pawn_count,
    render,
    replay,
    reverse,
    rotate,
    swap_colors,
)
from clobber.oracle import (
    SearchStats,
    SizeLimitError,
    _raw_apply,
    _raw_moves,
    sweep_max,
)


def full_boards(n):
    for tup in itertools.product("xo", repeat=n):
        yield "".join(tup)


def naive_value(cells, cyclic):
    # Deliberately dumb: no memo, no pruning. Only trust matters here.
    moves = list(_naive_moves(cells, cyclic))
    if not moves:
        return sum(ch != "-" for ch in cells)
    return min(naive_value(_naive_apply(cells, i, j), cyclic) for i, j in moves)


def _naive_moves(cells, cyclic):
    n = len(cells)
    for i, ch in enumerate(cells):
        if ch == "-":
            continue
        for step in (-1, 1):
            j = i + step
            if cyclic:
                j %= n
            elif not 0 <= j < n:
                continue
            if cells[j] != "-" and cells[j] != ch:
                yield i, j


def _naive_apply(cells, i, j):
    out = list(cells)
    out[j] = cells[i]
    out[i] = "-"
    return "".join(out)


# ------------------------------------------------------- twin agreement

@pytest.mark.parametrize("n", range(1, 7))
def test_oracle_matches_naive_search_lines(n):
    for cells in full_boards(n):
        assert oracle_value(parse(cells)) == naive_value(cells, False)


@pytest.mark.parametrize("n", range(3, 7))
def test_oracle_matches_naive_search_cycles(n):
    for cells in full_boards(n):
        c = parse(cells, Topology.CYCLE)
        assert oracle_value(c) == naive_value(cells, True)


@given(st.text(alphabet="xo-", min_size=1, max_size=8))
def test_oracle_matches_naive_search_with_holes(s):
    assert oracle_value(parse(s)) == naive_value(s, False)


# --------------------------------------------- rule-layer equivalence

@pytest.mark.parametrize("topology", [Topology.LINE, Topology.CYCLE])
def test_raw_moves_and_apply_agree_with_rules_layer(topology):
    cyclic = topology is Topology.CYCLE
    sizes = range(3, 6) if cyclic else range(1, 6)
    for n in sizes:
        for tup in itertools.product("xo-", repeat=n):
            cells = "".join(tup)
            c = parse(cells, topology)
            via_rules = set()
            for m in legal_moves(c):
                j = m.from_ + (1 if m.dir == "R" else -1)
                if cyclic:
                    j %= n
                via_rules.add((m.from_, j))
            assert set(_raw_moves(cells, cyclic)) == via_rules
            for m in legal_moves(c):
                j = m.from_ + (1 if m.dir == "R" else -1)
                if cyclic:
                    j %= n
                assert _raw_apply(cells, m.from_, j) == render(apply(c, m))


# ---------------------------------------------------------- value facts

def test_value_is_min_over_children():
    for cells in full_boards(5):
        c = parse(cells)
        ms = legal_moves(c)
        if ms:
            assert oracle_value(c) == min(oracle_value(apply(c, m)) for m in ms)
        else:
            assert oracle_value(c) == pawn_count(c)


def test_terminal_boards():
    assert oracle_value(parse("x")) == 1
    assert oracle_value(parse("xxxx")) == 4
    assert oracle_value(parse("---")) == 0
    assert oracle_value(parse("ooo", Topology.CYCLE)) == 3


def test_size_limit_enforced():
    with pytest.raises(SizeLimitError):
        oracle_value(parse("xo" * 9))
    # raising the limit unlocks the call; alternating 18 splits 4+4+4+4+2
    assert oracle_value(parse("xo" * 9), limit=18) == 5


def test_stats_are_populated():
    stats = SearchStats()
    v = oracle_value(parse("xoxoxo"), stats=stats)
    assert v == 2
    assert stats.states_visited > 0
    assert 0 < stats.max_depth <= 5


# ------------------------------------------------------------ strategy

@given(st.text(alphabet="xo-", min_size=1, max_size=9))
def test_strategy_reaches_the_value(s):
    c = parse(s)
    moves = oracle_strategy(c)
    assert pawn_count(replay(c, moves)) == oracle_value(c)


@given(st.text(alphabet="xo-", min_size=3, max_size=9))
def test_strategy_reaches_the_value_on_cycles(s):
    c = parse(s, Topology.CYCLE)
    moves = oracle_strategy(c)
    assert pawn_count(replay(c, moves)) == oracle_value(c)


def test_strategy_is_deterministic():
    c = parse("xoxo")
    assert oracle_strategy(c) == oracle_strategy(c)
    assert len(oracle_strategy(c)) == 3


# ------------------------------------------------------ symmetry, canon

@settings(max_examples=60)
@given(st.text(alphabet="xo-", min_size=3, max_size=8),
       st.sampled_from([Topology.LINE, Topology.CYCLE]))
def test_value_invariant_under_symmetries(s, topology):
    c = parse(s, topology)
    v = oracle_value(c)
    assert oracle_value(swap_colors(c)) == v
    assert oracle_value(reverse(c)) == v
    if topology is Topology.CYCLE:
        assert oracle_value(rotate(c, 1)) == v


@given(st.text(alphabet="xo-", min_size=3, max_size=10),
       st.sampled_from([Topology.LINE, Topology.CYCLE]))
def test_canonical_form_is_a_class_invariant(s, topology):
    canon = canonical_form(s, topology)
    assert canonical_form(canon, topology) == canon
    assert canonical_form(swap_colors(parse(s, topology)).cells, topology) == canon
    assert canonical_form(reverse(parse(s, topology)).cells, topology) == canon
    if topology is Topology.CYCLE:
        rotated = rotate(parse(s, topology), 2).cells
        assert canonical_form(rotated, topology) == canon


# --------------------------------------------------------------- sweeps

def test_sweep_cycle_3():
    best, argmax = sweep_max(3, Topology.CYCLE)
    assert best == 1
    assert all(oracle_value(c) == 1 for c in argmax)


def test_sweep_cycle_4():
    best, argmax = sweep_max(4, Topology.CYCLE)
    assert best == 2
    assert [c.cells for c in argmax] == ["ooxx"]


def test_sweep_line_4():
    best, argmax = sweep_max(4, Topology.LINE)
    assert best == 2
    for c in argmax:
        assert c.cells == canonical_form(c.cells, Topology.LINE)


def test_sweep_histogram_counts_every_class():
    hist = {}
    sweep_max(4, Topology.CYCLE, histogram=hist)
    # every canonical two-colored class is counted once
    assert sum(hist.values()) > 0
    assert set(hist) == {1, 2}
