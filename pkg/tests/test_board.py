"""Rules-layer tests: parsing, move generation, application, replay."""

import pytest
from hypothesis import given, strategies as st

from clobber import (
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

line_text = st.text(alphabet="xo-", min_size=1, max_size=12)
cycle_text = st.text(alphabet="xo-", min_size=3, max_size=12)


def boards():
    lines = line_text.map(lambda s: parse(s, Topology.LINE))
    cycles = cycle_text.map(lambda s: parse(s, Topology.CYCLE))
    return st.one_of(lines, cycles)


# ---------------------------------------------------------------- parse

def test_parse_line():
    c = parse("xoxo")
    assert c.cells == "xoxo"
    assert c.topology is Topology.LINE
    assert len(c) == 4


def test_parse_holes():
    assert parse("x-o").cells == "x-o"


def test_parse_empty_string_rejected():
    with pytest.raises(ParseError):
        parse("")


def test_parse_bad_character_reports_index():
    with pytest.raises(ParseError, match="index 1"):
        parse("xq")


def test_parse_cycle_too_short():
    with pytest.raises(CycleLengthError):
        parse("xo", Topology.CYCLE)
    # n = 3 is the smallest ring
    assert parse("xoo", Topology.CYCLE).topology is Topology.CYCLE


@given(line_text)
def test_parse_render_round_trip(s):
    assert render(parse(s)) == s


def test_pawn_count():
    assert pawn_count(parse("x-o")) == 2
    assert pawn_count(parse("---")) == 0
    assert pawn_count(parse("xxxx")) == 4


# ---------------------------------------------------------- legal_moves

def test_moves_line_xox():
    c = parse("xox")
    assert legal_moves(c) == [Move(0, "R"), Move(1, "L"), Move(1, "R"), Move(2, "L")]


def test_moves_monochrome_none():
    assert legal_moves(parse("xxx")) == []
    assert legal_moves(parse("xxx", Topology.CYCLE)) == []


def test_moves_cycle_wrap_requires_opposite_colors():
    # wrap pair of "xox" is x..x: adjacency alone does not make a move
    c = parse("xox", Topology.CYCLE)
    assert legal_moves(c) == [Move(0, "R"), Move(1, "L"), Move(1, "R"), Move(2, "L")]
    # "xoo" wraps o..x, so both wrap moves exist
    r = parse("xoo", Topology.CYCLE)
    assert legal_moves(r) == [Move(0, "L"), Move(0, "R"), Move(1, "L"), Move(2, "R")]


def test_moves_ordering_is_sorted():
    ms = legal_moves(parse("xoxoxo", Topology.CYCLE))
    assert ms == sorted(ms, key=lambda m: (m.from_, m.dir))


# ----------------------------------------------------------------- apply

def test_apply_basic():
    assert render(apply(parse("xox"), Move(1, "L"))) == "o-x"
    assert render(apply(parse("xo"), Move(0, "R"))) == "-x"


def test_apply_wraps_on_cycle():
    c = parse("oxx", Topology.CYCLE)
    # pawn 0 is white, its left neighbour is cell 2 (black)
    assert render(apply(c, Move(0, "L"))) == "-xo"


def test_apply_off_board():
    with pytest.raises(IllegalMove) as exc:
        apply(parse("xox"), Move(0, "L"))
    assert exc.value.reason == "off_board"
    with pytest.raises(IllegalMove) as exc:
        apply(parse("xox"), Move(7, "L"))
    assert exc.value.reason == "off_board"


def test_apply_origin_empty():
    with pytest.raises(IllegalMove) as exc:
        apply(parse("x-o"), Move(1, "R"))
    assert exc.value.reason == "origin_empty"


def test_apply_target_empty():
    with pytest.raises(IllegalMove) as exc:
        apply(parse("x-o"), Move(0, "R"))
    assert exc.value.reason == "target_empty"


def test_apply_same_color():
    with pytest.raises(IllegalMove) as exc:
        apply(parse("xxo"), Move(0, "R"))
    assert exc.value.reason == "same_color"


def test_apply_rejects_bad_direction():
    with pytest.raises(ValueError):
        apply(parse("xo"), Move(0, "up"))


# ---------------------------------------------------------------- replay

def test_replay_single():
    c = replay(parse("xo"), [Move(0, "R")])
    assert render(c) == "-x"
    assert pawn_count(c) == 1


def test_replay_to_one_pawn():
    c = replay(parse("xoxo"), [(0, "R"), (3, "L"), (2, "L")])
    assert render(c) == "-o--"
    assert pawn_count(c) == 1


def test_replay_reports_failing_index():
    with pytest.raises(ReplayError) as exc:
        replay(parse("xoxo"), [(0, "R"), (0, "R")])
    assert exc.value.index == 1


def test_replay_empty_strategy_is_identity():
    c = parse("xo-x", Topology.CYCLE)
    assert replay(c, []) == c


# ------------------------------------------------------------ properties

@given(boards(), st.data())
def test_pawn_ledger_and_empty_permanence(c, data):
    """Random walk: pawn count drops by one per move, holes never refill."""
    start = pawn_count(c)
    played = 0
    while True:
        ms = legal_moves(c)
        if not ms or played >= 6:
            break
        holes = {i for i, ch in enumerate(c.cells) if ch == "-"}
        c = apply(c, data.draw(st.sampled_from(ms)))
        played += 1
        assert pawn_count(c) == start - played
        assert all(c.cells[i] == "-" for i in holes)


@given(boards())
def test_color_swap_preserves_moves(c):
    assert legal_moves(c) == legal_moves(swap_colors(c))


@given(line_text)
def test_reversal_maps_moves(s):
    c = parse(s)
    n = len(c)
    flipped = {"L": "R", "R": "L"}
    image = {Move(n - 1 - m.from_, flipped[m.dir]) for m in legal_moves(c)}
    assert image == set(legal_moves(reverse(c)))


@given(cycle_text, st.integers(min_value=0, max_value=11))
def test_rotation_maps_moves(s, k):
    c = parse(s, Topology.CYCLE)
    n = len(c)
    image = {Move((m.from_ - k) % n, m.dir) for m in legal_moves(c)}
    assert image == set(legal_moves(rotate(c, k)))


@given(boards())
def test_apply_changes_exactly_two_cells(c):
    for m in legal_moves(c):
        after = apply(c, m)
        diff = [i for i in range(len(c)) if c.cells[i] != after.cells[i]]
        assert len(diff) == 2
        assert after.cells[m.from_] == "-"
