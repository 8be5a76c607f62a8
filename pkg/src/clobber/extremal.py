"""Extremal cyclic boards: the (x o o)^k family and the n/3 + O(1) ceiling.

Repeating the three-cell block "xoo" around a ring of n = 3k cells yields
reducibility value exactly n/3. That beats n/4 + 1 for every n > 12, so
random or adversarial rings cannot all be reduced to n/4 + O(1) pawns.
Sweeps over every two-colored ring up to the oracle limit show the family
is tight: no ring does better than floor(n/3) + 1 at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import Conformation, Topology, parse
from .oracle import DEFAULT_SWEEP_LIMIT, sweep_max


@dataclass(frozen=True)
class FamilyProfile:
    """Constants of the extremal construction, kept in one place.

    claimed_value is exact (oracle-checked through n = 12, solver-checked
    far beyond), so the defect constant c_family is 0. Sweeps through the
    oracle limit bound max_value - floor(n/3) by 1, giving the additive
    constant of the ceiling. The refuted growth estimate is n/4 + c_conj
    with c_conj = 1.
    """

    block: str = "xoo"
    modulus: int = 3
    min_n: int = 3
    c_family: int = 0
    upper_bound_constant: int = 1
    c_conj: int = 1


FAMILY = FamilyProfile()


@dataclass(frozen=True)
class FamilyMember:
    n: int
    conformation: Conformation
    claimed_value: int


@dataclass(frozen=True)
class BoundRow:
    n: int
    max_value: int
    residual: int
    flagged: bool


def generate_family(n: int) -> FamilyMember:
    """The ring (xoo)^(n/3) with its exact value n/3."""
    if n < FAMILY.min_n or n % FAMILY.modulus != 0:
        raise ValueError(
            f"family sizes are n = 0 (mod {FAMILY.modulus}) with n >= "
            f"{FAMILY.min_n}; got {n}"
        )
    cells = FAMILY.block * (n // FAMILY.modulus)
    return FamilyMember(
        n=n,
        conformation=parse(cells, Topology.CYCLE),
        claimed_value=n // FAMILY.modulus,
    )


def conjecture_crossover() -> int:
    """Smallest admissible n whose claimed value exceeds n/4 + c_conj."""
    n = FAMILY.min_n
    while not n // FAMILY.modulus - FAMILY.c_family > n / 4 + FAMILY.c_conj:
        n += FAMILY.modulus
    return n


def check_upper_bound(n_max: int, limit: int = DEFAULT_SWEEP_LIMIT) -> list[BoundRow]:
    """Sweep every two-colored ring size up to n_max and report how far the
    maximum value sits above floor(n/3). Rows exceeding the additive
    constant come back flagged."""
    rows = []
    for n in range(3, n_max + 1):
        best, _argmax = sweep_max(n, Topology.CYCLE, limit=limit)
        residual = best - n // 3
        rows.append(
            BoundRow(
                n=n,
                max_value=best,
                residual=residual,
                flagged=residual > FAMILY.upper_bound_constant,
            )
        )
    return rows
