"""Small named structures used in tests, docs and the CLI fixtures."""

from __future__ import annotations

from .nearlattice import Nearlattice, from_join_table, from_order

# index layout is part of the contract: golden files depend on it

ONE = from_join_table(1, [[0]], 0, ["1"])

CHAIN2 = from_order(2, [(0, 1)], 1, ["m", "1"])

CHAIN3 = from_order(3, [(0, 1), (1, 2)], 2, ["0", "a", "1"])

VEE = from_order(3, [(0, 2), (1, 2)], 2, ["a", "b", "1"])

DIAMOND = from_order(4, [(0, 1), (0, 2), (1, 3), (2, 3)], 3, ["0", "a", "b", "1"])

VEE3 = from_order(4, [(0, 3), (1, 3), (2, 3)], 3, ["a", "b", "c", "1"])

# N5 is not distributive; kept as raw data.
N5_LABELS = ["0", "a", "b", "c", "1"]
N5_JOIN = [
    [0, 1, 2, 3, 4],
    [1, 1, 4, 3, 4],
    [2, 4, 2, 4, 4],
    [3, 3, 4, 3, 4],
    [4, 4, 4, 4, 4],
]
N5_TOP = 4

NAMED: dict[str, Nearlattice] = {
    "one": ONE,
    "chain2": CHAIN2,
    "chain3": CHAIN3,
    "vee": VEE,
    "diamond": DIAMOND,
    "vee3": VEE3,
}
