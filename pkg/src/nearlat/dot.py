"""Graphviz output for order diagrams.

Nodes are emitted in element order and edges are covering pairs drawn from
the lower element to the upper one, with the graph laid out bottom to top.
"""

from __future__ import annotations

from .extension import free_extension, irreducible_poset
from .nearlattice import Nearlattice, as_poset
from .order import Poset, covers


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(P: Poset, name: str = "hasse") -> str:
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(P.size):
        lines.append(f"  n{x} [label={_quote(P.label(x))}];")
    for x, y in covers(P):
        lines.append(f"  n{x} -> n{y};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def structure_dot(A: Nearlattice, what: str = "hasse") -> str:
    if what == "hasse":
        return hasse_dot(as_poset(A), "hasse")
    if what == "extension":
        return hasse_dot(as_poset(free_extension(A).lattice), "extension")
    if what == "irr":
        return hasse_dot(irreducible_poset(A), "irr")
    raise ValueError(f"unknown diagram {what!r}")
