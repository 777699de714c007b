"""Finite posets, downsets and upsets.

Elements are dense indices ``0..size-1``. Subsets of the carrier are passed
around as ``frozenset`` of ids at the public surface; downsets are int bit
patterns (bit ``i`` set iff element ``i`` belongs to the downset), which makes
enumeration order and hashing canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import MalformedTable, NotAntisymmetric, NotReflexive, NotTransitive

Downset = int


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


@dataclass(frozen=True)
class Poset:
    size: int
    leq: tuple[tuple[bool, ...], ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    @cached_property
    def up(self) -> tuple[int, ...]:
        """``up[x]`` is the mask of ``[x)``."""
        return tuple(mask_of(y for y in range(self.size) if self.leq[x][y]) for x in range(self.size))

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(mask_of(y for y in range(self.size) if self.leq[y][x]) for x in range(self.size))

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def __repr__(self) -> str:
        rel = [(self.label(x), self.label(y)) for x, y in covers(self)]
        return f"Poset(size={self.size}, covers={rel})"


def validate_poset(size: int, leq: Sequence[Sequence[bool]], labels: Sequence[str] | None = None) -> Poset:
    """Check a ``size x size`` truth table and wrap it as a :class:`Poset`.

    The relation is stored exactly as given. Raises ``NotReflexive``,
    ``NotAntisymmetric`` or ``NotTransitive`` naming the first witness found
    in index order.
    """
    if size < 0 or len(leq) != size or any(len(row) != size for row in leq):
        raise MalformedTable(detail=f"leq must be a {size}x{size} table")
    if labels is not None and len(labels) != size:
        raise MalformedTable(detail="one label per element required")
    table = tuple(tuple(bool(v) for v in row) for row in leq)
    for x in range(size):
        if not table[x][x]:
            raise NotReflexive(x)
    for x in range(size):
        for y in range(x + 1, size):
            if table[x][y] and table[y][x]:
                raise NotAntisymmetric(x, y)
    for x in range(size):
        for y in range(size):
            if not table[x][y]:
                continue
            for z in range(size):
                if table[y][z] and not table[x][z]:
                    raise NotTransitive(x, y, z)
    return Poset(size, table, None if labels is None else tuple(labels))


def poset_from_pairs(size: int, pairs: Iterable[tuple[int, int]], labels: Sequence[str] | None = None) -> Poset:
    """Reflexive-transitive closure of ``pairs`` (each ``(x, y)`` meaning x <= y)."""
    rel = [[x == y for y in range(size)] for x in range(size)]
    for x, y in pairs:
        if not (0 <= x < size and 0 <= y < size):
            raise MalformedTable(x, y, detail="pair out of range")
        rel[x][y] = True
    for k in range(size):
        for i in range(size):
            if rel[i][k]:
                row_k = rel[k]
                row_i = rel[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return validate_poset(size, rel, labels)


def antichain(n: int) -> Poset:
    return validate_poset(n, [[x == y for y in range(n)] for x in range(n)])


def chain(n: int) -> Poset:
    return validate_poset(n, [[x <= y for y in range(n)] for x in range(n)])


def principal_upset(P: Poset, x: int) -> frozenset[int]:
    return frozenset(bits(P.up[x]))


def principal_downset(P: Poset, x: int) -> frozenset[int]:
    return frozenset(bits(P.down[x]))


def is_downset(P: Poset, mask: int) -> bool:
    return all(P.down[x] & ~mask == 0 for x in bits(mask))


def is_upset(P: Poset, mask: int) -> bool:
    return all(P.up[x] & ~mask == 0 for x in bits(mask))


def down_closure(P: Poset, mask: int) -> int:
    out = 0
    for x in bits(mask):
        out |= P.down[x]
    return out


def up_closure(P: Poset, mask: int) -> int:
    out = 0
    for x in bits(mask):
        out |= P.up[x]
    return out


def linear_extension(P: Poset) -> list[int]:
    """Elements sorted so that every element precedes everything strictly above it."""
    return sorted(range(P.size), key=lambda x: (bin(P.down[x]).count("1"), x))


def enumerate_downsets(P: Poset) -> list[Downset]:
    """All downsets of ``P`` as bit patterns, ascending.

    Elements are decided along a linear extension, so an element may join
    only once everything strictly below it is already in.
    """
    order = linear_extension(P)
    below = [P.down[x] & ~(1 << x) for x in range(P.size)]
    out: list[int] = []

    def rec(i: int, mask: int) -> None:
        if i == len(order):
            out.append(mask)
            return
        x = order[i]
        rec(i + 1, mask)
        if below[x] & ~mask == 0:
            rec(i + 1, mask | (1 << x))

    rec(0, 0)
    out.sort()
    return out


def covers(P: Poset) -> list[tuple[int, int]]:
    """Covering pairs ``(x, y)`` with x < y and nothing strictly between."""
    out = []
    for x in range(P.size):
        strictly_above = P.up[x] & ~(1 << x)
        for y in bits(strictly_above):
            between = strictly_above & P.down[y] & ~(1 << y)
            if not between:
                out.append((x, y))
    return out


def subposet(P: Poset, elements: Sequence[int], labels: Sequence[str] | None = None) -> Poset:
    """Induced order on ``elements`` (new index i is ``elements[i]``)."""
    if labels is None and P.labels is not None:
        labels = [P.labels[e] for e in elements]
    return Poset(
        len(elements),
        tuple(tuple(P.leq[a][b] for b in elements) for a in elements),
        None if labels is None else tuple(labels),
    )


def relabel(P: Poset, perm: Sequence[int]) -> Poset:
    """New element ``i`` is old element ``perm[i]``."""
    return subposet(P, perm)


# Isomorphism of posets. Only small carriers are ever fed here, so a brute
# force over invariant-respecting permutations is enough.

def _cells(P: Poset) -> list[list[int]]:
    cov = covers(P)
    lower = [0] * P.size
    upper = [0] * P.size
    for x, y in cov:
        upper[x] += 1
        lower[y] += 1
    key = {
        x: (bin(P.down[x]).count("1"), bin(P.up[x]).count("1"), lower[x], upper[x])
        for x in range(P.size)
    }
    groups: dict[tuple, list[int]] = {}
    for x in range(P.size):
        groups.setdefault(key[x], []).append(x)
    return [groups[k] for k in sorted(groups)]


def _cell_permutations(cells: list[list[int]]):
    for parts in itertools.product(*(itertools.permutations(c) for c in cells)):
        yield [x for part in parts for x in part]


def _code(P: Poset, perm: Sequence[int]) -> tuple[bool, ...]:
    return tuple(P.leq[perm[i]][perm[j]] for i in range(len(perm)) for j in range(len(perm)))


def canonical_permutation(P: Poset) -> list[int]:
    best = None
    best_perm: list[int] = []
    for perm in _cell_permutations(_cells(P)):
        c = _code(P, perm)
        if best is None or c > best:
            best, best_perm = c, perm
    return best_perm


def canonical_form(P: Poset) -> tuple:
    """An isomorphism-invariant key: equal keys iff the posets are isomorphic."""
    perm = canonical_permutation(P)
    return (P.size, _code(P, perm))


def automorphisms(P: Poset) -> list[tuple[int, ...]]:
    """All order automorphisms as tuples ``sigma`` with ``sigma[x]`` the image of x."""
    out = []
    cells = _cells(P)
    flat = [x for c in cells for x in c]
    for perm in _cell_permutations(cells):
        sigma = [0] * P.size
        for src, dst in zip(flat, perm):
            sigma[src] = dst
        if all(P.leq[x][y] == P.leq[sigma[x]][sigma[y]] for x in range(P.size) for y in range(P.size)):
            out.append(tuple(sigma))
    return sorted(out)


@lru_cache(maxsize=None)
def enumerate_posets(n: int) -> tuple[Poset, ...]:
    """Every poset on ``n`` points, one per isomorphism class, in canonical order.

    Grown one maximal element at a time: the strict down-set of a new maximal
    element is an arbitrary downset of the smaller poset.
    """
    if n == 0:
        return (Poset(0, ()),)
    seen: dict[tuple, Poset] = {}
    for base in enumerate_posets(n - 1):
        for d in enumerate_downsets(base):
            rel = [list(row) + [bool(d >> x & 1)] for x, row in enumerate(base.leq)]
            rel.append([False] * (n - 1) + [True])
            cand = Poset(n, tuple(tuple(r) for r in rel))
            perm = canonical_permutation(cand)
            key = _code(cand, perm)
            if key not in seen:
                seen[key] = relabel(cand, perm)
    return tuple(seen[k] for k in sorted(seen, reverse=True))
