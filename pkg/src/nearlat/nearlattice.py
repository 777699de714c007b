"""Finite distributive nearlattices given by their join table.

A nearlattice is a join-semilattice with top in which every principal upset
``[a)`` is a bounded distributive lattice. Meets are partial: ``x ^ y`` exists
exactly when ``x`` and ``y`` have a common lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    MalformedTable,
    NoLeastUpperBound,
    NotAssociative,
    NotCommutative,
    NotIdempotent,
    TopNotAbsorbing,
    UpsetNotDistributive,
)
from .order import Poset, bits, mask_of, poset_from_pairs


@dataclass(frozen=True, eq=False)
class Nearlattice:
    size: int
    join: tuple[tuple[int, ...], ...]
    top: int
    labels: tuple[str, ...] | None = field(default=None)

    def __eq__(self, other: object) -> bool:
        # labels are presentation only
        if not isinstance(other, Nearlattice):
            return NotImplemented
        return (self.size, self.join, self.top) == (other.size, other.join, other.top)

    def __hash__(self) -> int:
        return hash((self.size, self.join, self.top))

    @cached_property
    def up(self) -> tuple[int, ...]:
        return tuple(mask_of(y for y in range(self.size) if self.join[x][y] == y) for x in range(self.size))

    @cached_property
    def down(self) -> tuple[int, ...]:
        return tuple(mask_of(y for y in range(self.size) if self.join[y][x] == x) for x in range(self.size))

    @cached_property
    def meet_table(self) -> tuple[tuple[int | None, ...], ...]:
        rows = []
        for x in range(self.size):
            row = []
            for y in range(self.size):
                row.append(self._glb(self.down[x] & self.down[y]))
            rows.append(tuple(row))
        return tuple(rows)

    def _glb(self, lower: int) -> int | None:
        for m in bits(lower):
            if lower & ~self.down[m] == 0:
                return m
        return None

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels is not None else str(x)

    def names(self, xs: Iterable[int]) -> list[str]:
        return [self.label(x) for x in sorted(xs)]

    def __repr__(self) -> str:
        return f"Nearlattice(size={self.size}, top={self.label(self.top)})"


def from_join_table(
    size: int,
    join: Sequence[Sequence[int]],
    top: int,
    labels: Sequence[str] | None = None,
    *,
    validate: bool = True,
) -> Nearlattice:
    """Build a :class:`Nearlattice` and check every axiom.

    In a finite join-semilattice with top each ``[a)`` is automatically a
    bounded lattice, so besides the semilattice laws only distributivity of
    each upset needs checking.
    """
    if size < 1:
        raise MalformedTable(detail="a nearlattice has at least its top element")
    if len(join) != size or any(len(row) != size for row in join):
        raise MalformedTable(detail=f"join must be a {size}x{size} table")
    if not 0 <= top < size:
        raise MalformedTable(top, detail="top out of range")
    for row in join:
        for v in row:
            if not (isinstance(v, (int, np.integer)) and 0 <= v < size):
                raise MalformedTable(detail=f"join entry {v!r} out of range")
    if labels is not None and len(labels) != size:
        raise MalformedTable(detail="one label per element required")
    table = tuple(tuple(int(v) for v in row) for row in join)
    if validate:
        _check_axioms(np.array(table, dtype=np.int64), top)
    return Nearlattice(size, table, top, None if labels is None else tuple(labels))


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def _check_axioms(J: np.ndarray, top: int) -> None:
    n = J.shape[0]
    idx = np.arange(n)
    w = _first(J[idx, idx] != idx)
    if w:
        raise NotIdempotent(*w)
    w = _first(J != J.T)
    if w:
        raise NotCommutative(*w)
    # (x v y) v z == x v (y v z)
    lhs = J[J[:, :, None], idx[None, None, :]]
    rhs = J[idx[:, None, None], J[None, :, :]]
    w = _first(lhs != rhs)
    if w:
        raise NotAssociative(*w)
    w = _first(J[:, top] != top)
    if w:
        raise TopNotAbsorbing(*w)

    leq = J == idx[None, :]  # leq[x, y] iff x v y == y
    downsize = leq.sum(axis=0)
    # meet of x, y: the common lower bound with the most elements below it
    below = leq.T  # below[x, a] iff a <= x
    common = below[:, None, :] & below[None, :, :]  # [x, y, a]
    score = np.where(common, downsize[None, None, :], -1)
    M = np.where(common.any(axis=2), score.argmax(axis=2), -1)

    X, Y, Z = np.meshgrid(idx, idx, idx, indexing="ij")
    mxy = M[X, Y]
    has = mxy >= 0
    has &= M[np.where(has, mxy, 0), Z] >= 0
    mxz = M[X, Z]
    lhs = M[X, J[Y, Z]]
    rhs = J[np.where(has, mxy, 0), np.where(has, mxz, 0)]
    bad = has & (lhs != rhs)
    if not bad.any():
        return
    for a in range(n):
        inside = bad & leq[a][X] & leq[a][Y] & leq[a][Z]
        w = _first(inside)
        if w:
            raise UpsetNotDistributive(a, *w)
    raise AssertionError("non-distributive triple without a common lower bound")


def from_order(size: int, pairs: Iterable[tuple[int, int]], top: int, labels: Sequence[str] | None = None) -> Nearlattice:
    """Nearlattice from an order given as covering (or any generating) pairs.

    Joins are derived as least upper bounds; a pair without one raises
    ``NoLeastUpperBound``.
    """
    P = poset_from_pairs(size, pairs, labels)
    join = [[0] * size for _ in range(size)]
    for x in range(size):
        for y in range(size):
            ub = P.up[x] & P.up[y]
            lub = None
            for m in bits(ub):
                if ub & ~P.up[m] == 0:
                    lub = m
                    break
            if lub is None:
                raise NoLeastUpperBound(x, y)
            join[x][y] = lub
    return from_join_table(size, join, top, labels)


def leq(A: Nearlattice, x: int, y: int) -> bool:
    return A.join[x][y] == y


def as_poset(A: Nearlattice) -> Poset:
    return Poset(
        A.size,
        tuple(tuple(A.join[x][y] == y for y in range(A.size)) for x in range(A.size)),
        A.labels,
    )


def join_of_set(A: Nearlattice, S: Iterable[int]) -> int | None:
    """Least upper bound of ``S``; ``None`` for the empty set when there is no bottom."""
    out = None
    for x in S:
        out = x if out is None else A.join[out][x]
    return out


def meet(A: Nearlattice, x: int, y: int) -> int | None:
    return A.meet_table[x][y]


def meet_of_set(A: Nearlattice, S: Iterable[int]) -> int | None:
    """Greatest lower bound of ``S`` or ``None`` if it has no lower bound.

    The empty meet is the top.
    """
    lower = A.full
    for x in S:
        lower &= A.down[x]
    return A._glb(lower)


def is_lattice(A: Nearlattice) -> bool:
    return meet_of_set(A, range(A.size)) is not None


def bottom(A: Nearlattice) -> int | None:
    return meet_of_set(A, range(A.size))


def subalgebra(A: Nearlattice, elements: Iterable[int]) -> tuple[Nearlattice, list[int]]:
    """The join-subsemilattice on ``elements`` (must contain top and be join-closed).

    Returns the validated nearlattice and the list mapping its indices back
    to ids of ``A``.
    """
    elems = sorted(set(elements))
    pos = {e: i for i, e in enumerate(elems)}
    if A.top not in pos:
        raise MalformedTable(A.top, detail="subalgebra must contain the top")
    join = []
    for x in elems:
        row = []
        for y in elems:
            j = A.join[x][y]
            if j not in pos:
                raise MalformedTable(x, y, detail="subset not closed under join")
            row.append(pos[j])
        join.append(row)
    labels = [A.label(e) for e in elems]
    return from_join_table(len(elems), join, pos[A.top], labels), elems


@dataclass(frozen=True)
class NMap:
    source: Nearlattice
    target: Nearlattice
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.source.size or any(not 0 <= v < self.target.size for v in self.table):
            raise MalformedTable(detail="map must be total into the target carrier")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def labelled(self) -> dict[str, str]:
        return {self.source.label(x): self.target.label(y) for x, y in enumerate(self.table)}


def identity_map(A: Nearlattice) -> NMap:
    return NMap(A, A, tuple(range(A.size)))


def compose(g: NMap, f: NMap) -> NMap:
    """``g`` after ``f``."""
    if f.target != g.source:
        raise MalformedTable(detail="maps do not compose")
    return NMap(f.source, g.target, tuple(g.table[v] for v in f.table))


def is_n_homomorphism(f: NMap) -> bool:
    A, B, t = f.source, f.target, f.table
    if t[A.top] != B.top:
        return False
    for x in range(A.size):
        for y in range(x, A.size):
            if t[A.join[x][y]] != B.join[t[x]][t[y]]:
                return False
            m = A.meet_table[x][y]
            if m is not None and B.meet_table[t[x]][t[y]] != t[m]:
                return False
    return True


def _profile(A: Nearlattice) -> list[tuple[int, int, int, int]]:
    upper = [0] * A.size
    lower = [0] * A.size
    for x in range(A.size):
        strictly = A.up[x] & ~(1 << x)
        for y in bits(strictly):
            if not strictly & A.down[y] & ~(1 << y):
                upper[x] += 1
                lower[y] += 1
    return [
        (bin(A.up[x]).count("1"), bin(A.down[x]).count("1"), upper[x], lower[x]) for x in range(A.size)
    ]


def invariant_key(A: Nearlattice) -> tuple:
    """Cheap isomorphism invariant, used to bucket before searching."""
    return (A.size, tuple(sorted(_profile(A))))


def find_isomorphism(A: Nearlattice, B: Nearlattice) -> NMap | None:
    """Backtracking search for an isomorphism ``A -> B``.

    Source elements are assigned in index order and target candidates are
    tried ascending, so the first witness is deterministic. An order
    isomorphism between join-semilattices with top preserves joins and all
    existing meets, so it is an N-isomorphism in both directions.
    """
    if A.size != B.size:
        return None
    pa, pb = _profile(A), _profile(B)
    if sorted(pa) != sorted(pb):
        return None
    n = A.size
    cands = [[y for y in range(n) if pb[y] == pa[x]] for x in range(n)]
    image = [-1] * n
    used = [False] * n

    def ok(x: int, y: int) -> bool:
        for u in range(x):
            v = image[u]
            if (A.join[u][x] == x) != (B.join[v][y] == y):
                return False
            if (A.join[x][u] == u) != (B.join[y][v] == v):
                return False
        return True

    def rec(x: int) -> bool:
        if x == n:
            return True
        for y in cands[x]:
            if used[y] or not ok(x, y):
                continue
            image[x] = y
            used[y] = True
            if rec(x + 1):
                return True
            used[y] = False
        image[x] = -1
        return False

    if not rec(0):
        return None
    return NMap(A, B, tuple(image))


def is_isomorphic(A: Nearlattice, B: Nearlattice) -> bool:
    return find_isomorphism(A, B) is not None


def set_label(mask: int, names: Sequence[str]) -> str:
    return "{" + ",".join(names[i] for i in bits(mask)) + "}"


def union_nearlattice(
    masks: Iterable[int],
    top_mask: int,
    names: Sequence[str] | None = None,
    *,
    validate: bool = True,
) -> tuple[Nearlattice, list[int]]:
    """Nearlattice of a union-closed family of sets (given as bit patterns).

    Elements are ordered by ascending bit pattern; returns the nearlattice
    and that ordered list of members.
    """
    members = sorted(set(masks))
    pos = {m: i for i, m in enumerate(members)}
    if top_mask not in pos:
        raise MalformedTable(detail="family must contain its top set")
    join = []
    for u in members:
        row = []
        for v in members:
            w = u | v
            if w not in pos:
                raise MalformedTable(u, v, detail="family not closed under union")
            row.append(pos[w])
        join.append(row)
    labels = None if names is None else [set_label(m, names) for m in members]
    return from_join_table(len(members), join, pos[top_mask], labels, validate=validate), members
