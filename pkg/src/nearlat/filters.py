"""Filters, ideals and prime ideals of a finite nearlattice.

Filters and ideals are ``frozenset`` of element ids. All orderings are by the
bit pattern of the member set, ascending.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .errors import InvariantViolation, NotAFilter, NotAnIdeal
from .nearlattice import Nearlattice
from .order import bits, mask_of

Filter = frozenset
Ideal = frozenset


def _upclose(A: Nearlattice, mask: int) -> int:
    out = mask
    for x in bits(mask):
        out |= A.up[x]
    return out


def _generated(A: Nearlattice, mask: int) -> int:
    F = _upclose(A, mask | (1 << A.top))
    changed = True
    while changed:
        changed = False
        members = bits(F)
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                m = A.meet_table[x][y]
                if m is not None and not F >> m & 1:
                    F |= A.up[m]
                    changed = True
    return F


def _as_mask(A: Nearlattice, X: Iterable[int]) -> int:
    m = mask_of(X)
    if m >> A.size:
        raise ValueError("element id out of range")
    return m


def is_filter(A: Nearlattice, F: Iterable[int]) -> bool:
    m = _as_mask(A, F)
    if not m >> A.top & 1:
        return False
    if _upclose(A, m) != m:
        return False
    members = bits(m)
    for x in members:
        for y in members:
            z = A.meet_table[x][y]
            if z is not None and not m >> z & 1:
                return False
    return True


def is_ideal(A: Nearlattice, I: Iterable[int]) -> bool:
    m = _as_mask(A, I)
    if m == 0:
        return False
    members = bits(m)
    for x in members:
        if A.down[x] & ~m:
            return False
        for y in members:
            if not m >> A.join[x][y] & 1:
                return False
    return True


def filter_generated(A: Nearlattice, X: Iterable[int]) -> Filter:
    """Least filter containing ``X``: alternate upward closure and existing meets."""
    return frozenset(bits(_generated(A, _as_mask(A, X))))


def all_filters(A: Nearlattice) -> list[Filter]:
    """Every filter exactly once.

    Breadth-first over one-element extensions starting from ``{1}``; every
    filter is reached because it is generated by adding its members one at a
    time.
    """
    return [frozenset(bits(m)) for m in _filter_masks(A)]


@lru_cache(maxsize=512)
def _filter_masks(A: Nearlattice) -> tuple[int, ...]:
    start = _generated(A, 0)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for F in frontier:
            for x in range(A.size):
                if F >> x & 1:
                    continue
                G = _generated(A, F | (1 << x))
                if G not in seen:
                    seen.add(G)
                    nxt.append(G)
        frontier = nxt
    return tuple(sorted(seen))


def filter_join(A: Nearlattice, F: Iterable[int], G: Iterable[int]) -> Filter:
    return filter_generated(A, set(F) | set(G))


def filter_meet(F: Iterable[int], G: Iterable[int]) -> Filter:
    return frozenset(F) & frozenset(G)


def principal_filter(A: Nearlattice, a: int) -> Filter:
    return frozenset(bits(A.up[a]))


def all_ideals(A: Nearlattice) -> list[Ideal]:
    """Every ideal, ascending by bit pattern.

    A finite nonempty join-closed downset has a largest element, so each
    ideal is principal; the result is still re-checked against the ideal
    conditions.
    """
    found = set()
    for a in range(A.size):
        m = A.down[a]
        if not is_ideal(A, bits(m)):
            raise InvariantViolation(a, detail="principal downset is not an ideal")
        found.add(m)
    return [frozenset(bits(m)) for m in sorted(found)]


def is_prime_ideal(A: Nearlattice, I: Iterable[int]) -> bool:
    I = frozenset(I)
    if not is_ideal(A, I):
        raise NotAnIdeal(detail=f"{sorted(I)} is not an ideal")
    if len(I) == A.size:
        return False
    for x in range(A.size):
        for y in range(x + 1, A.size):
            m = A.meet_table[x][y]
            if m is not None and m in I and x not in I and y not in I:
                return False
    return True


def prime_ideals(A: Nearlattice) -> list[Ideal]:
    return list(_prime_ideals(A))


@lru_cache(maxsize=512)
def _prime_ideals(A: Nearlattice) -> tuple[Ideal, ...]:
    return tuple(I for I in all_ideals(A) if is_prime_ideal(A, I))


def prime_separation(A: Nearlattice, I: Iterable[int], F: Iterable[int]) -> Ideal | None:
    """Prime ideal containing ``I`` and missing ``F``, smallest bit pattern first.

    Returns ``None`` when ``I`` and ``F`` meet. For disjoint inputs a witness
    always exists; failing to find one raises.
    """
    I, F = frozenset(I), frozenset(F)
    if not is_ideal(A, I):
        raise NotAnIdeal(detail=f"{sorted(I)} is not an ideal")
    if not is_filter(A, F):
        raise NotAFilter(detail=f"{sorted(F)} is not a filter")
    if I & F:
        return None
    for P in _prime_ideals(A):
        if I <= P and not P & F:
            return P
    raise InvariantViolation(detail=f"no prime ideal separates {sorted(I)} from {sorted(F)}")
