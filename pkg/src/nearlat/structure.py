"""Dual atoms, boolean, dense and complemented elements, annihilators and the
projection onto the boolean elements."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, NotALattice, NotBooleanBase, NotInUpset
from .filters import filter_join, principal_filter
from .nearlattice import Nearlattice, bottom, meet_of_set
from .order import bits


def dual_atoms(A: Nearlattice) -> frozenset[int]:
    """Elements covered only by the top."""
    return frozenset(a for a in range(A.size) if a != A.top and A.up[a] == (1 << a) | (1 << A.top))


def x_set(A: Nearlattice, a: int) -> frozenset[int]:
    """Dual atoms above ``a``."""
    return frozenset(d for d in dual_atoms(A) if A.up[a] >> d & 1)


def _complements(A: Nearlattice, a: int, x: int) -> list[int]:
    return [
        y for y in bits(A.up[a])
        if A.join[x][y] == A.top and A.meet_table[x][y] == a
    ]


def is_boolean_element(A: Nearlattice, a: int) -> bool:
    """Whether ``[a)`` is a boolean lattice.

    ``[a)`` is already bounded and distributive, so it suffices that every
    member has a complement relative to ``a`` and the top.
    """
    return all(_complements(A, a, x) for x in bits(A.up[a]))


def boolean_elements(A: Nearlattice) -> frozenset[int]:
    return frozenset(a for a in range(A.size) if is_boolean_element(A, a))


def complement_in(A: Nearlattice, a: int, x: int) -> int:
    """The complement of ``x`` inside the boolean lattice ``[a)``."""
    if not is_boolean_element(A, a):
        raise NotBooleanBase(a)
    if not A.up[a] >> x & 1:
        raise NotInUpset(a, x)
    found = _complements(A, a, x)
    if len(found) != 1:
        # distributivity forces uniqueness
        raise InvariantViolation(a, x, *found, detail="complement not unique")
    return found[0]


def annihilator(A: Nearlattice, a: int) -> frozenset[int]:
    """``{x : a v x = 1}``; always a filter."""
    return frozenset(x for x in range(A.size) if A.join[a][x] == A.top)


def dense_elements(A: Nearlattice) -> frozenset[int]:
    return frozenset(a for a in range(A.size) if annihilator(A, a) == {A.top})


def is_complemented(A: Nearlattice, a: int) -> bool:
    return len(filter_join(A, principal_filter(A, a), annihilator(A, a))) == A.size


def complemented_elements(A: Nearlattice) -> frozenset[int]:
    return frozenset(a for a in range(A.size) if is_complemented(A, a))


def classically_complemented(A: Nearlattice) -> frozenset[int]:
    """``{a : a ^ b = 0 and a v b = 1 for some b}`` in a bounded lattice."""
    zero = bottom(A)
    if zero is None:
        raise NotALattice(detail="no least element")
    return frozenset(
        a for a in range(A.size)
        if any(A.join[a][b] == A.top and A.meet_table[a][b] == zero for b in range(A.size))
    )


def pi(A: Nearlattice, a: int) -> int:
    """Meet of the dual atoms above ``a`` (the top when there are none)."""
    m = meet_of_set(A, x_set(A, a))
    if m is None:
        raise InvariantViolation(a, detail="dual atoms above a have no meet")
    return m


def pi_table(A: Nearlattice) -> tuple[int, ...]:
    return tuple(pi(A, a) for a in range(A.size))


def is_semi_boolean(A: Nearlattice) -> bool:
    return len(boolean_elements(A)) == A.size


def least_boolean(A: Nearlattice) -> int | None:
    """Least boolean element, present exactly when the dual atoms have a meet."""
    B = boolean_elements(A)
    for b in sorted(B):
        if all(A.up[b] >> c & 1 for c in B):
            return b
    return None


@dataclass(frozen=True)
class ElementClassification:
    dual_atoms: frozenset[int]
    boolean_elements: frozenset[int]
    complemented_elements: frozenset[int]
    dense_elements: frozenset[int]
    pi_table: tuple[int, ...]


def classify(A: Nearlattice) -> ElementClassification:
    c = ElementClassification(
        dual_atoms(A),
        boolean_elements(A),
        complemented_elements(A),
        dense_elements(A),
        pi_table(A),
    )
    if not c.dual_atoms <= c.boolean_elements:
        raise InvariantViolation(detail="dual atom that is not boolean")
    if any(c.pi_table[b] != b for b in c.boolean_elements):
        raise InvariantViolation(detail="pi moves a boolean element")
    return c
