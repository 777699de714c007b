"""DN-structures and the discrete representation of finite distributive
nearlattices.

A DN-structure is a finite poset ``X`` with a monotone 0/1 valuation on its
downsets in which ``X`` itself and every complement of a principal upset get
value 1. Only the value-1 downsets are stored. Every finite distributive
nearlattice arises (up to isomorphism) as the union-nearlattice of such a
family, which is what the generator here exploits.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BoundExceeded,
    NotADownset,
    S1Violation,
    S2Violation,
    S3Violation,
)
from .extension import free_extension, irreducibles
from .nearlattice import (
    NMap,
    Nearlattice,
    as_poset,
    find_isomorphism,
    is_n_homomorphism,
    meet_of_set,
    union_nearlattice,
)
from .order import (
    Poset,
    automorphisms,
    bits,
    enumerate_downsets,
    enumerate_posets,
    is_downset,
    subposet,
)

DEFAULT_MAX_SIZE = 5
DEFAULT_SAMPLE_MAX_SIZE = 8


def max_size_bound() -> int:
    """Enumeration bound: ``NEARLAT_MAX_SIZE`` from the environment, else 5."""
    raw = os.environ.get("NEARLAT_MAX_SIZE")
    return int(raw) if raw else DEFAULT_MAX_SIZE


@dataclass(frozen=True)
class DNStructure:
    poset: Poset
    one_family: frozenset[int]

    def gamma(self, U: int) -> int:
        return int(U in self.one_family)

    def minimal_members(self) -> list[int]:
        """The antichain of minimal value-1 downsets, ascending."""
        fam = self.one_family
        return sorted(U for U in fam if not any(V != U and V & U == V for V in fam))


def complement_of_upset(P: Poset, x: int) -> int:
    """``[x)^c`` as a downset mask."""
    return P.full & ~P.up[x]


def forced_members(P: Poset) -> set[int]:
    return {P.full} | {complement_of_upset(P, x) for x in range(P.size)}


def validate_dn(P: Poset, one_family: Iterable[int]) -> DNStructure:
    """Check S1 (carrier), S3 (upward closure) and then S2 (upset complements).

    S3 is checked before S2 so that a family with a hole reports the hole
    rather than a missing forced member above it.
    """
    fam = frozenset(one_family)
    for U in sorted(fam):
        if U >> P.size or not is_downset(P, U):
            raise NotADownset(U)
    if P.full not in fam:
        raise S1Violation(detail="the full carrier must have value 1")
    downs = enumerate_downsets(P)
    for U in sorted(fam):
        for V in downs:
            if V & U == U and V not in fam:
                raise S3Violation(U, V)
    for x in range(P.size):
        if complement_of_upset(P, x) not in fam:
            raise S2Violation(x)
    return DNStructure(P, fam)


def close_family(P: Poset, minimal: Iterable[int]) -> frozenset[int]:
    """Upward closure among downsets of ``minimal`` plus the forced members."""
    seeds = set(minimal) | forced_members(P)
    return frozenset(V for V in enumerate_downsets(P) if any(V & U == U for U in seeds))


def n_of(D: DNStructure) -> Nearlattice:
    """Value-1 downsets under union, top the full carrier."""
    names = [D.poset.label(x) for x in range(D.poset.size)]
    A, _ = union_nearlattice(D.one_family, D.poset.full, names)
    return A


def n_members(D: DNStructure) -> list[int]:
    """Downset behind each element of :func:`n_of`, in element order."""
    return sorted(D.one_family)


def s_of(A: Nearlattice) -> DNStructure:
    """Irreducible poset with value 1 exactly where the complementary irreducibles have a meet."""
    irr = irreducibles(A)
    P = subposet(as_poset(A), irr)
    fam = [U for U in enumerate_downsets(P) if meet_of_set(A, [irr[i] for i in range(P.size) if not U >> i & 1]) is not None]
    return validate_dn(P, fam)


def representation_map(A: Nearlattice) -> NMap:
    """``a`` to the element of ``N(S(A))`` given by the irreducibles not above ``a``."""
    N = n_of(s_of(A))
    members = {m: i for i, m in enumerate(sorted(s_of(A).one_family))}
    E = free_extension(A)
    return NMap(A, N, tuple(members[m] for m in E.embed))


def check_representation(A: Nearlattice) -> bool:
    """``A`` is isomorphic to ``N(S(A))`` and the embedding itself is the isomorphism."""
    D = s_of(A)
    N = n_of(D)
    if find_isomorphism(A, N) is None:
        return False
    E = free_extension(A)
    if set(E.embed) != set(D.one_family) or len(set(E.embed)) != A.size:
        return False
    f = representation_map(A)
    inverse = [0] * N.size
    for a, u in enumerate(f.table):
        inverse[u] = a
    return is_n_homomorphism(f) and is_n_homomorphism(NMap(N, A, tuple(inverse)))


def check_round_trip(D: DNStructure) -> bool:
    """``x -> [x)^c`` is an order isomorphism from the poset onto the irreducibles of ``N(X)``."""
    P = D.poset
    N = n_of(D)
    members = n_members(D)
    irr_sets = {members[i] for i in irreducibles(N)}
    images = [complement_of_upset(P, x) for x in range(P.size)]
    if set(images) != irr_sets or len(set(images)) != P.size:
        return False
    return all(
        P.leq[x][y] == (images[x] & images[y] == images[x])
        for x in range(P.size)
        for y in range(P.size)
    )


def _family_code(family: Iterable[int], index: dict[int, int]) -> int:
    return sum(1 << index[U] for U in family)


def _families(P: Poset) -> list[frozenset[int]]:
    """All admissible value-1 families on ``P``, one per automorphism orbit.

    The families are the upsets of ``(D(P), subset)`` containing the forced
    members; their complements are the downsets of what lies outside the
    upward closure of the forced members.
    """
    downs = enumerate_downsets(P)
    index = {U: i for i, U in enumerate(downs)}
    forced = forced_members(P)
    upper = {V for V in downs if any(V & U == U for U in forced)}
    rest = [V for V in downs if V not in upper]
    lattice_order = Poset(
        len(rest),
        tuple(tuple(u & v == u for v in rest) for u in rest),
    )
    autos = automorphisms(P)
    image = []
    for sigma in autos:
        image.append({U: sum(1 << sigma[x] for x in bits(U)) for U in downs})
    seen: dict[int, frozenset[int]] = {}
    for low in enumerate_downsets(lattice_order):
        fam = frozenset(upper | {rest[i] for i in range(len(rest)) if not low >> i & 1})
        code = min(_family_code((img[U] for U in fam), index) for img in image)
        if code not in seen:
            seen[code] = frozenset(
                U for U in downs if code >> index[U] & 1
            )
    return [seen[c] for c in sorted(seen)]


def count_raw_families(P: Poset) -> int:
    """Admissible families on ``P`` before quotienting by automorphisms."""
    downs = enumerate_downsets(P)
    forced = forced_members(P)
    rest = [V for V in downs if not any(V & U == U for U in forced)]
    lattice_order = Poset(len(rest), tuple(tuple(u & v == u for v in rest) for u in rest))
    return len(enumerate_downsets(lattice_order))


def enumerate_dn(max_size: int, bound: int | None = None) -> list[DNStructure]:
    """Every DN-structure on at most ``max_size`` points, one per nearlattice iso class.

    Posets come one per isomorphism class; families one per orbit of the
    poset's automorphism group. Structures over non-isomorphic posets give
    non-isomorphic nearlattices (the irreducible poset is recovered), so no
    further merging is needed. Ordered by poset size, then poset canonical
    order, then family.
    """
    bound = max_size_bound() if bound is None else bound
    if max_size > bound:
        raise BoundExceeded(max_size, bound)
    out = []
    for n in range(max_size + 1):
        for P in enumerate_posets(n):
            for fam in _families(P):
                out.append(DNStructure(P, fam))
    return out


def corpus_counts(max_size: int, bound: int | None = None) -> dict[int, tuple[int, int]]:
    """Per poset size: ``(raw (poset, family) pairs, nearlattices up to iso)``."""
    out = {}
    for n in range(max_size + 1):
        raw = sum(count_raw_families(P) for P in enumerate_posets(n))
        out[n] = (raw, sum(len(_families(P)) for P in enumerate_posets(n)))
    return out


def sample_dn(n: int, seed: int, bound: int | None = None) -> DNStructure:
    """Pseudo-random DN-structure on ``n`` points, a pure function of ``(n, seed)``.

    Algorithm (fixed; changing it changes every sample):

    1. ``rng = random.Random(f"{n}:{seed}")``.
    2. For each pair ``i < j`` in order, put ``i < j`` with probability 1/2;
       take the reflexive-transitive closure.
    3. Shuffle the downsets; walk them, keeping each one incomparable (under
       inclusion) to all kept so far, until ``rng.randint(0, n)`` are kept.
    4. Close the kept antichain upward and add the forced members.
    """
    bound = DEFAULT_SAMPLE_MAX_SIZE if bound is None else bound
    if n > bound:
        raise BoundExceeded(n, bound)
    rng = random.Random(f"{n}:{seed}")
    rel = [[i == j for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rel[i][j] = True
    for k in range(n):
        for i in range(n):
            if rel[i][k]:
                for j in range(n):
                    if rel[k][j]:
                        rel[i][j] = True
    P = Poset(n, tuple(tuple(r) for r in rel))
    downs = enumerate_downsets(P)
    rng.shuffle(downs)
    want = rng.randint(0, n)
    kept: list[int] = []
    for U in downs:
        if len(kept) >= want:
            break
        if all(U & V != U and U & V != V for V in kept):
            kept.append(U)
    return validate_dn(P, close_family(P, kept))
