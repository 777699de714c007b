"""Meet-irreducible elements and the free distributive lattice extension.

The extension of a finite distributive nearlattice ``A`` is realized as the
lattice of downsets of its irreducible poset, with ``a`` embedded as the set
of irreducibles not above it. The universal property, meet density and the
preservation facts are then checked rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import BoundExceeded, NotALattice
from .filters import all_filters, filter_generated, filter_join
from .nearlattice import (
    NMap,
    Nearlattice,
    as_poset,
    bottom,
    is_n_homomorphism,
    union_nearlattice,
)
from .order import Poset, bits, enumerate_downsets, subposet
from .structure import (
    annihilator,
    boolean_elements,
    classically_complemented,
    complemented_elements,
    dual_atoms,
    pi,
)


def irreducibles(A: Nearlattice) -> list[int]:
    """Non-top elements that are never an existing meet of two strictly larger ones.

    The top is excluded, which is what makes the downset lattice of the
    result the free extension.
    """
    out = []
    for a in range(A.size):
        if a == A.top:
            continue
        above = bits(A.up[a] & ~(1 << a))
        if not any(A.meet_table[x][y] == a for i, x in enumerate(above) for y in above[i + 1:]):
            out.append(a)
    return out


def irreducible_poset(A: Nearlattice) -> Poset:
    """Induced order on :func:`irreducibles`; index i is ``irreducibles(A)[i]``."""
    return subposet(as_poset(A), irreducibles(A))


def is_irreducible_prime_form(A: Nearlattice, a: int) -> bool:
    """Whether ``x ^ y <= a`` forces ``x <= a`` or ``y <= a`` for all existing meets."""
    for x in range(A.size):
        for y in range(x, A.size):
            m = A.meet_table[x][y]
            if m is None or not A.down[a] >> m & 1:
                continue
            if not (A.down[a] >> x & 1 or A.down[a] >> y & 1):
                return False
    return True


@dataclass(frozen=True, eq=False)
class FreeExtension:
    base: Nearlattice
    irr: tuple[int, ...]
    poset: Poset
    lattice: Nearlattice
    downsets: tuple[int, ...]  # lattice element i is the downset downsets[i]
    embed: tuple[int, ...]  # embed[a] is a downset of ``poset``

    @cached_property
    def embed_index(self) -> tuple[int, ...]:
        pos = {m: i for i, m in enumerate(self.downsets)}
        return tuple(pos[m] for m in self.embed)

    @cached_property
    def embedding(self) -> NMap:
        return NMap(self.base, self.lattice, self.embed_index)

    def image(self, xs) -> frozenset[int]:
        return frozenset(self.embed_index[x] for x in xs)


def free_extension(A: Nearlattice) -> FreeExtension:
    irr = irreducibles(A)
    P = subposet(as_poset(A), irr)
    downs = enumerate_downsets(P)
    names = [A.label(x) for x in irr]
    L, members = union_nearlattice(downs, P.full, names)
    embed = []
    for a in range(A.size):
        embed.append(sum(1 << i for i, x in enumerate(irr) if not A.up[a] >> x & 1))
    return FreeExtension(A, tuple(irr), P, L, tuple(members), tuple(embed))


def check_meet_density(E: FreeExtension) -> bool:
    """Every lattice element is the intersection of the embedded elements above it."""
    full = E.poset.full
    for u in E.downsets:
        cap = full
        for m in E.embed:
            if m & u == u:
                cap &= m
        if cap != u:
            return False
    return True


def _require_lattice(M: Nearlattice) -> int:
    for x in range(M.size):
        for y in range(M.size):
            if M.meet_table[x][y] is None:
                raise NotALattice(x, y)
    return bottom(M)


def n_homomorphisms(A: Nearlattice, M: Nearlattice):
    """Yield every N-homomorphism ``A -> M`` as a table, by backtracking."""
    n = A.size
    image = [-1] * n

    def consistent() -> bool:
        for x in range(n):
            v = image[x]
            if v < 0:
                continue
            for u in range(x, n):
                w = image[u]
                if w < 0:
                    continue
                j = image[A.join[x][u]]
                if j >= 0 and j != M.join[v][w]:
                    return False
                m = A.meet_table[x][u]
                if m is not None:
                    if M.meet_table[v][w] is None:
                        return False
                    if image[m] >= 0 and image[m] != M.meet_table[v][w]:
                        return False
        return True

    order = [A.top] + [x for x in range(n) if x != A.top]

    def rec(i: int):
        if i == n:
            yield tuple(image)
            return
        x = order[i]
        choices = [M.top] if x == A.top else range(M.size)
        for v in choices:
            image[x] = v
            if consistent():
                yield from rec(i + 1)
            image[x] = -1

    yield from rec(0)


def _lattice_extensions(L: Nearlattice, M: Nearlattice, fixed: dict[int, int], limit: int = 2) -> list[tuple[int, ...]]:
    """Lattice homomorphisms ``L -> M`` agreeing with ``fixed``, up to ``limit``.

    The bottom is not pinned: the constant map onto the top of ``M`` is an
    N-homomorphism whose only factorization sends the bottom of ``L`` to 1.
    """
    pinned = dict(fixed)
    if pinned.setdefault(L.top, M.top) != M.top:
        return []
    image = [-1] * L.size
    for u, v in pinned.items():
        image[u] = v
    free = [u for u in range(L.size) if image[u] < 0]
    found: list[tuple[int, ...]] = []

    def consistent() -> bool:
        for u in range(L.size):
            a = image[u]
            if a < 0:
                continue
            for w in range(u, L.size):
                b = image[w]
                if b < 0:
                    continue
                j = image[L.join[u][w]]
                if j >= 0 and j != M.join[a][b]:
                    return False
                m = image[L.meet_table[u][w]]
                if m >= 0 and m != M.meet_table[a][b]:
                    return False
        return True

    def rec(i: int) -> None:
        if len(found) >= limit:
            return
        if i == len(free):
            found.append(tuple(image))
            return
        u = free[i]
        for v in range(M.size):
            image[u] = v
            if consistent():
                rec(i + 1)
        image[u] = -1

    if consistent():
        rec(0)
    return found


def universal_property_failures(E: FreeExtension, M: Nearlattice, bound: int = 5) -> list[tuple[tuple[int, ...], int]]:
    """N-homomorphisms ``h`` with a number of factorizations other than one.

    Each entry is ``(h, count)`` with count capped at 2.
    """
    if E.base.size > bound or M.size > bound:
        raise BoundExceeded(max(E.base.size, M.size), bound)
    _require_lattice(M)
    bad = []
    for h in n_homomorphisms(E.base, M):
        fixed = {E.embed_index[a]: h[a] for a in range(E.base.size)}
        sols = _lattice_extensions(E.lattice, M, fixed)
        if len(sols) != 1:
            bad.append((h, len(sols)))
    return bad


def check_universal_property(E: FreeExtension, M: Nearlattice, bound: int = 5) -> bool:
    """Each N-homomorphism into the lattice ``M`` factors uniquely through the embedding."""
    return not universal_property_failures(E, M, bound)


def check_lemma_upset_and_annihilator(E: FreeExtension) -> bool:
    A, L, e = E.base, E.lattice, E.embed_index
    for a in range(A.size):
        if E.image(bits(A.up[a])) != frozenset(bits(L.up[e[a]])):
            return False
        if filter_generated(L, E.image(annihilator(A, a))) != annihilator(L, e[a]):
            return False
    return True


def check_preservation(E: FreeExtension) -> bool:
    """Dual atoms, boolean, complemented and irreducible elements under the embedding."""
    A, L = E.base, E.lattice
    if E.image(dual_atoms(A)) != dual_atoms(L):
        return False
    if not E.image(boolean_elements(A)) <= boolean_elements(L):
        return False
    if not E.image(complemented_elements(A)) <= classically_complemented(L):
        return False
    return E.image(irreducibles(A)) == frozenset(irreducibles(L))


def phi(E: FreeExtension, F) -> frozenset[int]:
    """Filter of the lattice generated by the image of ``F``."""
    return filter_generated(E.lattice, E.image(F))


def check_phi_isomorphism(E: FreeExtension) -> bool:
    A, L = E.base, E.lattice
    source = all_filters(A)
    target = all_filters(L)
    images = {F: phi(E, F) for F in source}
    if len(set(images.values())) != len(source) or set(images.values()) != set(target):
        return False
    for F in source:
        for G in source:
            if images[F & G] != images[F] & images[G]:
                return False
            if images[filter_join(A, F, G)] != filter_join(L, images[F], images[G]):
                return False
    return True


def check_commuting_diagram(E: FreeExtension) -> bool:
    e = E.embed_index
    return all(pi(E.lattice, e[a]) == e[pi(E.base, a)] for a in range(E.base.size))


def check_embedding(E: FreeExtension) -> bool:
    return len(set(E.embed)) == E.base.size and is_n_homomorphism(E.embedding)
