"""Invariant-checking harness.

Each :class:`Property` is a predicate quantified over a finite domain derived
from the structure under test. A failing item is reported as the witness, and
replaying a witness is just evaluating the predicate on it again.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable

from . import fixtures
from .errors import NearlatError
from .extension import (
    FreeExtension,
    check_commuting_diagram,
    check_embedding,
    check_lemma_upset_and_annihilator,
    check_meet_density,
    check_phi_isomorphism,
    check_preservation,
    check_universal_property,
    free_extension,
    irreducibles,
    is_irreducible_prime_form,
)
from .filters import (
    all_filters,
    all_ideals,
    filter_generated,
    filter_join,
    is_filter,
    is_prime_ideal,
    prime_separation,
    principal_filter,
)
from .nearlattice import (
    NMap,
    Nearlattice,
    as_poset,
    compose,
    find_isomorphism,
    from_join_table,
    identity_map,
    is_lattice,
    is_n_homomorphism,
    meet_of_set,
    subalgebra,
)
from .order import (
    bits,
    enumerate_downsets,
    is_downset,
    is_upset,
    mask_of,
    principal_downset,
    principal_upset,
    validate_poset,
)
from .representation import (
    DNStructure,
    check_representation,
    check_round_trip,
    n_members,
    n_of,
    s_of,
    validate_dn,
)
from .structure import (
    annihilator,
    boolean_elements,
    classically_complemented,
    complement_in,
    complemented_elements,
    dense_elements,
    dual_atoms,
    is_semi_boolean,
    least_boolean,
    pi,
    x_set,
)

UNIVERSAL_TARGETS = (fixtures.ONE, fixtures.CHAIN2, fixtures.CHAIN3, fixtures.DIAMOND)
UNIVERSAL_BOUND = 5


class Subject:
    """A structure under test with its derived data computed lazily once."""

    def __init__(self, A: Nearlattice, name: str = "input", dn: DNStructure | None = None):
        self.A = A
        self.name = name
        self.dn = dn

    @cached_property
    def ext(self) -> FreeExtension:
        return free_extension(self.A)

    @cached_property
    def B(self) -> frozenset[int]:
        return boolean_elements(self.A)

    @cached_property
    def C(self) -> frozenset[int]:
        return complemented_elements(self.A)

    @cached_property
    def At(self) -> frozenset[int]:
        return dual_atoms(self.A)

    @cached_property
    def irr(self) -> list[int]:
        return irreducibles(self.A)

    @cached_property
    def s(self) -> DNStructure:
        return s_of(self.A)

    @cached_property
    def n(self) -> Nearlattice:
        return n_of(self.s)

    @cached_property
    def filters(self) -> list[frozenset[int]]:
        return all_filters(self.A)

    @cached_property
    def lattice(self) -> bool:
        return is_lattice(self.A)

    @cached_property
    def pi_map(self) -> NMap:
        return NMap(self.A, self.A, tuple(pi(self.A, a) for a in range(self.A.size)))

    def dn_structures(self) -> list[DNStructure]:
        return [self.s] if self.dn is None else [self.s, self.dn]

    @cached_property
    def dn_nearlattices(self) -> list[tuple[Nearlattice, list[int]]]:
        """``(N(X), members)`` for each of :meth:`dn_structures`."""
        return [(n_of(D), n_members(D)) for D in self.dn_structures()]

    def pairs(self) -> Iterable[tuple[int, int]]:
        return itertools.product(range(self.A.size), repeat=2)

    def boolean_pairs(self) -> Iterable[tuple[int, int]]:
        for a in sorted(self.B):
            for x in bits(self.A.up[a]):
                yield (a, x)


@dataclass(frozen=True)
class Property:
    name: str
    domain: Callable[[Subject], Iterable]
    holds: Callable[[Subject, object], bool]


@dataclass(frozen=True)
class CheckOutcome:
    property: str
    structure: str
    passed: bool
    witness: object = None


REGISTRY: dict[str, Property] = {}


def prop(name: str, domain: Callable[[Subject], Iterable] | None = None):
    def register(fn):
        REGISTRY[name] = Property(name, domain or (lambda s: [()]), fn)
        return fn

    return register


def _elements(s: Subject):
    return [(a,) for a in range(s.A.size)]


def _pairs(s: Subject):
    return list(s.pairs())


# order

@prop("order.principal_sets", _elements)
def _(s, w):
    P = as_poset(s.A)
    (x,) = w
    return is_upset(P, mask_of(principal_upset(P, x))) and is_downset(P, mask_of(principal_downset(P, x)))


@prop("order.derived_order_is_poset")
def _(s, w):
    try:
        validate_poset(s.A.size, as_poset(s.A).leq)
    except NearlatError:
        return False
    return True


@prop("order.downset_count_bounds")
def _(s, w):
    P = s.ext.poset
    return P.size + 1 <= len(enumerate_downsets(P)) <= 2 ** P.size


@prop("order.downset_complements_are_upsets", lambda s: [(U,) for U in s.ext.downsets])
def _(s, w):
    P = s.ext.poset
    return is_upset(P, P.full & ~w[0])


# nearlattice core

@prop("nearlattice.meet_matches_join_of_lower_bounds", _pairs)
def _(s, w):
    A = s.A
    x, y = w
    lower = [z for z in range(A.size) if A.join[z][x] == x and A.join[z][y] == y]
    if not lower:
        return A.meet_table[x][y] is None
    j = lower[0]
    for z in lower[1:]:
        j = A.join[j][z]
    return A.meet_table[x][y] == j


@prop("nearlattice.upsets_are_bounded_distributive", _elements)
def _(s, w):
    A = s.A
    (a,) = w
    try:
        U, elems = subalgebra(A, bits(A.up[a]))
    except NearlatError:
        return False
    if meet_of_set(U, range(U.size)) != elems.index(a):
        return False
    return all(
        A.meet_table[elems[i]][elems[j]] == elems[U.meet_table[i][j]]
        for i in range(U.size)
        for j in range(U.size)
    )


@prop("nearlattice.identity_is_homomorphism")
def _(s, w):
    return is_n_homomorphism(identity_map(s.A))


@prop("nearlattice.composition_of_homomorphisms")
def _(s, w):
    pm = s.pi_map
    return (
        is_n_homomorphism(pm)
        and is_n_homomorphism(compose(pm, pm))
        and is_n_homomorphism(compose(s.ext.embedding, pm))
    )


@prop("nearlattice.isomorphism_search_symmetric")
def _(s, w):
    others = [s.n, s.ext.lattice]
    return all((find_isomorphism(s.A, B) is None) == (find_isomorphism(B, s.A) is None) for B in others)


# filters

@prop("filters.filter_lattice_bounded_distributive")
def _(s, w):
    A, fs = s.A, s.filters
    pos = {F: i for i, F in enumerate(fs)}
    if frozenset([A.top]) not in pos or frozenset(range(A.size)) not in pos:
        return False
    if not all(is_filter(A, F) for F in fs):
        return False
    try:
        table = [[pos[filter_join(A, F, G)] for G in fs] for F in fs]
        Fi = from_join_table(len(fs), table, pos[frozenset(range(A.size))])
    except (KeyError, NearlatError):
        return False
    if Fi.meet_table[0][0] is None or meet_of_set(Fi, range(Fi.size)) != pos[frozenset([A.top])]:
        return False
    return all(fs[Fi.meet_table[i][j]] == fs[i] & fs[j] for i in range(len(fs)) for j in range(len(fs)))


@prop("filters.principal_and_annihilator_are_filters", _elements)
def _(s, w):
    (a,) = w
    return is_filter(s.A, principal_filter(s.A, a)) and is_filter(s.A, annihilator(s.A, a))


def _disjoint_ideal_filter(s: Subject):
    out = []
    for I in all_ideals(s.A):
        for F in s.filters:
            if not I & F:
                out.append((tuple(sorted(I)), tuple(sorted(F))))
    return out


@prop("filters.prime_separation", _disjoint_ideal_filter)
def _(s, w):
    I, F = frozenset(w[0]), frozenset(w[1])
    P = prime_separation(s.A, I, F)
    return P is not None and I <= P and not P & F and is_prime_ideal(s.A, P)


def _small_subsets(s: Subject):
    n = s.A.size
    return [(x,) for x in range(n)] + [(x, y) for x in range(n) for y in range(x + 1, n)]


@prop("filters.generation_is_closure_operator", _small_subsets)
def _(s, w):
    A = s.A
    X = frozenset(w)
    F = filter_generated(A, X)
    if not X <= F or filter_generated(A, F) != F:
        return False
    return all(filter_generated(A, [x]) <= F for x in X)


# structure

@prop("structure.dual_atom_dichotomy", lambda s: [(a, x) for a in sorted(s.At) for x in range(s.A.size)])
def _(s, w):
    a, x = w
    return s.A.join[x][a] == a or s.A.join[x][a] == s.A.top


@prop("structure.x_set_of_join", _pairs)
def _(s, w):
    a, b = w
    return x_set(s.A, s.A.join[a][b]) == x_set(s.A, a) & x_set(s.A, b)


@prop("structure.x_set_of_meet", lambda s: [p for p in s.pairs() if s.A.meet_table[p[0]][p[1]] is not None])
def _(s, w):
    a, b = w
    return x_set(s.A, s.A.meet_table[a][b]) == x_set(s.A, a) | x_set(s.A, b)


@prop("structure.boolean_is_meet_of_dual_atoms_above", lambda s: [(b,) for b in sorted(s.B)])
def _(s, w):
    return meet_of_set(s.A, x_set(s.A, w[0])) == w[0]


@prop("structure.boolean_subalgebra_and_upward_closed", _pairs)
def _(s, w):
    A, B = s.A, s.B
    a, b = w
    if a in B and b in B:
        if A.join[a][b] not in B:
            return False
        m = A.meet_table[a][b]
        if m is not None and m not in B:
            return False
    if a in B and A.join[a][b] == b and b not in B:
        return False
    return True


@prop("structure.boolean_elements_semi_boolean")
def _(s, w):
    sub, _ = subalgebra(s.A, s.B)
    return is_semi_boolean(sub)


@prop("structure.dual_atom_meet_equivalence")
def _(s, w):
    A, B = s.A, s.B
    one = meet_of_set(A, s.At) is not None
    two = any(frozenset(bits(A.up[a])) == B for a in range(A.size))
    least = [c for c in B if all(A.up[c] >> b & 1 for b in B)]
    three = bool(least) and all(
        any(A.join[x][y] == A.top and A.meet_table[x][y] == least[0] for y in B) for x in B
    )
    return one == two == three


@prop("structure.lattice_complement_shift", lambda s: list(s.boolean_pairs()) if s.lattice else [])
def _(s, w):
    a, x = w
    c = least_boolean(s.A)
    return complement_in(s.A, a, x) == s.A.join[complement_in(s.A, c, x)][a]


@prop("structure.dense_equivalence")
def _(s, w):
    A = s.A
    D = dense_elements(A)
    one = meet_of_set(A, s.At) is not None
    two = any(frozenset(bits(A.down[a])) == D for a in range(A.size))
    return one == two == bool(D)


@prop("structure.annihilator_reflects_boolean_order", lambda s: [(a, b) for a in sorted(s.B) for b in sorted(s.B)])
def _(s, w):
    a, b = w
    return (s.A.join[a][b] == b) == (annihilator(s.A, a) <= annihilator(s.A, b))


@prop("structure.annihilator_of_projection", _elements)
def _(s, w):
    (a,) = w
    return annihilator(s.A, a) == annihilator(s.A, pi(s.A, a))


@prop("structure.projection_onto_homomorphism")
def _(s, w):
    sub, elems = subalgebra(s.A, s.B)
    pos = {e: i for i, e in enumerate(elems)}
    f = NMap(s.A, sub, tuple(pos[pi(s.A, a)] for a in range(s.A.size)))
    return is_n_homomorphism(f) and set(f.table) == set(range(sub.size))


@prop("structure.projection_is_least_boolean_above", _elements)
def _(s, w):
    (a,) = w
    above = [b for b in s.B if s.A.join[a][b] == b]
    least = [b for b in above if all(s.A.join[b][c] == c for c in above)]
    return least == [pi(s.A, a)]


@prop("structure.complemented_subalgebra_semi_boolean")
def _(s, w):
    A, C = s.A, s.C
    for a in C:
        for b in C:
            if A.join[a][b] not in C:
                return False
            m = A.meet_table[a][b]
            if m is not None and m not in C:
                return False
    sub, _ = subalgebra(A, C)
    return is_semi_boolean(sub)


@prop("structure.semi_boolean_equivalences")
def _(s, w):
    carrier = frozenset(range(s.A.size))
    return is_semi_boolean(s.A) == (s.C == carrier) == (s.B == s.C)


@prop("structure.complemented_equals_classical_in_lattices")
def _(s, w):
    if not s.lattice:
        return True
    return s.C == classically_complemented(s.A)


@prop("structure.relative_complements_unique", lambda s: list(s.boolean_pairs()))
def _(s, w):
    try:
        complement_in(s.A, *w)
    except NearlatError:
        return False
    return True


# extension

@prop("extension.embedding_injective_homomorphism")
def _(s, w):
    return check_embedding(s.ext)


@prop("extension.meet_dense")
def _(s, w):
    return check_meet_density(s.ext)


@prop("extension.element_is_meet_of_irreducibles_above", _elements)
def _(s, w):
    (a,) = w
    return meet_of_set(s.A, [x for x in s.irr if s.A.join[a][x] == x]) == a


@prop("extension.lattice_bounded_distributive")
def _(s, w):
    L = s.ext.lattice
    if not is_lattice(L):
        return False
    try:
        from_join_table(L.size, L.join, L.top)
    except NearlatError:
        return False
    return all(m is not None for row in L.meet_table for m in row)


@prop("extension.relative_complements_preserved", lambda s: list(s.boolean_pairs()))
def _(s, w):
    a, x = w
    E, L = s.ext, s.ext.lattice
    e = E.embed_index
    lhs = e[complement_in(s.A, a, x)]
    if lhs != complement_in(L, e[a], e[x]):
        return False
    c = least_boolean(L)
    return lhs == L.join[complement_in(L, c, e[x])][e[a]]


@prop("extension.upset_and_annihilator_images")
def _(s, w):
    return check_lemma_upset_and_annihilator(s.ext)


@prop("extension.preservation")
def _(s, w):
    return check_preservation(s.ext)


@prop("extension.filter_lattice_isomorphism")
def _(s, w):
    return check_phi_isomorphism(s.ext)


@prop("extension.projection_diagram_commutes")
def _(s, w):
    return check_commuting_diagram(s.ext)


@prop("extension.irreducible_prime_form", _elements)
def _(s, w):
    (a,) = w
    if a == s.A.top:
        return is_irreducible_prime_form(s.A, a)
    return is_irreducible_prime_form(s.A, a) == (a in s.irr)


@prop(
    "extension.universal_property",
    lambda s: [(i,) for i in range(len(UNIVERSAL_TARGETS))] if s.A.size <= UNIVERSAL_BOUND else [],
)
def _(s, w):
    return check_universal_property(s.ext, UNIVERSAL_TARGETS[w[0]], UNIVERSAL_BOUND)


# representation

@prop("representation.discrete_representation")
def _(s, w):
    return check_representation(s.A)


@prop("representation.round_trip", lambda s: [(i,) for i in range(len(s.dn_structures()))])
def _(s, w):
    return check_round_trip(s.dn_structures()[w[0]])


@prop("representation.structure_axioms")
def _(s, w):
    D = s.s
    try:
        validate_dn(D.poset, D.one_family)
    except NearlatError:
        return False
    return True


def _family_pairs(s: Subject):
    out = []
    for k, D in enumerate(s.dn_structures()):
        m = len(D.one_family)
        out.extend((k, i, j) for i in range(m) for j in range(m))
    return out


@prop("representation.meet_is_intersection", _family_pairs)
def _(s, w):
    k, i, j = w
    D = s.dn_structures()[k]
    N, members = s.dn_nearlattices[k]
    cap = members[i] & members[j]
    m = N.meet_table[i][j]
    if cap in D.one_family:
        return m is not None and members[m] == cap
    return m is None


@prop("representation.birkhoff_specialization", lambda s: [(i,) for i in range(len(s.dn_structures()))])
def _(s, w):
    D = s.dn_structures()[w[0]]
    N = s.dn_nearlattices[w[0]][0]
    everything = frozenset(enumerate_downsets(D.poset))
    if is_lattice(N) != (D.one_family == everything):
        return False
    if w[0] == 0 and s.lattice:
        return D.one_family == everything and N.size == len(everything)
    return True


# cli surface

@prop("cli.represent_construct_round_trip")
def _(s, w):
    from .serialize import dn_from_doc, dn_to_doc, dumps, loads, nearlattice_from_doc, nearlattice_to_doc

    dn_text = dumps(dn_to_doc(s_of(s.A)))
    back = n_of(dn_from_doc(loads(dn_text)))
    again = nearlattice_from_doc(loads(dumps(nearlattice_to_doc(back))))
    return find_isomorphism(s.A, again) is not None


def evaluate(prop_: Property, subject: Subject) -> CheckOutcome:
    for item in prop_.domain(subject):
        try:
            ok = prop_.holds(subject, item)
        except NearlatError as exc:
            ok = False
            item = (item, exc.describe())
        if not ok:
            return CheckOutcome(prop_.name, subject.name, False, item)
    return CheckOutcome(prop_.name, subject.name, True)


def run_checks(subject: Subject, names: Iterable[str] | None = None) -> list[CheckOutcome]:
    chosen = REGISTRY if names is None else {n: REGISTRY[n] for n in names}
    return [evaluate(p, subject) for p in chosen.values()]


def replay(outcome: CheckOutcome, subject: Subject) -> bool:
    """True iff the recorded witness is still in the domain and still fails."""
    if outcome.passed:
        return False
    item = outcome.witness
    p = REGISTRY[outcome.property]
    if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], str):
        item = item[0]
    if item not in list(p.domain(subject)):
        return False
    try:
        return not p.holds(subject, item)
    except NearlatError:
        return True
