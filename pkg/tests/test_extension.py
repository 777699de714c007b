import itertools

import pytest
from hypothesis import given, settings

from nearlat.errors import BoundExceeded, NotALattice
from nearlat.extension import (
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
    n_homomorphisms,
    universal_property_failures,
)
from nearlat.fixtures import CHAIN2, CHAIN3, DIAMOND, ONE, VEE
from nearlat.nearlattice import NMap, find_isomorphism, is_n_homomorphism, meet_of_set
from nearlat.structure import boolean_elements, complement_in, least_boolean

import oracles
from strategies import nearlattices


def test_irreducible_examples():
    assert irreducibles(CHAIN3) == [0, 1]
    assert irreducibles(VEE) == [0, 1]
    assert irreducibles(DIAMOND) == [1, 2]
    assert irreducibles(ONE) == []


def test_prime_form_examples():
    assert is_irreducible_prime_form(CHAIN3, 0)
    assert not is_irreducible_prime_form(DIAMOND, 0)
    assert all(is_irreducible_prime_form(A, A.top) for A in (VEE, CHAIN3, DIAMOND))


def test_vee_extension_is_diamond():
    E = free_extension(VEE)
    assert find_isomorphism(E.lattice, DIAMOND) is not None
    assert E.embedding.labelled() == {"a": "{b}", "b": "{a}", "1": "{a,b}"}


def test_chain3_extension_is_itself():
    E = free_extension(CHAIN3)
    assert find_isomorphism(E.lattice, CHAIN3) is not None
    assert E.embedding.labelled() == {"0": "{}", "a": "{0}", "1": "{0,a}"}


def test_one_element_extension():
    E = free_extension(ONE)
    assert E.lattice.size == 1 and E.embed == (0,)


def test_named_checks():
    for A in (ONE, VEE, CHAIN3, DIAMOND):
        E = free_extension(A)
        assert check_meet_density(E)
        assert check_lemma_upset_and_annihilator(E)
        assert check_preservation(E)
        assert check_phi_isomorphism(E)
        assert check_commuting_diagram(E)


def test_universal_property_examples():
    assert check_universal_property(free_extension(VEE), DIAMOND)
    assert check_universal_property(free_extension(CHAIN3), CHAIN3)
    for A in (VEE, CHAIN3, DIAMOND):
        assert check_universal_property(free_extension(A), ONE)


def test_universal_property_guards():
    with pytest.raises(NotALattice):
        check_universal_property(free_extension(CHAIN3), VEE)
    with pytest.raises(BoundExceeded):
        check_universal_property(free_extension(DIAMOND), DIAMOND, bound=3)


def test_constant_top_map_factors():
    # the bottom of the extension must be free to go to the top
    E = free_extension(VEE)
    const = NMap(VEE, CHAIN2, (1, 1, 1))
    assert is_n_homomorphism(const)
    assert universal_property_failures(E, CHAIN2) == []


def test_homomorphism_enumeration_against_brute_force():
    for A, M in [(VEE, CHAIN2), (CHAIN3, DIAMOND), (VEE, DIAMOND)]:
        brute = {
            t for t in itertools.product(range(M.size), repeat=A.size) if is_n_homomorphism(NMap(A, M, t))
        }
        assert set(n_homomorphisms(A, M)) == brute


@given(nearlattices())
@settings(max_examples=40, deadline=None)
def test_extension_invariants(A):
    E = free_extension(A)
    assert check_embedding(E)
    assert check_meet_density(E)
    assert check_lemma_upset_and_annihilator(E)
    assert check_preservation(E)
    assert check_phi_isomorphism(E)
    assert check_commuting_diagram(E)
    L = E.lattice
    assert all(m is not None for row in L.meet_table for m in row)


@given(nearlattices())
@settings(max_examples=40, deadline=None)
def test_every_element_is_meet_of_irreducibles_above(A):
    irr = irreducibles(A)
    for a in range(A.size):
        above = [x for x in irr if A.join[a][x] == x]
        assert (oracles.glb(A.join, above) if above else A.top) == a
        assert meet_of_set(A, above) == a
        if a != A.top:
            assert (a in irr) == is_irreducible_prime_form(A, a)


@given(nearlattices())
@settings(max_examples=40, deadline=None)
def test_complements_carry_over(A):
    E = free_extension(A)
    L, e = E.lattice, E.embed_index
    c = least_boolean(L)
    for a in boolean_elements(A):
        for x in range(A.size):
            if A.join[a][x] != x:
                continue
            image = e[complement_in(A, a, x)]
            assert image == complement_in(L, e[a], e[x])
            assert image == L.join[complement_in(L, c, e[x])][e[a]]


@given(nearlattices(3))
@settings(max_examples=25, deadline=None)
def test_universal_property_small(A):
    if A.size > 5:
        return
    E = free_extension(A)
    for M in (ONE, CHAIN2, CHAIN3, DIAMOND):
        assert check_universal_property(E, M)
