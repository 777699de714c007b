import itertools

import pytest
from hypothesis import given, settings

from nearlat.errors import NotALattice, NotBooleanBase, NotInUpset
from nearlat.fixtures import CHAIN3, DIAMOND, ONE, VEE, VEE3
from nearlat.nearlattice import is_lattice, is_n_homomorphism, meet_of_set, NMap, subalgebra
from nearlat.structure import (
    annihilator,
    boolean_elements,
    classically_complemented,
    classify,
    complement_in,
    complemented_elements,
    dense_elements,
    dual_atoms,
    is_boolean_element,
    is_semi_boolean,
    least_boolean,
    pi,
    x_set,
)

import oracles
from strategies import nearlattices

# CHAIN3/DIAMOND: 0=0 a=1 (b=2) top last; VEE: a=0 b=1 1=2


def test_dual_atoms_examples():
    assert dual_atoms(CHAIN3) == {1}
    assert dual_atoms(VEE) == {0, 1}
    assert dual_atoms(DIAMOND) == {1, 2}


def test_x_set_examples():
    assert x_set(VEE, 2) == frozenset()
    assert x_set(CHAIN3, 0) == {1}
    assert x_set(DIAMOND, 1) == {1}


def test_boolean_examples():
    assert is_boolean_element(CHAIN3, 2)
    assert not is_boolean_element(CHAIN3, 0)
    assert is_boolean_element(DIAMOND, 0)
    assert boolean_elements(CHAIN3) == {1, 2}
    assert boolean_elements(VEE) == {0, 1, 2}
    assert boolean_elements(DIAMOND) == {0, 1, 2, 3}


def test_complement_examples():
    assert complement_in(DIAMOND, 0, 1) == 2
    for a in boolean_elements(DIAMOND):
        assert complement_in(DIAMOND, a, 3) == a
    with pytest.raises(NotBooleanBase):
        complement_in(CHAIN3, 0, 1)
    with pytest.raises(NotInUpset):
        complement_in(DIAMOND, 1, 2)


def test_annihilator_examples():
    assert annihilator(VEE, 2) == {0, 1, 2}
    assert annihilator(VEE, 0) == {1, 2}
    assert annihilator(CHAIN3, 0) == {2}


def test_dense_examples():
    assert dense_elements(CHAIN3) == {0, 1}
    assert dense_elements(VEE) == frozenset()
    assert meet_of_set(VEE, dual_atoms(VEE)) is None
    assert dense_elements(DIAMOND) == {0}


def test_complemented_examples():
    assert complemented_elements(CHAIN3) == {0, 2}
    assert complemented_elements(DIAMOND) == {0, 1, 2, 3} == classically_complemented(DIAMOND)
    assert complemented_elements(VEE) == {0, 1, 2}
    with pytest.raises(NotALattice):
        classically_complemented(VEE)


def test_pi_examples():
    assert pi(CHAIN3, 0) == 1
    assert pi(VEE, 0) == 0
    assert all(pi(DIAMOND, b) == b for b in boolean_elements(DIAMOND))


def test_semi_boolean_examples():
    assert is_semi_boolean(VEE)
    assert not is_semi_boolean(CHAIN3)
    assert is_semi_boolean(ONE)
    assert is_semi_boolean(VEE3)


def test_classification_bundle():
    c = classify(CHAIN3)
    assert c.pi_table == (1, 1, 2)
    assert c.dense_elements == {0, 1}


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_element_classes_match_oracle(A):
    assert dual_atoms(A) == oracles.dual_atoms(A.join, A.top)
    assert boolean_elements(A) == {a for a in range(A.size) if oracles.is_boolean(A.join, a, A.top)}
    for a in range(A.size):
        assert annihilator(A, a) == oracles.annihilator(A.join, a, A.top)


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_dual_atom_dichotomy_and_x_sets(A):
    At = dual_atoms(A)
    for a in At:
        for x in range(A.size):
            assert A.join[x][a] in (a, A.top)
    for a, b in itertools.product(range(A.size), repeat=2):
        assert x_set(A, A.join[a][b]) == x_set(A, a) & x_set(A, b)
        m = A.meet_table[a][b]
        if m is not None:
            assert x_set(A, m) == x_set(A, a) | x_set(A, b)


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_boolean_elements_structure(A):
    B = boolean_elements(A)
    assert dual_atoms(A) <= B
    for b in B:
        assert meet_of_set(A, x_set(A, b)) == b
        assert all(y in B for y in range(A.size) if A.join[b][y] == y)
    sub, _ = subalgebra(A, B)
    assert is_semi_boolean(sub)


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_least_boolean_equivalences(A):
    B = boolean_elements(A)
    At = dual_atoms(A)
    has_meet = meet_of_set(A, At) is not None
    upset_is_B = any({x for x in range(A.size) if A.join[a][x] == x} == B for a in range(A.size))
    D = dense_elements(A)
    downset_is_D = any({x for x in range(A.size) if A.join[x][a] == a} == D for a in range(A.size))
    assert has_meet == upset_is_B == (least_boolean(A) is not None) == downset_is_D == bool(D)


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_projection(A):
    B = boolean_elements(A)
    sub, elems = subalgebra(A, B)
    pos = {e: i for i, e in enumerate(elems)}
    f = NMap(A, sub, tuple(pos[pi(A, a)] for a in range(A.size)))
    assert is_n_homomorphism(f)
    for a in range(A.size):
        p = pi(A, a)
        above = [b for b in B if A.join[a][b] == b]
        assert p in above and all(A.join[p][b] == b for b in above)
        assert annihilator(A, a) == annihilator(A, p)
    for a, b in itertools.product(B, repeat=2):
        assert (A.join[a][b] == b) == (annihilator(A, a) <= annihilator(A, b))


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_complemented_and_semi_boolean(A):
    C = complemented_elements(A)
    B = boolean_elements(A)
    full = frozenset(range(A.size))
    assert is_semi_boolean(A) == (C == full) == (B == C)
    sub, _ = subalgebra(A, C)
    assert is_semi_boolean(sub)
    if is_lattice(A):
        assert C == classically_complemented(A)


@given(nearlattices())
@settings(max_examples=50, deadline=None)
def test_relative_complements(A):
    B = boolean_elements(A)
    c = least_boolean(A)
    for a in B:
        for x in range(A.size):
            if A.join[a][x] != x:
                continue
            y = complement_in(A, a, x)
            assert A.join[x][y] == A.top and A.meet_table[x][y] == a
            if is_lattice(A):
                assert y == A.join[complement_in(A, c, x)][a]
