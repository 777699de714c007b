"""Acceptance criteria, one test per criterion.

A pass/fail line per criterion is printed at the end of the pytest run by the
terminal-summary hook in conftest.
"""

import time

import pytest

from nearlat.cli import main
from nearlat.errors import NearlatError
from nearlat.extension import (
    check_commuting_diagram,
    check_lemma_upset_and_annihilator,
    check_phi_isomorphism,
    check_preservation,
    check_universal_property,
    free_extension,
    irreducibles,
)
from nearlat.nearlattice import from_join_table, is_lattice, is_n_homomorphism, meet_of_set, NMap
from nearlat.order import enumerate_downsets
from nearlat.representation import (
    check_representation,
    enumerate_dn,
    n_of,
    representation_map,
    s_of,
    sample_dn,
)
from nearlat.structure import (
    boolean_elements,
    classically_complemented,
    complement_in,
    complemented_elements,
    is_semi_boolean,
)

import oracles
from conftest import DATA, GOLDEN


def test_criterion_1_corpus_soundness(capsys):
    start = time.perf_counter()
    code = main(["check", "--corpus", "4"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0, out
    assert out.strip().splitlines()[-1].endswith(" 0 failures")
    assert out.strip().splitlines()[-1].startswith("checked 96 structures, ")
    assert elapsed < 60, elapsed
    sizes = [D.poset.size for D in enumerate_dn(4)]
    assert [sizes.count(n) for n in range(3)] == [1, 1, 3]
    assert [sizes.count(n) for n in (3, 4)] == [oracles.count_dn_classes(n) for n in (3, 4)]


def test_criterion_2_generator_complete(corpus4):
    from_tables = []
    for n in range(1, 5):
        for join, top in oracles.semilattice_tables(n):
            try:
                from_join_table(n, join, top)
            except NearlatError:
                continue
            if not any(oracles.join_closed_order_iso(join, top, j, t) for j, t in from_tables):
                from_tables.append((join, top))
    generated = [(A.join, A.top) for _, A in corpus4 if A.size <= 4]
    # classes of size 1, 2, 3, 4: one, one, two, five
    assert len(from_tables) == 9
    assert len(generated) == len(from_tables)
    for join, top in generated:
        matches = [k for k, (j, t) in enumerate(from_tables) if oracles.join_closed_order_iso(join, top, j, t)]
        assert len(matches) == 1
    # each table class is hit exactly once
    hit = [
        sum(oracles.join_closed_order_iso(j, t, join, top) is not None for join, top in generated)
        for j, t in from_tables
    ]
    assert hit == [1] * len(from_tables)


def _assert_represented_by_embedding(A):
    assert check_representation(A)
    f = representation_map(A)
    D = s_of(A)
    members = sorted(D.one_family)
    irr = irreducibles(A)
    for a in range(A.size):
        expected = {i for i, x in enumerate(irr) if A.join[a][x] != x}
        got = {i for i in range(len(irr)) if members[f(a)] >> i & 1}
        assert got == expected
    assert sorted(f.table) == list(range(A.size))
    inverse = [0] * A.size
    for a, u in enumerate(f.table):
        inverse[u] = a
    assert is_n_homomorphism(f) and is_n_homomorphism(NMap(f.target, A, tuple(inverse)))


def test_criterion_3_representation(corpus4):
    for _, A in corpus4:
        _assert_represented_by_embedding(A)
    for seed in range(200):
        D = sample_dn(seed % 7, seed)
        _assert_represented_by_embedding(n_of(D))


def test_criterion_4_lattices_have_every_downset(corpus4):
    lattices = 0
    for D, A in corpus4:
        if not is_lattice(A):
            continue
        lattices += 1
        S = s_of(A)
        assert S.one_family == set(enumerate_downsets(S.poset))
        assert D.one_family == set(enumerate_downsets(D.poset))
    assert lattices >= 16


def test_criterion_5_universal_property(corpus4):
    start = time.perf_counter()
    bases = [A for _, A in corpus4 if A.size <= 5]
    targets = [A for _, A in corpus4 if A.size <= 5 and is_lattice(A)]
    assert len(targets) >= 7
    for A in bases:
        E = free_extension(A)
        for M in targets:
            assert check_universal_property(E, M, bound=5)
    assert time.perf_counter() - start < 300


def test_criterion_6_diagram_and_preservation(corpus4):
    for _, A in corpus4:
        E = free_extension(A)
        assert check_commuting_diagram(E)
        assert check_preservation(E)
        assert check_lemma_upset_and_annihilator(E)
        assert check_phi_isomorphism(E)


def test_criterion_7_element_theory_oracles(corpus4):
    for _, A in corpus4:
        for S in oracles.subsets(A.size, 3):
            expected = oracles.glb(A.join, S) if S else A.top
            assert meet_of_set(A, S) == expected
        for a in boolean_elements(A):
            for x in oracles.upset(A.join, a):
                brute = [
                    y for y in oracles.upset(A.join, a)
                    if A.join[x][y] == A.top and oracles.glb(A.join, [x, y]) == a
                ]
                assert brute == [complement_in(A, a, x)]
        if is_lattice(A):
            zero = oracles.glb(A.join, range(A.size))
            classical = {
                a for a in range(A.size)
                if any(A.join[a][b] == A.top and oracles.glb(A.join, [a, b]) == zero for b in range(A.size))
            }
            assert complemented_elements(A) == classical == classically_complemented(A)


def test_criterion_8_semi_boolean(corpus4):
    seen = {True: 0, False: 0}
    for _, A in corpus4:
        carrier = frozenset(range(A.size))
        C = complemented_elements(A)
        B = boolean_elements(A)
        sb = is_semi_boolean(A)
        assert sb == (C == carrier) == (B == C)
        seen[sb] += 1
    assert seen[True] and seen[False]


@pytest.mark.parametrize("name", ["vee", "chain3", "diamond"])
def test_criterion_9_golden_reports(capsys, name):
    for fmt, ext in (("text", "txt"), ("json", "json")):
        assert main(["analyze", str(DATA / f"{name}.json"), "--format", fmt]) == 0
        assert capsys.readouterr().out == (GOLDEN / f"{name}.{ext}").read_text()


def test_criterion_9_n5_diagnostic(capsys):
    assert main(["validate", str(DATA / "n5.json")]) == 1
    assert capsys.readouterr().err.startswith("UpsetNotDistributive a=0")
