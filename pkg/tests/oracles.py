"""Brute-force reference computations.

Everything here works from the raw join table or relation by exhaustive
search and deliberately avoids the package's algorithms, so agreement with
the package is evidence rather than tautology.
"""

from __future__ import annotations

import itertools


def leq(join, x, y):
    return join[x][y] == y


def lower_bounds(join, S):
    n = len(join)
    return [z for z in range(n) if all(leq(join, z, s) for s in S)]


def glb(join, S):
    """Greatest element among the common lower bounds, or None."""
    lows = lower_bounds(join, S)
    for m in lows:
        if all(leq(join, z, m) for z in lows):
            return m
    return None


def subsets(n, max_size):
    for k in range(max_size + 1):
        yield from itertools.combinations(range(n), k)


def is_filter(join, F):
    n = len(join)
    F = set(F)
    if not F:
        return False
    for x in F:
        for y in range(n):
            if leq(join, x, y) and y not in F:
                return False
    for x in F:
        for y in F:
            m = glb(join, [x, y])
            if m is not None and m not in F:
                return False
    return True


def all_filters(join):
    n = len(join)
    return sorted(
        (frozenset(S) for k in range(1, n + 1) for S in itertools.combinations(range(n), k) if is_filter(join, S)),
        key=lambda F: (len(F), sorted(F)),
    )


def dual_atoms(join, top):
    n = len(join)
    return {a for a in range(n) if a != top and all(x in (a, top) for x in range(n) if leq(join, a, x))}


def upset(join, a):
    return [x for x in range(len(join)) if leq(join, a, x)]


def is_boolean(join, a, top):
    """Every element of [a) has a complement relative to a and top."""
    up = upset(join, a)
    for x in up:
        if not any(join[x][y] == top and glb(join, [x, y]) == a for y in up):
            return False
    return True


def annihilator(join, a, top):
    return {x for x in range(len(join)) if join[a][x] == top}


def join_closed_order_iso(ja, ta, jb, tb):
    """Exhaustive permutation search for a join-table isomorphism."""
    n = len(ja)
    if n != len(jb):
        return None
    for perm in itertools.permutations(range(n)):
        if perm[ta] != tb:
            continue
        if all(perm[ja[x][y]] == jb[perm[x]][perm[y]] for x in range(n) for y in range(n)):
            return perm
    return None


def semilattice_tables(n):
    """All commutative idempotent n-by-n tables with an absorbing element.

    Yields ``(join, top)``; associativity and distributivity are left to the
    validator under test.
    """
    cells = [(x, y) for x in range(n) for y in range(x + 1, n)]
    for values in itertools.product(range(n), repeat=len(cells)):
        join = [[x if x == y else 0 for y in range(n)] for x in range(n)]
        for (x, y), v in zip(cells, values):
            join[x][y] = join[y][x] = v
        tops = [t for t in range(n) if all(join[t][x] == t for x in range(n))]
        if len(tops) == 1:
            yield join, tops[0]


def labeled_posets(n):
    """Every partial order on ``range(n)`` as a tuple of tuples of bools."""
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y]
    seen = set()
    for chosen in itertools.product([False, True], repeat=len(pairs)):
        rel = [[x == y for y in range(n)] for x in range(n)]
        for (x, y), c in zip(pairs, chosen):
            rel[x][y] = c
        ok = True
        for x, y in pairs:
            if rel[x][y] and rel[y][x]:
                ok = False
        for x, y, z in itertools.product(range(n), repeat=3):
            if rel[x][y] and rel[y][z] and not rel[x][z]:
                ok = False
        if ok:
            key = tuple(tuple(r) for r in rel)
            if key not in seen:
                seen.add(key)
                yield key


def downsets(rel):
    n = len(rel)
    out = []
    for k in range(n + 1):
        for S in itertools.combinations(range(n), k):
            S = frozenset(S)
            if all(y in S for x in S for y in range(n) if rel[y][x]):
                out.append(S)
    return out


def admissible_families(rel):
    """All value-1 families obeying the three structure rules, by subset scan."""
    n = len(rel)
    downs = downsets(rel)
    full = frozenset(range(n))
    forced = {full} | {frozenset(y for y in range(n) if not rel[x][y]) for x in range(n)}
    base = {V for V in downs if any(U <= V for U in forced)}
    free = [V for V in downs if V not in base]
    for k in range(len(free) + 1):
        for extra in itertools.combinations(free, k):
            fam = base | set(extra)
            if all(V in fam for U in fam for V in downs if U <= V):
                yield frozenset(fam)


def dn_orbit_key(rel, fam):
    """Canonical key of a (poset, family) pair under relabelling."""
    n = len(rel)
    best = None
    for perm in itertools.permutations(range(n)):
        r = tuple(tuple(rel[perm.index(x)][perm.index(y)] for y in range(n)) for x in range(n))
        f = tuple(sorted(tuple(sorted(perm[x] for x in U)) for U in fam))
        key = (r, f)
        if best is None or key < best:
            best = key
    return best


def count_dn_classes(n):
    keys = set()
    for rel in labeled_posets(n):
        for fam in admissible_families(rel):
            keys.add(dn_orbit_key(rel, fam))
    return len(keys)
