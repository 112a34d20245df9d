"""The twelve acceptance criteria, one test each, at their stated tolerances."""

from __future__ import annotations

import random
import time
from itertools import product

from known import (
    EX9,
    EX9_RADIUS,
    EX11,
    EX12_P,
    EX12_Q,
    EX13_P,
    EX13_Q,
    EX14_P,
    EX14_Q,
    disjoint_chains,
    hierarchical,
    random_poset,
)
from posetradius.codes import FieldVector, code_from_rows
from posetradius.differencing import (
    Entry,
    brute_min_discordancy,
    entry_assoc,
    entry_diff,
    enumerate_partitions,
    min_discordancy,
    packing_radius_matrix,
    radius_matrix,
)
from posetradius.errors import InputError, NotAPartialOrder
from posetradius.oracle import ball_radius_oracle, maxweight_oracle, restricted_maxweight
from posetradius.partition import ckk, kk_ldm
from posetradius.poset import antichain, chain, poset_from_adjacency_matrix, standard_form
from posetradius.radius import (
    Comparison,
    PruneOptions,
    compare_by_support,
    er_transform,
    hierarchical_radius,
    matrix_radius,
    poset_er_matrix,
    radius_of_code,
    radius_of_poset,
    radius_of_vector,
)


def best_ms(fn, repeat=20):
    """Best wall time over ``repeat`` calls after one warm-up call."""
    fn()
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best * 1000


def test_01_chain_vector(criterion):
    with criterion(1, "chain 1<2<3, v=001 has packing radius 2") as c:
        P, v = chain(3), FieldVector.parse("001")
        assert radius_of_vector(P, v).radius == 2
        assert ball_radius_oracle(P, v) == 2
        assert maxweight_oracle(P, v)[0] == 2
        assert restricted_maxweight(P, v) == 2
        ms = best_ms(lambda: radius_of_vector(P, v))
        c.note(f"{ms:.3f} ms")
        assert ms < 1


def test_02_kk_and_ckk(criterion):
    with criterion(2, "KK gives 2 with the stated trace, CKK gives 0 on (8,7,6,5,4)") as c:
        S = [8, 7, 6, 5, 4]
        res = kk_ldm(S)
        assert res.discrepancy == 2
        assert res.trace[1:] == ((6, 5, 4, 1), (4, 1, 1), (3, 1), (2,))
        exact = ckk(S)
        assert exact.discrepancy == 0 and exact.optimal
        t_kk, t_ckk = best_ms(lambda: kk_ldm(S)), best_ms(lambda: ckk(S))
        c.note(f"kk {t_kk:.3f} ms, ckk {t_ckk:.3f} ms")
        assert t_kk < 1 and t_ckk < 1


def test_03_disjoint_chains(criterion):
    with criterion(3, "five disjoint chains (8,7,6,5,4) have R = 14 on both paths") as c:
        P = disjoint_chains([8, 7, 6, 5, 4])
        assert P.n == 30
        fast = radius_of_poset(P)
        slow = radius_of_poset(P, "differencing")
        assert fast.strategy == "disjoint-ideals"
        assert fast.radius == slow.radius == 14
        t_fast = best_ms(lambda: radius_of_poset(P))
        t_slow = best_ms(lambda: radius_of_poset(P, "differencing"))
        c.note(f"fast path {t_fast:.3f} ms, differencing {t_slow:.3f} ms")
        assert t_fast < 10 and t_slow < 10


def test_04_first_worked_poset(criterion):
    with criterion(4, "7-element example: maxima {4,5,6,7}, Lambda* = 3, R = 4") as c:
        P = poset_from_adjacency_matrix(EX9)
        m = radius_matrix(P)
        assert P.maximal() == (4, 5, 6, 7)
        assert [[int(e != Entry.ZERO) for e in row] for row in m.rows()] == EX9_RADIUS
        out = packing_radius_matrix(m)
        assert (out.discordancy, out.radius) == (3, 4)
        ms = best_ms(lambda: packing_radius_matrix(radius_matrix(P)))
        c.note(f"{ms:.3f} ms")
        assert ms < 10


def test_05_pruned_tree(criterion):
    with criterion(5, "pruned example: Lambda* = 3, R = 4, fewer nodes with pruning") as c:
        P = poset_from_adjacency_matrix(EX11)
        pruned = packing_radius_matrix(radius_matrix(P))
        full = packing_radius_matrix(radius_matrix(P), prune=False)
        assert (pruned.discordancy, pruned.radius) == (3, 4)
        assert (full.discordancy, full.radius) == (3, 4)
        c.note(f"nodes {pruned.nodes_expanded} vs {full.nodes_expanded}, pruned {pruned.nodes_pruned}")
        assert pruned.nodes_expanded < full.nodes_expanded
        ms = best_ms(lambda: packing_radius_matrix(radius_matrix(P)))
        c.note(f"{ms:.3f} ms")
        assert ms < 10


def test_06_hierarchical(criterion):
    with criterion(6, "hierarchical n=9, m=3: Lambda* = 7, R = 7") as c:
        P = hierarchical([3, 3, 3])
        out = radius_of_poset(P)
        assert (out.discordancy, out.radius) == (7, 7)
        assert hierarchical_radius(9, 3) == 7
        assert radius_of_poset(P, "differencing").radius == 7
        ms = best_ms(lambda: radius_of_poset(P))
        c.note(f"{ms:.3f} ms")
        assert ms < 1


def test_07_formula_suite(criterion):
    with criterion(7, "chain, anti-chain and hierarchical closed forms for n = 1..14") as c:
        rng = random.Random(2024)
        t0 = time.perf_counter()
        checked = 0
        for n in range(1, 15):
            assert radius_of_poset(chain(n)).radius == n - 1
            assert radius_of_poset(antichain(n)).radius == n // 2 + n % 2 - 1
            for _ in range(3):
                sizes, left = [], n
                while left:
                    s = rng.randint(1, left)
                    sizes.append(s)
                    left -= s
                P = hierarchical(sizes)
                formula = hierarchical_radius(n, sizes[-1])
                assert radius_of_poset(P, "differencing").radius == formula
                assert radius_of_poset(P).radius == formula
                checked += 1
        ms = (time.perf_counter() - t0) * 1000
        c.note(f"{checked} hierarchical posets, {ms:.1f} ms")
        assert ms < 1000


def _all_posets(n):
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for bits in product((0, 1), repeat=len(pairs)):
        A = [[int(i == j) for j in range(n)] for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            A[i][j] = b
        try:
            yield poset_from_adjacency_matrix(A)
        except NotAPartialOrder:
            continue


def test_08_exhaustive_small_posets(criterion):
    with criterion(8, "all labelled posets n <= 4, all nonzero v, q in {2,3}: three methods agree") as c:
        t0 = time.perf_counter()
        posets = vectors = 0
        for n in range(1, 5):
            for P in _all_posets(n):
                posets += 1
                for q in (2, 3):
                    for coords in product(range(q), repeat=n):
                        if not any(coords):
                            continue
                        v = FieldVector(q, coords)
                        r = radius_of_vector(P, v).radius
                        assert ball_radius_oracle(P, v) == r, (P, v)
                        assert maxweight_oracle(P, v)[0] == r, (P, v)
                        vectors += 1
        assert posets == 1 + 3 + 19 + 219
        seconds = time.perf_counter() - t0
        c.note(f"{posets} posets, {vectors} vectors, {seconds:.1f} s")
        assert seconds < 60


def test_09_random_posets(criterion):
    with criterion(9, "500 random posets (n <= 12, |M| <= 10): search = enumeration, parity holds") as c:
        rng = random.Random(99)
        t0 = time.perf_counter()
        done = partitions = 0
        while done < 500:
            n = rng.randint(1, 12)
            P = random_poset(rng, n, rng.choice([0.1, 0.2, 0.3, 0.5]))
            if len(P.maximal()) > 10:
                continue
            expected = brute_min_discordancy(P).discordancy
            assert min_discordancy(radius_matrix(P)).discordancy == expected
            for _, _, lam, _ in enumerate_partitions(P):
                assert lam % 2 == n % 2
                partitions += 1
            done += 1
        seconds = time.perf_counter() - t0
        c.note(f"{partitions} partitions, {seconds:.1f} s")
        assert seconds < 60


def test_10_operator_algebra(criterion):
    Z, P1, M1, I = Entry.ZERO, Entry.PLUS, Entry.MINUS, Entry.IMAG
    order = [Z, P1, M1, I]
    diff = [[Z, M1, P1, I], [P1, I, P1, I], [M1, M1, I, I], [I, I, I, I]]
    assoc = [[Z, P1, M1, I], [P1, P1, I, I], [M1, I, M1, I], [I, I, I, I]]
    with criterion(10, "operator identities on all 64 triples and both 16-cell tables") as c:
        cells = 0
        for r, x in enumerate(order):
            for k, y in enumerate(order):
                assert entry_diff(x, y) == diff[r][k]
                assert entry_assoc(x, y) == assoc[r][k]
                cells += 2
        a, d = entry_assoc, entry_diff
        triples = 0
        for x, y, z in product(order, repeat=3):
            assert a(x, y) == a(y, x)
            assert a(a(x, y), z) == a(x, a(y, z))
            assert a(Z, x) == x == a(x, Z)
            assert a(Z, a(x, y)) == a(a(Z, x), y)
            assert a(Z, d(x, y)) == d(a(Z, x), y)
            assert d(Z, a(x, y)) == d(d(Z, x), y)
            assert d(Z, d(x, y)) == a(d(Z, x), y)
            triples += 1
        c.note(f"{cells} cells, {triples} triples")
        assert cells == 32 and triples == 64


def _random_code(rng, n, k):
    while True:
        try:
            return code_from_rows(2, [[rng.randrange(2) for _ in range(n)] for _ in range(k)])
        except InputError:
            continue


def test_11_random_codes(criterion):
    with criterion(11, "200 random binary codes: pruned = unpruned = ball oracle, sandwich bound") as c:
        rng = random.Random(11)
        t0 = time.perf_counter()
        for _ in range(200):
            n = rng.randint(1, 8)
            k = rng.randint(1, min(3, n))
            P = random_poset(rng, n, rng.random() * 0.5)
            C = _random_code(rng, n, k)
            fast = radius_of_code(P, C)
            slow = radius_of_code(P, C, PruneOptions.none())
            oracle = min(
                ball_radius_oracle(P, FieldVector(2, w.coords))
                for w in _codewords(C)
            )
            assert fast.radius == slow.radius == oracle
            d = fast.minimum_distance
            assert (d - 1) // 2 <= fast.radius <= d - 1
        seconds = time.perf_counter() - t0
        c.note(f"{seconds:.1f} s")
        assert seconds < 120


def _codewords(C):
    from posetradius.codes import enumerate_codewords

    return [w for w in enumerate_codewords(C) if not w.is_zero()]


def test_12_er_machinery(criterion):
    with criterion(12, "standard form byte-exact, ER replay keeps R, support comparison gives LE") as c:
        Q = standard_form(poset_from_adjacency_matrix(EX12_P))
        expected = "\n".join(" ".join(map(str, r)) for r in EX12_Q)
        assert str(Q) == expected

        target = matrix_radius(EX13_Q)
        assert target == radius_of_poset(poset_from_adjacency_matrix(EX13_Q)).radius
        steps = [
            ("remove-dominated-column", 0),
            ("remove-dominated-column", 0),
            ("remove-dominated-column", 0),
            ("swap-cols", 0, 1),
            ("swap-rows", 1, 2),
            ("swap-rows", 3, 4),
            ("add-dominated-column", 0, [1, 0, 0, 0, 0]),
            ("add-dominated-column", 1, [1, 1, 0, 0, 0]),
            ("add-dominated-column", 2, [1, 0, 1, 0, 0]),
        ]
        m = EX13_Q
        for op, *args in steps:
            m = er_transform(m, op, *args)
            assert matrix_radius(m) == target
        assert m == tuple(tuple(Entry.parse(e) for e in row) for row in EX13_P)

        mP = poset_er_matrix(poset_from_adjacency_matrix(EX14_P))
        mQ = poset_er_matrix(poset_from_adjacency_matrix(EX14_Q))
        mP = er_transform(mP, "add-null-row", 5)
        mP = er_transform(mP, "add-dominated-column", 1, [0] * 8)
        assert compare_by_support(mP, mQ) == Comparison.LE
        rp = radius_of_poset(poset_from_adjacency_matrix(EX14_P)).radius
        rq = radius_of_poset(poset_from_adjacency_matrix(EX14_Q)).radius
        c.note(f"R(P) = {rp}, R(Q) = {rq}")
        assert rp <= rq
