from itertools import permutations, product
from math import comb

import pytest

import oracles
from schurcell import combo


def test_weights_examples():
    assert combo.enumerate_weights(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert combo.enumerate_weights(1, 5) == [(5,)]
    assert len(combo.enumerate_weights(6, 2)) == comb(7, 2) == 21


def test_weights_count_and_order():
    for n in range(1, 5):
        for d in range(5):
            ws = combo.enumerate_weights(n, d)
            assert len(ws) == comb(n + d - 1, d) == combo.num_weights(n, d)
            assert ws == sorted(ws, reverse=True)


def test_partitions_examples():
    assert combo.enumerate_partitions(3, 3) == [(1, 1, 1), (2, 1), (3,)]
    assert combo.enumerate_partitions(0) == [()]
    assert combo.enumerate_partitions(4, 2) == [(2, 2), (3, 1), (4,)]


def test_multipartition_order_examples():
    a = ((), (2,))
    assert combo.compare_multipartitions(a, a) == 0
    assert combo.compare_multipartitions(((), (2,)), ((1,), (1,))) == -1
    assert combo.compare_multipartitions(((1,), (1,)), ((2,), ())) == -1


def test_dominance_examples():
    assert combo.dominance_leq((1, 2), (1, 2))
    assert combo.dominance_leq((1, 1), (2, 0))
    assert not combo.dominance_leq((2, 0, 1), (1, 2, 0))
    assert not combo.dominance_leq((1, 2, 0), (2, 0, 1))


def test_lex_refines_dominance():
    for r in range(1, 5):
        for d in range(6):
            ws = combo.enumerate_weights(r, d)
            for mu, nu in product(ws, ws):
                if combo.dominance_leq(mu, nu):
                    assert mu <= nu


def test_sequences_and_orbits():
    assert combo.weight_of_sequence((1, 2, 1)) == (0, 2, 1)
    assert combo.weight_of_sequence((0, 1, 0), 2) == (2, 1)
    assert combo.canonical_orbit_rep(((2, 1), (1, 2))) == ((1, 2), (2, 1))
    assert len(combo.orbit_reps([2], 2)) == 3 == len(combo.enumerate_weights(2, 2))


def test_weight_invariant_under_permutation():
    for d in range(1, 5):
        for seq in product(range(3), repeat=d):
            mu = combo.weight_of_sequence(seq, 3)
            for p in permutations(range(d)):
                assert combo.weight_of_sequence(tuple(seq[i] for i in p), 3) == mu


def test_orbit_bijection_with_weights():
    # single index set: orbits of sequences <-> weights
    for m in range(1, 5):
        for d in range(4):
            assert len(combo.orbit_reps([m], d)) == combo.num_weights(m, d)
    # several index sets: orbits <-> weights on the product set
    assert len(combo.orbit_reps([2, 2], 2)) == combo.num_weights(4, 2)


def test_superstandard_example():
    assert combo.superstandard((4, 2, 1), [1, 2, 3]) == ((1, 1, 1, 1), (2, 2), (3,))


def test_standard_tableaux_examples():
    assert combo.enumerate_standard_tableaux((1, 1, 1), [1, 2]) == []
    assert len(combo.enumerate_standard_tableaux((2, 1), [1, 2])) == 2


def test_standard_tableaux_match_brute_force():
    for d in range(1, 5):
        for lam in combo.enumerate_partitions(d):
            for n in range(1, 4):
                alpha = list(range(1, n + 1))
                got = combo.enumerate_standard_tableaux(lam, alpha)
                assert sorted(got) == sorted(oracles.standard_tableaux(lam, alpha))
                assert all(combo.is_standard(t, alpha) for t in got)


def test_two_row_count():
    for d in range(1, 7):
        for lam in combo.enumerate_partitions(d, 2):
            l2 = lam[1] if len(lam) > 1 else 0
            assert len(combo.enumerate_standard_tableaux(lam, [1, 2])) == lam[0] - l2 + 1


def test_lambda_modify_examples():
    assert combo.lambda_modify((2, 1), 1, 1) == (3, 0)
    assert combo.lambda_modify((2, 2), 1, 2) == (4, 0)
    assert combo.lambda_modify((3, 2, 1), 2, 1) == (3, 3, 0)
    with pytest.raises(ValueError):
        combo.lambda_modify((2, 1), 1, 2)


def test_box_matrix_sums():
    for d in range(2, 6):
        for lam in combo.enumerate_partitions(d):
            for i in range(1, len(lam)):
                for t in range(1, lam[i] + 1):
                    rows, cols = combo.gamma_matrix_sums(combo.box_matrix(lam, i, t))
                    assert rows == tuple(lam)
                    assert cols == combo.lambda_modify(lam, i, t)


def test_enumerate_multipartitions_sorted():
    mps = combo.enumerate_multipartitions(2, [None, None, None])
    assert mps == sorted(mps, key=combo.multipartition_key)
    assert mps[0] == ((), (), (1, 1)) and mps[-1] == ((2,), (), ())


def test_formatting():
    assert combo.format_multipartition(((), (1, 1), ())) == "(-; 1,1; -)"
    assert combo.format_multitableau(((), ((2,), (3,)), ())) == "(-, 2/3, -)"
    assert combo.parse_partition("2,1") == (2, 1)
    with pytest.raises(ValueError):
        combo.parse_partition("1,2")
