import itertools
import random

import pytest

from qsuper.weights import (FuelExhausted, WeightError, atypicality, bruhat_leq, bweight,
                            check_dominant, dominance_leq_P, dominant_weights,
                            down_moves, downarrow_reachable, gl_dominance_leq, is_dominant,
                            key, lower_block_set, pairing, parse_weight, same_block,
                            simple_root, sort_to_dominant, stats, wt, wt_tail)

from oracles import brute_positive_cone


def test_parse_and_dominance():
    assert parse_weight("5,3,-1") == (5, 3, -1)
    assert parse_weight("(0,0)") == (0, 0)
    for bad in ["", "1,,2", "a,b", "1;2"]:
        with pytest.raises(WeightError):
            parse_weight(bad)
    assert is_dominant((2, 0, 0, -1))
    assert not is_dominant((1, 1))
    assert not is_dominant((0, 1))
    with pytest.raises(WeightError):
        check_dominant((1, 1))


def test_stats_examples():
    s = stats((5, 3, 2, 1, 0, 0, -1, -4, -6))
    assert (s.atypicality, s.zeros, s.is_dominant) == (4, 2, True)
    s = stats((0, 0))
    assert (s.zeros, s.nonzeros, s.atypicality, s.is_typical) == (2, 0, 2, False)
    assert stats((3, 1, -2)).is_typical
    assert stats((1, 0)).atypicality == 1


def test_atypicality_parity():
    for lam in dominant_weights(4, -3, 3):
        z = stats(lam).zeros
        assert (atypicality(lam) - z) % 2 == 0
        assert atypicality(lam) >= z


def test_wt_and_pairing():
    assert wt((1, -1, 0)) == ()
    assert wt((2, -3, 2)) == ((2, 2), (3, -1))
    assert wt_tail((1, 2, 3), 2) == ((2, 1), (3, 1))
    assert pairing(simple_root(0), simple_root(0)) == 2
    assert pairing(simple_root(2), simple_root(2)) == 4
    assert pairing(simple_root(0), simple_root(1)) == -2
    assert pairing(simple_root(1), simple_root(2)) == -2
    assert pairing(simple_root(0), simple_root(2)) == 0


def test_P_dominance_examples():
    # 0 - eps_1 = alpha_0
    assert dominance_leq_P(bweight({1: 1}), ())
    assert not dominance_leq_P(bweight({1: -1}), ())
    assert dominance_leq_P((), simple_root(3))
    assert dominance_leq_P(bweight({2: 1}), ())


def test_P_dominance_against_enumeration():
    rank = 3
    # with |d_i| <= 2 the coefficients needed are at most 6
    cone = brute_positive_cone(rank, 6)
    for d in itertools.product(range(-2, 3), repeat=rank):
        gamma = bweight({i + 1: c for i, c in enumerate(d)})
        assert dominance_leq_P((), gamma) == (d in cone), d


def test_bruhat_examples():
    assert bruhat_leq((-1, 1), (0, 0))
    assert not bruhat_leq((0, 0), (-1, 1))
    assert not bruhat_leq((2, -2), (1, 0)) and not bruhat_leq((1, 0), (2, -2))
    assert bruhat_leq((0, 2), (2, 0))


def test_gl_dominance():
    assert gl_dominance_leq((1, 0, -1), (2, 0, -2))
    assert not gl_dominance_leq((2, 0, -2), (1, 0, -1))
    assert not gl_dominance_leq((1, 0), (0, 0))


def test_bruhat_implies_dominance_and_partial_order():
    ws = list(itertools.product(range(-2, 3), repeat=3))
    rng = random.Random(1)
    sample = rng.sample(ws, 60)
    for a in sample:
        assert bruhat_leq(a, a)
        for b in sample:
            if bruhat_leq(a, b):
                assert gl_dominance_leq(a, b)
                if bruhat_leq(b, a):
                    assert a == b
                for c in sample:
                    if bruhat_leq(b, c):
                        assert bruhat_leq(a, c)


def test_down_moves_raise_key_and_keep_block():
    for lam in itertools.product(range(-3, 4), repeat=3):
        for mu in down_moves(lam):
            assert key(mu) > key(lam)
            assert wt(mu) == wt(lam)
            assert bruhat_leq(mu, lam)


def test_downarrow_matches_bruhat_exhaustively():
    """mu is reachable from lam by down-moves iff mu is below lam, n <= 3, [-3, 3]."""
    for n in (1, 2, 3):
        ws = list(itertools.product(range(-3, 4), repeat=n))
        for lam in ws:
            for mu in ws:
                if same_block(lam, mu):
                    assert downarrow_reachable(lam, mu) == bruhat_leq(mu, lam), (lam, mu)


def test_downarrow_fuel():
    with pytest.raises(FuelExhausted):
        downarrow_reachable((4, 3, 2, -4), (-4, 2, 3, 4), fuel=2)
    assert downarrow_reachable((4, 3, 2, -4), (-4, 2, 3, 4))


def test_sort_to_dominant():
    assert sort_to_dominant((0, 3, -1, 0)) == (3, 0, 0, -1)
    with pytest.raises(WeightError):
        sort_to_dominant((1, 2, 1))


def test_lower_block_set():
    assert lower_block_set((2, 0, -2)) == [(0, 0, 0), (1, 0, -1), (2, 0, -2)]
    assert lower_block_set((1, -1)) == [(0, 0), (1, -1)]
    assert lower_block_set((1, 0, 0)) == [(1, 0, 0)]


def test_lower_block_set_against_filter():
    box = dominant_weights(3, -5, 5)
    for lam in dominant_weights(3, -3, 3):
        expected = sorted(mu for mu in box if same_block(mu, lam) and gl_dominance_leq(mu, lam))
        assert lower_block_set(lam) == expected
