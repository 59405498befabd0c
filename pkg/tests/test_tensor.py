import itertools
import random

import pytest

from qsuper.laurent import ONE, qpow
from qsuper.tensor import (E, F, K, act_tensor, act_tensor_divided, bar_n2, bar_vector_n2,
                           kernel_relations_n2, m2_in_L, parse_generator, t2_closed, truncate)
from qsuper.vector import combine
from qsuper.weights import key, pairing, simple_root, wt

from oracles import m2_table, t2_table

WORDS = [w for n in (1, 2, 3) for w in itertools.product(range(-3, 4), repeat=n)]


def test_natural_module_action():
    assert act_tensor(E(0), {(0,): ONE}) == {(-1,): qpow(1) + qpow(-1)}
    assert act_tensor(E(0), {(1,): ONE}) == {(0,): ONE}
    assert act_tensor(F(0), {(0,): ONE}) == {(1,): qpow(1) + qpow(-1)}
    assert act_tensor(F(0), {(-1,): ONE}) == {(0,): ONE}
    assert act_tensor(E(2), {(3,): ONE}) == {(2,): ONE}
    assert act_tensor(E(2), {(-2,): ONE}) == {(-3,): ONE}
    assert act_tensor(F(2), {(2,): ONE}) == {(3,): ONE}
    assert act_tensor(F(2), {(-3,): ONE}) == {(-2,): ONE}
    assert act_tensor(K(0), {(-1,): ONE}) == {(-1,): qpow(2)}
    assert act_tensor(K(1), {(2,): ONE}) == {(2,): qpow(-2)}


def _quantum_commutator_rhs(i, word):
    """(K_i - K_i^-1) / (q_i - q_i^-1) on N_word."""
    m = sum(pairing(simple_root(i), wt((a,))) for a in word)
    qi = qpow(1) if i == 0 else qpow(2)
    val = (qpow(m) - qpow(-m)).exact_div(qi - qi ** -1)
    return {word: val} if val else {}


def test_defining_relations_on_tensor_words():
    rng = random.Random(7)
    for word in rng.sample(WORDS, 120):
        v = {word: ONE}
        for i in range(4):
            for j in range(4):
                lhs = combine((1, act_tensor(E(i), act_tensor(F(j), v))),
                              (-1, act_tensor(F(j), act_tensor(E(i), v))))
                rhs = _quantum_commutator_rhs(i, word) if i == j else {}
                assert lhs == rhs, (word, i, j)
                c = pairing(simple_root(i), simple_root(j))
                kek = act_tensor(K(i), act_tensor(E(j), act_tensor(K(i, -1), v)))
                assert kek == combine((qpow(c), act_tensor(E(j), v)))
                kfk = act_tensor(K(i), act_tensor(F(j), act_tensor(K(i, -1), v)))
                assert kfk == combine((qpow(-c), act_tensor(F(j), v)))


def test_divided_powers_are_integral():
    v = {(0, 0, 0): ONE}
    assert act_tensor_divided(F(0), 2, v)
    v = {(-1, 0, 1): ONE}
    act_tensor_divided(E(0), 2, v)


def test_parse_generator():
    assert parse_generator("E3") == E(3)
    assert parse_generator("K0^-1") == K(0, -1)
    with pytest.raises(ValueError):
        parse_generator("E0^-1")


def test_bar_example():
    v = bar_n2((1, -1), 4)
    qq = qpow(2) - qpow(-2)
    assert v[(1, -1)] == ONE
    # the explicit q^2 (q^2 - q^-2) term plus the b = -1 term of the tail
    assert v[(-1, 1)] == qpow(2) * qq - qq
    assert v[(0, 0)] == qpow(1) - qpow(-1)
    assert v[(-2, 2)] == qpow(-2) * qq
    assert v[(-3, 3)] == -qpow(-4) * qq
    assert all(key(w) < 4 for w in v)


def test_bar_terms_never_lower_the_key():
    for a, b in itertools.product(range(-5, 6), repeat=2):
        assert all(key(w) >= key((a, b)) for w in bar_n2((a, b), 30))


def test_bar_is_involution_below_cutoff():
    for a, b in itertools.product(range(-6, 7), repeat=2):
        assert bar_vector_n2(bar_n2((a, b), 30), 30) == {(a, b): ONE}


def test_T_closed_forms():
    for a, b in itertools.product(range(-4, 5), repeat=2):
        t = t2_closed((a, b))
        assert t == t2_table(a, b)
        assert bar_vector_n2(t, 30) == truncate(t, 30)
        # unitriangular: leading coefficient 1, the rest in qZ[q]
        assert t[(a, b)] == ONE
        assert all(e >= 1 for w, c in t.items() if w != (a, b) for e, _ in c.items())


def test_kernel_relations_are_bar_invariant():
    for rel in kernel_relations_n2(5):
        assert bar_vector_n2(rel, 30) == truncate(rel, 30)


def test_M_in_L_table():
    for a, b in itertools.product(range(-5, 6), repeat=2):
        assert m2_in_L((a, b)) == m2_table(a, b), (a, b)
