"""
The q-wedge space: the quotient of the tensor power by the quadratic
relations, with the standard monomial basis F_lam (lam dominant).

F_lam is the image of the word (lam_n, ..., lam_1), so a word is in normal
form when it is weakly increasing with only 0 allowed to repeat.  Wedge
vectors are dicts {dominant weight: LaurentPoly}.
"""

from __future__ import annotations

import random
from typing import Callable, Mapping, Optional, Sequence

from .crystal import i_signature
from .laurent import LaurentPoly, ONE, qpow, quantum_factorial
from .tensor import Generator, act_word
from .vector import add_scaled
from .weights import (DEFAULT_FUEL, FuelExhausted, check_dominant, is_dominant,
                      num_zeros, reverse)

Q1, Q2, Q4 = qpow(1), qpow(2), qpow(4)
MQ1, MQ2, MQ4 = -Q1, -Q2, -Q4


def is_bad_pair(a: int, b: int) -> bool:
    return a > b or (a == b and a != 0)


def rewrite_pair(a: int, b: int) -> list[tuple[tuple[int, ...], LaurentPoly]]:
    """Rewrite an adjacent bad pair (a, b) modulo the relations."""
    if a == b:
        return []
    if a + b != 0:
        return [((b, a), MQ2)]
    if a == 1:
        return [((0, 0), MQ1), ((-1, 1), MQ4)]
    return [((a - 1, 1 - a), MQ2), ((1 - a, a - 1), MQ2), ((-a, a), MQ4)]


def word_of(lam: Sequence[int]) -> tuple[int, ...]:
    """The representative word of F_lam."""
    return reverse(lam)


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, fuel):
        self.left = fuel

    def spend(self):
        self.left -= 1
        if self.left < 0:
            raise FuelExhausted("straightening exceeded its fuel")


def _pick_leftmost(bad: list[int], rng) -> int:
    return bad[0]


def _pick_rightmost(bad: list[int], rng) -> int:
    return bad[-1]


def _pick_random(bad: list[int], rng) -> int:
    return rng.choice(bad)


_STRATEGIES: dict[str, Callable] = {
    "leftmost": _pick_leftmost,
    "rightmost": _pick_rightmost,
    "random": _pick_random,
}


def _straighten_uncached(word, pick, rng, fuel: _Fuel, memo: Optional[dict]) -> dict:
    if memo is not None and word in memo:
        return memo[word]
    bad = [k for k in range(len(word) - 1) if is_bad_pair(word[k], word[k + 1])]
    if not bad:
        res = {reverse(word): ONE}
    else:
        fuel.spend()
        k = pick(bad, rng)
        res = {}
        for pair, c in rewrite_pair(word[k], word[k + 1]):
            sub = _straighten_uncached(word[:k] + pair + word[k + 2:], pick, rng, fuel, memo)
            add_scaled(res, sub, c)
    if memo is not None:
        memo[word] = res
    return res


_MEMO: dict = {}


def straighten(word: Sequence[int], strategy: str = "leftmost",
               rng: Optional[random.Random] = None, fuel: int = DEFAULT_FUEL) -> dict:
    """
    Express the image of the pure tensor `word` in the F basis.

    The leftmost strategy shares a process-wide memo; the other strategies
    recompute from scratch so they give genuinely independent derivations.
    """
    word = tuple(word)
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "leftmost":
        if word in _MEMO:
            return dict(_MEMO[word])
        res = _straighten_uncached(word, _pick_leftmost, None, _Fuel(fuel), _MEMO)
        return dict(res)
    if rng is None:
        rng = random.Random(0)
    return _straighten_uncached(word, _STRATEGIES[strategy], rng, _Fuel(fuel), None)


def straighten_vector(vec: Mapping, **kw) -> dict:
    out: dict = {}
    for w, c in vec.items():
        add_scaled(out, straighten(w, **kw), c)
    return out


def Fvec(*lam: int) -> dict:
    """The basis vector F_lam."""
    return {check_dominant(lam): ONE}


def to_tensor(vec: Mapping) -> dict:
    """Lift a wedge vector to the tensor power via representative words."""
    return {word_of(lam): c for lam, c in vec.items()}


def act_wedge(g: Generator, vec: Mapping) -> dict:
    out: dict = {}
    for lam, c in vec.items():
        for w, c2 in act_word(g, word_of(lam)).items():
            add_scaled(out, straighten(w), c * c2)
    return out


def act_wedge_word(gens: Sequence[Generator], vec: Mapping) -> dict:
    """Apply gens[-1] first, as in a product of operators."""
    for g in reversed(gens):
        vec = act_wedge(g, vec)
    return vec


def act_wedge_divided(g: Generator, r: int, vec: Mapping) -> dict:
    if g.kind not in ("E", "F"):
        raise ValueError("divided powers are for E_i and F_i")
    out = dict(vec)
    for _ in range(r):
        out = act_wedge(g, out)
    fact = quantum_factorial(r, g.i)
    return {lam: c.exact_div(fact) for lam, c in out.items()}


def omega(vec: Mapping) -> dict:
    """F_lam -> F_{-w0 lam}, coefficients unchanged."""
    return {tuple(-a for a in reversed(lam)): c for lam, c in vec.items()}


def act_q1_formula(g: Generator, lam: Sequence[int]) -> dict:
    """
    The q = 1 action on F_lam(1) from the signature rule: E_i (resp. F_i)
    moves an entry carrying a -, -+ or -- token (resp. +, -+, ++) down
    (resp. up) by one, keeping only dominant results.  A -+ entry is a 0,
    and it contributes 2 when z(lam) is odd and 0 when it is even.
    """
    lam = check_dominant(lam)
    if g.kind not in ("E", "F"):
        raise ValueError("only E_i and F_i")
    sig = i_signature(lam, g.i)
    z = num_zeros(lam)
    ok = ("-", "-+", "--") if g.kind == "E" else ("+", "-+", "++")
    d = -1 if g.kind == "E" else 1
    out: dict = {}
    for r, tok in enumerate(sig):
        if tok not in ok:
            continue
        mu = list(lam)
        mu[r] += d
        mu = tuple(mu)
        if not is_dominant(mu):
            continue
        b = (1 - (-1) ** z) if tok == "-+" else 1
        if b:
            out[mu] = out.get(mu, 0) + b
    return {k: v for k, v in out.items() if v}
