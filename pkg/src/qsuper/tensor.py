"""
The natural module V with basis v_a (a in Z), its tensor powers, and the
explicit n = 2 bar involution together with its canonical and dual
canonical bases.

Vectors in a tensor power are dicts {word: LaurentPoly} where the word
(a_1, ..., a_n) stands for N = v_{a_1} (x) ... (x) v_{a_n}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .laurent import LaurentPoly, ONE, ZERO, qpow, quantum_factorial
from .vector import add_into, add_scaled, apply_linear
from .weights import WeightError, key, root_pairing_letter

QQ = qpow(1) + qpow(-1)


@dataclass(frozen=True)
class Generator:
    """E_i, F_i, K_i or K_i^-1."""

    kind: str
    i: int

    def __post_init__(self):
        if self.kind not in ("E", "F", "K", "Kinv"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.i < 0:
            raise ValueError("generator index must be >= 0")

    def __str__(self):
        return f"K{self.i}^-1" if self.kind == "Kinv" else f"{self.kind}{self.i}"


def E(i: int) -> Generator:
    return Generator("E", i)


def F(i: int) -> Generator:
    return Generator("F", i)


def K(i: int, power: int = 1) -> Generator:
    return Generator("K" if power > 0 else "Kinv", i)


_GEN = re.compile(r"^([EFK])(\d+)(\^-1)?$")


def parse_generator(text: str) -> Generator:
    m = _GEN.match(text.strip())
    if not m or (m.group(3) and m.group(1) != "K"):
        raise ValueError(f"malformed generator {text!r}")
    kind = "Kinv" if m.group(3) else m.group(1)
    return Generator(kind, int(m.group(2)))


def act_letter(g: Generator, a: int) -> list[tuple[int, LaurentPoly]]:
    """g v_a as a list of (letter, coefficient)."""
    i = g.i
    if g.kind in ("K", "Kinv"):
        e = root_pairing_letter(i, a)
        return [(a, qpow(e if g.kind == "K" else -e))]
    if g.kind == "E":
        if i == 0:
            if a == 0:
                return [(-1, QQ)]
            if a == 1:
                return [(0, ONE)]
            return []
        if a == i + 1:
            return [(i, ONE)]
        if a == -i:
            return [(-i - 1, ONE)]
        return []
    if i == 0:
        if a == 0:
            return [(1, QQ)]
        if a == -1:
            return [(0, ONE)]
        return []
    if a == i:
        return [(i + 1, ONE)]
    if a == -i - 1:
        return [(-i, ONE)]
    return []


def act_word(g: Generator, word: tuple[int, ...]) -> dict:
    """
    Act on a single pure tensor through the coproduct
    E -> 1 (x) E + E (x) K^-1,  F -> K (x) F + F (x) 1,  K -> K (x) K.
    """
    i = g.i
    out: dict = {}
    if g.kind in ("K", "Kinv"):
        s = sum(root_pairing_letter(i, a) for a in word)
        return {word: qpow(s if g.kind == "K" else -s)}
    n = len(word)
    pair = [root_pairing_letter(i, a) for a in word]
    if g.kind == "E":
        # K^-1 acts on the slots to the right of the acted-on slot
        suffix = [0] * (n + 1)
        for r in range(n - 1, -1, -1):
            suffix[r] = suffix[r + 1] + pair[r]
        for r in range(n):
            for b, c in act_letter(g, word[r]):
                add_into(out, word[:r] + (b,) + word[r + 1:], c.shift(-suffix[r + 1]))
    else:
        prefix = 0
        for r in range(n):
            for b, c in act_letter(g, word[r]):
                add_into(out, word[:r] + (b,) + word[r + 1:], c.shift(prefix))
            prefix += pair[r]
    return out


def act_tensor(g: Generator, vec: Mapping) -> dict:
    return apply_linear(vec, lambda w: act_word(g, w))


def act_tensor_divided(g: Generator, r: int, vec: Mapping) -> dict:
    """The divided power g^r / [r]_i! (g = E_i or F_i)."""
    if g.kind not in ("E", "F"):
        raise ValueError("divided powers are for E_i and F_i")
    out = dict(vec)
    for _ in range(r):
        out = act_tensor(g, out)
    fact = quantum_factorial(r, g.i)
    return {w: c.exact_div(fact) for w, c in out.items()}


def N(*letters: int) -> dict:
    return {tuple(letters): ONE}


# -- the bar involution on the completed second tensor power -------------------

def _bar_n2_raw(a: int, b: int, cutoff: int) -> dict:
    """bar(N_(a,b)) restricted to words of key < cutoff."""
    qq = qpow(2) - qpow(-2)
    out: dict = {}

    def put(w, c):
        if key(w) < cutoff:
            add_into(out, w, c)

    put((a, b), ONE)
    if a + b != 0:
        if a > b:
            put((b, a), qq)
        return out
    if a == 0:
        # tail over (c, -c) with c < 0; key(c, -c) = -c
        for c in range(-1, -cutoff, -1):
            put((c, -c), QQ * qq * _signed_pow(c + 1))
        return out
    if a < 0:
        s = -a
        for c in range(s + 1, cutoff):
            put((-c, c), qq * _signed_pow(s + 1 - c))
        return out
    put((-a, a), qpow(2) * qq)
    for c in range(1, a):
        put((c, -c), qq * _signed_pow(c + 1 - a))
    put((0, 0), (qpow(1) - qpow(-1)) * _signed_pow(1 - a))
    for c in range(-1, -cutoff, -1):
        put((c, -c), qpow(2) * qq * _signed_pow(c + 1 - a))
    return out


def _signed_pow(k: int) -> LaurentPoly:
    """(-q^2)^k for any integer k."""
    return LaurentPoly({2 * k: (-1) ** (k % 2)})


def bar_n2(lam, cutoff: int = 20) -> dict:
    """
    bar(N_lam) for lam in Z^2, truncated to the words mu with
    key(mu) = mu_1 + 2 mu_2 < cutoff.  Every term of bar(N_lam) has key at
    least key(lam), so truncation commutes with applying bar again.
    """
    lam = tuple(lam)
    if len(lam) != 2:
        raise WeightError("bar_n2 takes a weight of length 2")
    return _bar_n2_raw(lam[0], lam[1], cutoff)


def bar_vector_n2(vec: Mapping, cutoff: int = 20) -> dict:
    """Antilinear extension of bar_n2 to a (truncated) vector."""
    out: dict = {}
    for w, c in vec.items():
        if key(w) < cutoff:
            add_scaled(out, bar_n2(w, cutoff), c.bar())
    return out


def truncate(vec: Mapping, cutoff: int) -> dict:
    return {w: c for w, c in vec.items() if key(w) < cutoff}


def t2_closed(lam) -> dict:
    """The bar-invariant basis vector T_lam of the second tensor power."""
    a, b = lam
    q2, q4 = qpow(2), qpow(4)
    out: dict = {}
    add_into(out, (a, b), ONE)
    if a + b != 0:
        if a > b:
            add_into(out, (b, a), q2)
    elif a == 0:
        add_into(out, (-1, 1), qpow(1) + qpow(3))
    elif a < 0:
        s = -a
        add_into(out, (-s - 1, s + 1), q2)
    elif a == 1:
        add_into(out, (0, 0), qpow(1))
        add_into(out, (-1, 1), q4)
    else:
        add_into(out, (a - 1, 1 - a), q2)
        add_into(out, (1 - a, a - 1), q2)
        add_into(out, (-a, a), q4)
    return out


def m2_in_L(lam) -> dict:
    """
    M_lam in the dual canonical basis L of the second tensor power:
    the coefficient of L_mu is t_{-lam,-mu}(q^-1), where t_{nu,kappa} is the
    coefficient of N_nu in T_kappa.
    """
    lam = tuple(lam)
    if len(lam) != 2:
        raise WeightError("m2_in_L takes a weight of length 2")
    target = (-lam[0], -lam[1])
    m = max(abs(x) for x in lam) + 1
    out: dict = {}
    for x in range(-m, m + 1):
        for y in range(-m, m + 1):
            c = t2_closed((x, y)).get(target)
            if c:
                add_into(out, (-x, -y), c.bar())
    return out


def kernel_relations_n2(bound: int) -> list[dict]:
    """The quadratic relations spanning the kernel of V(x)V -> wedge^2, |a| <= bound."""
    q2, q4 = qpow(2), qpow(4)
    out = []
    for a in range(-bound, bound + 1):
        if a != 0:
            out.append({(a, a): ONE})
        for b in range(-bound, a):
            if a + b != 0:
                out.append({(a, b): ONE, (b, a): q2})
    for a in range(2, bound + 1):
        rel: dict = {(a, -a): ONE, (-a, a): q4}
        add_into(rel, (a - 1, 1 - a), q2)
        add_into(rel, (1 - a, a - 1), q2)
        out.append(rel)
    out.append({(1, -1): ONE, (0, 0): qpow(1), (-1, 1): q4})
    return out
