"""
Integral weights in Z^n and the combinatorics attached to them.

A weight is a plain tuple of ints.  The letter a in Z stands for the basis
vector v_a of the natural module, whose weight is eps_a, with eps_0 = 0 and
eps_{-a} = -eps_a.  Weights of the quantum group itself (linear combinations
of the eps_i, i >= 1) are stored as BWeight, a sorted tuple of (i, coeff)
pairs with nonzero coefficients.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Weight = tuple[int, ...]


class WeightError(ValueError):
    """Malformed or non-dominant weight."""


class FuelExhausted(RuntimeError):
    """A bounded search ran out of fuel before reaching a verdict."""


DEFAULT_FUEL = 10 ** 6


# -- parsing / formatting ------------------------------------------------------

def parse_weight(text: str) -> Weight:
    text = text.strip()
    if text.startswith(("(", "[")) and text.endswith((")", "]")):
        text = text[1:-1]
    if not text:
        raise WeightError("empty weight")
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise WeightError(f"malformed weight {text!r}") from None


def format_weight(lam: Sequence[int]) -> str:
    return ",".join(str(a) for a in lam)


# -- dominance and statistics --------------------------------------------------

def is_dominant(lam: Sequence[int]) -> bool:
    """lam_1 >= ... >= lam_n, with equality allowed only between zeros."""
    for a, b in zip(lam, lam[1:]):
        if a < b or (a == b and a != 0):
            return False
    return True


def check_dominant(lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    if not lam:
        raise WeightError("weights must have at least one entry")
    if not is_dominant(lam):
        raise WeightError(f"{lam} is not dominant")
    return lam


def sort_to_dominant(lam: Sequence[int]) -> Weight:
    out = tuple(sorted(lam, reverse=True))
    if not is_dominant(out):
        raise WeightError(f"{tuple(lam)} has a repeated nonzero entry")
    return out


def reverse(lam: Sequence[int]) -> Weight:
    """The longest Weyl group element w0 acting on positions."""
    return tuple(reversed(lam))


def negate_reverse(lam: Sequence[int]) -> Weight:
    """-w0 lam, which preserves dominance."""
    return tuple(-a for a in reversed(lam))


@dataclass(frozen=True)
class WeightStats:
    n: int
    zeros: int
    nonzeros: int
    atypicality: int
    is_dominant: bool

    @property
    def is_typical(self) -> bool:
        return self.atypicality <= 1


def num_zeros(lam: Sequence[int]) -> int:
    return sum(1 for a in lam if a == 0)


def atypicality(lam: Sequence[int]) -> int:
    """n minus the number of eps_i (with multiplicity) left in wt(lam)."""
    return len(lam) - sum(abs(c) for _, c in wt(lam))


def stats(lam: Sequence[int]) -> WeightStats:
    z = num_zeros(lam)
    return WeightStats(len(lam), z, len(lam) - z, atypicality(lam), is_dominant(lam))


def is_typical(lam: Sequence[int]) -> bool:
    return atypicality(lam) <= 1


# -- weights of the quantum group ---------------------------------------------

BWeight = tuple[tuple[int, int], ...]


def bweight(coeffs: dict[int, int]) -> BWeight:
    return tuple(sorted((i, c) for i, c in coeffs.items() if c))


def _accumulate(letters: Iterable[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for a in letters:
        if a:
            i = abs(a)
            out[i] = out.get(i, 0) + (1 if a > 0 else -1)
    return out


def wt(lam: Sequence[int]) -> BWeight:
    """sum_r eps_{lam_r}."""
    return bweight(_accumulate(lam))


def wt_tail(lam: Sequence[int], r: int) -> BWeight:
    """eps_{lam_r} + ... + eps_{lam_n}, with r counted from 1."""
    return bweight(_accumulate(lam[r - 1:]))


def bweight_add(a: BWeight, b: BWeight, sign: int = 1) -> BWeight:
    out = dict(a)
    for i, c in b:
        out[i] = out.get(i, 0) + sign * c
    return bweight(out)


def pairing(a: BWeight, b: BWeight) -> int:
    """The form with (eps_i, eps_j) = 2 delta_ij."""
    db = dict(b)
    return 2 * sum(c * db.get(i, 0) for i, c in a)


def simple_root(i: int) -> BWeight:
    if i < 0:
        raise ValueError("simple roots are indexed by i >= 0")
    if i == 0:
        return ((1, -1),)
    return ((i, 1), (i + 1, -1))


def letter_weight(a: int) -> BWeight:
    return wt((a,))


def root_pairing_letter(i: int, a: int) -> int:
    """(alpha_i, eps_a): the exponent of q in the action of K_i on v_a."""
    if i == 0:
        return 2 * ((a == -1) - (a == 1))
    return 2 * ((a == i) - (a == i + 1) + (a == -i - 1) - (a == -i))


def dominance_leq_P(beta: BWeight, gamma: BWeight) -> bool:
    """
    beta <= gamma iff gamma - beta is a nonnegative integer combination of
    simple roots.  Writing d = gamma - beta = sum d_j eps_j, the coefficient
    of alpha_j is forced to be -(d_{j+1} + d_{j+2} + ...), so the test is
    that every tail sum of d is <= 0.
    """
    d = dict(bweight_add(gamma, beta, -1))
    if not d:
        return True
    top = max(d)
    tail = 0
    for j in range(top, 0, -1):
        tail += d.get(j, 0)
        if tail > 0:
            return False
    return True


def bruhat_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam below mu: wt_r(lam) <= wt_r(mu) for all r, with equality at r = 1."""
    if len(lam) != len(mu):
        raise WeightError("weights of different lengths")
    if wt(lam) != wt(mu):
        return False
    return all(dominance_leq_P(wt_tail(lam, r), wt_tail(mu, r))
               for r in range(2, len(lam) + 1))


def gl_dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """lam <= mu in the usual dominance order on Z^n."""
    if len(lam) != len(mu):
        raise WeightError("weights of different lengths")
    if sum(lam) != sum(mu):
        return False
    acc = 0
    for a, b in zip(lam, mu):
        acc += b - a
        if acc < 0:
            return False
    return True


def same_block(lam: Sequence[int], mu: Sequence[int]) -> bool:
    return len(lam) == len(mu) and wt(lam) == wt(mu)


def key(lam: Sequence[int]) -> int:
    """sum_r r * lam_r; strictly increases along every down-move."""
    return sum(r * a for r, a in enumerate(lam, 1))


# -- the down-moves ------------------------------------------------------------

def down_moves(lam: Weight) -> Iterable[Weight]:
    n = len(lam)
    for r in range(n):
        for s in range(r + 1, n):
            a, b = lam[r], lam[s]
            if a > b:
                mu = list(lam)
                mu[r], mu[s] = b, a
                yield tuple(mu)
            if a + b == 0:
                mu = list(lam)
                mu[r], mu[s] = a - 1, b + 1
                yield tuple(mu)


def downarrow_reachable(lam: Sequence[int], mu: Sequence[int],
                        fuel: int = DEFAULT_FUEL) -> bool:
    """
    Whether mu is reachable from lam by a finite sequence of down-moves.

    Every move raises key() by at least one, so states with key above key(mu)
    are pruned and the search is finite.  `fuel` bounds the number of states
    visited; running out raises FuelExhausted rather than answering.
    """
    lam, mu = tuple(lam), tuple(mu)
    if len(lam) != len(mu):
        raise WeightError("weights of different lengths")
    if wt(lam) != wt(mu):
        return False
    target = key(mu)
    seen = {lam}
    queue = deque([lam])
    while queue:
        cur = queue.popleft()
        if cur == mu:
            return True
        fuel -= 1
        if fuel < 0:
            raise FuelExhausted("down-move search exceeded its fuel")
        for nxt in down_moves(cur):
            if nxt not in seen and key(nxt) <= target:
                seen.add(nxt)
                queue.append(nxt)
    return False


# -- blocks --------------------------------------------------------------------

def lower_block_set(lam: Sequence[int]) -> list[Weight]:
    """
    Dominant mu with wt(mu) = wt(lam) and mu <= lam in dominance order,
    sorted lexicographically (a linear extension of dominance).
    """
    lam = check_dominant(lam)
    n = len(lam)
    lo, hi = lam[-1], lam[0]
    target_wt = wt(lam)
    total = sum(lam)
    prefix = []
    acc = 0
    for a in lam:
        acc += a
        prefix.append(acc)
    out: list[Weight] = []

    def rec(cur: list[int], s: int):
        k = len(cur)
        if k == n:
            if s == total and wt(cur) == target_wt:
                out.append(tuple(cur))
            return
        top = cur[-1] if cur else hi
        for a in range(top, lo - 1, -1):
            if cur and a == cur[-1] and a != 0:
                continue
            ns = s + a
            if ns > prefix[k]:
                continue
            rest = n - k - 1
            # the remaining entries are at most a each, and at least lo
            if ns + rest * a < total or ns + rest * lo > total:
                continue
            cur.append(a)
            rec(cur, ns)
            cur.pop()

    rec([], 0)
    out.sort()
    return out


def dominant_weights(n: int, lo: int, hi: int) -> list[Weight]:
    """All dominant weights of length n with entries in [lo, hi]."""
    out: list[Weight] = []

    def rec(cur: list[int]):
        if len(cur) == n:
            out.append(tuple(cur))
            return
        top = cur[-1] if cur else hi
        for a in range(top, lo - 1, -1):
            if cur and a == cur[-1] and a != 0:
                continue
            cur.append(a)
            rec(cur)
            cur.pop()

    rec([])
    return out
