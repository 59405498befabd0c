"""
Characters as Laurent polynomials in x_1, ..., x_n.

SymFunc stores {exponent tuple: integer coefficient}.  Hall-Littlewood
functions are computed by clearing the Vandermonde denominator, summing over
coset representatives, and dividing back out one linear factor at a time.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Mapping, Sequence

from .canonical import decomposition_matrix
from .weights import (WeightError, check_dominant, is_dominant, lower_block_set,
                      num_zeros)


class SymFunc:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, int] | None = None):
        self.n = n
        self.terms = {tuple(e): c for e, c in (terms or {}).items() if c}
        for e in self.terms:
            if len(e) != n:
                raise ValueError("exponent of the wrong length")

    @classmethod
    def one(cls, n: int) -> "SymFunc":
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> "SymFunc":
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def power_sum(cls, n: int) -> "SymFunc":
        """x_1 + ... + x_n."""
        return cls(n, {tuple(int(j == i) for j in range(n)): 1 for i in range(n)})

    def _check(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("characters in different numbers of variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SymFunc(self.n, out)

    def __neg__(self):
        return SymFunc(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymFunc(self.n, {e: c * other for e, c in self.terms.items()})
        other = self._check(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SymFunc(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def permute(self, w: Sequence[int]) -> "SymFunc":
        """Substitute x_i -> x_{w(i)} (0-based w)."""
        out = {}
        for e, c in self.terms.items():
            f = [0] * self.n
            for i, a in enumerate(e):
                f[w[i]] += a
            out[tuple(f)] = c
        return SymFunc(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.terms.get(tuple(e[i] for i in w)) == c
                   for e, c in self.terms.items()
                   for w in itertools.permutations(range(self.n)))

    def coefficients_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def eval_at_ones(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Graded-lex: total degree descending, then exponent descending."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "·".join(f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}"
                            for i, a in enumerate(e) if a)
            a = abs(c)
            body = (f"{a}·{mono}" if a != 1 else mono) if mono else str(a)
            if k == 0:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def __repr__(self):
        return f"SymFunc({self.n}, {self.terms!r})"

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, n: int, obj) -> "SymFunc":
        return cls(n, {tuple(t["exp"]): int(t["coeff"]) for t in obj})


class InexactCharacterDivision(ArithmeticError):
    pass


def _divide_linear(p: dict, i: int, j: int, n: int) -> dict:
    """Exact division of a Laurent polynomial by (x_i - x_j)."""
    if not p:
        return {}
    rem = dict(p)
    low = min(e[i] for e in rem)
    quot: dict = {}
    while rem:
        e = max(rem, key=lambda t: (t[i], t))
        c = rem[e]
        if e[i] <= low:
            raise InexactCharacterDivision(f"not divisible by x{i + 1} - x{j + 1}")
        f = list(e)
        f[i] -= 1
        f = tuple(f)
        quot[f] = quot.get(f, 0) + c
        del rem[e]
        g = list(f)
        g[j] += 1
        g = tuple(g)
        v = rem.get(g, 0) + c
        if v:
            rem[g] = v
        else:
            rem.pop(g, None)
    return {e: c for e, c in quot.items() if c}


def _mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _perm_sign(w) -> int:
    s = 1
    w = list(w)
    for i in range(len(w)):
        while w[i] != i:
            j = w[i]
            w[i], w[j] = w[j], w[i]
            s = -s
    return s


@lru_cache(maxsize=None)
def _hall_littlewood(lam: tuple, t: int) -> SymFunc:
    n = len(lam)
    unit = [tuple(int(k == m) for k in range(n)) for m in range(n)]

    def lin(i, j, ci, cj):
        return {e: c for e, c in ((unit[i], ci), (unit[j], cj)) if c}

    # x^lam prod_{lam_i > lam_j} (x_i - t x_j) prod_{i<j, lam_i = lam_j} (x_i - x_j)
    base = {lam: 1}
    for i in range(n):
        for j in range(i + 1, n):
            if lam[i] > lam[j]:
                base = _mul(base, lin(i, j, 1, -t))
            else:
                base = _mul(base, lin(i, j, 1, -1))
    base_f = SymFunc(n, base)
    total = SymFunc(n)
    seen = set()
    for w in itertools.permutations(range(n)):
        img = [0] * n
        for i in range(n):
            img[w[i]] = lam[i]
        img = tuple(img)
        if img in seen:
            continue
        seen.add(img)
        total = total + base_f.permute(w) * _perm_sign(w)
    p = total.terms
    for i in range(n):
        for j in range(i + 1, n):
            p = _divide_linear(p, i, j, n)
    return SymFunc(n, p)


def hall_littlewood(lam: Sequence[int], t: int) -> SymFunc:
    """
    P_lam(x; t) = sum over w in S_n / S_lam of
    w( x^lam prod_{i<j, lam_i > lam_j} (x_i - t x_j) / (x_i - x_j) ),
    for weakly decreasing lam.
    """
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise WeightError("Hall-Littlewood functions need weakly decreasing weights")
    return _hall_littlewood(lam, t)


def schur_p(lam: Sequence[int]) -> SymFunc:
    """The Schur P-function: the Hall-Littlewood function at t = -1."""
    return hall_littlewood(check_dominant(lam), -1)


def ch_euler(lam: Sequence[int]) -> SymFunc:
    """ch E(lam) = 2^floor((h + 1) / 2) p_lam, h the number of nonzero entries."""
    lam = check_dominant(lam)
    h = len(lam) - num_zeros(lam)
    return schur_p(lam) * 2 ** ((h + 1) // 2)


def ch_irreducible(lam: Sequence[int], method: str = "canonical") -> SymFunc:
    """ch L(lam) = sum_nu (d^-1)_{lam,nu} ch E(nu) over the lower block set."""
    lam = check_dominant(lam)
    dinv = decomposition_matrix(lam, method).inverse()
    out = SymFunc(len(lam))
    for nu in lower_block_set(lam):
        c = dinv.get(lam, nu)
        if c:
            out = out + ch_euler(nu) * c
    return out


def ch_euler_from_irreducibles(mu: Sequence[int], method: str = "canonical") -> SymFunc:
    """sum_lam d_{mu,lam} ch L(lam); must agree with ch_euler(mu)."""
    mu = check_dominant(mu)
    d = decomposition_matrix(mu, method)
    out = SymFunc(len(mu))
    for lam in lower_block_set(mu):
        c = d.get(mu, lam)
        if c:
            out = out + ch_irreducible(lam, method) * c
    return out


def ch_verma_truncated(lam: Sequence[int], depth: int) -> SymFunc:
    """
    2^floor((h + 1) / 2) x^lam prod_{i<j} (1 + x_i^-1 x_j) / (1 - x_i^-1 x_j),
    keeping the monomials x^f with sum_r r (f_r - lam_r) <= depth.  Each
    factor x_i^-1 x_j raises that height by j - i >= 1, so the cut is a
    projection on monomials and agrees with the plain degree cut for n = 2.
    """
    lam = tuple(lam)
    n = len(lam)
    h = n - num_zeros(lam)
    # series[d] = {exponent: coeff} of height exactly d
    series = [dict() for _ in range(depth + 1)]
    series[0][(0,) * n] = 1
    for i in range(n):
        for j in range(i + 1, n):
            w = j - i
            new = [dict() for _ in range(depth + 1)]
            for d0 in range(depth + 1):
                for e, c in series[d0].items():
                    k = 0
                    while d0 + k * w <= depth:
                        f = list(e)
                        f[i] -= k
                        f[j] += k
                        f = tuple(f)
                        bucket = new[d0 + k * w]
                        bucket[f] = bucket.get(f, 0) + c * (1 if k == 0 else 2)
                        k += 1
            series = new
    out: dict = {}
    for part in series:
        for e, c in part.items():
            f = tuple(a + b for a, b in zip(e, lam))
            out[f] = out.get(f, 0) + c
    return SymFunc(n, out) * 2 ** ((h + 1) // 2)


def pieri_terms(lam: Sequence[int]) -> list[tuple]:
    """r-shifts kept by the multiplication rule (x_1 + ... + x_n) p_lam."""
    lam = check_dominant(lam)
    z = num_zeros(lam)
    out = []
    for r in range(len(lam)):
        mu = list(lam)
        mu[r] += 1
        mu = tuple(mu)
        if not is_dominant(mu):
            continue
        if lam[r] == -1 and z % 2 == 1:
            continue
        out.append(mu)
    return out


def pieri_check(lam: Sequence[int]) -> tuple[SymFunc, SymFunc]:
    """(lhs, rhs) of (x_1 + ... + x_n) p_lam = sum_r p_{lam + delta_r}."""
    lam = check_dominant(lam)
    lhs = SymFunc.power_sum(len(lam)) * schur_p(lam)
    rhs = SymFunc(len(lam))
    for mu in pieri_terms(lam):
        rhs = rhs + schur_p(mu)
    return lhs, rhs


def pieri_general(lam: Sequence[int], t: int) -> SymFunc:
    """
    sum_r (1 + t + ... + t^{m_r}) P_{lam + delta_r}(t) over r with lam_r < lam_{r-1},
    m_r the number of entries equal to lam_r + 1.  Equals (x_1 + ... + x_n) P_lam(t).
    """
    lam = tuple(lam)
    n = len(lam)
    out = SymFunc(n)
    for r in range(n):
        if r > 0 and lam[r] == lam[r - 1]:
            continue
        mu = list(lam)
        mu[r] += 1
        m = sum(1 for a in lam if a == lam[r] + 1)
        out = out + hall_littlewood(mu, t) * sum(t ** k for k in range(m + 1))
    return out
