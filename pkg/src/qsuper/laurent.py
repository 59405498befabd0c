"""
Sparse Laurent polynomials in one variable q with integer coefficients.

A polynomial is stored as a dict {exponent: coefficient} with no zero
coefficients.  Instances are treated as immutable so they can be shared
between cached results.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping


class InexactDivision(ArithmeticError):
    """Raised when a Laurent polynomial division leaves a remainder."""


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms} if terms else {}
        self._terms = {int(e): int(c) for e, c in terms.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "LaurentPoly":
        out: dict[int, int] = {}
        for e, c in pairs:
            out[e] = out.get(e, 0) + c
        return cls(out)

    # -- basic access -------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def eval_one(self) -> int:
        """Specialise at q = 1."""
        return sum(self._terms.values())

    def evaluate(self, value):
        return sum(c * value ** e for e, c in self._terms.items())

    def bar(self) -> "LaurentPoly":
        """The ring involution q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def is_bar_invariant(self) -> bool:
        return all(self._terms.get(-e, 0) == c for e, c in self._terms.items())

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def subs_power(self, k: int) -> "LaurentPoly":
        """Substitute q -> q^k."""
        return LaurentPoly({e * k: c for e, c in self._terms.items()})

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise InexactDivision("only monomials are invertible")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise InexactDivision("only unit monomials are invertible")
            return LaurentPoly({e * k: c ** (-k)})
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def exact_div(self, other) -> "LaurentPoly":
        """Divide exactly; raises InexactDivision if a remainder is left."""
        other = self._coerce(other)
        if other is NotImplemented or other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        top = other.max_degree()
        lead = other._terms[top]
        low = self.min_degree() - other.min_degree()
        rem = dict(self._terms)
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            k = e - top
            if k < low or c % lead:
                raise InexactDivision(f"{self} is not divisible by {other}")
            qc = c // lead
            quot[k] = qc
            for e2, c2 in other._terms.items():
                v = rem.get(e2 + k, 0) - qc * c2
                if v:
                    rem[e2 + k] = v
                else:
                    rem.pop(e2 + k, None)
        return LaurentPoly(quot)

    # -- formatting ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e in sorted(self._terms):
            c = self._terms[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({self._terms!r})"

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in sorted(self._terms.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj.items()})


_TERM = re.compile(r"([+-])(?:(\d+)(?:\*q(?:\^(-?\d+))?)?|q(?:\^(-?\d+))?)")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the text form produced by str(), e.g. "q - 2*q^3 + 1"."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    if s[0] not in "+-":
        s = "+" + s
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign, num, e1, e2 = m.groups()
        if num is not None:
            c = int(num)
            has_q = m.group(0).endswith("q") or "*q" in m.group(0)
            e = (int(e1) if e1 is not None else 1) if has_q else 0
        else:
            c = 1
            e = int(e2) if e2 is not None else 1
        out[e] = out.get(e, 0) + (-c if sign == "-" else c)
        pos = m.end()
    return LaurentPoly(out)


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
q = LaurentPoly({1: 1})


def qpow(k: int) -> LaurentPoly:
    return LaurentPoly({k: 1})


@lru_cache(maxsize=None)
def quantum_int(m: int, i: int = 0) -> LaurentPoly:
    """[m]_i = (q_i^m - q_i^-m) / (q_i - q_i^-1) with q_0 = q, q_i = q^2 otherwise."""
    if m < 0:
        raise ValueError("quantum integers are defined here for m >= 0")
    step = 1 if i == 0 else 2
    return LaurentPoly({step * (m - 1 - 2 * k): 1 for k in range(m)})


@lru_cache(maxsize=None)
def quantum_factorial(m: int, i: int = 0) -> LaurentPoly:
    if m < 0:
        raise ValueError("quantum factorials are defined for m >= 0")
    out = ONE
    for k in range(1, m + 1):
        out = out * quantum_int(k, i)
    return out


def bar_invariant_lift(p: LaurentPoly) -> LaurentPoly:
    """
    The unique bar-invariant g with g - p in q Z[q].

    Only the coefficients of p at exponents <= 0 matter: they are kept and
    mirrored to the matching positive exponents.
    """
    out: dict[int, int] = {}
    for e, c in p.items():
        if e < 0:
            out[e] = c
            out[-e] = c
        elif e == 0:
            out[0] = c
    return LaurentPoly(out)
