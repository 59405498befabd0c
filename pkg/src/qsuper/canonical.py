"""
The canonical basis {U_lam} of the q-wedge space, its value at q = 1, the
decomposition numbers, and the E/L transition matrices.

U_lam = F_lam when lam is typical.  Otherwise a reduction step picks a
generator X and a weight mu with U_lam = X U_mu, and the recursion ends at a
typical weight.  Results are memoised per weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping, Sequence

from .crystal import i_signature
from .laurent import LaurentPoly, ONE, ZERO, qpow
from .tensor import Generator, E, F
from .vector import add_into, eval_one
from .wedge import act_wedge, straighten
from .weights import (Weight, atypicality, check_dominant, gl_dominance_leq,
                      is_dominant, lower_block_set, negate_reverse,
                      num_zeros, root_pairing_letter, sort_to_dominant)


class ProcedureError(RuntimeError):
    """The reduction step did not behave as expected (should not happen)."""


def procedure_step(lam: Sequence[int]) -> tuple[Generator, Weight] | None:
    """(X, mu) with U_lam = X U_mu, or None when lam is typical."""
    lam = check_dominant(lam)
    if atypicality(lam) <= 1:
        return None
    n = len(lam)
    pos = {a: k for k, a in enumerate(lam) if a != 0}
    r = next(k for k in range(n) if any(lam[k] + lam[s] == 0 for s in range(k + 1, n)))
    for _ in range(4 * n + 4):
        while r > 0 and lam[r] == lam[r - 1] - 1:
            r -= 1
        s = pos.get(-lam[r] - 1)
        if s is None:
            mu = list(lam)
            mu[r] += 1
            return E(lam[r]), tuple(mu)
        while s < n - 1 and lam[s] == lam[s + 1] + 1:
            s += 1
        r2 = pos.get(1 - lam[s])
        if r2 is None:
            mu = list(lam)
            mu[s] -= 1
            return F(-lam[s]), tuple(mu)
        r = r2
    raise ProcedureError(f"reduction step did not terminate for {lam}")


def procedure_trace(lam: Sequence[int]) -> list[tuple[Generator, Weight]]:
    """The full chain of reduction steps, ending at a typical weight."""
    out = []
    cur = check_dominant(lam)
    while True:
        step = procedure_step(cur)
        if step is None:
            return out
        out.append(step)
        cur = step[1]


@lru_cache(maxsize=None)
def _ucb(lam: Weight) -> tuple:
    step = procedure_step(lam)
    if step is None:
        return ((lam, ONE),)
    x, mu = step
    vec = act_wedge(x, dict(_ucb(mu)))
    if vec.get(lam) != ONE:
        raise ProcedureError(f"leading coefficient of U{lam} is {vec.get(lam)}")
    return tuple(sorted(vec.items()))


def ucb(lam: Sequence[int]) -> dict:
    """U_lam in the F basis: {mu: u_{mu,lam}(q)}."""
    return dict(_ucb(check_dominant(lam)))


def ucb_q1(lam: Sequence[int]) -> dict:
    return eval_one(ucb(lam))


# -- the closed form at q = 1 --------------------------------------------------

def nested_pairs(lam: Weight) -> list[tuple[int, int]]:
    """
    Index pairs (r, s), r < s, with lam_r + lam_s = 0, outermost first;
    zero entries are paired among themselves innermost.
    """
    n = len(lam)
    pos = {a: k for k, a in enumerate(lam)}
    pairs = [(pos[a], pos[-a]) for a in sorted((a for a in lam if a > 0), reverse=True)
             if -a in pos]
    zeros = [k for k in range(n) if lam[k] == 0]
    for t in range(len(zeros) // 2):
        pairs.append((zeros[t], zeros[-1 - t]))
    return pairs


def ucb_q1_closed(lam: Sequence[int]) -> dict:
    """U_lam(1) from the combinatorial rule, without any straightening."""
    lam = check_dominant(lam)
    z = num_zeros(lam)
    pairs = nested_pairs(lam)
    used = {abs(a) for a in lam}
    shifts = []
    for r, _ in pairs:
        a = lam[r]
        if a > 0:
            k = 1
            while a + k in used:
                k += 1
            used.add(a + k)
            shifts.append(k)
        else:
            free = []
            c = 1
            while len(free) < 2:
                if c not in used:
                    free.append(c)
                c += 1
            used.update(free)
            shifts.append(free[0] if z % 2 == 0 else free[1])
    out: dict = {}
    for mask in range(1 << len(pairs)):
        mu = list(lam)
        for t, (r, s) in enumerate(pairs):
            if mask >> t & 1:
                mu[r] += shifts[t]
                mu[s] -= shifts[t]
        nu = sort_to_dominant(mu)
        coeff = 2 ** ((z - num_zeros(nu)) // 2)
        out[nu] = out.get(nu, 0) + coeff
    return out


def q1_column_sum(lam: Sequence[int]) -> int:
    """sum_mu u_{mu,lam}(1) predicted from the atypicality and zero count."""
    lam = check_dominant(lam)
    z = num_zeros(lam)
    return 2 ** ((atypicality(lam) - z) // 2) * 3 ** (z // 2)


# -- decomposition numbers -----------------------------------------------------

def decomposition_column(lam: Sequence[int], method: str = "canonical") -> dict:
    """{mu: d_{mu,lam}}, the multiplicity of L(lam) in E(mu), i.e. U_lam(1)."""
    if method == "canonical":
        return ucb_q1(lam)
    if method == "closed":
        return ucb_q1_closed(lam)
    raise ValueError(f"unknown method {method!r}")


def decomposition_row(mu: Sequence[int], method: str = "canonical") -> dict:
    """{lam: d_{mu,lam}}: the composition multiplicities of E(mu)."""
    mu = check_dominant(mu)
    out = {}
    for lam in lower_block_set(mu):
        d = decomposition_column(lam, method).get(mu, 0)
        if d:
            out[lam] = d
    return out


# -- triangular matrices -------------------------------------------------------

@dataclass
class BasisMatrix:
    """
    A unitriangular matrix over a finite set of dominant weights.  Entry
    (row, col) is the coefficient of basis vector `col` of the target basis
    in the expansion of basis vector `row`; nonzero only for col <= row in
    dominance order.
    """

    index: list
    entries: dict = field(default_factory=dict)

    def get(self, row, col, default=0):
        return self.entries.get((row, col), default)

    def row(self, row) -> dict:
        return {c: v for (r, c), v in self.entries.items() if r == row}

    def inverse(self, zero=0) -> "BasisMatrix":
        order = sorted(self.index)  # lexicographic order extends dominance
        one = ONE if isinstance(zero, LaurentPoly) else 1
        out: dict = {}
        for b in order:
            col = {b: one}
            for a in order:
                if a <= b:
                    continue
                acc = zero
                for c, v in col.items():
                    m = self.entries.get((a, c))
                    if m:
                        acc = acc - m * v
                if acc:
                    col[a] = acc
            for a, v in col.items():
                out[(a, b)] = v
        return BasisMatrix(list(order), out)

    def is_unitriangular(self) -> bool:
        for a in self.index:
            if self.entries.get((a, a)) not in (1, ONE):
                return False
        return all(gl_dominance_leq(c, r) for (r, c), v in self.entries.items() if v)


def decomposition_matrix(lam0: Sequence[int], method: str = "canonical") -> BasisMatrix:
    """d restricted to the lower block set of lam0 (rows E(mu), columns L(lam))."""
    idx = lower_block_set(lam0)
    ent = {}
    for lam in idx:
        for mu, d in decomposition_column(lam, method).items():
            if mu in idx:
                ent[(mu, lam)] = d
    return BasisMatrix(idx, ent)


def e_l_matrices(lam0: Sequence[int]) -> tuple[BasisMatrix, BasisMatrix]:
    """
    (E in L, L in E) over the lower block set of lam0, at generic q.
    E_lam = sum_mu u_{-w0 lam, -w0 mu}(q^-1) L_mu.
    """
    idx = lower_block_set(lam0)
    ent = {}
    for mu in idx:
        u = ucb(negate_reverse(mu))
        for lam in idx:
            c = u.get(negate_reverse(lam))
            if c:
                ent[(lam, mu)] = c.bar()
    e_in_l = BasisMatrix(idx, ent)
    return e_in_l, e_in_l.inverse(zero=ZERO)


# -- action on the E basis -----------------------------------------------------

def _c_factor(z: int) -> LaurentPoly:
    """(q + q^-1) * sum_{s=0}^{z} (-q^-2)^s."""
    s = LaurentPoly({-2 * k: (-1) ** k for k in range(z + 1)})
    return (qpow(1) + qpow(-1)) * s


def act_on_E(g: Generator, vec: Mapping) -> dict:
    """Action of E_i / F_i on a combination of the standard modules' classes E_lam."""
    if g.kind not in ("E", "F"):
        raise ValueError("only E_i and F_i act through the signature rule")
    i = g.i
    out: dict = {}
    for lam, coeff in vec.items():
        lam = check_dominant(lam)
        n = len(lam)
        sig = i_signature(lam, i)
        z = num_zeros(lam)
        pair = [root_pairing_letter(i, a) for a in lam]
        for r in range(n):
            tok = sig[r]
            if g.kind == "E":
                if tok not in ("-", "-+", "--"):
                    continue
                d, expo = -1, -sum(pair[r + 1:])
            else:
                if tok not in ("+", "-+", "++"):
                    continue
                d, expo = 1, sum(pair[:r])
            mu = list(lam)
            mu[r] += d
            mu = tuple(mu)
            if not is_dominant(mu):
                continue
            c = _c_factor(z) if tok in ("--", "++") else ONE
            add_into(out, mu, coeff * c.shift(expo))
    return out


def e_in_m_truncated(lam: Sequence[int], bound: int) -> dict:
    """
    Coefficients of E_lam in the M basis, for all mu in Z^n with
    |mu_r| <= bound: a_{-w0 lam, -w0 mu}(q^-1), where a_{kappa,nu} is the
    coefficient of F_kappa in the image of the word of N_{w0 nu}.
    """
    lam = check_dominant(lam)
    target = negate_reverse(lam)
    out = {}
    for mu in itertools.product(range(-bound, bound + 1), repeat=len(lam)):
        c = straighten(tuple(-a for a in mu)).get(target)
        if c:
            out[mu] = c.bar()
    return out
