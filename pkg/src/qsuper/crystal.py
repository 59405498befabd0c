"""
Crystal operators on Z^n and on dominant weights.

For each node i >= 0 every entry of a weight gets a token; i > 0 uses
single signs, i = 0 uses the two-letter tokens "++", "-+", "--".  The
primed operators reduce the token word by cancelling "+-" pairs, the dual
operators by cancelling "-+" pairs after flipping each "-+" token to "+-".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .weights import Weight, check_dominant, reverse


def token(i: int, a: int) -> str:
    if i == 0:
        return {-1: "++", 0: "-+", 1: "--"}.get(a, "0")
    if a in (i, -i - 1):
        return "+"
    if a in (i + 1, -i):
        return "-"
    return "0"


def i_signature(lam: Sequence[int], i: int) -> tuple[str, ...]:
    if i < 0:
        raise ValueError("crystal nodes are i >= 0")
    return tuple(token(i, a) for a in lam)


def _letters(sig, flip_mixed: bool = False):
    out = []
    for r, tok in enumerate(sig):
        if tok == "0":
            continue
        if flip_mixed and tok == "-+":
            tok = "+-"
        out.extend((r, ch) for ch in tok)
    return out


def _reduce(letters, opener: str):
    """Cancel (opener, closer) pairs bracket-style; return survivors in order."""
    stack: list[int] = []
    out: list = []
    for idx, (r, ch) in enumerate(letters):
        if ch == opener:
            stack.append(len(out))
            out.append((r, ch))
        elif stack:
            out[stack.pop()] = None
        else:
            out.append((r, ch))
    return [x for x in out if x is not None]


@dataclass(frozen=True)
class CrystalStep:
    e: Optional[Weight]
    f: Optional[Weight]
    eps: int
    phi: int


def _shift(lam, r, d) -> Weight:
    mu = list(lam)
    mu[r] += d
    return tuple(mu)


def primed(lam: Sequence[int], i: int) -> CrystalStep:
    """E'_i, F'_i, eps'_i, phi'_i on Z^n."""
    lam = tuple(lam)
    surv = _reduce(_letters(i_signature(lam, i)), "+")
    minus = [r for r, ch in surv if ch == "-"]
    plus = [r for r, ch in surv if ch == "+"]
    e = _shift(lam, minus[-1], -1) if minus else None
    f = _shift(lam, plus[0], 1) if plus else None
    return CrystalStep(e, f, len(minus), len(plus))


def dual(lam: Sequence[int], i: int) -> CrystalStep:
    """E*_i, F*_i, eps*_i, phi*_i on Z^n."""
    lam = tuple(lam)
    surv = _reduce(_letters(i_signature(lam, i), flip_mixed=True), "-")
    minus = [r for r, ch in surv if ch == "-"]
    plus = [r for r, ch in surv if ch == "+"]
    e = _shift(lam, minus[0], -1) if minus else None
    f = _shift(lam, plus[-1], 1) if plus else None
    return CrystalStep(e, f, len(minus), len(plus))


def dominant(lam: Sequence[int], i: int) -> CrystalStep:
    """The crystal on dominant weights, obtained from the primed one through w0."""
    lam = check_dominant(lam)
    st = primed(reverse(lam), i)
    return CrystalStep(reverse(st.e) if st.e else None,
                       reverse(st.f) if st.f else None, st.eps, st.phi)


def i_string(lam: Sequence[int], i: int, kind: str = "dominant") -> list[Weight]:
    """The i-string through lam, listed from the E-end to the F-end."""
    step = {"dominant": dominant, "primed": primed, "dual": dual}[kind]
    cur = tuple(lam)
    while True:
        e = step(cur, i).e
        if e is None:
            break
        cur = e
    out = [cur]
    while True:
        f = step(cur, i).f
        if f is None:
            break
        cur = f
        out.append(cur)
    return out
