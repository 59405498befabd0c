"""Sparse linear combinations {basis key: LaurentPoly}."""

from __future__ import annotations

from typing import Callable, Hashable, Mapping

from .laurent import LaurentPoly, ONE

Vector = dict  # Hashable -> LaurentPoly, zero coefficients never stored


def add_into(acc: dict, key: Hashable, coeff: LaurentPoly) -> None:
    if not coeff:
        return
    new = acc[key] + coeff if key in acc else coeff
    if new:
        acc[key] = new
    else:
        del acc[key]


def add_scaled(acc: dict, vec: Mapping, scale: LaurentPoly = ONE) -> None:
    for k, c in vec.items():
        add_into(acc, k, c * scale if scale is not ONE else c)


def scale(vec: Mapping, s) -> dict:
    out: dict = {}
    add_scaled(out, vec, s if isinstance(s, LaurentPoly) else LaurentPoly(s))
    return out


def combine(*pairs) -> dict:
    """combine((c1, v1), (c2, v2), ...) = c1 v1 + c2 v2 + ..."""
    out: dict = {}
    for c, v in pairs:
        add_scaled(out, v, c if isinstance(c, LaurentPoly) else LaurentPoly(c))
    return out


def sub(a: Mapping, b: Mapping) -> dict:
    return combine((1, a), (-1, b))


def bar_coeffs(vec: Mapping) -> dict:
    return {k: c.bar() for k, c in vec.items()}


def eval_one(vec: Mapping) -> dict:
    out = {}
    for k, c in vec.items():
        v = c.eval_one()
        if v:
            out[k] = v
    return out


def apply_linear(vec: Mapping, image: Callable[[Hashable], Mapping]) -> dict:
    out: dict = {}
    for k, c in vec.items():
        add_scaled(out, image(k), c)
    return out


def vectors_equal(a: Mapping, b: Mapping) -> bool:
    return dict(a) == dict(b)
