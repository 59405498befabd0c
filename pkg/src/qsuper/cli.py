"""Command-line interface: `python -m qsuper <command> ...` or `qsuper <command> ...`."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Mapping

from . import canonical, characters, crystal, tensor, wedge, weights
from .laurent import LaurentPoly
from .weights import FuelExhausted, WeightError, format_weight, parse_weight

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE = 0, 2, 3
DEFAULT_CUTOFF = 20


class InputError(ValueError):
    pass


# -- rendering -----------------------------------------------------------------

def _coeff_prefix(c: LaurentPoly) -> tuple[str, str]:
    """(sign, text to put before the basis symbol) for a nonzero coefficient."""
    terms = list(c.items())
    if len(terms) == 1:
        e, k = terms[0]
        sign = "-" if k < 0 else "+"
        body = str(LaurentPoly({e: abs(k)}))
        return sign, "" if body == "1" else body + "·"
    return "+", f"({c})·"


def render_vector(vec: Mapping, symbol: str) -> str:
    """Weights in increasing lexicographic order, so the leading term comes first."""
    if not vec:
        return "0"
    out = ""
    for k, lam in enumerate(sorted(vec)):
        c = vec[lam]
        if isinstance(c, int):
            c = LaurentPoly(c)
        sign, pre = _coeff_prefix(c)
        term = f"{pre}{symbol}[{format_weight(lam)}]"
        if k == 0:
            out = ("-" if sign == "-" else "") + term
        else:
            out += f" {sign} {term}"
    return out


def vector_json(vec: Mapping) -> list[dict]:
    out = []
    for lam in sorted(vec):
        c = vec[lam]
        coeff = c.to_json() if isinstance(c, LaurentPoly) else str(c)
        out.append({"weight": list(lam), "coeff": coeff})
    return out


def vector_from_json(obj) -> dict:
    out = {}
    for t in obj:
        c = t["coeff"]
        out[tuple(t["weight"])] = LaurentPoly.from_json(c) if isinstance(c, dict) else int(c)
    return out


def _weight_arg(text: str, dominant: bool = True):
    lam = parse_weight(text)
    if dominant:
        weights.check_dominant(lam)
    return lam


# -- commands ------------------------------------------------------------------

def cmd_ucb(args):
    lam = _weight_arg(args.weight)
    if args.q1:
        col = canonical.decomposition_column(lam, args.method)
        return render_vector(col, "F"), vector_json(col)
    if args.method != "canonical":
        raise InputError("--method closed only applies together with --q1")
    vec = canonical.ucb(lam)
    return render_vector(vec, "F"), vector_json(vec)


def cmd_dmat(args):
    lam = _weight_arg(args.weight)
    if args.row:
        data = canonical.decomposition_row(lam, args.method)
    else:
        data = canonical.decomposition_column(lam, args.method)
    lines = [f"({format_weight(mu)}): {d}" for mu, d in sorted(data.items())]
    return "\n".join(lines), [{"weight": list(mu), "d": d} for mu, d in sorted(data.items())]


def cmd_char(args):
    lam = _weight_arg(args.weight, dominant=args.kind != "M")
    if args.kind == "L":
        ch = characters.ch_irreducible(lam)
    elif args.kind == "E":
        ch = characters.ch_euler(lam)
    elif args.kind == "P":
        ch = characters.schur_p(lam)
    else:
        if args.cutoff is None:
            raise InputError("char M requires --cutoff")
        if args.cutoff < 0:
            raise InputError("--cutoff must be nonnegative")
        ch = characters.ch_verma_truncated(lam, args.cutoff)
    return str(ch), ch.to_json()


def cmd_crystal(args):
    lam = parse_weight(args.weight)
    if args.i < 0:
        raise InputError("--i must be >= 0")
    if args.dominant and args.dual:
        raise InputError("--dual and --dominant are exclusive")
    if args.dominant:
        st = crystal.dominant(lam, args.i)
        sig = crystal.i_signature(weights.reverse(lam), args.i)
    elif args.dual:
        st = crystal.dual(lam, args.i)
        sig = crystal.i_signature(lam, args.i)
    else:
        st = crystal.primed(lam, args.i)
        sig = crystal.i_signature(lam, args.i)
    fmt = lambda w: "none" if w is None else format_weight(w)
    text = "\n".join([
        "signature: " + " ".join(sig),
        f"E: {fmt(st.e)}",
        f"F: {fmt(st.f)}",
        f"eps: {st.eps}",
        f"phi: {st.phi}",
    ])
    res = {"signature": list(sig), "E": None if st.e is None else list(st.e),
           "F": None if st.f is None else list(st.f), "eps": st.eps, "phi": st.phi}
    return text, res


def cmd_straighten(args):
    word = parse_weight(args.word)
    vec = wedge.straighten(word, fuel=args.fuel)
    return render_vector(vec, "F"), vector_json(vec)


def cmd_bruhat(args):
    a, b = parse_weight(args.a), parse_weight(args.b)
    if len(a) != len(b):
        raise InputError("weights of different lengths")
    res = {
        "bruhat_leq": weights.bruhat_leq(a, b),
        "dominance_leq": weights.gl_dominance_leq(a, b),
        "same_block": weights.same_block(a, b),
    }
    exhausted = False
    try:
        res["down_reachable"] = weights.downarrow_reachable(b, a, fuel=args.fuel)
    except FuelExhausted:
        res["down_reachable"] = None
        exhausted = True
    word = lambda v: "exhausted" if v is None else str(v).lower()
    text = "\n".join([
        f"A ≼ B (Bruhat): {word(res['bruhat_leq'])}",
        f"A ≤ B (dominance): {word(res['dominance_leq'])}",
        f"same block: {word(res['same_block'])}",
        f"A reachable from B by down-moves: {word(res['down_reachable'])}",
    ])
    return text, res, (EXIT_RESOURCE if exhausted else EXIT_OK)


def cmd_bar2(args):
    lam = parse_weight(args.weight)
    if len(lam) != 2:
        raise InputError("bar2 is defined for n = 2 only")
    vec = tensor.bar_n2(lam, args.cutoff)
    return render_vector(vec, "N"), vector_json(vec)


def cmd_blocks(args):
    lam = _weight_arg(args.weight)
    ws = weights.lower_block_set(lam)
    return "\n".join(f"({format_weight(mu)})" for mu in ws), [list(mu) for mu in ws]


# -- entry point -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # let "-1,1" be read as a positional weight rather than an option
        self._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qsuper", description="Canonical bases, decomposition numbers and "
                "characters for the q-wedge space of the queer Lie superalgebra.")
    p.add_argument("--json", action="store_true", help="emit one JSON document")
    p.add_argument("--fuel", type=int, default=weights.DEFAULT_FUEL,
                   help="bound on rewrite steps / search states (default 10^6)")
    # the same flags are accepted after the subcommand as well
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ucb", parents=[common], help="canonical basis vector U_W in the F basis")
    s.add_argument("weight")
    s.add_argument("--q1", action="store_true", help="specialise at q = 1")
    s.add_argument("--method", choices=["canonical", "closed"], default="canonical")
    s.set_defaults(func=cmd_ucb)

    s = sub.add_parser("dmat", parents=[common], help="decomposition numbers d_{mu,W} (column) or d_{W,lam} (--row)")
    s.add_argument("weight")
    s.add_argument("--method", choices=["canonical", "closed"], default="canonical")
    s.add_argument("--row", action="store_true")
    s.set_defaults(func=cmd_dmat)

    s = sub.add_parser("char", parents=[common], help="characters: L irreducible, E Euler, P Schur P, M Verma")
    s.add_argument("kind", choices=["L", "E", "P", "M"])
    s.add_argument("weight")
    s.add_argument("--cutoff", type=int, default=None,
                   help="for M: keep monomials whose height in positive roots is <= cutoff")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("crystal", parents=[common], help="crystal operators at node i")
    s.add_argument("weight")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--dual", action="store_true")
    s.add_argument("--dominant", action="store_true")
    s.set_defaults(func=cmd_crystal)

    s = sub.add_parser("straighten", parents=[common], help="image of a tensor word in the F basis")
    s.add_argument("word")
    s.set_defaults(func=cmd_straighten)

    s = sub.add_parser("bruhat", parents=[common], help="compare two weights")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_bruhat)

    s = sub.add_parser("bar2", parents=[common], help="bar involution on the second tensor power")
    s.add_argument("weight")
    s.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    s.set_defaults(func=cmd_bar2)

    s = sub.add_parser("blocks", parents=[common], help="dominant weights below W in the same block")
    s.add_argument("weight")
    s.set_defaults(func=cmd_blocks)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except (WeightError, InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FuelExhausted, RecursionError) as exc:
        print(f"error: resource limit exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    text, res = out[0], out[1]
    code = out[2] if len(out) > 2 else EXIT_OK
    if args.json:
        print(json.dumps({"command": args.command, "result": res}, sort_keys=False))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
