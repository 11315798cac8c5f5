"""Command line front end: ``wqeuler <subcommand> ...``.

Words and compositions are typed as digit strings (``21312``) or, when some
entry exceeds 9, as comma separated integers.  Output is aligned text by
default and JSON with ``--json``; term order is always sorted.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import product

from . import ncsf, serialization, wqsym
from .algebra_core import MultiPolyT, PolyT, format_rational
from .checks import SUITES, run_suite
from .goldberg import c_u_theorem, eulerian_E, eulerian_numbers, goldberg_classical, hausdorff_table
from .words import check_composition, check_packed, pack, parse_word, word_str

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- argument types

def _word(text):
    try:
        return check_packed(parse_word(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _composition(text):
    try:
        return check_composition(parse_word(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_inline(kind, text):
    """Apply an argument type outside argparse, reporting bad input as a usage error."""
    try:
        return kind(text)
    except argparse.ArgumentTypeError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------- rendering

def _coeff_text(c) -> str:
    if isinstance(c, (PolyT, MultiPolyT)):
        return str(c)
    return format_rational(c)


def _render_terms(rows) -> str:
    """``rows`` are ``(label, coeff)``; coefficients right-aligned in one column."""
    rows = [(label, _coeff_text(c)) for label, c in rows]
    if not rows:
        return "0"
    width = max(len(c) for _, c in rows)
    return "\n".join(f"{c:>{width}}  {label}" for label, c in rows)


def _text_sym(f) -> str:
    tag = "S^" if f.basis == "S" else "R_"
    return _render_terms((tag + "(" + ",".join(map(str, I)) + ")", c) for I, c in f.sorted_items())


def _text_wq(F) -> str:
    return _render_terms((f"{F.basis}_{word_str(u)}", c) for u, c in F.sorted_items())


def _emit(args, payload, text: str):
    if args.json:
        print(serialization.dumps(payload))
    else:
        print(text)


def _emit_sym(args, f):
    _emit(args, serialization.encode_sym(f), _text_sym(f))


def _emit_wq(args, F):
    _emit(args, serialization.encode_wq(F), _text_wq(F))


# ---------------------------------------------------------------- commands

def cmd_eulerian(args):
    cap = args.max_degree
    if args.A:
        f = ncsf.eulerian_A(args.n, args.k, max_degree=cap)
    else:
        f = ncsf.eulerian_idempotent(args.n, args.k, max_degree=cap)
    _emit_sym(args, f)


def cmd_sbasis_power(args):
    _emit_sym(args, ncsf.s_power(args.n, args.k, max_degree=args.max_degree))


def cmd_eulerian_poly(args):
    p = eulerian_E(args.n)
    row = eulerian_numbers(args.n)
    payload = {"n": args.n, "eulerian_numbers": list(row), "E_t": serialization.encode_coeff(p)}
    text = f"A({args.n}, d): {' '.join(map(str, row))}\nE_{args.n}(t, t+1) = {p}"
    _emit(args, payload, text)


def cmd_useries(args):
    if args.basis == "K":
        F = wqsym.U_series_K(args.v)
    else:
        F = wqsym.U_series(args.v, method=args.method)
    _emit_wq(args, F)


def cmd_vseries(args):
    _emit_wq(args, wqsym.V_series(args.u, method=args.method))


def cmd_mixed(args):
    if len(args.u) != len(args.v):
        raise UsageError("u and v must have the same length")
    if args.basis == "K":
        F = wqsym.mixed_series_K(args.u, args.v)
    else:
        F = wqsym.mixed_series(args.u, args.v, method=args.method)
    _emit_wq(args, F)


def cmd_cumulant_basis(args):
    index = _parse_inline(_composition if args.composition else _word, args.index)
    if args.composition:
        _emit_sym(args, ncsf.cumulant_K_I(index))
    else:
        _emit_wq(args, wqsym.cumulant_K_u(index))


def cmd_transition(args):
    F = wqsym.k_to_n(args.v) if args.direction == "k-to-n" else wqsym.n_to_k(args.v)
    _emit_wq(args, F)


def _goldberg_payload(u, word=None):
    payload = serialization.encode_goldberg(u, c_u_theorem(u), goldberg_classical(u))
    if word is not None:
        payload["word"] = list(word)
    return payload


def cmd_goldberg(args):
    if args.table:
        m, D = args.table
        words = [w for d in range(1, D + 1) for w in product(range(1, m + 1), repeat=d)]
        words.sort()
        if args.classical:
            rows = [(w, goldberg_classical(pack(w))) for w in words]
            payload = [{"word": list(w), "c_classical": format_rational(c)} for w, c in rows]
        else:
            rows = [(w, c_u_theorem(pack(w))) for w in words]
            payload = [_goldberg_payload(pack(w), w) for w in words]
        _emit(args, payload, _render_terms((word_str(w), c) for w, c in rows))
        return
    if args.word is None:
        raise UsageError("give a packed word or --table M D")
    u = _parse_inline(_word, args.word)
    if args.classical:
        c = goldberg_classical(u)
        _emit(args, {"word": list(u), "c_classical": format_rational(c)}, format_rational(c))
    else:
        _emit(args, _goldberg_payload(u), str(c_u_theorem(u)))


def cmd_hausdorff(args):
    table = hausdorff_table(args.m, args.D)
    rows = [{"word": list(w), "coeff": format_rational(c)} for w, c in sorted(table.items())]
    _emit(args, rows, _render_terms((word_str(w), c) for w, c in sorted(table.items())))


def cmd_moments_n(args):
    _emit_wq(args, wqsym.moment_poly_wq(args.u))


def cmd_partial_cumulant(args):
    if not 1 <= args.j <= max(args.u, default=0):
        raise UsageError(f"j must lie in 1..{max(args.u, default=0)}")
    _emit_wq(args, wqsym.partial_cumulant_wq(args.u, args.j, method=args.method))


def cmd_cumulants(args):
    try:
        with open(args.moments) as fh:
            moments = serialization.decode_moments(json.load(fh))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read moment table {args.moments}: {exc}") from None
    try:
        table = wqsym.cumulants_from_moments(moments, args.degree)
    except wqsym.MissingMoment as exc:
        raise UsageError(str(exc)) from None
    rows = sorted(table.items())
    payload = {"cumulants": [{"word": list(u), "value": format_rational(c)} for u, c in rows]}
    _emit(args, payload, _render_terms((f"K_{word_str(u)}", c) for u, c in rows))


def cmd_verify(args):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = [run_suite(name, args.max_degree, args.seed) for name in names]
    payload = [
        {
            "suite": r.name,
            "max_degree": r.max_degree,
            "checked": r.checked,
            "ok": r.ok,
            "counterexample": r.counterexample,
        }
        for r in results
    ]
    lines = []
    for r in results:
        status = "pass" if r.ok else f"FAIL at {r.counterexample}"
        lines.append(f"{r.name:<24} n<={r.max_degree}  {r.checked:>6} checks  {status}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    fmt.add_argument("--text", dest="json", action="store_false", help="emit aligned text (default)")
    common.add_argument("--max-degree", type=int, default=None, help="degree cap / suite degree")

    parser = _Parser(prog="wqeuler", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("eulerian", cmd_eulerian, "Eulerian idempotent E_n^[k] (or A(n,k) with --A) in the S basis")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--A", action="store_true", help="sum of ribbons with k parts instead")

    p = add("sbasis-power", cmd_sbasis_power, "S_n^[k], the degree n part of sigma_1^k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = add("eulerian-poly", cmd_eulerian_poly, "Eulerian numbers and E_n(t, t+1)")
    p.add_argument("n", type=int)

    p = add("useries", cmd_useries, "U_v(t) = sigma_1^t * N_v")
    p.add_argument("v", type=_word)
    p.add_argument("--basis", choices=["N", "K"], default="N")
    p.add_argument("--method", choices=["closed", "direct", "refinement_word"], default="closed")

    p = add("vseries", cmd_vseries, "V_u(t) = N_u * sigma_1^t")
    p.add_argument("u", type=_word)
    p.add_argument("--method", choices=["closed", "direct"], default="closed")

    p = add("mixed", cmd_mixed, "N_u * sigma_1^t * N_v")
    p.add_argument("u", type=_word)
    p.add_argument("v", type=_word)
    p.add_argument("--basis", choices=["N", "K"], default="N")
    p.add_argument("--method", choices=["closed", "direct"], default="closed")

    p = add("cumulant-basis", cmd_cumulant_basis, "K_u on the N basis (K_I on S with --composition)")
    p.add_argument("index")
    p.add_argument("--composition", action="store_true")

    p = add("transition", cmd_transition, "one column of the K/N transition matrices")
    p.add_argument("v", type=_word)
    p.add_argument("--direction", choices=["k-to-n", "n-to-k"], default="k-to-n")

    p = add("goldberg", cmd_goldberg, "t-Goldberg coefficient c_u(t)")
    p.add_argument("word", nargs="?")
    p.add_argument("--classical", action="store_true", help="only [t] c_u(t)")
    p.add_argument("--table", nargs=2, type=int, metavar=("M", "D"), help="all words over M letters up to length D")

    p = add("hausdorff", cmd_hausdorff, "coefficients of log(e^a1 ... e^aM) up to degree D")
    p.add_argument("m", type=int)
    p.add_argument("D", type=int)

    p = add("moments-n", cmd_moments_n, "N_u(T) with one scalar per block of u")
    p.add_argument("u", type=_word)

    p = add("partial-cumulant", cmd_partial_cumulant, "d/dt_j N_u(T) at t_j = 0")
    p.add_argument("u", type=_word)
    p.add_argument("j", type=int)
    p.add_argument("--method", choices=["replace", "derivative"], default="replace")

    p = add("cumulants", cmd_cumulants, "evaluate every K_u of one degree on a moment table")
    p.add_argument("--moments", required=True, metavar="PATH")
    p.add_argument("--degree", type=int, required=True)

    p = add("verify", cmd_verify, "run an identity suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=0)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.command != "verify" and args.max_degree is None:
        args.max_degree = ncsf.DEFAULT_MAX_DEGREE
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"wqeuler {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"wqeuler {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
