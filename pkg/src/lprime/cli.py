"""Command-line front end.

Subcommands map one-to-one onto library operations:

* ``eval``      L(s, f) for s != 0, or L'(0, f) when s = 0
* ``classify``  modulus classification with the full condition trace
* ``identity``  the coprime sine-product identity residual for q
* ``relations`` integer-relation search over the log-sine basis of q
* ``witness``   construct a vanishing witness function for q
* ``rank``      exact linear-independence rank of a family of functions

Exit codes: 0 success, 2 for rejected input (bad flags, malformed JSON,
precondition violations), 1 for computations that start but cannot
finish (pole, lost convergence, insufficient precision).  All numeric
output is printed as decimal strings at an explicit digit count, so
reports are reproducible byte-for-byte.  The default precision is 50
digits; the ``LPRIME_DIGITS`` environment variable overrides the
default, and an explicit ``--digits`` flag wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mpf, nstr

from . import classify as classify_mod
from . import lseries, relations
from .errors import ComputationError, ValidationError
from .numkernel import MIN_DIGITS, working_prec
from .periodic import PeriodicFunction

DEFAULT_DIGITS = 50
DEFAULT_MAX_COEFF = 100
DIGITS_ENV_VAR = "LPRIME_DIGITS"


@dataclass
class RunConfig:
    digits: int = DEFAULT_DIGITS
    max_coeff: int = DEFAULT_MAX_COEFF
    output: str = "text"
    input_path: str | None = None

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise ValidationError(f"--digits must be >= {MIN_DIGITS}, got {self.digits}")
        if self.max_coeff < 1:
            raise ValidationError(f"--max-coeff must be >= 1, got {self.max_coeff}")
        if self.output not in ("text", "json"):
            raise ValidationError(f"--output must be text or json, got {self.output!r}")


def _resolve_digits(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(DIGITS_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"{DIGITS_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_DIGITS


def _load_function(path: str) -> PeriodicFunction:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from None
    return PeriodicFunction.loads(text)


def _parse_rational(text: str, flag: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"{flag} expects a rational like 3 or -2/7, got {text!r}") from None


def _emit(report: dict, config: RunConfig, text_lines: list[str]) -> None:
    if config.output == "json":
        print(json.dumps(report))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommand handlers

def _cmd_eval(args, config: RunConfig) -> int:
    f = _load_function(args.fn)
    s = _parse_rational(args.s, "--s")
    d = config.digits
    if s == 0:
        value = lseries.l_deriv0_closed(f, d)
        method = lseries.Method.CLOSED_FORM_0
    else:
        value = lseries.l_value(s, f, d)
        method = lseries.Method.HURWITZ_SUM
    with working_prec(d):
        lv = lseries.LValue(value=value, s=mpf(s.numerator) / s.denominator,
                            f_digest=f.digest(), method=method)
    value_str = nstr(lv.value, d)
    report = {
        "s": str(s),
        "digits": d,
        "method": lv.method.value,
        "f_digest": lv.f_digest,
        "value": value_str,
    }
    label = "L'(0, f)" if s == 0 else f"L({s}, f)"
    _emit(report, config, [f"{label} = {value_str}  [{lv.method.value}, {d} digits]"])
    return 0


def _cmd_classify(args, config: RunConfig) -> int:
    cls = classify_mod.classify_modulus(args.q)
    report = cls.to_json_dict()
    lines = [f"q = {cls.q}: {cls.label()}",
             f"independence_24 = {cls.independence_24}, independence_25 = {cls.independence_25}"]
    lines += [f"  [{'x' if r else ' '}] {c}" for c, r in cls.trace]
    _emit(report, config, lines)
    return 0


def _cmd_identity(args, config: RunConfig) -> int:
    d = config.digits
    residual = relations.sine_identity_residual(args.q, d)
    residual_str = nstr(residual, d)
    report = {"q": args.q, "digits": d, "log_sum": residual_str}
    _emit(report, config, [f"sum of log(2 sin(k pi/{args.q})) over coprime k = {residual_str}"])
    return 0


def _cmd_relations(args, config: RunConfig) -> int:
    d = config.digits
    rel = relations.find_relation_for_modulus(
        args.q, config.max_coeff, d, extended=args.extended
    )
    if rel is None:
        _emit({"q": args.q, "digits": d, "relation": None}, config,
              [f"no verified relation for q = {args.q} with |coeff| <= {config.max_coeff}"])
        return 0
    report = {"q": args.q, "digits": d, "relation": rel.to_json_dict()}
    lines = [f"verified relation for q = {args.q}:"]
    lines += [f"  a={a}: {c}" for a, c in sorted(rel.coefficients.items())]
    if rel.pi_coefficient or rel.log2_coefficient:
        lines.append(f"  pi: {rel.pi_coefficient}, log2: {rel.log2_coefficient}")
    lines.append(f"  residual {nstr(rel.residual_at_d, 8)} at {d} digits, "
                 f"{nstr(rel.residual_at_2d, 8)} at {2 * d} digits")
    _emit(report, config, lines)
    return 0


def _cmd_witness(args, config: RunConfig) -> int:
    d = config.digits
    c = _parse_rational(args.c, "--c")
    wit = relations.build_witness(args.q, c, d)
    report = wit.to_json_dict()
    lines = [
        f"witness for q = {wit.q} from primes (p1, p2) = ({wit.p1}, {wit.p2}), f(1) = {c}",
        f"|L'(0, f)| = {nstr(wit.residual, 8)} at {d} digits",
        f"f = {wit.f.dumps()}",
    ]
    _emit(report, config, lines)
    return 0


def _cmd_rank(args, config: RunConfig) -> int:
    fns = [_load_function(p) for p in args.fns]
    result = lseries.family_rank(fns)
    report = result.to_json_dict()
    lines = [f"rank {result.rank} of {len(fns)} function(s); "
             f"{'independent' if result.independent else 'dependent'}"]
    if result.certificate is not None:
        lines.append(f"certificate: {result.certificate}")
    _emit(report, config, lines)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lprime",
        description="Special values of derivatives of L-functions of periodic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--digits", type=int, default=None,
                       help=f"decimal working precision (default {DEFAULT_DIGITS}, "
                            f"or ${DIGITS_ENV_VAR})")
        p.add_argument("--output", choices=("text", "json"), default="text")

    p_eval = sub.add_parser("eval", help="L(s, f), or L'(0, f) when s = 0")
    p_eval.add_argument("--fn", required=True, help="path to a periodic-function JSON file")
    p_eval.add_argument("--s", required=True, help="rational evaluation point (s != 1)")
    add_common(p_eval)

    p_classify = sub.add_parser("classify", help="classify a modulus")
    p_classify.add_argument("--q", type=int, required=True)
    add_common(p_classify)

    p_ident = sub.add_parser("identity", help="coprime sine-product identity residual")
    p_ident.add_argument("--q", type=int, required=True)
    add_common(p_ident)

    p_rel = sub.add_parser("relations", help="integer-relation search over the log-sine basis")
    p_rel.add_argument("--q", type=int, required=True)
    p_rel.add_argument("--max-coeff", type=int, default=DEFAULT_MAX_COEFF)
    p_rel.add_argument("--extended", action="store_true",
                       help="append pi and log 2 to the basis")
    add_common(p_rel)

    p_wit = sub.add_parser("witness", help="construct a vanishing witness for q")
    p_wit.add_argument("--q", type=int, required=True)
    p_wit.add_argument("--c", default="0", help="rational value of f(1) (default 0)")
    add_common(p_wit)

    p_rank = sub.add_parser("rank", help="exact rank of a family of functions")
    p_rank.add_argument("--fns", nargs="+", required=True,
                        help="periodic-function JSON files")
    add_common(p_rank)
    return parser


_HANDLERS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "identity": _cmd_identity,
    "relations": _cmd_relations,
    "witness": _cmd_witness,
    "rank": _cmd_rank,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = RunConfig(
            digits=_resolve_digits(args.digits),
            max_coeff=getattr(args, "max_coeff", DEFAULT_MAX_COEFF),
            output=args.output,
            input_path=getattr(args, "fn", None),
        )
        return _HANDLERS[args.command](args, config)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
