"""Command-line front end.

Exit status: 0 when a result was computed (a failed check is still a
result), 1 when a hypothesis of the requested computation does not hold,
2 for unreadable input or bad usage.  Results go to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from .coefficients import QQ, LocalRing, NotIntegralError, OutsideRingError, valuation_to_json
from .expr import ParseError
from .groebner import (
    MonicSet,
    NotMonicError,
    check_base_change,
    complete,
    divide,
    is_groebner,
    normal_word_counts,
    normal_words,
)
from .presentation import Presentation, load_presentation
from .quotient import QuotientAlgebra
from .valuation import HypothesisError, ValuedAlgebra, zero_divisor_scan


class CannotCompute(Exception):
    pass


def _emit(args, data: dict, lines):
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _align(pairs):
    width = max(len(k) for k, _ in pairs)
    return [f"{k + ':':<{width + 1}} {v}" for k, v in pairs]


def _plural(n, word):
    return f"{n} {word}" + ("" if n == 1 else "s")


def _basis(pres: Presentation) -> MonicSet:
    G = pres.monic_set()
    for g, reason in G.discarded:
        print(f"note: discarded relation {g} ({reason})", file=sys.stderr)
    return G


def _rational_basis(pres: Presentation, prime: int) -> MonicSet:
    """The relations as a monic set over Q, for the valuation commands."""
    ring = pres.ring
    if isinstance(ring, LocalRing):
        if ring.p != prime:
            raise CannotCompute(f"presentation is over Z_({ring.p}) but --prime is {prime}")
    elif ring != QQ:
        raise CannotCompute(f"valuation commands need coefficients Q or Zp p, not {ring.tag}")
    return _basis(pres).change_ring(QQ, Fraction)


def _valued(pres: Presentation, prime: int) -> ValuedAlgebra:
    G = _rational_basis(pres, prime)
    report = is_groebner(G)
    if not report.passed:
        raise CannotCompute("relations are not a Groebner basis; run 'complete' first")
    return ValuedAlgebra(QuotientAlgebra(G), prime)


############################################################################
# commands
############################################################################
def cmd_check_gb(args, pres):
    G = _basis(pres)
    report = is_groebner(G)
    data = report.to_dict()
    data["relations"] = [str(g) for g in G]
    n = report.n_overlaps
    if report.passed:
        summary = f"GROEBNER: yes ({_plural(n, 'overlap')}, all reduce to 0)"
    else:
        summary = f"GROEBNER: no ({len(report.failures)} of {_plural(n, 'overlap')} do not reduce to 0)"
    lines = [summary]
    fmt = pres.alphabet.format_word
    for o, r in report.failures:
        lines.append(f"  overlap at {fmt(o.superposition)} (g{o.i}*{fmt(o.u)} - {fmt(o.v)}*g{o.j}): remainder {r}")
    _emit(args, data, lines)


def cmd_complete(args, pres):
    G = _basis(pres)
    try:
        result = complete(G, args.max_deg)
    except ValueError as exc:
        raise CannotCompute(str(exc)) from None
    data = {
        "basis": [str(g) for g in result.basis],
        "complete": result.complete,
        "max_deg": args.max_deg,
        "rounds": result.rounds,
    }
    status = "complete" if result.complete else f"truncated at degree {args.max_deg}"
    lines = [f"BASIS ({len(result.basis)} elements, {status}):"] + [f"  {g}" for g in result.basis]
    _emit(args, data, lines)


def cmd_normalform(args, pres):
    G = _basis(pres)
    f = pres.parse(args.expr)
    d = divide(f, G)
    verified = is_groebner(G).passed
    data = {"input": str(f), "normal_form": str(d.remainder), "groebner": verified, "steps": len(d.quotients)}
    lines = _align([("input", str(f)), ("normal form", str(d.remainder)), ("rewrites", len(d.quotients))])
    if not verified:
        lines.append("warning: relations are not a Groebner basis; the normal form is not canonical")
    _emit(args, data, lines)


def cmd_member(args, pres):
    G = _basis(pres)
    f = pres.parse(args.expr)
    verified = is_groebner(G).passed
    if not verified:
        print("warning: relations are not a Groebner basis; 'no' may be a false negative", file=sys.stderr)
    r = divide(f, G).remainder
    member = r.is_zero()
    data = {"input": str(f), "member": member, "remainder": str(r), "groebner": verified}
    _emit(args, data, [f"MEMBER: {'yes' if member else 'no'}"] + ([] if member else [f"  remainder {r}"]))


def cmd_normal_words(args, pres):
    G = _basis(pres)
    counts = normal_word_counts(G, args.max_deg)
    data = {"max_deg": args.max_deg, "counts": counts}
    if args.counts_only:
        lines = [" ".join(map(str, counts))]
    else:
        fmt = pres.alphabet.format_word
        groups = normal_words(G, args.max_deg)
        data["words"] = [[fmt(w) for w in g] for g in groups]
        lines = [f"degree {d} ({len(g)}): {' '.join(fmt(w) for w in g)}" for d, g in enumerate(groups)]
    _emit(args, data, lines)


def cmd_valuation(args, pres):
    V = _valued(pres, args.prime)
    f = pres.parse(args.expr).map_coefficients(QQ, Fraction)
    a = V.algebra.project(f)
    rep = V.extended_valuation(a)
    data = rep.to_dict()
    data["p"] = args.prime
    lines = [f"v = {valuation_to_json(rep.valuation)}"] + _align(
        [
            ("element", str(a)),
            ("degree", valuation_to_json(rep.degree)),
            ("witness", "-" if rep.witness is None else f"{pres.alphabet.format_word(rep.witness[0])} ({rep.witness[1]})"),
        ]
    )
    _emit(args, data, lines)


def cmd_axioms(args, pres):
    V = _valued(pres, args.prime)
    rep = V.check_valuation_axioms(args.samples, args.max_deg, args.seed)
    data = rep.to_dict()
    verdict = "hold" if rep.passed else "violated"
    lines = [f"AXIOMS: {verdict} on {args.samples} pairs (seed {args.seed})"] + _align(
        [("V2 violations", rep.v2_violations), ("V3 violations", rep.v3_violations)]
    )
    for w in rep.witnesses:
        lines.append(f"  {w.axiom}: a = {w.a}, b = {w.b}: {valuation_to_json(w.lhs)} vs {valuation_to_json(w.rhs)}")
    if not rep.passed:
        lines.append("  (evidence that the residue algebra is not a domain)")
    _emit(args, data, lines)


def cmd_good_reduction(args, pres):
    V = _valued(pres, args.prime)
    rep = V.good_reduction_check(args.samples, args.seed)
    data = rep.to_dict()
    lines = [f"GOOD REDUCTION: {'yes' if rep.passed else 'no'} ({args.samples} samples, seed {args.seed})"]
    lines += ["  " + line for line in _align(sorted(rep.kinds.items()))]
    for f in rep.failures:
        lines.append(f"  failed [{f['construction']}]: {f['element']}: {f['reason']}")
    _emit(args, data, lines)


def cmd_residue(args, pres):
    V = _valued(pres, args.prime)
    try:
        R = V.residue_algebra()
    except HypothesisError as exc:
        raise CannotCompute(str(exc)) from None
    data = R.to_dict()
    lines = [f"RESIDUE over F_{args.prime}: Groebner {'yes' if R.groebner else 'no'}"] + [f"  {g}" for g in R.basis]
    if args.zero_divisor_scan is not None:
        if not R.groebner:
            raise CannotCompute("residue presentation is not a Groebner basis; cannot scan")
        scan = zero_divisor_scan(R, args.zero_divisor_scan)
        data["zero_divisor_scan"] = scan.to_dict()
        lines.append(scan.message)
    _emit(args, data, lines)


def cmd_base_change(args, pres):
    G = _basis(pres)
    try:
        rep = check_base_change(G, args.prime)
    except NotIntegralError as exc:
        raise CannotCompute(f"G ⊄ O_v⟨X⟩: {exc}") from None
    data = rep.to_dict()
    yn = lambda b: "yes" if b else "no"
    lines = _align(
        [
            ("Groebner over Q", yn(rep.over_Q)),
            (f"Groebner over Z_({rep.p})", yn(rep.over_Ov)),
            (f"Groebner over F_{rep.p}", yn(rep.over_Fp)),
            ("verdicts agree", yn(rep.agree)),
        ]
    )
    _emit(args, data, lines)


############################################################################
# argument parsing
############################################################################
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncvaluation",
        description="Monic Groebner bases in free algebras and p-adic valuation extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="presentation file")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    add("check-gb", cmd_check_gb, "check the overlap criterion")
    p = add("complete", cmd_complete, "degree-bounded completion over a field")
    p.add_argument("--max-deg", type=int, required=True)
    p = add("normalform", cmd_normalform, "normal form of an expression")
    p.add_argument("--expr", required=True)
    p = add("member", cmd_member, "ideal membership")
    p.add_argument("--expr", required=True)
    p = add("normal-words", cmd_normal_words, "enumerate or count normal words")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--counts-only", action="store_true")
    p = add("valuation", cmd_valuation, "extended valuation of an element")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--expr", required=True)
    p = add("axioms", cmd_axioms, "randomized check of the valuation axioms")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--max-deg", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p = add("good-reduction", cmd_good_reduction, "randomized good-reduction check")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p = add("residue", cmd_residue, "residue presentation over F_p")
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--zero-divisor-scan", type=int, metavar="D", default=None)
    p = add("base-change", cmd_base_change, "compare Groebner verdicts over Q, Z_(p) and F_p")
    p.add_argument("--prime", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s", stream=sys.stderr)
    try:
        pres = load_presentation(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {args.file}: {exc}", file=sys.stderr)
        return 2
    try:
        args.func(args, pres)
    except ParseError as exc:
        print(f"error: --expr: {exc}", file=sys.stderr)
        return 2
    except (CannotCompute, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (NotMonicError, ValueError, OutsideRingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
