"""Command-line front end.

One subcommand per library operation:

    sylvester     print the differential Sylvester matrix
    resultant     print the differential resultant
    subres-matrix print the trimmed matrix for --index i
    subresultant  print the i-th subresultant and its minors
    sequence      print the whole subresultant sequence
    gcrd          print the monic GCRD (subresultant route)
    spectral      run the spectral pipeline on a commuting pair

Expressions are read from the arguments, or from files with ``@path``.
Exit codes: 0 success, 2 syntax error, 3 domain error, 4 range error,
5 non-commuting operands.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import spectral as sp
from . import subresultants as sub
from .domains import DomainDescriptor
from .errors import (DiffresError, ExprSyntaxError, IndexOutOfRange,
                     NotCommuting)
from .parsing import parse_domain_spec, parse_operator
from .rendering import (element_text, matrix_json_obj, odo_json_obj, render,
                        to_json)

EXIT_SYNTAX = 2
EXIT_DOMAIN = 3
EXIT_RANGE = 4
EXIT_COMMUTE = 5


def _build_parser():
    top = argparse.ArgumentParser(
        prog="diffres",
        description="Exact resultants, subresultants and GCRDs of ordinary "
                    "differential operators.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--domain", default="ratfunc(x)",
                        help="domain declaration, e.g. 'ratfunc(x; params=lambda,mu)', "
                             "'diffpoly(x; inds=a0..a2)', 'weierstrass(x)'")
    common.add_argument("--format", choices=("text", "json", "latex"),
                        default="text", help="output format")
    subs = top.add_subparsers(dest="command", required=True)

    def twoexpr(name, help_text, index=False):
        p = subs.add_parser(name, parents=[common], help=help_text)
        if index:
            p.add_argument("--index", type=int, required=True,
                           help="subresultant index i")
        p.add_argument("expr_a", help="first operator (or @file)")
        p.add_argument("expr_b", help="second operator (or @file)")
        return p

    twoexpr("sylvester", "differential Sylvester matrix")
    twoexpr("resultant", "differential resultant")
    twoexpr("subres-matrix", "trimmed Sylvester matrix M_i", index=True)
    twoexpr("subresultant", "i-th differential subresultant", index=True)
    twoexpr("sequence", "all differential subresultants")
    twoexpr("gcrd", "monic greatest common right divisor")

    spec = subs.add_parser("spectral", parents=[common],
                           help="spectral pipeline for a commuting pair")
    spec.add_argument("args", nargs="+",
                      help="'euler N M' or 'lame' or two operator expressions")
    return top


def _read_expr(arg):
    if arg.startswith("@"):
        with open(arg[1:], "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return arg


def _operators(ns):
    domain = parse_domain_spec(ns.domain)
    a = parse_operator(_read_expr(ns.expr_a), domain)
    b = parse_operator(_read_expr(ns.expr_b), domain)
    return domain, a, b


def _emit(text):
    sys.stdout.write(text + "\n")


def _record_obj(rec):
    return {
        "index": rec.index,
        "operator": odo_json_obj(rec.operator),
        "minors": [matrix_json_obj(m) for m in rec.minors],
    }


def _print_record(rec, fmt):
    if fmt == "json":
        _emit(to_json(_record_obj(rec)))
        return
    _emit("sres_%d = %s" % (rec.index, render(rec.operator, fmt)))
    for j, minor in enumerate(rec.minors):
        _emit("minor of D^%d:" % j)
        _emit(render(minor, fmt))


def _run_spectral(ns):
    fmt = ns.format
    args = list(ns.args)
    if args[0] == "euler":
        n = int(args[1]) if len(args) > 1 else 4
        m = int(args[2]) if len(args) > 2 else 6
        a, b = sp.euler_pair(n, m)
    elif args[0] == "lame":
        a, b = sp.lame_pair()
    else:
        if len(args) != 2:
            raise ExprSyntaxError("spectral needs 'euler N M', 'lame' or two expressions")
        domain = parse_domain_spec(ns.domain)
        domain.ensure_parameter("lambda")
        domain.ensure_parameter("mu")
        a = parse_operator(_read_expr(args[0]), domain)
        b = parse_operator(_read_expr(args[1]), domain)
    result = sp.analyze_commuting_pair(a, b)
    if fmt == "json":
        _emit(to_json({
            "A": odo_json_obj(a),
            "B": odo_json_obj(b),
            "h": element_text(result.pair.h),
            "f": render(result.pair.curve.f, "text"),
            "d": result.index,
            "gcrd": odo_json_obj(result.gcrd),
        }))
        return
    _emit("A = %s" % render(a, fmt))
    _emit("B = %s" % render(b, fmt))
    _emit("h = %s" % render(result.pair.h, fmt))
    _emit("f = %s" % render(result.pair.curve.f, fmt))
    _emit("d = %d" % result.index)
    _emit("gcrd = %s" % render(result.gcrd, fmt))


def main(argv=None):
    parser = _build_parser()
    ns = parser.parse_args(argv)
    try:
        if ns.command == "sylvester":
            _, a, b = _operators(ns)
            _emit(render(sub.sylvester(a, b), ns.format))
        elif ns.command == "resultant":
            _, a, b = _operators(ns)
            _emit(render(sub.resultant(a, b), ns.format))
        elif ns.command == "subres-matrix":
            _, a, b = _operators(ns)
            _emit(render(sub.subres_matrix(a, b, ns.index), ns.format))
        elif ns.command == "subresultant":
            _, a, b = _operators(ns)
            _print_record(sub.subresultant(a, b, ns.index), ns.format)
        elif ns.command == "sequence":
            _, a, b = _operators(ns)
            records = sub.subresultant_sequence(a, b)
            if ns.format == "json":
                _emit(to_json([_record_obj(r) for r in records]))
            else:
                for rec in records:
                    _print_record(rec, ns.format)
        elif ns.command == "gcrd":
            _, a, b = _operators(ns)
            _emit(render(sub.gcrd_subres(a, b), ns.format))
        elif ns.command == "spectral":
            _run_spectral(ns)
    except ExprSyntaxError as exc:
        print("syntax error: %s" % exc, file=sys.stderr)
        return EXIT_SYNTAX
    except IndexOutOfRange as exc:
        print("range error: %s" % exc, file=sys.stderr)
        return EXIT_RANGE
    except NotCommuting as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_COMMUTE
    except (DiffresError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_DOMAIN
    return 0


if __name__ == "__main__":
    sys.exit(main())
