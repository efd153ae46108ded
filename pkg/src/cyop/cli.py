"""Command-line front end: ``cyop <subcommand> ...``.

Exit status is 0 on success, 1 when a computation fails and 2 for usage
errors (argparse prints the synopsis to stderr).
"""

import argparse
import sys

from .catalog import entries as cat
from .catalog import verify as cver
from .classify import classify_order3, classify_order4, component_relations
from .errors import CyopError, MixedVariableError, OperatorSyntaxError
from .exact.rational import format_rational, parse_rational
from .exact.series import format_series, parse_series
from .frobenius import (frobenius_basis, holomorphic_solution, instanton_report, mirror_map,
                        q_coordinate, yukawa_coupling)
from .operator.cy import cy_quantity_Q, cy_quantity_W, q_numerator_poly
from .operator.params import DegreeTwoParams
from .operator.riemann import riemann_symbol
from .operator.theta import ThetaOperator
from .transforms.fit import fit_operator
from .transforms.registry import build_named, registry_keys
from .transforms.series_ops import hadamard_all, moebius_pullback

DEFAULT_ORDER = 12
ORDER_WARN = 64


class UsageError(Exception):
    pass


def _ns(values, sep=", "):
    return sep.join(format_rational(v) for v in values)


# -- operator input ----------------------------------------------------------

def _add_source(p):
    g = p.add_argument_group("operator source (exactly one)")
    g.add_argument("--expr", help="operator in theta form, e.g. 'T^4 - 5*x*(5T+1)(5T+2)(5T+3)(5T+4)'")
    g.add_argument("--file", help="file holding an operator expression")
    g.add_argument("--key", help="registry key (see 'cyop build --list')")
    g.add_argument("--catalog", metavar="ID", help="catalog id, e.g. 2.1")


def _add_order(p, default=DEFAULT_ORDER):
    p.add_argument("--order", type=int, default=default, help=f"x-order of truncation (default {default})")


def resolve_operator(args):
    given = [k for k in ("expr", "file", "key", "catalog") if getattr(args, k, None)]
    if len(given) != 1:
        raise UsageError("give exactly one of --expr, --file, --key, --catalog")
    if args.expr:
        return ThetaOperator.parse(args.expr)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return ThetaOperator.parse(fh.read())
    if args.key:
        return build_named(args.key).op
    entry = cat.get_entry(args.catalog)
    if not entry.has_operator:
        raise CyopError(f"catalog entry {entry.id} has no operator parameters")
    return entry.operator()


def _operator_or_name(text):
    try:
        return build_named(text).op
    except CyopError:
        return ThetaOperator.parse(text)


def _check_order(args, err):
    order = getattr(args, "order", None)
    if order is None:
        return
    if order < 1:
        raise UsageError("--order must be positive")
    if order > ORDER_WARN:
        print(f"warning: order {order} above {ORDER_WARN}; exact coefficients grow quickly", file=err)


# -- subcommands -------------------------------------------------------------

def cmd_series(args, out):
    out.write(format_series(holomorphic_solution(resolve_operator(args), args.order)) + "\n")


def cmd_frobenius(args, out):
    basis = frobenius_basis(resolve_operator(args), args.order)
    for k, f in enumerate(basis.parts):
        out.write(f"f{k} = {format_series(f)}\n")


def cmd_qseries(args, out):
    basis = frobenius_basis(resolve_operator(args), args.order)
    out.write(f"q = {format_series(q_coordinate(basis))}\n")
    out.write(f"x = {format_series(mirror_map(basis), 'q')}\n")


def cmd_yukawa(args, out):
    K = yukawa_coupling(frobenius_basis(resolve_operator(args), args.order))
    out.write(f"K = {format_series(K, 'q')}\n")


def cmd_instantons(args, out):
    count = args.count if args.count is not None else args.order
    order = max(args.order, count)
    rep = instanton_report(resolve_operator(args), order, count)
    if args.format == "csv":
        out.write("d;n_d\n")
        for d, v in enumerate(rep.n, start=1):
            out.write(f"{d};{format_rational(v)}\n")
    else:
        out.write(_ns(rep.n) + "\n")
    for r in rep.integrality:
        if not r.integral:
            out.write(r.format() + "\n")


def cmd_cycheck(args, out):
    op = resolve_operator(args)
    if op.order == 4:
        num = q_numerator_poly(op)
        if num.is_zero():
            out.write("Q = 0 (Calabi-Yau condition holds)\n")
        else:
            out.write(f"Q = {cy_quantity_Q(op).format()}\n")
            out.write(f"numerator: {num.format()}\n")
    elif op.order == 3:
        W = cy_quantity_W(op)
        if W.is_zero():
            out.write("W = 0 (Calabi-Yau condition holds)\n")
        else:
            out.write(f"W = {W.format()}\n")
            out.write(f"numerator: {W.num.format()}\n")
    else:
        raise CyopError(f"no Calabi-Yau condition for order {op.order}")


def cmd_riemann(args, out):
    out.write(riemann_symbol(resolve_operator(args)).format() + "\n")


def _params_from_list(text, convention):
    vals = [parse_rational(v) for v in text.split(",")]
    if len(vals) != 10:
        raise UsageError("--params needs a,b,c,d,e,f,alpha,beta,gamma,delta (10 values)")
    return DegreeTwoParams(*vals[:6], exponents=vals[6:], sign_convention=convention)


def cmd_classify(args, out):
    if args.params:
        if any(getattr(args, k, None) for k in ("expr", "file", "key", "catalog")):
            raise UsageError("give either --params or an operator source")
        params = _params_from_list(args.params, args.convention)
    else:
        op = resolve_operator(args)
        if op.order == 3:
            label = classify_order3(op)
            out.write(f"{label}\n")
            return
        if op.order != 4 or op.degree > 2:
            raise CyopError("classification needs an order-4 operator of degree <= 2 or order 3")
        params = DegreeTwoParams.from_operator(op)
    labels = classify_order4(params)
    out.write("labels: " + (", ".join(sorted(str(lab) for lab in labels)) or "(none)") + "\n")
    rel = component_relations(params) if params.f != 0 else None
    if rel:
        for lab, eqs in rel.items():
            vals = "; ".join(f"{t} = {format_rational(v)}" for t, v in eqs)
            out.write(f"{lab}: {vals}\n")


def cmd_hadamard(args, out):
    series = [holomorphic_solution(_operator_or_name(t), args.order) for t in args.factors]
    out.write(format_series(hadamard_all(series)) + "\n")


def cmd_moebius(args, out):
    s = holomorphic_solution(resolve_operator(args), args.order)
    out.write(format_series(moebius_pullback(s, parse_rational(args.N))) + "\n")


def cmd_fit(args, out):
    if args.series:
        if any(getattr(args, k, None) for k in ("expr", "file", "key", "catalog")):
            raise UsageError("give either --series or an operator source")
        s = parse_series(args.series)
    else:
        s = holomorphic_solution(resolve_operator(args), args.order)
    res = fit_operator(s, args.op_order, args.degree, args.holdout)
    out.write(res.op.format() + "\n")
    out.write(res.residual_rank_info + "\n")


def cmd_build(args, out):
    if args.list or not args.name:
        if not args.list:
            raise UsageError("build needs a registry key (or --list)")
        for k in registry_keys():
            out.write(k + "\n")
        return
    named = build_named(args.name)
    out.write(f"{named.key}: {named.op.format()}\n")
    if named.description:
        out.write(f"  {named.description}\n")
    out.write(f"  y0 = {format_series(holomorphic_solution(named.op, args.order))}\n")


def cmd_fingerprint(args, out):
    ids = cver.fingerprint_lookup(parse_rational(args.n1), parse_rational(args.n3))
    out.write((", ".join(ids) if ids else "no match") + "\n")
    return 0 if ids else 1


def cmd_catalog(args, out):
    entries = cat.load_catalog()
    if args.action == "list":
        for e in entries:
            out.write(f"{e.id}\t{e.status}\t{e.source}\t{_ns(e.expected_n, ',')}\n")
    elif args.action == "get":
        if not args.ids:
            raise UsageError("catalog get needs an id")
        for i in args.ids:
            e = cat.get_entry(i, entries)
            out.write(f"id: {e.id}\naesz: {e.aesz}\nsource: {e.source}\nstatus: {e.status}\n")
            if e.has_operator:
                p = e.params
                out.write(f"a..f (minus convention): {_ns((p.a, p.b, p.c, p.d, p.e, p.f))}\n")
                out.write(f"exponents at infinity: {_ns(p.exponents)}\n")
                out.write(f"operator: {e.operator().format()}\n")
            out.write(f"n1..n3: {_ns(e.expected_n)}\n")
            for label, text in (("note", e.note), ("conflict", e.conflict)):
                if text:
                    out.write(f"{label}: {text}\n")
    elif args.action == "fingerprint":
        if len(args.ids) != 2:
            raise UsageError("catalog fingerprint needs n1 and n3")
        ids = cver.fingerprint_lookup(parse_rational(args.ids[0]), parse_rational(args.ids[1]), entries)
        out.write((", ".join(ids) if ids else "no match") + "\n")
        return 0 if ids else 1
    else:
        if args.all == bool(args.ids):
            raise UsageError("catalog verify needs --all or a list of ids")
        chosen = entries if args.all else [cat.get_entry(i, entries) for i in args.ids]
        outcomes = cver.verify_all(chosen, args.order, args.jobs)
        out.write(cver.export_report(outcomes, args.format, timing=not args.no_timing))
        if args.format == "text":
            s = cver.summarize(outcomes)
            out.write(f"proper rows: {len(s.exact)} exact, {len(s.flagged)} flagged, "
                      f"{len(s.mismatch)} mismatch\n")
        return 1 if any(o.match == "mismatch" for o in outcomes) else 0
    return 0


# -- parser ------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="cyop", description="Exact workbench for Calabi-Yau operators.")
    sub = ap.add_subparsers(dest="command", metavar="command")
    sub.required = True

    def add(name, func, help, source=True, order=True):
        p = sub.add_parser(name, help=help)
        if source:
            _add_source(p)
        if order:
            _add_order(p)
        p.set_defaults(func=func)
        return p

    add("series", cmd_series, "holomorphic solution y0")
    add("frobenius", cmd_frobenius, "pure series f0..f3 of the Frobenius basis")
    add("qseries", cmd_qseries, "q-coordinate and mirror map")
    add("yukawa", cmd_yukawa, "Yukawa coupling K(q)")
    p = add("instantons", cmd_instantons, "instanton numbers n_1, n_2, ...")
    p.add_argument("--count", type=int, help="how many numbers (default: the order)")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    add("cycheck", cmd_cycheck, "Calabi-Yau condition Q (order 4) or W (order 3)", order=False)
    add("riemann", cmd_riemann, "Riemann symbol", order=False)
    p = add("classify", cmd_classify, "component labels of a degree-two operator", order=False)
    p.add_argument("--params", help="a,b,c,d,e,f,alpha,beta,gamma,delta")
    p.add_argument("--convention", choices=("plus", "minus"), default="plus",
                   help="sign convention of --params (default plus)")
    p = add("hadamard", cmd_hadamard, "Hadamard product of holomorphic solutions", source=False)
    p.add_argument("factors", nargs="+", help="registry keys or operator expressions")
    p = add("moebius", cmd_moebius, "y(-x/(1-Nx))/(1-Nx)")
    p.add_argument("--N", required=True, help="rational N")
    p = add("fit", cmd_fit, "recover an operator from series coefficients")
    p.add_argument("--series", help="series text, e.g. '1 + 12*x + ... + O(x^30)'")
    p.add_argument("--op-order", type=int, default=4, help="order in theta (default 4)")
    p.add_argument("--degree", type=int, default=2, help="degree in x (default 2)")
    p.add_argument("--holdout", type=int, default=5)
    p = add("build", cmd_build, "print a registry operator and its solution head", source=False)
    p.add_argument("name", nargs="?", help="registry key")
    p.add_argument("--list", action="store_true", help="list registry keys")
    p = add("fingerprint", cmd_fingerprint, "catalog ids with |n1|, |n3| equal to the given values",
            source=False, order=False)
    p.add_argument("n1")
    p.add_argument("n3")
    p = add("catalog", cmd_catalog, "catalog verify|list|get|fingerprint", source=False, order=False)
    p.add_argument("action", choices=("verify", "list", "get", "fingerprint"))
    p.add_argument("ids", nargs="*")
    _add_order(p)
    p.add_argument("--all", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--seed", type=int, default=0, help="accepted for uniformity; verification is deterministic")
    return ap


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        _check_order(args, err)
        code = args.func(args, out)
    except (UsageError, OperatorSyntaxError, MixedVariableError) as exc:
        ap.print_usage(err)
        err.write(f"cyop: error: {exc}\n")
        return 2
    except (CyopError, ArithmeticError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"cyop: {msg}\n")
        return 1
    return code or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
