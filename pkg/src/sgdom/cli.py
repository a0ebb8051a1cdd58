"""Command-line surface: solve, verify, bound, gen, reduce, xcheck.

Exit codes: 0 success, 1 infeasible or failed check, 2 format/usage error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import DegreeProfile, bound_terms, effective_bound, lower_bound
from .certify import (
    Mode,
    emit_certificate,
    is_minimal_skdf,
    parse_certificate,
    verify,
)
from .extremal import ExtremalSpec, build_extremal
from .graph import GraphFormatError, emit_graph, one_factorization, parse_graph
from .reductions import (
    ONE_IN_THREE,
    emit_provenance,
    parse_cnf,
    reduce_1in3,
    reduce_mds,
    reduce_mtds,
)
from .solve import (
    CAP_EXCEEDED,
    INFEASIBLE,
    bnb_sigma,
    brute_force_sigma,
    brute_force_upper,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _record(**fields) -> dict:
    base = {
        "parameter": None,
        "k": None,
        "mode": None,
        "value": None,
        "status": None,
        "certificate": None,
        "nodes_explored": None,
        "bound_num": None,
        "bound_den": None,
        "threshold_a": None,
        "threshold_b": None,
    }
    base.update(fields)
    return base


def _emit(args, text_lines: list[str], record: dict) -> None:
    if args.format == "structured":
        out = json.dumps(record, indent=2, sort_keys=True) + "\n"
    else:
        out = "\n".join(text_lines) + "\n"
    if getattr(args, "output", None):
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)


def _read_graph(path: str):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    mode = Mode(args.mode)
    if args.param == "upper":
        result = brute_force_upper(g, args.k, max_n=args.max_brute_n)
        name = "gamma_ks"
    elif args.algo == "bnb":
        result = bnb_sigma(g, args.k, mode, node_budget=args.node_budget)
        name = "sigma_ks" if mode is Mode.CLOSED else "sigma_tks"
    else:
        result = brute_force_sigma(g, args.k, mode, max_n=args.max_brute_n)
        name = "sigma_ks" if mode is Mode.CLOSED else "sigma_tks"
    lines = [f"status = {result.status}"]
    if result.value is not None:
        lines.insert(0, f"{name} = {result.value}")
    lines.append(f"nodes = {result.nodes_explored}")
    if result.certificate is not None:
        lines.append(emit_certificate(result.certificate, args.k, mode).rstrip("\n"))
    record = _record(
        parameter=name,
        k=args.k,
        mode=mode.value,
        value=result.value,
        status=result.status,
        certificate=list(result.certificate.values) if result.certificate else None,
        nodes_explored=result.nodes_explored,
    )
    _emit(args, lines, record)
    if result.status == CAP_EXCEEDED:
        return EXIT_CAP
    if result.status == INFEASIBLE:
        return EXIT_FAIL
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    cert_k, cert_mode, f = parse_certificate(Path(args.cert).read_text(encoding="utf-8"))
    k = args.k if args.k is not None else cert_k
    mode = Mode(args.mode) if args.mode else cert_mode
    report = verify(g, k, mode, f)
    lines = [
        f"feasible = {'yes' if report.feasible else 'no'}",
        f"weight = {f.weight}",
        f"min_slack = {report.min_slack}",
    ]
    status = "feasible" if report.feasible else "infeasible"
    if not report.feasible:
        lines.append("violations = " + " ".join(str(v + 1) for v in sorted(report.violations)))
    minimal = None
    if args.minimal and report.feasible:
        if mode is not Mode.CLOSED:
            raise GraphFormatError("minimality is only defined in closed mode")
        mreport = is_minimal_skdf(g, k, f)
        minimal = mreport.minimal
        lines.append(f"minimal = {'yes' if mreport.minimal else 'no'}")
        if not mreport.minimal:
            lines.append(f"offending = {mreport.offending + 1}")
            status = "not_minimal"
    record = _record(
        parameter="verify",
        k=k,
        mode=mode.value,
        value=f.weight,
        status=status,
        certificate=list(f.values),
    )
    _emit(args, lines, record)
    ok = report.feasible and minimal is not False
    return EXIT_OK if ok else EXIT_FAIL


def _cmd_bound(args) -> int:
    if args.graph:
        g = _read_graph(args.graph)
        profile = DegreeProfile.of_graph(g, args.k)
    else:
        if args.n is None or args.delta is None or args.Delta is None:
            raise GraphFormatError("bound needs a graph file or --n/--delta/--Delta")
        profile = DegreeProfile(args.n, args.delta, args.Delta, args.k)
    mode = Mode(args.mode)
    num, den = bound_terms(profile, mode)
    value = lower_bound(profile, mode)
    eff = effective_bound(profile, mode)
    shown = str(value) if value.denominator > 1 else str(value.numerator)
    lines = [
        f"bound = {shown} ({profile.n * num}/{den})",
        f"effective = {eff}",
    ]
    record = _record(
        parameter="lower_bound",
        k=args.k,
        mode=mode.value,
        value=eff,
        status="ok",
        bound_num=value.numerator,
        bound_den=value.denominator,
    )
    _emit(args, lines, record)
    return EXIT_OK


def _cmd_gen_extremal(args) -> int:
    spec = ExtremalSpec(args.k, args.delta, args.Delta, args.t, Mode(args.mode))
    g, cert = build_extremal(spec)
    bound = lower_bound(DegreeProfile(g.n, spec.delta, spec.Delta, spec.k), spec.mode)
    report = [
        f"a = {spec.a}",
        f"b = {spec.b}",
        f"t = {spec.t}",
        f"|P| = {len(spec.p_vertices)}",
        f"|Q| = {len(spec.q_vertices)}",
        f"bound = {bound.numerator}/{bound.denominator}",
        f"weight = {cert.weight}",
    ]
    if args.output:
        base = Path(args.output)
        base.with_suffix(".graph").write_text(emit_graph(g), encoding="utf-8")
        base.with_suffix(".cert").write_text(
            emit_certificate(cert, spec.k, spec.mode), encoding="utf-8"
        )
        base.with_suffix(".report").write_text("\n".join(report) + "\n", encoding="utf-8")
        sys.stdout.write("\n".join(report) + "\n")
    else:
        sys.stdout.write(emit_graph(g))
        sys.stdout.write(emit_certificate(cert, spec.k, spec.mode))
        sys.stdout.write("".join(f"c {line}\n" for line in report))
    return EXIT_OK


def _cmd_gen_onefactor(args) -> int:
    factors = one_factorization(args.n)
    for i, factor in enumerate(factors, start=1):
        pairs = " ".join(f"({u + 1},{v + 1})" for u, v in sorted(factor.pairs))
        sys.stdout.write(f"round {i}: {pairs}\n")
    return EXIT_OK


def _cmd_reduce(args) -> int:
    text = Path(args.input).read_text(encoding="utf-8")
    if args.source == ONE_IN_THREE:
        art = reduce_1in3(parse_cnf(text), args.k)
        threshold_line = f"threshold: {art.threshold_value}"
    else:
        g = parse_graph(text)
        art = (reduce_mtds if args.source == "mtds" else reduce_mds)(g, args.k)
        off = art.threshold_offset
        threshold_line = f"threshold: r -> 2r {'+' if off >= 0 else '-'} {abs(off)}"
    if args.output:
        base = Path(args.output)
        base.with_suffix(".graph").write_text(emit_graph(art.graph), encoding="utf-8")
        base.with_suffix(".prov").write_text(emit_provenance(art), encoding="utf-8")
        sys.stdout.write(threshold_line + "\n")
    else:
        sys.stdout.write(emit_graph(art.graph))
        sys.stdout.write(emit_provenance(art))
        sys.stdout.write(threshold_line + "\n")
    return EXIT_OK


def _cmd_xcheck(args) -> int:
    """Fast self-check: a subset of the acceptance properties."""
    import random

    from .graph import Graph, complete, cycle

    failures = 0

    def check(name: str, ok: bool) -> None:
        nonlocal failures
        sys.stdout.write(f"{'PASS' if ok else 'FAIL'} {name}\n")
        if not ok:
            failures += 1

    check("sigma_1S(C_5) == 3", brute_force_sigma(cycle(5), 1, Mode.CLOSED).value == 3)
    check("sigma_1S(K_4) == 2", brute_force_sigma(complete(4), 1, Mode.CLOSED).value == 2)
    check(
        "sigma_t2S(K_5) == 3", brute_force_sigma(complete(5), 2, Mode.TOTAL).value == 3
    )
    rng = random.Random(7)
    agree = True
    for _ in range(20):
        n = rng.randint(4, 9)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
        ]
        g = Graph(n, edges)
        for k in (1, 2):
            for mode in (Mode.CLOSED, Mode.TOTAL):
                bf = brute_force_sigma(g, k, mode)
                bb = bnb_sigma(g, k, mode)
                if bf.value != bb.value:
                    agree = False
    check("bnb == brute force on random graphs", agree)
    spec = ExtremalSpec(1, 2, 3, 4, Mode.CLOSED)
    g, cert = build_extremal(spec)
    ok = (
        verify(g, 1, Mode.CLOSED, cert).feasible
        and cert.weight == lower_bound(DegreeProfile(g.n, 2, 3, 1), Mode.CLOSED)
        and brute_force_sigma(g, 1, Mode.CLOSED).value == 4
    )
    check("extremal (k=1, delta=2, Delta=3, t=4) is sharp", ok)
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgd",
        description="Exact signed (total) k-domination toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["text", "structured"], default="text")
        p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("solve", help="compute sigma_kS / sigma_tkS / Gamma_kS")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["closed", "total"], default="closed")
    p.add_argument("--param", choices=["sigma", "upper"], default="sigma")
    p.add_argument("--algo", choices=["brute", "bnb"], default="bnb")
    p.add_argument("--max-brute-n", type=int, default=None)
    p.add_argument("--node-budget", type=int, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("graph")
    p.add_argument("--cert", required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--mode", choices=["closed", "total"], default=None)
    p.add_argument("--minimal", action="store_true")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bound", help="evaluate the degree-based lower bound")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["closed", "total"], default="closed")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--Delta", type=int, default=None)
    add_common(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("gen", help="generate extremal graphs or 1-factorizations")
    gen_sub = p.add_subparsers(dest="gen_kind", required=True)
    pe = gen_sub.add_parser("extremal")
    pe.add_argument("--k", type=int, required=True)
    pe.add_argument("--delta", type=int, required=True)
    pe.add_argument("--Delta", type=int, required=True)
    pe.add_argument("--t", type=int, required=True)
    pe.add_argument("--mode", choices=["closed", "total"], default="closed")
    pe.add_argument("-o", "--output", default=None)
    pe.set_defaults(func=_cmd_gen_extremal)
    pf = gen_sub.add_parser("onefactor")
    pf.add_argument("--n", type=int, required=True)
    pf.set_defaults(func=_cmd_gen_onefactor)

    p = sub.add_parser("reduce", help="build an NP-hardness reduction instance")
    p.add_argument("input")
    p.add_argument("--from", dest="source", choices=["mtds", "mds", "1in3"], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("xcheck", help="run a fast acceptance subset")
    p.set_defaults(func=_cmd_xcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except GraphFormatError as exc:
        sys.stderr.write(f"format error: {exc}\n")
        return EXIT_USAGE
    except FileNotFoundError as exc:
        sys.stderr.write(f"cannot read {exc.filename}\n")
        return EXIT_USAGE
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
