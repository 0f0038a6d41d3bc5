"""Command-line front end.

Exit codes: 0 all requested checks passed (or the computation finished),
1 a requested axiom check failed (the witness is printed), 2 bad input or
usage.  `--report PATH` writes a JSON document with a `version` field and
rationals rendered as strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .admissibility import SUBGROUPS, check_g_associative
from .alg_io import (
    ParseError,
    jsonable,
    parse_algebra,
    parse_linear_map,
    parse_multiplier,
    serialize_algebra,
)
from .algebra import (
    AxiomReport,
    ColourAlgebra,
    check_associative_axioms,
    check_bihom_axioms,
    check_lie_axioms,
)
from .cohomology import (
    DEFAULT_PREFACTOR,
    PREFACTOR_CONVENTIONS,
    adjoint_rep,
    cohomology_dims,
    realized_gammas,
)
from .constructions import CORPUS_NAMES, corpus, yau_twist
from .derivations import (
    centroid_space,
    derivation_space,
    generalized_derivation_space,
    quasi_centroid_space,
    quasi_derivation_space,
)
from .grading import format_degree, parse_degree
from .multipliers import delta_twist, sigma_twist, validate_multiplier

_SUITES = {
    "lie": check_lie_axioms,
    "associative": check_associative_axioms,
    "bihom": check_bihom_axioms,
}

_DERIVATION_KINDS = {
    "der": derivation_space,
    "qder": quasi_derivation_space,
    "gder": generalized_derivation_space,
    "centroid": centroid_space,
    "qcentroid": quasi_centroid_space,
}


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load(path: str) -> ColourAlgebra:
    return parse_algebra(_read(path))


def _print_report(report: AxiomReport) -> None:
    for it in report.items:
        if it.passed:
            line = f"  ok    {it.name}"
        elif it.advisory:
            line = f"  note  {it.name} (advisory)"
        else:
            line = f"  FAIL  {it.name}"
        if it.note:
            line += f"  [{it.note}]"
        print(line)
        if not it.passed and it.witness is not None:
            w = it.witness
            where = ", ".join(w.names) if w.names else "(global)"
            print(f"          at {where}: defect {w.defect_str}")


def _write_json(path: Optional[str], command: str, payload) -> None:
    if not path:
        return
    doc = {"version": 1, "command": command, "payload": jsonable(payload)}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _emit_algebra(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args) -> int:
    a = _load(args.file)
    suite = args.axioms
    if suite == "auto":
        suite = a.kind if a.kind in ("lie", "associative") else "bihom"
    report = _SUITES[suite](a)
    print(f"{args.file}: {suite} suite")
    _print_report(report)
    verdict = "PASS" if report.passed else "FAIL"
    print(verdict)
    _write_json(
        args.report, "check", {"suite": suite, **report.to_dict()}
    )
    return 0 if report.passed else 1


def _cmd_twist(args) -> int:
    a = _load(args.file)
    a2 = parse_linear_map(_read(args.a2), a.basis, "a2")
    b2 = parse_linear_map(_read(args.b2), a.basis, "b2")
    twisted = yau_twist(a, a2, b2)
    report = check_lie_axioms(twisted)
    _emit_algebra(serialize_algebra(twisted), args.output)
    if not report.passed:
        print("twisted algebra FAILS the bracket suite", file=sys.stderr)
        _print_report(report)
    _write_json(args.report, "twist", report.to_dict())
    return 0 if report.passed else 1


def _run_multiplier_twist(args) -> int:
    a = _load(args.file)
    table = parse_multiplier(_read(args.sigma), a.basis.group)
    occurring = sorted(set(a.basis.degrees))
    verdict = validate_multiplier(table, occurring, mode=args.mode)
    if not verdict.passed:
        print("multiplier validation failed:")
        _print_report(verdict)
        _write_json(args.report, args.command, verdict.to_dict())
        return 1
    twisted = (
        sigma_twist(a, table)
        if args.command == "sigma-twist"
        else delta_twist(a, table)
    )
    report = check_lie_axioms(twisted)
    _emit_algebra(serialize_algebra(twisted), args.output)
    if not report.passed:
        print("twisted algebra FAILS the bracket suite", file=sys.stderr)
        _print_report(report)
    _write_json(args.report, args.command, report.to_dict())
    return 0 if report.passed else 1


def _cmd_admissible(args) -> int:
    a = _load(args.file)
    groups = list(SUBGROUPS) if args.group == "all" else [args.group]
    payload = {}
    failed = False
    for g in groups:
        report = check_g_associative(a, g)
        payload[g] = report.to_dict()
        print(f"{g}: {'PASS' if report.passed else 'FAIL'}")
        if not report.passed:
            failed = True
            _print_report(report)
    _write_json(args.report, "admissible", payload)
    return 1 if failed else 0


def _cmd_cohomology(args) -> int:
    a = _load(args.file)
    rep = adjoint_rep(a, args.s, args.l)
    if args.degree is not None:
        gammas = [parse_degree(a.basis.group, args.degree)]
    else:
        gammas = realized_gammas(rep, args.n)
    payload = []
    for g in gammas:
        res = cohomology_dims(
            rep, args.n, args.r, g, prefactor=args.prefactor
        )
        payload.append(res.to_dict())
        print(
            f"degree {format_degree(g) or '()'}: "
            f"dim C={res.dim_cochains} Z={res.dim_cocycles} "
            f"B={res.dim_coboundaries} H={res.dim_h}"
        )
    _write_json(args.report, "cohomology", payload)
    return 0


def _cmd_derivations(args) -> int:
    a = _load(args.file)
    solver = _DERIVATION_KINDS[args.kind]
    group = a.basis.group
    if args.degree is not None:
        gammas = [parse_degree(group, args.degree)]
    else:
        gammas = sorted(
            {
                group.sub(a.degree(u), a.degree(t))
                for u in range(a.dim)
                for t in range(a.dim)
            }
        )
    kwargs = {}
    if args.kind in ("centroid", "qcentroid") and args.strict:
        kwargs["strict"] = True
    payload = []
    total = 0
    for g in gammas:
        res = solver(a, args.k, args.l, g, **kwargs)
        payload.append(res.to_dict())
        total += res.dimension
        print(f"degree {format_degree(g) or '()'}: dim {res.dimension}")
    print(f"total: {total}")
    _write_json(args.report, "derivations", payload)
    return 0


def _cmd_example(args) -> int:
    if args.list:
        for name in CORPUS_NAMES:
            print(name)
        return 0
    if not args.name:
        print("error: name required (or --list)", file=sys.stderr)
        return 2
    a = corpus(args.name)
    _emit_algebra(serialize_algebra(a), args.output)
    return 0


def _cmd_roundtrip(args) -> int:
    text = _read(args.file)
    a = parse_algebra(text)
    canon = serialize_algebra(a)
    b = parse_algebra(canon)
    again = serialize_algebra(b)
    if a != b or canon != again:
        print("round-trip MISMATCH", file=sys.stderr)
        return 1
    print(f"{args.file}: round-trip OK ({a.dim}-dim, kind {a.kind})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bihomlie",
        description="Exact computations with BiHom-Lie colour algebras.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--report", help="write a JSON report to this path")
        return sp

    sp = add("check", _cmd_check, "run an axiom suite on an algebra file")
    sp.add_argument("file")
    sp.add_argument(
        "--axioms",
        choices=("auto", "lie", "associative", "bihom"),
        default="auto",
    )

    sp = add("twist", _cmd_twist, "twist a bracket by two even morphisms")
    sp.add_argument("file")
    sp.add_argument("a2", help="side file of 'x -> expr' lines")
    sp.add_argument("b2", help="side file of 'x -> expr' lines")
    sp.add_argument("-o", "--output", help="write the result here")

    for name, mode in (("sigma-twist", "symmetric"), ("delta-twist", "cocycle")):
        sp = add(
            name,
            _run_multiplier_twist,
            "rescale a bracket by a multiplier table",
        )
        sp.set_defaults(mode=mode)
        sp.add_argument("file")
        sp.add_argument("sigma", help="side file of 'g h v' lines")
        sp.add_argument("-o", "--output", help="write the result here")

    sp = add(
        "admissible",
        _cmd_admissible,
        "signed associator sums over S3 subgroups",
    )
    sp.add_argument("file")
    sp.add_argument(
        "--group", choices=tuple(SUBGROUPS) + ("all",), default="all"
    )

    sp = add("cohomology", _cmd_cohomology, "cochain/cocycle dimensions")
    sp.add_argument("file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--rep", choices=("adjoint",), default="adjoint")
    sp.add_argument("--s", type=int, default=0)
    sp.add_argument("--l", type=int, default=1)
    sp.add_argument("--degree", help="comma-separated tuple; default: all")
    sp.add_argument(
        "--prefactor",
        choices=PREFACTOR_CONVENTIONS,
        default=DEFAULT_PREFACTOR,
    )

    sp = add("derivations", _cmd_derivations, "twisted derivation solvers")
    sp.add_argument("file")
    sp.add_argument(
        "--kind", choices=tuple(_DERIVATION_KINDS), required=True
    )
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--l", type=int, default=0)
    sp.add_argument("--degree", help="comma-separated tuple; default: all")
    sp.add_argument(
        "--strict",
        action="store_true",
        help="centroid kinds: do not impose commutation with beta",
    )

    sp = add("example", _cmd_example, "emit a built-in algebra file")
    sp.add_argument("name", nargs="?")
    sp.add_argument("-o", "--output", help="write the file here")
    sp.add_argument("--list", action="store_true")

    sp = add("roundtrip", _cmd_roundtrip, "parse/serialize fixpoint check")
    sp.add_argument("file")

    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        code = e.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, RuntimeError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
