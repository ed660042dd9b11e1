"""Command-line front end.

Commands:
    verify  run the obstruction family on a class (default: the
            counterexample class) over two lens-space factors
    dual    Poincare-dualize a class over two lens-space factors
    ahss    print the second page, the stability report, and the d5
            verdict over B(Z_p x Z_p)
    basis   print the integral homology generating sets per degree
    series  print cohomology dimensions of the two-factor lens product

Exit status: 0 on success, 2 on expression/table parse errors, 3 on
precondition violations (bad prime, inhomogeneous input, non-integral
class, insufficient table depth).
"""

import argparse
import json
import sys
from dataclasses import dataclass

from .ahss import CoefficientTable, build_e2_page, evaluate_d5_xi, page_stability_check
from .algebra import SpaceModel, poincare_series, thom_class
from .duality import integral_basis, mod_p_homology_dimensions, poincare_dual
from .expressions import ParseError, format_cohomology, format_homology, parse_cohomology
from .modp import Prime
from .obstruction import is_integral, thom_verdict

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3


class PreconditionError(ValueError):
    pass


class TableError(ValueError):
    """Malformed coefficient-table file (a parse-class failure)."""


@dataclass
class RunConfig:
    prime: Prime
    command: str
    expression: str | None
    max_degree: int | None
    table_path: str | None
    fmt: str
    signed: bool


def _build_config(args):
    try:
        prime = Prime(args.prime)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    cap = getattr(args, "max_degree", None)
    if cap is not None and cap < 2 * prime + 2:
        raise PreconditionError(f"--max-degree must be at least {2 * prime + 2} for p = {int(prime)}")
    return RunConfig(
        prime=prime,
        command=args.command,
        expression=getattr(args, "expr", None),
        max_degree=cap,
        table_path=getattr(args, "omega_table", None),
        fmt=args.format,
        signed=args.signed,
    )


def _emit(cfg, lines, payload):
    if cfg.fmt == "json":
        doc = {
            "prime": int(cfg.prime),
            "command": cfg.command,
            "input": cfg.expression,
            "result": payload.get("result"),
            "verdict": payload.get("verdict"),
            "assumptions": payload.get("assumptions", []),
        }
        print(json.dumps(doc, indent=2))
    else:
        for line in lines:
            print(line)


def _parse_expr(cfg, space):
    if cfg.expression is None:
        return thom_class(space)
    return parse_cohomology(cfg.expression, space)


def cmd_verify(cfg):
    space = SpaceModel.lens_product(cfg.prime)
    x = _parse_expr(cfg, space)
    integrality = is_integral(x)
    if not integrality:
        raise PreconditionError(
            f"class is not integral (status: {integrality.status}); "
            "the obstruction family only constrains integral classes"
        )
    report = thom_verdict(x)
    lines = [
        f"prime: {int(cfg.prime)}",
        f"class: {format_cohomology(x, cfg.signed)}",
        "integrality: integral (the Bockstein vanishes)",
    ]
    for i, w in report.obstructions:
        rendered = format_cohomology(w, cfg.signed) if w else "0"
        lines.append(f"beta P^{i}: {rendered}")
    if report.note:
        lines.append(f"note: {report.note}")
    lines.append(f"verdict: {report.verdict}")
    payload = {"result": report.as_dict(), "verdict": report.verdict, "assumptions": []}
    _emit(cfg, lines, payload)


def cmd_dual(cfg):
    if cfg.expression is None:
        raise PreconditionError("dual needs --expr")
    space = SpaceModel.lens_product(cfg.prime)
    x = parse_cohomology(cfg.expression, space)
    dual = poincare_dual(x)
    rendered = format_homology(dual, cfg.signed)
    lines = [f"D({format_cohomology(x, cfg.signed)}) = {rendered}"]
    payload = {"result": rendered, "verdict": None, "assumptions": []}
    _emit(cfg, lines, payload)


def cmd_ahss(cfg):
    p = cfg.prime
    cap = cfg.max_degree if cfg.max_degree is not None else 2 * p + 5
    if cap < 2 * p + 5:
        raise PreconditionError(f"--max-degree must be at least {2 * p + 5} for the d5 analysis")
    if cfg.table_path is None:
        table = CoefficientTable.default()
    else:
        try:
            table = CoefficientTable.from_file(cfg.table_path)
        except ValueError as exc:
            raise TableError(str(exc)) from exc
    try:
        page = build_e2_page(p, table, cap)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc
    stability = page_stability_check(page)
    verdict = evaluate_d5_xi(p, table)

    lines = [f"E^2 page for B(Z_{int(p)} x Z_{int(p)}), total degree <= {cap}:"]
    for t in range(cap + 1):
        row = [str(page.entry(s, t)) for s in range(cap - t + 1)]
        if all(g == "0" for g in row):
            lines.append(f"  t={t:>2}: 0")
        else:
            lines.append(f"  t={t:>2}: " + "  ".join(row))
    forced = ", ".join(f"d{r}" for r, ok in stability.forced_zero if ok)
    lines.append(f"forced zero for degree reasons: {forced or 'none'}")
    lines.append(
        "possible nonzero differentials (r, s, t): "
        + (", ".join(map(str, stability.possible)) or "none")
    )
    lines.append(
        "degree rule (t = 0 mod 4, r = 1 mod 4): "
        + ("respected" if stability.rule_respected else "VIOLATED")
    )
    lines.append(f"d5 source/target: {verdict.source_bidegree} -> {verdict.target_bidegree}")
    lines.append(f"d5 boundary class: {verdict.boundary}")
    lines.append(f"d5 reduced: {verdict.reduced}")
    lines.append(f"target group H_{2 * p - 4}(X; Omega_4) = {verdict.target_group}")
    status = "nontrivial" if verdict.nontrivial else "trivial"
    if verdict.conditional:
        status += " (conditional on: " + "; ".join(verdict.assumptions) + ")"
    lines.append(f"d5 verdict: {status}")

    payload = {
        "result": {
            "grid": {f"{s},{t}": str(g) for (s, t), g in sorted(page.grid.items())},
            "stability": {
                "forced_zero": dict((f"d{r}", ok) for r, ok in stability.forced_zero),
                "possible": list(stability.possible),
                "rule_respected": stability.rule_respected,
            },
            "d5": verdict.as_dict(),
        },
        "verdict": ("nontrivial_conditional" if verdict.conditional else
                    "nontrivial" if verdict.nontrivial else "trivial"),
        "assumptions": list(verdict.assumptions),
    }
    _emit(cfg, lines, payload)


def cmd_basis(cfg):
    p = cfg.prime
    cap = cfg.max_degree if cfg.max_degree is not None else 2 * p + 4
    space = SpaceModel.classifying_product(p, 2, degree_cap=max(cap + 2, 2 * p + 6))
    lines = []
    result = {}
    dims = mod_p_homology_dimensions(space, cap)
    for n in range(cap + 1):
        basis = integral_basis(n, space)
        rendered = [format_homology(e.as_class(space), cfg.signed) for e in basis]
        lines.append(f"degree {n}: {len(basis)} integral generator(s); mod-p dimension {dims[n]}")
        for r in rendered:
            lines.append(f"    {r}")
        result[str(n)] = {"integral_generators": rendered, "mod_p_dimension": dims[n]}
    payload = {"result": result, "verdict": None, "assumptions": []}
    _emit(cfg, lines, payload)


def cmd_series(cfg):
    p = cfg.prime
    cap = cfg.max_degree if cfg.max_degree is not None else 2 * p + 6
    space = SpaceModel.lens_product(p)
    dims = poincare_series(space, min(cap, 2 * (2 * p + 1)))
    lines = [f"cohomology dimensions of the two-factor lens product (p = {int(p)}):"]
    lines += [f"  degree {n}: {d}" for n, d in enumerate(dims)]
    payload = {"result": dims, "verdict": None, "assumptions": []}
    _emit(cfg, lines, payload)


_COMMANDS = {
    "verify": cmd_verify,
    "dual": cmd_dual,
    "ahss": cmd_ahss,
    "basis": cmd_basis,
    "series": cmd_series,
}


def _make_parser():
    parser = argparse.ArgumentParser(
        prog="lenscalc",
        description="Exact realizability obstructions over products of lens spaces / B Z_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("verify", "run the obstruction family on a class (default: the counterexample)"),
        ("dual", "Poincare-dualize a class over two lens-space factors"),
        ("ahss", "print the E^2 page, stability report, and d5 verdict"),
        ("basis", "print integral homology generating sets"),
        ("series", "print cohomology dimensions per degree"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--prime", type=int, required=True, help="odd prime p >= 3")
        cmd.add_argument("--expr", type=str, default=None, help="class expression, e.g. 'u1*v2*u2^2 - v1*u2^3'")
        cmd.add_argument("--max-degree", type=int, default=None, dest="max_degree")
        cmd.add_argument("--omega-table", type=str, default=None, dest="omega_table",
                         help="path to a bordism coefficient table file")
        cmd.add_argument("--format", choices=("text", "json"), default="text")
        cmd.add_argument("--signed", action="store_true",
                         help="render coefficient p-1 as a minus sign")
    return parser


def main(argv=None):
    args = _make_parser().parse_args(argv)
    try:
        cfg = _build_config(args)
        _COMMANDS[args.command](cfg)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        print(exc.pointer(), file=sys.stderr)
        return EXIT_PARSE
    except TableError as exc:
        print(f"table error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, OSError) as exc:
        # precondition violations: bad prime, inhomogeneous or non-integral
        # input, insufficient table depth, unreadable files
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
