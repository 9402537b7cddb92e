"""Command-line interface: generate, fold, verify and inspect tables.

Exit codes: 0 on success (all verifications passing), 1 when a
verification suite reports violations, 2 on usage errors.  Every command
is deterministic; there is no randomness anywhere in the package.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bracket import BracketTable, build_inductive
from .cartan import build_cartan, default_epsilon, parse_type_label, standard_automorphism
from .closedform import closed_table
from .errors import (
    ChevBasisError,
    IllegalType,
    InternalInconsistency,
    NoFoldableSymmetry,
    NotARoot,
    NotSimplyLaced,
)
from .folding import fold, fold_source, folded_table
from .report import VerificationReport
from .roots import generate_roots
from .serialize import (
    csv_export,
    document_from_table,
    from_json_bytes,
    parse_coeffs,
    render_root,
    table_from_document,
    to_json_bytes,
)
from .verify import chevalley_audit, differential, jacobi_sweep, sl_n_oracle

USAGE_ERROR = 2


def _epsilon_for(cm, choice: str):
    eps = default_epsilon(cm)
    return eps.flipped() if choice == "flipped" else eps


def _build(family: str, rank: int, eps_choice: str, method: str) -> tuple[BracketTable, dict]:
    """Build a table for the requested type by the requested route."""
    cm = build_cartan(family, rank)
    if method == "inductive":
        rs = generate_roots(cm)
        return build_inductive(rs, _epsilon_for(cm, eps_choice)), {}
    if method == "closed":
        if not cm.simply_laced:
            raise NotSimplyLaced(f"--method closed needs a simply-laced type, not {cm.label}")
        rs = generate_roots(cm)
        return closed_table(rs, _epsilon_for(cm, eps_choice)), {}
    if method == "fold":
        parent_cm, auto = fold_source(family, rank)
        parent_rs = generate_roots(parent_cm)
        fs = fold(parent_rs, _epsilon_for(parent_cm, eps_choice), auto)
        meta = {"parent": parent_cm.label, "orbits": [list(o) for o in auto.orbits]}
        return folded_table(fs), meta
    raise IllegalType(f"unknown method {method!r}")


def _default_method(family: str) -> str:
    return "closed" if family in ("A", "D", "E") else "fold"


def _write_outputs(table: BracketTable, method: str, meta: dict, out: str, csv: str | None) -> None:
    doc = document_from_table(table, method, meta)
    Path(out).write_bytes(to_json_bytes(doc))
    if csv:
        Path(csv).write_bytes(csv_export(doc))


def _cmd_gen(args) -> int:
    family, rank = parse_type_label(args.type)
    method = args.method or _default_method(family)
    table, meta = _build(family, rank, args.epsilon, method)
    _write_outputs(table, "folded" if method == "fold" else method, meta, args.out, args.csv)
    print(f"wrote {table.rs.cartan.label} table ({method}) to {args.out}")
    return 0


def _cmd_fold(args) -> int:
    family, rank = parse_type_label(args.type)
    cm = build_cartan(family, rank)
    auto = standard_automorphism(cm)
    rs = generate_roots(cm)
    fs = fold(rs, _epsilon_for(cm, args.epsilon), auto)
    table = folded_table(fs)
    meta = {"parent": cm.label, "orbits": [list(o) for o in auto.orbits]}
    _write_outputs(table, "folded", meta, args.out, args.csv)
    print(f"folded {cm.label} onto {fs.folded_cartan.label}, wrote {args.out}")
    return 0


def _complementary_table(table: BracketTable, doc: dict) -> BracketTable:
    """An independently constructed table for differential comparison."""
    family, rank = parse_type_label(doc["type"])
    method = doc["provenance"]["method"]
    if method in ("closed", "folded"):
        return build_inductive(table.rs, table.eps)
    if table.rs.cartan.simply_laced:
        return closed_table(table.rs, table.eps)
    parent_cm, auto = fold_source(family, rank)
    parent_rs = generate_roots(parent_cm)
    parent_eps = default_epsilon(parent_cm)
    fs = fold(parent_rs, parent_eps, auto)
    if fs.folded_eps.values != table.eps.values:
        fs = fold(parent_rs, parent_eps.flipped(), auto)
    return folded_table(fs)


def _cmd_verify(args) -> int:
    doc = from_json_bytes(Path(args.infile).read_bytes())
    table = table_from_document(doc)
    family, rank = parse_type_label(doc["type"])
    suites = args.suite.split(",") if args.suite else None
    if suites is None:
        suites = ["jacobi", "chevalley", "differential"]
        if family == "A" and 1 <= rank <= 7:
            suites.append("slN")
    reports: list[VerificationReport] = []
    for suite in suites:
        if suite == "jacobi":
            reports.append(jacobi_sweep(table))
        elif suite == "chevalley":
            reports.append(chevalley_audit(table))
        elif suite == "differential":
            reports.append(differential(table, _complementary_table(table, doc)))
        elif suite == "slN":
            if family != "A" or not 1 <= rank <= 7:
                raise IllegalType("slN suite needs an A-type table of rank <= 7")
            report = sl_n_oracle(rank + 1, table.eps)
            report.merge(differential(table, build_inductive(table.rs, table.eps)))
            reports.append(report)
        else:
            raise IllegalType(f"unknown suite {suite!r}")
    if args.json:
        import json

        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            print(r.summary())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_show(args) -> int:
    doc = from_json_bytes(Path(args.infile).read_bytes())
    table = table_from_document(doc)
    rs = table.rs
    alpha = parse_coeffs(args.alpha, rs.rank)
    beta = parse_coeffs(args.beta, rs.rank)
    if not rs.contains(alpha) or not rs.contains(beta):
        raise NotARoot("alpha and beta must be roots of the table's system")
    value = table.constant(alpha, beta)
    print(f"N[{render_root(alpha)}, {render_root(beta)}] = {value}")
    p, q = rs.string_lengths(alpha, beta)
    chain = []
    for k in range(-q, p + 1):
        member = tuple(b + k * a for a, b in zip(alpha, beta))
        chain.append(render_root(member))
    print(f"string (p={p}, q={q}): " + " , ".join(chain))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chevbasis",
        description="Exact canonical Chevalley basis structure constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a table and write it as JSON")
    gen.add_argument("--type", required=True, help="type label, e.g. A3, E8, G2")
    gen.add_argument("--epsilon", choices=["default", "flipped"], default="default")
    gen.add_argument("--method", choices=["inductive", "closed", "fold"], default=None)
    gen.add_argument("--out", required=True)
    gen.add_argument("--csv", default=None, help="also write a CSV rendering")
    gen.set_defaults(func=_cmd_gen)

    fold_p = sub.add_parser("fold", help="fold a simply-laced type by its standard symmetry")
    fold_p.add_argument("--type", required=True, help="simply-laced parent, e.g. D4, E6, A5")
    fold_p.add_argument("--epsilon", choices=["default", "flipped"], default="default")
    fold_p.add_argument("--out", required=True)
    fold_p.add_argument("--csv", default=None)
    fold_p.set_defaults(func=_cmd_fold)

    ver = sub.add_parser("verify", help="run verification suites on a table file")
    ver.add_argument("--in", dest="infile", required=True)
    ver.add_argument("--suite", default=None, help="comma list: jacobi,chevalley,differential,slN")
    ver.add_argument("--json", action="store_true", help="emit reports as JSON")
    ver.set_defaults(func=_cmd_verify)

    show = sub.add_parser("show", help="print one constant and its root string")
    show.add_argument("--in", dest="infile", required=True)
    show.add_argument("--alpha", required=True, help="comma-separated coefficients")
    show.add_argument("--beta", required=True, help="comma-separated coefficients")
    show.set_defaults(func=_cmd_show)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInconsistency:
        raise
    except (IllegalType, NotARoot, NotSimplyLaced, NoFoldableSymmetry) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ChevBasisError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
