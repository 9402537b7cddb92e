#!/usr/bin/env python3
"""Build and fully verify the tables of every desk-rank type.

For each type the inductive table is built for both sign functions, run
through the Jacobi sweep and the Chevalley audit, and compared against
the independent route (closed formula or folding).  Prints one line per
type; exits non-zero on any failure.
"""

from __future__ import annotations

import sys
import time

import chevbasis as cb
from chevbasis.closedform import closed_table
from chevbasis.folding import fold, fold_source, folded_table
from chevbasis.verify import chevalley_audit, differential, jacobi_sweep

TYPES = [
    "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "B2", "B3", "B4",
    "C2", "C3", "C4",
    "D3", "D4", "D5", "D6",
    "E6", "E7", "E8",
    "F4", "G2",
]


def independent_table(rs, eps):
    if rs.cartan.simply_laced:
        return closed_table(rs, eps), "closed"
    parent_cm, auto = fold_source(rs.cartan.type_label, rs.cartan.rank)
    parent_rs = cb.generate_roots(parent_cm)
    parent_eps = cb.default_epsilon(parent_cm)
    fs = fold(parent_rs, parent_eps, auto)
    if fs.folded_eps.values != eps.values:
        fs = fold(parent_rs, parent_eps.flipped(), auto)
    return folded_table(fs), f"fold({parent_cm.label})"


def run() -> int:
    failures = 0
    for label in TYPES:
        family, rank = cb.parse_type_label(label)
        rs = cb.generate_roots(cb.build_cartan(family, rank))
        start = time.perf_counter()
        status = []
        for eps in (cb.default_epsilon(rs.cartan), cb.default_epsilon(rs.cartan).flipped()):
            t = cb.build_inductive(rs, eps)
            other, route = independent_table(rs, eps)
            for report in (jacobi_sweep(t), chevalley_audit(t), differential(t, other)):
                if not report.passed:
                    failures += 1
                    status.append(report.summary())
        elapsed = time.perf_counter() - start
        verdict = "; ".join(status) if status else f"ok ({route})"
        print(f"{label:3s} dim {rs.rank + len(rs.roots):3d}  {elapsed:6.2f}s  {verdict}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(run())
