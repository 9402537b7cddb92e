"""Shared builders for the test suite, cached so expensive systems build once.

Cached objects are shared across tests and must never be mutated; tests
that need a corrupted table use :func:`with_flipped_constant` or build
their own copies.
"""

from __future__ import annotations

from functools import lru_cache

import chevbasis as cb
from chevbasis.bracket import BracketTable

DESK_TYPES = (
    "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "B2", "B3", "B4",
    "C2", "C3", "C4",
    "D3", "D4", "D5", "D6",
    "E6", "E7", "E8",
    "F4", "G2",
)

SIMPLY_LACED_TYPES = tuple(t for t in DESK_TYPES if t[0] in "ADE")

FOLDS = (("A3", "C2"), ("A5", "C3"), ("D4", "G2"), ("D5", "B4"), ("E6", "F4"))


@lru_cache(maxsize=None)
def system(label: str) -> cb.RootSystem:
    family, rank = cb.parse_type_label(label)
    return cb.generate_roots(cb.build_cartan(family, rank))


@lru_cache(maxsize=None)
def table(label: str, flipped: bool = False) -> BracketTable:
    rs = system(label)
    eps = cb.default_epsilon(rs.cartan)
    if flipped:
        eps = eps.flipped()
    return cb.build_inductive(rs, eps)


@lru_cache(maxsize=None)
def folded(parent_label: str) -> tuple[cb.FoldedSystem, BracketTable]:
    rs = system(parent_label)
    eps = cb.default_epsilon(rs.cartan)
    auto = cb.standard_automorphism(rs.cartan)
    fs = cb.fold(rs, eps, auto)
    return fs, cb.folded_table(fs)


def with_flipped_constant(t: BracketTable, which: int = 0) -> BracketTable:
    """A copy of a table with one stored constant's sign flipped."""
    key = sorted(t.n)[which]
    return BracketTable(
        rs=t.rs,
        eps=t.eps,
        n={**t.n, key: -t.n[key]},
        cartan_action=t.cartan_action,
        opposite=t.opposite,
    )


def with_flipped_opposite(t: BracketTable, which: int = 0) -> BracketTable:
    """A copy of a table with one co-root vector negated."""
    opposite = list(t.opposite)
    opposite[which] = tuple(-c for c in opposite[which])
    return BracketTable(
        rs=t.rs,
        eps=t.eps,
        n=dict(t.n),
        cartan_action=t.cartan_action,
        opposite=tuple(opposite),
    )
