"""Canonical JSON documents and CSV export for bracket tables.

A table document is a plain dict with sorted keys and a fixed field set,
so serialisation is byte-stable across runs: same table, same bytes.
Roots are stored as coefficient lists in root-system order, constants as
(a, b, sum, N) index quadruples sorted by (a, b).
"""

from __future__ import annotations

import json
from typing import Any

from .bracket import BracketTable
from .cartan import SignFunction, build_cartan, parse_type_label
from .errors import ChevBasisError, NotARoot
from .roots import Root, generate_roots, root_sign

SCHEMA_VERSION = 1


def document_from_table(t: BracketTable, method: str, provenance: dict[str, Any] | None = None) -> dict[str, Any]:
    """Flatten a table into a JSON-ready document with provenance metadata.

    Each unordered constant pair is stored once, under its (a < b) index
    order; the mirror entry is implied by antisymmetry, which is checked
    here so nothing is lost.
    """
    rs = t.rs
    for (a, b), value in t.n.items():
        if t.n.get((b, a)) != -value:
            raise ChevBasisError(f"table is not antisymmetric at {(a, b)}; refusing to serialise")
    constants = sorted(
        [a, b, rs.index_of(tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))), value]
        for (a, b), value in t.n.items()
        if a < b
    )
    doc: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "type": rs.cartan.label,
        "rank": rs.cartan.rank,
        "cartan_matrix": rs.cartan.to_json_rows(),
        "epsilon": list(t.eps.values),
        "positive_count": rs.positive_count,
        "roots": [list(r) for r in rs.roots],
        "constants": constants,
        "cartan_action": [list(row) for row in t.cartan_action],
        "opposite": [list(c) for c in t.opposite],
        "provenance": {"method": method, **(provenance or {})},
    }
    return doc


def table_from_document(doc: dict[str, Any]) -> BracketTable:
    """Rebuild a table, validating the document against a fresh root system."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ChevBasisError(f"unsupported schema version {doc.get('schema_version')!r}")
    family, rank = parse_type_label(doc["type"])
    cm = build_cartan(family, rank)
    if doc.get("cartan_matrix") != cm.to_json_rows():
        raise ChevBasisError("document Cartan matrix does not match the type label")
    rs = generate_roots(cm)
    if [list(r) for r in rs.roots] != doc["roots"]:
        raise ChevBasisError("document root list does not match the generated ordering")
    if doc["positive_count"] != rs.positive_count:
        raise ChevBasisError("positive_count mismatch")
    eps = SignFunction(tuple(doc["epsilon"]))
    n: dict[tuple[int, int], int] = {}
    for a, b, s, value in doc["constants"]:
        if not a < b:
            raise ChevBasisError(f"constant entry {(a, b)} violates the index order")
        total = tuple(x + y for x, y in zip(rs.roots[a], rs.roots[b]))
        if rs.index_of(total) != s:
            raise ChevBasisError(f"constant entry {(a, b, s)} has a wrong sum index")
        n[(a, b)] = value
        n[(b, a)] = -value
    action = tuple(tuple(row) for row in doc["cartan_action"])
    opposite = tuple(tuple(c) for c in doc["opposite"])
    if len(action) != rank or any(len(row) != len(rs.roots) for row in action):
        raise ChevBasisError("cartan_action has wrong shape")
    if len(opposite) != len(rs.roots) or any(len(c) != rank for c in opposite):
        raise ChevBasisError("opposite has wrong shape")
    return BracketTable(rs=rs, eps=eps, n=n, cartan_action=action, opposite=opposite)


def to_json_bytes(doc: dict[str, Any]) -> bytes:
    """Canonical encoding: sorted keys, no whitespace, one trailing LF."""
    return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode("ascii")


def from_json_bytes(data: bytes) -> dict[str, Any]:
    return json.loads(data.decode("ascii"))


def render_root(coeffs: Root) -> str:
    """Compact coefficient string, e.g. (1,1,1,0) -> "1110", negatives prefixed."""
    body = "".join(str(abs(c)) for c in coeffs)
    return "-" + body if root_sign(coeffs) < 0 else body


def parse_coeffs(text: str, rank: int) -> Root:
    """Parse a comma-separated coefficient vector."""
    try:
        coeffs = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise NotARoot(f"cannot parse coefficients {text!r}") from exc
    if len(coeffs) != rank:
        raise NotARoot(f"expected {rank} coefficients, got {len(coeffs)}")
    return coeffs


def csv_export(doc: dict[str, Any]) -> bytes:
    """Flat `alpha,beta,sum,N` rows with compact root rendering."""
    roots = [tuple(r) for r in doc["roots"]]
    lines = ["alpha,beta,sum,N"]
    for a, b, s, value in doc["constants"]:
        lines.append(f"{render_root(roots[a])},{render_root(roots[b])},{render_root(roots[s])},{value}")
    return ("\n".join(lines) + "\n").encode("ascii")
