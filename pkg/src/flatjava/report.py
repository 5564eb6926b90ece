"""Report documents and serialization (JSON, CSV, markdown).

Document shapes are versioned: metrics reports are `report/v1`, comparison
reports `compare/v1`, flatten plans `plan/v1`, and model dumps `model/v1`.
JSON Schema files for each live in the `schemas` package directory.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources

from .flattener import FlattenedClass
from .metrics import ComparisonRow, MetricsRecord
from .model import ClassModel
from .resolver import AccessGraph

RULE_IDS = ("R1", "R2", "R3", "R4a", "R4b", "R4c", "R5", "R6", "R7", "R8", "CTOR")

FORMATS = ("json", "csv", "markdown")


def load_schema(name: str) -> dict:
    """Load a committed JSON schema (e.g. "report_v1")."""
    path = resources.files("flatjava.schemas").joinpath(f"{name}.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _dump_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


# --- metrics report ---------------------------------------------------------


def metrics_document(records: list[MetricsRecord]) -> dict:
    return {"schema": "report/v1", "classes": [r.as_dict() for r in records]}


def render_metrics(records: list[MetricsRecord], fmt: str) -> str:
    if fmt == "json":
        return _dump_json(metrics_document(records))
    header = ["name", "view", "noa", "nom", "sloc", "lcom1", "lcom2", "cbo"]
    rows = [
        [r.class_name, r.view, r.noa, r.nom, r.sloc, r.lcom1, r.lcom2, r.cbo]
        for r in records
    ]
    if fmt == "csv":
        return _render_csv(header, rows)
    if fmt == "markdown":
        return _render_markdown(header, rows)
    raise ValueError(f"unknown format {fmt!r}")


# --- comparison report ------------------------------------------------------


def compare_document(rows: list[ComparisonRow]) -> dict:
    classes = []
    for row in rows:
        rules = {rule: row.rule_counts.get(rule, 0) for rule in RULE_IDS}
        classes.append(
            {
                "name": row.class_name,
                "original": row.original.as_dict(),
                "flattened": row.flattened.as_dict(),
                "delta": dict(row.deltas),
                "rules": rules,
            }
        )
    return {"schema": "compare/v1", "classes": classes}


def render_compare(rows: list[ComparisonRow], fmt: str) -> str:
    if fmt == "json":
        return _dump_json(compare_document(rows))
    header = [
        "name",
        "noa", "noa_flat", "nom", "nom_flat", "sloc", "sloc_flat",
        "lcom1", "lcom1_flat", "lcom2", "lcom2_flat", "cbo", "cbo_flat",
    ]
    table = []
    for row in rows:
        o, f = row.original, row.flattened
        table.append(
            [row.class_name, o.noa, f.noa, o.nom, f.nom, o.sloc, f.sloc,
             o.lcom1, f.lcom1, o.lcom2, f.lcom2, o.cbo, f.cbo]
        )
    if fmt == "csv":
        return _render_csv(header, table)
    if fmt == "markdown":
        return _render_markdown(header, table)
    raise ValueError(f"unknown format {fmt!r}")


# --- plan and model dumps ---------------------------------------------------


def plan_document(flattened: dict[str, FlattenedClass]) -> dict:
    classes = []
    for name in flattened:
        flat = flattened[name]
        fates = []
        for fate in flat.fates:
            fates.append(
                {
                    "member": fate.member.signature,
                    "kind": fate.member.kind,
                    "provenance": fate.member.provenance,
                    "decision": fate.decision,
                    "rule": fate.rule,
                    "new_name": fate.new_name,
                }
            )
        rewrites = [
            {
                "span": list(r.span),
                "old": r.old,
                "new": r.new,
                "target_owner": r.target_owner,
            }
            for r in flat.rewrites
        ]
        classes.append({"name": name, "fates": fates, "rewrites": rewrites})
    return {"schema": "plan/v1", "classes": classes}


def model_document(model: ClassModel, graph: AccessGraph | None = None) -> dict:
    classes = []
    for name in model.order:
        info = model.classes[name]
        members = [
            {
                "name": m.name,
                "kind": m.kind,
                "visibility": m.visibility,
                "visible": m.visible,
                "static": m.is_static,
                "final": m.is_final,
                "signature": m.signature,
                "span": m.span.to_json(),
            }
            for m in info.ordered_members()
        ]
        classes.append(
            {
                "name": name,
                "package": info.package,
                "superclass": info.superclass,
                "synthetic": info.synthetic,
                "members": members,
            }
        )
    overrides = [
        {
            "subclass": rel.sub.owner,
            "superclass": rel.sup.owner,
            "member": rel.sub.signature,
            "kind": rel.kind,
            "legality": rel.legality,
        }
        for rel in model.overrides
    ]
    overloads = [
        {
            "subclass": sub.owner,
            "sub_signature": sub.signature,
            "superclass": sup.owner,
            "super_signature": sup.signature,
        }
        for sub, sup in model.overloads
    ]
    edges = []
    if graph is not None:
        for edge in graph.edges:
            edges.append(
                {
                    "from_class": edge.from_class,
                    "from_member": edge.from_member,
                    "kind": edge.kind,
                    "to_class": edge.to_class,
                    "to_member": edge.to_member,
                    "basis": edge.basis,
                    "span": edge.span.to_json(),
                }
            )
    return {
        "schema": "model/v1",
        "classes": classes,
        "overrides": overrides,
        "overloads": overloads,
        "access_edges": edges,
    }


# --- table rendering --------------------------------------------------------


def _render_csv(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _render_markdown(header: list[str], rows: list[list]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(cell) for cell in row) + " |")
    return "\n".join(lines) + "\n"
