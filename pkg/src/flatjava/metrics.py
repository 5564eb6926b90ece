"""Internal quality metrics over original and flattened class views.

Size: NOA (attributes), NOM (methods, constructors excluded), SLOC counted
on the canonical emission of the view so both views are measured with the
same yardstick. Cohesion: LCOM1 is the number of method pairs sharing no
attribute; LCOM2 is max(P - Q, 0) over non-sharing/sharing pairs. A method
"uses" an attribute through a direct read or write edge only. Coupling:
CBO counts the other model classes named in field types, parameter and
return types, constructor calls, and receiver types.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tree
from .emitter import EmitOptions, emit
from .flattener import FlattenedClass
from .model import ClassModel
from .resolver import AccessGraph, ClassResolution, READ, WRITE, resolve_class
from .model import class_info_from_decl

ORIGINAL = "original"
FLATTENED = "flattened"

_METRIC_FIELDS = ("noa", "nom", "sloc", "lcom1", "lcom2", "cbo")


@dataclass(frozen=True)
class MetricsRecord:
    class_name: str
    view: str
    noa: int
    nom: int
    sloc: int
    lcom1: int
    lcom2: int
    cbo: int

    def as_dict(self) -> dict:
        return {
            "name": self.class_name,
            "view": self.view,
            "noa": self.noa,
            "nom": self.nom,
            "sloc": self.sloc,
            "lcom1": self.lcom1,
            "lcom2": self.lcom2,
            "cbo": self.cbo,
        }


@dataclass(frozen=True)
class ComparisonRow:
    class_name: str
    original: MetricsRecord
    flattened: MetricsRecord
    deltas: dict[str, int]
    rule_counts: dict[str, int]


def lcom_values(use_sets: list[set[str]]) -> tuple[int, int]:
    """(LCOM1, LCOM2) from per-method attribute-use sets."""
    n = len(use_sets)
    if n < 2:
        return 0, 0
    p = q = 0
    for i in range(n):
        for j in range(i + 1, n):
            if use_sets[i] & use_sets[j]:
                q += 1
            else:
                p += 1
    return p, max(p - q, 0)


def measure_original(model: ClassModel, graph: AccessGraph, name: str) -> MetricsRecord:
    cls = model.classes[name]
    resolution = graph.resolutions.get(name) or ClassResolution(name)
    return _measure(
        model, name, ORIGINAL, cls.decl, resolution,
        superclass=cls.superclass,
    )


def measure_flattened(model: ClassModel, flat: FlattenedClass) -> MetricsRecord:
    resolution = flat.resolution
    if resolution is None:
        info = class_info_from_decl(flat.decl, flat.package)
        resolution = resolve_class(model.with_class(info), info)
    return _measure(model, flat.name, FLATTENED, flat.decl, resolution, superclass=None)


def compare(
    model: ClassModel, graph: AccessGraph, flattened: dict[str, FlattenedClass]
) -> list[ComparisonRow]:
    rows = []
    for name in model.order:
        if model.classes[name].synthetic:
            continue
        original = measure_original(model, graph, name)
        flat = measure_flattened(model, flattened[name])
        deltas = {
            field: getattr(flat, field) - getattr(original, field)
            for field in _METRIC_FIELDS
        }
        rule_counts: dict[str, int] = {}
        for fate in flattened[name].fates:
            rule_counts[fate.rule] = rule_counts.get(fate.rule, 0) + 1
        rows.append(ComparisonRow(name, original, flat, deltas, rule_counts))
    return rows


def _measure(
    model: ClassModel,
    name: str,
    view: str,
    decl: tree.ClassDecl,
    resolution: ClassResolution,
    superclass: str | None,
) -> MetricsRecord:
    fields = [m for m in decl.members if isinstance(m, tree.FieldDecl)]
    methods = [m for m in decl.members if isinstance(m, tree.MethodDecl)]
    attr_names = {f.name for f in fields}

    use_sets = []
    for method in methods:
        sig = method.signature()
        used = {
            e.to_member
            for e in resolution.edges
            if e.from_member == sig
            and e.kind in (READ, WRITE)
            and e.to_class == name
            and e.to_member in attr_names
        }
        use_sets.append(used)
    lcom1, lcom2 = lcom_values(use_sets)

    sloc = sum(
        1 for line in emit(decl, EmitOptions(provenance=False)).splitlines() if line.strip()
    )

    referenced: set[str] = set()
    for f in fields:
        referenced.add(f.decl_type.name)
    for m in methods:
        if m.return_type is not None:
            referenced.add(m.return_type.name)
        for p in m.params:
            referenced.add(p.decl_type.name)
    for m in decl.members:
        if isinstance(m, tree.CtorDecl):
            for p in m.params:
                referenced.add(p.decl_type.name)
    referenced |= resolution.new_types
    referenced |= resolution.receiver_types
    cbo = sum(
        1
        for t in referenced
        if t != name and t in model.classes and not model.classes[t].synthetic
    )

    return MetricsRecord(name, view, len(fields), len(methods), sloc, lcom1, lcom2, cbo)
