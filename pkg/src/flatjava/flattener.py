"""Pull-down flattening: fates, renames, and reference rewriting.

Classes are flattened bottom-up; each class is flattened against the
already-flattened version of its direct superclass, so a chain collapses
pairwise. Fate rules:

  attributes                          methods
  R1 visible, not overridden          R5 visible, not overridden
  R2 invisible, accessed by a         R6 visible, overridden (renamed)
     pulled-down accessor             R7 invisible, reachable from the
  R3 invisible, unaccessed (drop)        pulled set (renamed if overridden)
  R4a overridden, accessed (renamed)  R8 invisible, unreachable (drop)
  R4b overridden, visible, unaccessed
      (renamed)
  R4c overridden, invisible,
      unaccessed (drop)

"Accessed" and "reachable" are computed as one fixed point: the pulled set
starts with the visible members and grows through read/write/call edges
whose source is a pulled method or the initializer of a pulled attribute.
An overridden pairing with a static mismatch or a final superclass member
is treated as non-overriding; if the un-renamed pull would then collide, the
member is renamed anyway and a diagnostic records it.

Constructors are never pulled. A no-arg superclass constructor whose body
only assigns literals to fields (none of which any field initializer reads)
is folded into the pulled fields' initializers; anything else is reported
as unsupported for flattening.
"""

from __future__ import annotations

import copy
from dataclasses import dataclass, field

from . import tree
from .errors import (
    ANOMALY_MEMBER,
    DanglingSuperRef,
    Diagnostic,
    FlattenError,
    FORCED_RENAME,
    UNSUPPORTED_CTOR,
)
from .model import (
    ATTRIBUTE,
    CTOR,
    METHOD,
    ClassInfo,
    ClassModel,
    MemberInfo,
    class_info_from_decl,
    override_legality,
)
from .resolver import (
    BASIS_BARE,
    BASIS_CLASS,
    BASIS_SUPER,
    BASIS_THIS,
    CALL,
    INIT_FIELDS,
    READ,
    WRITE,
    AccessEdge,
    ClassResolution,
    resolve_class,
)

PULL_DOWN = "PullDown"
PULL_DOWN_RENAMED = "PullDownRenamed"
DROP = "Drop"
DROP_ANOMALY = "DropAnomaly"

RULE_CTOR = "CTOR"


@dataclass
class FlatMember:
    decl: tree.FieldDecl | tree.MethodDecl | tree.CtorDecl
    kind: str  # attribute | method | ctor
    name: str
    signature: str
    visibility: str
    is_static: bool
    is_final: bool
    provenance: str  # original declaring class
    pulled: bool
    renamed: bool = False  # renamed at any flattening step

    @property
    def visible(self) -> bool:
        return self.visibility != "private"


@dataclass
class MemberFate:
    member: FlatMember
    decision: str  # PullDown | PullDownRenamed | Drop | DropAnomaly
    rule: str  # R1..R8 or CTOR
    new_name: str | None = None

    @property
    def pulls(self) -> bool:
        return self.decision in (PULL_DOWN, PULL_DOWN_RENAMED)


@dataclass(frozen=True)
class RewriteDirective:
    span: tuple[int, int]
    old: str
    new: str
    target_owner: str


@dataclass
class FlattenedClass:
    name: str
    package: str | None
    decl: tree.ClassDecl
    members: list[FlatMember]
    fates: list[MemberFate] = field(default_factory=list)
    rewrites: list[RewriteDirective] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    resolution: ClassResolution | None = None

    def member_decls(self) -> list:
        return [m.decl for m in self.members]

    def attributes(self) -> list[FlatMember]:
        return [m for m in self.members if m.kind == ATTRIBUTE]

    def methods(self) -> list[FlatMember]:
        return [m for m in self.members if m.kind == METHOD]


def flatten_order(model: ClassModel) -> list[str]:
    """Bottom-up order: every superclass before its subclasses, lexicographic ties."""
    return list(model.order)


def flatten_model(model: ClassModel) -> dict[str, FlattenedClass]:
    flattened: dict[str, FlattenedClass] = {}
    for name in flatten_order(model):
        flattened[name] = flatten_class(name, model, flattened)
    return flattened


def flatten_class(
    name: str, model: ClassModel, flattened: dict[str, FlattenedClass]
) -> FlattenedClass:
    cls = model.classes[name]
    if cls.superclass is None:
        flat = _identity_flatten(cls)
    else:
        if cls.superclass not in flattened:
            raise FlattenError(
                f"superclass {cls.superclass!r} of {name!r} has not been flattened "
                "yet; flatten classes in flatten_order",
                cls.decl.name_span,
                cls.path,
            )
        flat = _flatten_against_super(cls, flattened[cls.superclass], model)
    flat_info = class_info_from_decl(flat.decl, flat.package, cls.path)
    flat.resolution = resolve_class(model.with_class(flat_info), flat_info)
    return flat


def rename(member_name: str, owner: str, taken: set[str]) -> str:
    """`name$Owner`, with `$1`, `$2`, ... appended until the name is free."""
    base = f"{member_name}${owner}"
    candidate = base
    counter = 0
    while candidate in taken:
        counter += 1
        candidate = f"{base}${counter}"
    return candidate


# --- fate decisions ---------------------------------------------------------


def decide_method_fates(sub: ClassInfo, fsuper: FlattenedClass) -> list[MemberFate]:
    _, pulled_methods = _pulled_closure(sub, fsuper)
    fates = []
    for member in fsuper.members:
        if member.kind != METHOD:
            continue
        overridden = _method_overridden(sub, member)
        if member.visible:
            if overridden:
                fates.append(MemberFate(member, PULL_DOWN_RENAMED, "R6"))
            else:
                fates.append(MemberFate(member, PULL_DOWN, "R5"))
        elif member.signature in pulled_methods:
            decision = PULL_DOWN_RENAMED if overridden else PULL_DOWN
            fates.append(MemberFate(member, decision, "R7"))
        else:
            fates.append(MemberFate(member, DROP_ANOMALY, "R8"))
    return fates


def decide_attribute_fates(
    sub: ClassInfo, fsuper: FlattenedClass, method_fates: list[MemberFate]
) -> list[MemberFate]:
    pulled_methods = {f.member.signature for f in method_fates if f.pulls}
    pulled_attrs = _attr_closure(sub, fsuper, pulled_methods)
    accessed = _accessed_attrs(fsuper, pulled_methods, pulled_attrs)
    fates = []
    for member in fsuper.members:
        if member.kind != ATTRIBUTE:
            continue
        overridden = _attr_overridden(sub, member)
        was_accessed = member.name in accessed
        if overridden:
            if was_accessed:
                fates.append(MemberFate(member, PULL_DOWN_RENAMED, "R4a"))
            elif member.visible:
                fates.append(MemberFate(member, PULL_DOWN_RENAMED, "R4b"))
            else:
                fates.append(MemberFate(member, DROP_ANOMALY, "R4c"))
        elif member.visible:
            fates.append(MemberFate(member, PULL_DOWN, "R1"))
        elif was_accessed:
            fates.append(MemberFate(member, PULL_DOWN, "R2"))
        else:
            fates.append(MemberFate(member, DROP_ANOMALY, "R3"))
    return fates


def _attr_overridden(sub: ClassInfo, member: FlatMember) -> bool:
    own = sub.attributes.get(member.name)
    if own is None:
        return False
    return override_legality(own, _as_member_info(member)) == "ok"


def _method_overridden(sub: ClassInfo, member: FlatMember) -> bool:
    own = sub.methods.get(member.signature)
    if own is None:
        return False
    return override_legality(own, _as_member_info(member)) == "ok"


def _as_member_info(member: FlatMember) -> MemberInfo:
    return MemberInfo(
        member.provenance, member.name, member.kind, member.visibility,
        member.is_static, member.is_final, member.signature, member.decl,
        member.decl.span,
    )


def _pulled_closure(sub: ClassInfo, fsuper: FlattenedClass) -> tuple[set[str], set[str]]:
    """Joint fixed point over attribute and method pulls.

    Visible members seed the pulled set. Call edges extend it through
    methods; read/write edges extend it through attributes; edges sourced at
    a field initializer count only while that field is pulled.
    """
    attr_names = {m.name for m in fsuper.attributes()}
    method_sigs = {m.signature for m in fsuper.methods()}
    pulled_attrs = {m.name for m in fsuper.attributes() if m.visible}
    pulled_methods = {m.signature for m in fsuper.methods() if m.visible}
    edges = fsuper.resolution.edges if fsuper.resolution else []
    changed = True
    while changed:
        changed = False
        for edge in edges:
            if edge.to_class != fsuper.name:
                continue
            if not _source_pulled(edge, pulled_methods, pulled_attrs):
                continue
            if edge.kind == CALL and edge.to_member in method_sigs:
                if edge.to_member not in pulled_methods:
                    pulled_methods.add(edge.to_member)
                    changed = True
            elif edge.kind in (READ, WRITE) and edge.to_member in attr_names:
                if edge.to_member not in pulled_attrs:
                    pulled_attrs.add(edge.to_member)
                    changed = True
    return pulled_attrs, pulled_methods


def _attr_closure(sub: ClassInfo, fsuper: FlattenedClass, pulled_methods: set[str]) -> set[str]:
    attr_names = {m.name for m in fsuper.attributes()}
    pulled_attrs = {m.name for m in fsuper.attributes() if m.visible}
    edges = fsuper.resolution.edges if fsuper.resolution else []
    changed = True
    while changed:
        changed = False
        for edge in edges:
            if edge.to_class != fsuper.name or edge.to_member not in attr_names:
                continue
            if edge.kind not in (READ, WRITE):
                continue
            if not _source_pulled(edge, pulled_methods, pulled_attrs):
                continue
            if edge.to_member not in pulled_attrs:
                pulled_attrs.add(edge.to_member)
                changed = True
    return pulled_attrs


def _source_pulled(edge: AccessEdge, pulled_methods: set[str], pulled_attrs: set[str]) -> bool:
    if edge.from_member == INIT_FIELDS:
        return edge.initializer_of in pulled_attrs
    return edge.from_member in pulled_methods


def _accessed_attrs(
    fsuper: FlattenedClass, pulled_methods: set[str], pulled_attrs: set[str]
) -> set[str]:
    accessed = set()
    edges = fsuper.resolution.edges if fsuper.resolution else []
    for edge in edges:
        if edge.to_class != fsuper.name or edge.kind not in (READ, WRITE):
            continue
        if _source_pulled(edge, pulled_methods, pulled_attrs):
            accessed.add(edge.to_member)
    return accessed


# --- flattening proper ------------------------------------------------------


def _identity_flatten(cls: ClassInfo) -> FlattenedClass:
    decl = copy.deepcopy(cls.decl)
    members = [
        _flat_member(info, decl_member, cls.name, pulled=False)
        for info, decl_member in zip(cls.ordered_members(), decl.members)
    ]
    return FlattenedClass(cls.name, cls.package, decl, members)


def _flat_member(info: MemberInfo, decl, provenance: str, pulled: bool) -> FlatMember:
    return FlatMember(
        decl, info.kind, info.name, info.signature, info.visibility,
        info.is_static, info.is_final, provenance, pulled,
    )


def _flatten_against_super(
    cls: ClassInfo, fsuper: FlattenedClass, model: ClassModel
) -> FlattenedClass:
    diagnostics: list[Diagnostic] = []
    method_fates = decide_method_fates(cls, fsuper)
    attr_fates = decide_attribute_fates(cls, fsuper, method_fates)
    ctor_fates = [
        MemberFate(m, DROP, RULE_CTOR) for m in fsuper.members if m.kind == CTOR
    ]
    inline_inits = _analyze_super_ctors(cls, fsuper, attr_fates, diagnostics)

    fate_by_decl = {id(f.member.decl): f for f in method_fates + attr_fates + ctor_fates}
    ordered_fates = [fate_by_decl[id(m.decl)] for m in fsuper.members]

    for fate in ordered_fates:
        if fate.decision == DROP_ANOMALY:
            diagnostics.append(
                Diagnostic(
                    ANOMALY_MEMBER,
                    f"{fate.member.provenance}.{fate.member.signature} is invisible and "
                    f"inaccessible; not pulled down (rule {fate.rule})",
                    cls.name,
                    fate.member.decl.span,
                )
            )

    _assign_names(cls, ordered_fates, diagnostics)
    flat = rewrite_references(cls, fsuper, ordered_fates, model, inline_inits)
    flat.diagnostics = diagnostics
    return flat


def rewrite_references(
    cls: ClassInfo,
    fsuper: FlattenedClass,
    fates: list[MemberFate],
    model: ClassModel,
    inline_inits: dict[str, tree.Expr] | None = None,
) -> FlattenedClass:
    """Copy members into the subclass and fix every affected reference.

    Inside pulled bodies, references to renamed members switch to the new
    names and class-qualified static references to pulled members collapse
    to local ones. In the subclass's own bodies, `super.` references become
    bare references to the pulled (possibly renamed) member, or `this.`
    references when a local would capture the bare name.
    """
    inline_inits = inline_inits or {}
    attr_renames = {
        f.member.name: f.new_name
        for f in fates
        if f.member.kind == ATTRIBUTE and f.new_name
    }
    method_renames = {
        f.member.signature: f.new_name
        for f in fates
        if f.member.kind == METHOD and f.new_name
    }
    pulled_attr_names = {f.member.name for f in fates if f.member.kind == ATTRIBUTE and f.pulls}
    pulled_method_sigs = {f.member.signature for f in fates if f.member.kind == METHOD and f.pulls}

    rewrites: list[RewriteDirective] = []

    # Rewrite the subclass's own bodies: super references become local ones.
    own_resolution = resolve_class(model, cls)
    super_sites = {
        (e.span.start, e.span.end): e for e in own_resolution.edges if e.basis == BASIS_SUPER
    }
    sub_rewriter = _SubBodyRewriter(cls, fates, super_sites, rewrites)
    own_decls = []
    own_members = []
    for info, decl_member in zip(cls.ordered_members(), list(cls.decl.members)):
        decl_copy = copy.deepcopy(decl_member)
        sub_rewriter.rewrite_member(decl_copy)
        own_decls.append(decl_copy)
        own_members.append(_flat_member(info, decl_copy, cls.name, pulled=False))

    # Copy pulled members, apply renames and body rewrites.
    pulled_sites = {
        (e.span.start, e.span.end): e
        for e in (fsuper.resolution.edges if fsuper.resolution else [])
    }
    pulled_rewriter = _PulledBodyRewriter(
        fsuper.name, pulled_sites, attr_renames, method_renames,
        pulled_attr_names, pulled_method_sigs, rewrites,
    )
    pulled_decls = []
    pulled_members = []
    for fate in fates:
        if not fate.pulls:
            continue
        member = fate.member
        decl_copy = copy.deepcopy(member.decl)
        final_name = fate.new_name or member.name
        decl_copy.name = final_name
        if isinstance(decl_copy, tree.FieldDecl) and member.name in inline_inits:
            decl_copy.init = copy.deepcopy(inline_inits[member.name])
        pulled_rewriter.rewrite_member(decl_copy)
        signature = (
            decl_copy.signature() if isinstance(decl_copy, tree.MethodDecl) else final_name
        )
        pulled_decls.append(decl_copy)
        pulled_members.append(
            FlatMember(
                decl_copy, member.kind, final_name, signature, member.visibility,
                member.is_static, member.is_final, member.provenance, True,
                renamed=member.renamed or fate.new_name is not None,
            )
        )

    new_decl = tree.ClassDecl(
        cls.decl.visibility, cls.name, None, own_decls + pulled_decls,
        cls.decl.span, cls.decl.name_span,
    )
    return FlattenedClass(
        cls.name, cls.package, new_decl, own_members + pulled_members,
        fates, rewrites,
    )


def _assign_names(cls: ClassInfo, fates: list[MemberFate], diagnostics: list[Diagnostic]) -> None:
    """Pick final names in declaration order; rename on demand for collisions.

    The freshness ladder avoids every member name in the growing class, both
    attribute and method names, so renamed members read unambiguously.
    """
    taken = {m.name for m in cls.all_members() if m.kind != CTOR}
    attr_names = set(cls.attributes)
    method_sigs = set(cls.methods)
    for fate in fates:
        if not fate.pulls:
            continue
        member = fate.member
        if fate.decision == PULL_DOWN_RENAMED:
            fate.new_name = rename(member.name, member.provenance, taken)
        elif member.kind == ATTRIBUTE and member.name in attr_names:
            fate.new_name = rename(member.name, member.provenance, taken)
            diagnostics.append(
                Diagnostic(
                    FORCED_RENAME,
                    f"{member.provenance}.{member.name} is not a legal override of the "
                    f"subclass member but shares its name; pulled as {fate.new_name}",
                    cls.name,
                    member.decl.span,
                )
            )
        elif member.kind == METHOD and member.signature in method_sigs:
            fate.new_name = rename(member.name, member.provenance, taken)
            diagnostics.append(
                Diagnostic(
                    FORCED_RENAME,
                    f"{member.provenance}.{member.signature} is not a legal override of the "
                    f"subclass member but shares its signature; pulled as {fate.new_name}",
                    cls.name,
                    member.decl.span,
                )
            )
        final_name = fate.new_name or member.name
        taken.add(final_name)
        if member.kind == ATTRIBUTE:
            attr_names.add(final_name)
        elif member.kind == METHOD:
            method_sigs.add(
                tree.method_signature(
                    final_name, [p.decl_type.text() for p in member.decl.params]
                )
            )


def _analyze_super_ctors(
    cls: ClassInfo,
    fsuper: FlattenedClass,
    attr_fates: list[MemberFate],
    diagnostics: list[Diagnostic],
) -> dict[str, tree.Expr]:
    """Fold an inlinable no-arg superclass constructor into field initializers."""
    ctors = [m for m in fsuper.members if m.kind == CTOR]
    if not ctors:
        return {}
    no_arg = [c for c in ctors if not c.decl.params]
    if not no_arg:
        diagnostics.append(
            Diagnostic(
                UNSUPPORTED_CTOR,
                f"superclass {fsuper.name} declares only parameterized constructors; "
                "implicit constructor chaining cannot be flattened",
                cls.name,
                ctors[0].decl.span,
            )
        )
        return {}
    ctor = no_arg[0]
    attr_names = {m.name for m in fsuper.attributes()}
    assignments: list[tuple[str, tree.Expr]] = []
    for stmt in ctor.decl.body.statements:
        target_name = None
        if isinstance(stmt, tree.Assign):
            if isinstance(stmt.target, tree.Name):
                target_name = stmt.target.ident
            elif isinstance(stmt.target, tree.FieldAccess) and isinstance(
                stmt.target.receiver, tree.This
            ):
                target_name = stmt.target.name
        if (
            target_name is None
            or target_name not in attr_names
            or not isinstance(stmt.value, tree.Literal)
        ):
            diagnostics.append(
                Diagnostic(
                    UNSUPPORTED_CTOR,
                    f"constructor of superclass {fsuper.name} does more than assign "
                    "literals to fields; its effects are not carried into the "
                    "flattened class",
                    cls.name,
                    stmt.span,
                )
            )
            return {}
        assignments.append((target_name, stmt.value))
    init_reads = {
        e.to_member
        for e in (fsuper.resolution.edges if fsuper.resolution else [])
        if e.from_member == INIT_FIELDS and e.kind == READ and e.to_class == fsuper.name
    }
    assigned = {name for name, _ in assignments}
    clashing = sorted(assigned & init_reads)
    if clashing:
        diagnostics.append(
            Diagnostic(
                UNSUPPORTED_CTOR,
                f"constructor of superclass {fsuper.name} assigns field(s) "
                f"{', '.join(clashing)} that field initializers read; inlining would "
                "reorder initialization",
                cls.name,
                ctor.decl.span,
            )
        )
        return {}
    pulled = {f.member.name for f in attr_fates if f.pulls}
    return {name: expr for name, expr in assignments if name in pulled}


# --- body rewriting ---------------------------------------------------------


class _ScopeTracker:
    def __init__(self):
        self.frames: list[set[str]] = []

    def push(self):
        self.frames.append(set())

    def pop(self):
        self.frames.pop()

    def declare(self, name: str):
        self.frames[-1].add(name)

    def __contains__(self, name: str) -> bool:
        return any(name in frame for frame in self.frames)


class _RewriterBase:
    """Shared statement traversal with lexical scope tracking."""

    def __init__(self, rewrites: list[RewriteDirective]):
        self.scopes = _ScopeTracker()
        self.rewrites = rewrites

    def rewrite_member(self, decl) -> None:
        if isinstance(decl, tree.FieldDecl):
            if decl.init is not None:
                self.scopes = _ScopeTracker()
                self.scopes.push()
                decl.init = self.expr(decl.init)
            return
        self.scopes = _ScopeTracker()
        self.scopes.push()
        for param in decl.params:
            self.scopes.declare(param.name)
        self.block(decl.body)

    def block(self, block: tree.Block) -> None:
        self.scopes.push()
        for i, stmt in enumerate(block.statements):
            block.statements[i] = self.stmt(stmt)
        self.scopes.pop()

    def stmt(self, stmt: tree.Stmt) -> tree.Stmt:
        if isinstance(stmt, tree.LocalDecl):
            if stmt.init is not None:
                stmt.init = self.expr(stmt.init)
            self.scopes.declare(stmt.name)
        elif isinstance(stmt, tree.ExprStmt):
            stmt.expr = self.expr(stmt.expr)
        elif isinstance(stmt, tree.Assign):
            stmt.value = self.expr(stmt.value)
            stmt.target = self.expr(stmt.target)
        elif isinstance(stmt, tree.If):
            stmt.cond = self.expr(stmt.cond)
            stmt.then_branch = self.stmt_in_scope(stmt.then_branch)
            if stmt.else_branch is not None:
                stmt.else_branch = self.stmt_in_scope(stmt.else_branch)
        elif isinstance(stmt, tree.While):
            stmt.cond = self.expr(stmt.cond)
            stmt.body = self.stmt_in_scope(stmt.body)
        elif isinstance(stmt, tree.Return):
            if stmt.value is not None:
                stmt.value = self.expr(stmt.value)
        elif isinstance(stmt, tree.Block):
            self.block(stmt)
        return stmt

    def stmt_in_scope(self, stmt: tree.Stmt) -> tree.Stmt:
        self.scopes.push()
        result = self.stmt(stmt)
        self.scopes.pop()
        return result

    def walk_children(self, e: tree.Expr) -> tree.Expr:
        if isinstance(e, tree.Paren):
            e.inner = self.expr(e.inner)
        elif isinstance(e, tree.Unary):
            e.operand = self.expr(e.operand)
        elif isinstance(e, tree.Binary):
            e.left = self.expr(e.left)
            e.right = self.expr(e.right)
        elif isinstance(e, tree.FieldAccess):
            e.receiver = self.expr(e.receiver)
        elif isinstance(e, tree.Call):
            if e.receiver is not None:
                e.receiver = self.expr(e.receiver)
            e.args = [self.expr(a) for a in e.args]
        elif isinstance(e, tree.New):
            e.args = [self.expr(a) for a in e.args]
        return e

    def expr(self, e: tree.Expr) -> tree.Expr:  # pragma: no cover - overridden
        raise NotImplementedError


class _SubBodyRewriter(_RewriterBase):
    """Rewrites `super.` references in the subclass's own bodies."""

    def __init__(self, cls, fates, super_sites, rewrites):
        super().__init__(rewrites)
        self.cls = cls
        self.super_sites = super_sites
        self.fate_index = {
            (f.member.kind, f.member.provenance, f.member.signature): f for f in fates
        }

    def _fate_for(self, edge: AccessEdge, kind: str, span) -> MemberFate:
        fate = self.fate_index.get((kind, edge.to_class, edge.to_member))
        if fate is None or not fate.pulls:
            raise DanglingSuperRef(
                f"'super.{edge.to_member}' in {self.cls.name} targets a member that "
                "was not pulled down",
                span,
                self.cls.path,
            )
        return fate

    def expr(self, e: tree.Expr) -> tree.Expr:
        if isinstance(e, tree.FieldAccess) and isinstance(e.receiver, tree.Super):
            edge = self.super_sites.get((e.name_span.start, e.name_span.end))
            if edge is None:  # pragma: no cover - resolver records every super site
                raise DanglingSuperRef(
                    f"unresolved 'super.{e.name}' in {self.cls.name}", e.span, self.cls.path
                )
            fate = self._fate_for(edge, ATTRIBUTE, e.span)
            new_name = fate.new_name or fate.member.name
            self.rewrites.append(
                RewriteDirective(
                    (e.span.start, e.span.end), f"super.{e.name}", new_name,
                    fate.member.provenance,
                )
            )
            if new_name in self.scopes:
                # A local would capture the bare name; go through `this`.
                return tree.FieldAccess(tree.This(e.span), new_name, e.span, e.name_span)
            return tree.Name(new_name, e.span)
        if isinstance(e, tree.Call) and isinstance(e.receiver, tree.Super):
            edge = self.super_sites.get((e.name_span.start, e.name_span.end))
            if edge is None:  # pragma: no cover
                raise DanglingSuperRef(
                    f"unresolved 'super.{e.name}' in {self.cls.name}", e.span, self.cls.path
                )
            fate = self._fate_for(edge, METHOD, e.span)
            new_name = fate.new_name or fate.member.name
            self.rewrites.append(
                RewriteDirective(
                    (e.span.start, e.span.end), f"super.{e.name}", new_name,
                    fate.member.provenance,
                )
            )
            args = [self.expr(a) for a in e.args]
            return tree.Call(None, new_name, args, e.span, e.name_span)
        return self.walk_children(e)


class _PulledBodyRewriter(_RewriterBase):
    """Rewrites references inside bodies copied down from the superclass."""

    def __init__(
        self, super_name, sites, attr_renames, method_renames,
        pulled_attrs, pulled_methods, rewrites,
    ):
        super().__init__(rewrites)
        self.super_name = super_name
        self.sites = sites
        self.attr_renames = attr_renames
        self.method_renames = method_renames
        self.pulled_attrs = pulled_attrs
        self.pulled_methods = pulled_methods

    def _edge_at(self, span) -> AccessEdge | None:
        edge = self.sites.get((span.start, span.end))
        if edge is None or edge.to_class != self.super_name:
            return None
        return edge

    def _record(self, span, old: str, new: str) -> None:
        self.rewrites.append(
            RewriteDirective((span.start, span.end), old, new, self.super_name)
        )

    def expr(self, e: tree.Expr) -> tree.Expr:
        if isinstance(e, tree.Name):
            edge = self._edge_at(e.span)
            if edge is not None and edge.basis == BASIS_BARE:
                new_name = self.attr_renames.get(edge.to_member)
                if new_name:
                    self._record(e.span, e.ident, new_name)
                    return tree.Name(new_name, e.span)
            return e
        if isinstance(e, tree.FieldAccess):
            edge = self._edge_at(e.name_span)
            if edge is not None:
                if edge.basis == BASIS_THIS:
                    new_name = self.attr_renames.get(edge.to_member)
                    if new_name:
                        self._record(e.name_span, e.name, new_name)
                        e.name = new_name
                    return e
                if edge.basis == BASIS_CLASS and edge.to_member in self.pulled_attrs:
                    # Qualified static access to a member that now lives here.
                    new_name = self.attr_renames.get(edge.to_member, edge.to_member)
                    self._record(e.span, f"{_receiver_text(e.receiver)}.{e.name}", new_name)
                    return tree.Name(new_name, e.span)
            return self.walk_children(e)
        if isinstance(e, tree.Call):
            edge = self._edge_at(e.name_span)
            if edge is not None and edge.kind == CALL:
                if edge.basis in (BASIS_BARE, BASIS_THIS):
                    new_name = self.method_renames.get(edge.to_member)
                    if new_name:
                        self._record(e.name_span, e.name, new_name)
                        e.name = new_name
                    e.args = [self.expr(a) for a in e.args]
                    if e.receiver is not None:
                        e.receiver = self.expr(e.receiver)
                    return e
                if edge.basis == BASIS_CLASS and edge.to_member in self.pulled_methods:
                    new_name = self.method_renames.get(edge.to_member, e.name)
                    self._record(e.span, f"{_receiver_text(e.receiver)}.{e.name}", new_name)
                    args = [self.expr(a) for a in e.args]
                    return tree.Call(None, new_name, args, e.span, e.name_span)
            return self.walk_children(e)
        return self.walk_children(e)


def _receiver_text(receiver: tree.Expr) -> str:
    if isinstance(receiver, tree.Name):
        return receiver.ident
    return "<receiver>"
