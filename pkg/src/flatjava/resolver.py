"""Name resolution and the member-access graph.

Resolution order inside a method body: locals and parameters, then the
class's own members (private included), then visible members walking up the
superclass chain. `super.x` starts the walk at the direct superclass and
sees visible members only. Locals shadow fields and never produce edges.

Overload resolution is exact-match: filter by arity, then require parameter
type names to equal the computed argument type names. A lone arity match
wins without type checks; anything else unresolvable is an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import tree
from .errors import AmbiguousCall, UnresolvedName
from .model import ClassInfo, ClassModel, MemberInfo
from .spans import Span

INIT_FIELDS = "<init-fields>()"

READ = "read"
WRITE = "write"
CALL = "call"

BASIS_BARE = "bare"
BASIS_THIS = "this"
BASIS_SUPER = "super"
BASIS_CLASS = "class"
BASIS_RECEIVER = "receiver"

_PRIMITIVES = frozenset({"int", "long", "double", "boolean", "void"})


@dataclass(frozen=True)
class AccessEdge:
    from_class: str
    from_member: str  # method signature, <init-fields>(), or <init>(...)
    kind: str  # read | write | call
    to_class: str
    to_member: str  # attribute name or method signature
    basis: str  # bare | this | super | class | receiver
    span: Span
    initializer_of: str | None = None

    def key(self) -> tuple[str, str, str, str, str, str]:
        return (self.from_class, self.from_member, self.kind,
                self.to_class, self.to_member, self.basis)


@dataclass
class ClassResolution:
    class_name: str
    edges: list[AccessEdge] = field(default_factory=list)
    receiver_types: set[str] = field(default_factory=set)
    new_types: set[str] = field(default_factory=set)


class AccessGraph:
    def __init__(self, resolutions: dict[str, ClassResolution]):
        self.resolutions = resolutions
        self.edges: list[AccessEdge] = []
        for name in resolutions:
            self.edges.extend(resolutions[name].edges)

    def edges_from(self, class_name: str, member: str | None = None) -> list[AccessEdge]:
        edges = self.resolutions[class_name].edges if class_name in self.resolutions else []
        if member is None:
            return list(edges)
        return [e for e in edges if e.from_member == member]

    def accesses_of(self, class_name: str, member_key: str, kinds=(READ, WRITE)) -> list[AccessEdge]:
        return [
            e for e in self.edges
            if e.to_class == class_name and e.to_member == member_key and e.kind in kinds
        ]

    def key_multiset(self) -> list[tuple[str, str, str, str, str, str]]:
        return sorted(e.key() for e in self.edges)


def compute_access_graph(model: ClassModel) -> AccessGraph:
    resolutions = {}
    for name in model.order:
        info = model.classes[name]
        if info.synthetic:
            resolutions[name] = ClassResolution(name)
            continue
        resolutions[name] = resolve_class(model, info)
    return AccessGraph(resolutions)


def resolve_class(model: ClassModel, cls: ClassInfo) -> ClassResolution:
    """Resolve every body in one class, collecting access edges."""
    res = ClassResolution(cls.name)
    walker = _Walker(model, cls, res)
    for member in cls.ordered_members():
        if isinstance(member.decl, tree.FieldDecl):
            if member.decl.init is not None:
                walker.walk_member(INIT_FIELDS, [], member.decl.init, initializer_of=member.name)
        elif isinstance(member.decl, tree.MethodDecl):
            walker.walk_member(member.signature, member.decl.params, member.decl.body)
        else:
            walker.walk_member(member.signature, member.decl.params, member.decl.body)
    return res


class _ScopeStack:
    """Lexical scopes for locals and parameters; innermost wins."""

    def __init__(self):
        self.frames: list[dict[str, str]] = []

    def push(self) -> None:
        self.frames.append({})

    def pop(self) -> None:
        self.frames.pop()

    def declare(self, name: str, type_text: str) -> None:
        self.frames[-1][name] = type_text

    def lookup(self, name: str) -> str | None:
        for frame in reversed(self.frames):
            if name in frame:
                return frame[name]
        return None


class _Walker:
    def __init__(self, model: ClassModel, cls: ClassInfo, res: ClassResolution):
        self.model = model
        self.cls = cls
        self.res = res
        self.scopes = _ScopeStack()
        self.from_member = ""
        self.initializer_of: str | None = None

    def fail(self, message: str, span: Span) -> UnresolvedName:
        return UnresolvedName(message, span, self.cls.path)

    def edge(self, kind: str, target: MemberInfo, basis: str, span: Span) -> None:
        self.res.edges.append(
            AccessEdge(
                self.cls.name, self.from_member, kind, target.owner, target.signature,
                basis, span, self.initializer_of,
            )
        )

    # -- entry ----------------------------------------------------------

    def walk_member(self, from_member, params, body, initializer_of: str | None = None):
        self.from_member = from_member
        self.initializer_of = initializer_of
        self.scopes = _ScopeStack()
        self.scopes.push()
        for p in params:
            self.scopes.declare(p.name, p.decl_type.text())
        if isinstance(body, tree.Block):
            self.block(body)
        else:
            self.expr(body)

    # -- statements -------------------------------------------------------

    def block(self, block: tree.Block) -> None:
        self.scopes.push()
        for stmt in block.statements:
            self.stmt(stmt)
        self.scopes.pop()

    def stmt(self, stmt: tree.Stmt) -> None:
        if isinstance(stmt, tree.LocalDecl):
            if stmt.init is not None:
                self.expr(stmt.init)
            self.scopes.declare(stmt.name, stmt.decl_type.text())
        elif isinstance(stmt, tree.ExprStmt):
            self.expr(stmt.expr)
        elif isinstance(stmt, tree.Assign):
            self.expr(stmt.value)
            self.assign_target(stmt.target)
        elif isinstance(stmt, tree.If):
            self.expr(stmt.cond)
            self.stmt_in_scope(stmt.then_branch)
            if stmt.else_branch is not None:
                self.stmt_in_scope(stmt.else_branch)
        elif isinstance(stmt, tree.While):
            self.expr(stmt.cond)
            self.stmt_in_scope(stmt.body)
        elif isinstance(stmt, tree.Return):
            if stmt.value is not None:
                self.expr(stmt.value)
        elif isinstance(stmt, tree.Block):
            self.block(stmt)
        else:  # pragma: no cover
            raise TypeError(f"unknown statement {type(stmt).__name__}")

    def stmt_in_scope(self, stmt: tree.Stmt) -> None:
        if isinstance(stmt, tree.Block):
            self.block(stmt)
        else:
            self.scopes.push()
            self.stmt(stmt)
            self.scopes.pop()

    def assign_target(self, target: tree.Expr) -> None:
        if isinstance(target, tree.Name):
            if self.scopes.lookup(target.ident) is not None:
                return  # local write, no edge
            found = self.lookup_attribute(target.ident)
            if found is None:
                raise self.fail(f"cannot resolve name {target.ident!r}", target.span)
            self.edge(WRITE, found, BASIS_BARE, target.span)
        elif isinstance(target, tree.FieldAccess):
            self.field_access(target, kind=WRITE)
        else:  # pragma: no cover - parser rejects other targets
            raise TypeError("invalid assignment target")

    # -- expressions ------------------------------------------------------

    def expr(self, e: tree.Expr) -> str | None:
        """Walk an expression, record edges, and return its static type name."""
        if isinstance(e, tree.Literal):
            return {"string": "String"}.get(e.kind, e.kind)
        if isinstance(e, tree.Name):
            local = self.scopes.lookup(e.ident)
            if local is not None:
                return local
            found = self.lookup_attribute(e.ident)
            if found is None:
                raise self.fail(f"cannot resolve name {e.ident!r}", e.span)
            self.edge(READ, found, BASIS_BARE, e.span)
            return found.decl.decl_type.text()
        if isinstance(e, tree.This):
            return self.cls.name
        if isinstance(e, tree.Super):
            if self.cls.superclass is None:
                raise self.fail("'super' used in a class with no superclass", e.span)
            return self.cls.superclass
        if isinstance(e, tree.Paren):
            return self.expr(e.inner)
        if isinstance(e, tree.Unary):
            return self.expr(e.operand)
        if isinstance(e, tree.Binary):
            left = self.expr(e.left)
            right = self.expr(e.right)
            if e.op in ("&&", "||", "==", "!=", "<", "<=", ">", ">="):
                return "boolean"
            if "String" in (left, right):
                return "String"
            if "double" in (left, right):
                return "double"
            if "long" in (left, right):
                return "long"
            return "int"
        if isinstance(e, tree.FieldAccess):
            return self.field_access(e, kind=READ)
        if isinstance(e, tree.Call):
            return self.call(e)
        if isinstance(e, tree.New):
            return self.new_expr(e)
        raise TypeError(f"unknown expression {type(e).__name__}")  # pragma: no cover

    def field_access(self, e: tree.FieldAccess, kind: str) -> str | None:
        receiver = e.receiver
        if isinstance(receiver, tree.This):
            member = self.cls.attributes.get(e.name)
            if member is None:
                raise self.fail(
                    f"class {self.cls.name} has no attribute {e.name!r}", e.name_span
                )
            self.edge(kind, member, BASIS_THIS, e.name_span)
            return member.decl.decl_type.text()
        if isinstance(receiver, tree.Super):
            member = self.lookup_super_attribute(e.name)
            if member is None:
                raise self.fail(
                    f"no visible attribute {e.name!r} in superclasses of {self.cls.name}",
                    e.name_span,
                )
            self.edge(kind, member, BASIS_SUPER, e.name_span)
            return member.decl.decl_type.text()
        if isinstance(receiver, tree.Name):
            name = receiver.ident
            if self.scopes.lookup(name) is None and self.lookup_attribute(name) is None:
                if name in self.model.classes:
                    return self.static_member_access(name, e, kind)
                raise self.fail(f"cannot resolve name {name!r}", receiver.span)
        receiver_type = self.expr(receiver)
        return self.typed_member_access(receiver_type, e, kind)

    def attr_on_type(self, type_name: str, name: str) -> MemberInfo | None:
        """Nearest accessible attribute walking `type_name`'s chain.

        Private members are accessible only when declared by the accessing
        class itself.
        """
        current: str | None = type_name
        while current is not None:
            info = self.model.classes[current]
            member = info.attributes.get(name)
            if member is not None:
                if member.visible or member.owner == self.cls.name:
                    return member
                return None  # nearest declaration is inaccessible
            current = info.superclass
        return None

    def static_member_access(self, class_name: str, e: tree.FieldAccess, kind: str) -> str | None:
        member = self.attr_on_type(class_name, e.name)
        if member is None:
            raise self.fail(
                f"class {class_name} has no accessible attribute {e.name!r}", e.name_span
            )
        if not member.is_static:
            raise self.fail(
                f"attribute {class_name}.{e.name} is not static", e.name_span
            )
        self.edge(kind, member, BASIS_CLASS, e.name_span)
        return member.decl.decl_type.text()

    def typed_member_access(self, receiver_type: str | None, e: tree.FieldAccess, kind: str):
        if receiver_type is None or receiver_type not in self.model.classes:
            return None  # external receiver type: unmodeled, no edge
        self.res.receiver_types.add(receiver_type)
        member = self.attr_on_type(receiver_type, e.name)
        if member is None:
            raise self.fail(
                f"class {receiver_type} has no accessible attribute {e.name!r}",
                e.name_span,
            )
        self.edge(kind, member, BASIS_RECEIVER, e.name_span)
        return member.decl.decl_type.text()

    def call(self, e: tree.Call) -> str | None:
        arg_types = [self.expr(a) for a in e.args]
        receiver = e.receiver
        if receiver is None or isinstance(receiver, tree.This):
            basis = BASIS_BARE if receiver is None else BASIS_THIS
            candidates = self.method_candidates(self.cls, e.name, own_class=True)
            member = self.pick_overload(candidates, e, arg_types)
            self.edge(CALL, member, basis, e.name_span)
            return _return_type(member)
        if isinstance(receiver, tree.Super):
            if self.cls.superclass is None:
                raise self.fail("'super' used in a class with no superclass", receiver.span)
            start = self.model.classes[self.cls.superclass]
            candidates = self.method_candidates(start, e.name, own_class=False)
            member = self.pick_overload(candidates, e, arg_types)
            self.edge(CALL, member, BASIS_SUPER, e.name_span)
            return _return_type(member)
        if isinstance(receiver, tree.Name):
            name = receiver.ident
            if self.scopes.lookup(name) is None and self.lookup_attribute(name) is None:
                if name in self.model.classes:
                    return self.static_call(name, e, arg_types)
                raise self.fail(f"cannot resolve name {name!r}", receiver.span)
        receiver_type = self.expr(receiver)
        if receiver_type is None or receiver_type not in self.model.classes:
            return None
        self.res.receiver_types.add(receiver_type)
        target_cls = self.model.classes[receiver_type]
        candidates = self.method_candidates(
            target_cls, e.name, own_class=(receiver_type == self.cls.name)
        )
        member = self.pick_overload(candidates, e, arg_types)
        self.edge(CALL, member, BASIS_RECEIVER, e.name_span)
        return _return_type(member)

    def static_call(self, class_name: str, e: tree.Call, arg_types) -> str | None:
        target_cls = self.model.classes[class_name]
        candidates = self.method_candidates(
            target_cls, e.name, own_class=(class_name == self.cls.name)
        )
        member = self.pick_overload(candidates, e, arg_types)
        if not member.is_static:
            raise self.fail(f"method {class_name}.{member.signature} is not static", e.name_span)
        self.edge(CALL, member, BASIS_CLASS, e.name_span)
        return _return_type(member)

    def new_expr(self, e: tree.New) -> str:
        arg_types = [self.expr(a) for a in e.args]
        self.res.new_types.add(e.type_name)
        if e.type_name not in self.model.classes:
            return e.type_name  # external constructor: allowed, unresolved
        target_cls = self.model.classes[e.type_name]
        if not target_cls.ctors:
            if e.args:
                raise self.fail(
                    f"class {e.type_name} has no constructor taking {len(e.args)} argument(s)",
                    e.span,
                )
            return e.type_name
        matching = [c for c in target_cls.ctors if len(c.decl.params) == len(e.args)]
        if not matching:
            raise self.fail(
                f"class {e.type_name} has no constructor taking {len(e.args)} argument(s)",
                e.span,
            )
        if len(matching) > 1:
            exact = [c for c in matching if _types_match(c, arg_types)]
            if len(exact) != 1:
                raise AmbiguousCall(
                    f"constructor call new {e.type_name}({', '.join(t or '?' for t in arg_types)}) "
                    f"matches {len(exact) or len(matching)} overloads",
                    e.span,
                    self.cls.path,
                )
            matching = exact
        self.edge(CALL, matching[0], BASIS_RECEIVER, e.span)
        return e.type_name

    # -- lookup helpers ---------------------------------------------------

    def lookup_attribute(self, name: str) -> MemberInfo | None:
        member = self.cls.attributes.get(name)
        if member is not None:
            return member
        current = self.cls.superclass
        while current is not None:
            info = self.model.classes[current]
            member = info.attributes.get(name)
            if member is not None and member.visible:
                return member
            current = info.superclass
        return None

    def lookup_super_attribute(self, name: str) -> MemberInfo | None:
        current = self.cls.superclass
        while current is not None:
            info = self.model.classes[current]
            member = info.attributes.get(name)
            if member is not None and member.visible:
                return member
            current = info.superclass
        return None

    def method_candidates(self, start: ClassInfo, name: str, own_class: bool) -> list[MemberInfo]:
        """Nearest declaration per signature, walking the chain from `start`."""
        seen: dict[str, MemberInfo] = {}
        info: ClassInfo | None = start
        first = True
        while info is not None:
            for member in info.methods.values():
                if member.name != name:
                    continue
                if not member.visible and not (own_class and first):
                    continue
                if member.signature not in seen:
                    seen[member.signature] = member
            first = False
            info = self.model.classes[info.superclass] if info.superclass else None
        return list(seen.values())

    def pick_overload(self, candidates: list[MemberInfo], e: tree.Call, arg_types) -> MemberInfo:
        # No method of this name at all: an unresolved identifier. A known
        # name with no applicable or no unique overload: an ambiguous call.
        if not candidates:
            raise self.fail(f"cannot resolve method {e.name!r}", e.name_span)
        arity = [c for c in candidates if len(c.decl.params) == len(e.args)]
        if not arity:
            raise AmbiguousCall(
                f"no overload of {e.name!r} takes {len(e.args)} argument(s)",
                e.name_span,
                self.cls.path,
            )
        if len(arity) == 1:
            return arity[0]
        exact = [c for c in arity if _types_match(c, arg_types)]
        if len(exact) == 1:
            return exact[0]
        raise AmbiguousCall(
            f"call {e.name!r} with argument types "
            f"({', '.join(t or '?' for t in arg_types)}) matches "
            f"{len(exact) or len(arity)} overloads",
            e.name_span,
            self.cls.path,
        )


def _types_match(member: MemberInfo, arg_types: list[str | None]) -> bool:
    for param, arg in zip(member.decl.params, arg_types):
        expected = param.decl_type.text()
        if arg == "null":
            if expected in _PRIMITIVES:
                return False
            continue
        if arg != expected:
            return False
    return True


def _return_type(member: MemberInfo) -> str | None:
    decl = member.decl
    if isinstance(decl, tree.MethodDecl) and decl.return_type is not None:
        return decl.return_type.text()
    return None
