"""AST node types for the Java subset.

Nodes are plain dataclasses. Every node keeps the span of the source text it
was parsed from; nodes synthesized by the flattener reuse the span of the
construct they replace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .spans import Span

VISIBILITIES = ("public", "package", "protected", "private")


class Node:
    pass


class Expr(Node):
    pass


class Stmt(Node):
    pass


# --- expressions -----------------------------------------------------------


@dataclass
class Literal(Expr):
    kind: str  # int | long | double | string | boolean | null
    lexeme: str
    span: Span


@dataclass
class Name(Expr):
    ident: str
    span: Span


@dataclass
class This(Expr):
    span: Span


@dataclass
class Super(Expr):
    span: Span


@dataclass
class FieldAccess(Expr):
    receiver: Expr
    name: str
    span: Span
    name_span: Span


@dataclass
class Call(Expr):
    receiver: Expr | None  # None means a bare call
    name: str
    args: list[Expr]
    span: Span
    name_span: Span


@dataclass
class New(Expr):
    type_name: str
    args: list[Expr]
    span: Span


@dataclass
class Unary(Expr):
    op: str
    operand: Expr
    span: Span


@dataclass
class Binary(Expr):
    op: str
    left: Expr
    right: Expr
    span: Span


@dataclass
class Paren(Expr):
    inner: Expr
    span: Span


# --- statements ------------------------------------------------------------


@dataclass
class TypeRef(Node):
    name: str
    is_array: bool
    span: Span

    def text(self) -> str:
        return self.name + "[]" if self.is_array else self.name


@dataclass
class LocalDecl(Stmt):
    decl_type: TypeRef
    name: str
    init: Expr | None
    span: Span


@dataclass
class ExprStmt(Stmt):
    expr: Expr
    span: Span


@dataclass
class Assign(Stmt):
    target: Expr  # Name or FieldAccess
    value: Expr
    span: Span


@dataclass
class If(Stmt):
    cond: Expr
    then_branch: Stmt
    else_branch: Stmt | None
    span: Span


@dataclass
class While(Stmt):
    cond: Expr
    body: Stmt
    span: Span


@dataclass
class Return(Stmt):
    value: Expr | None
    span: Span


@dataclass
class Block(Stmt):
    statements: list[Stmt]
    span: Span


# --- declarations ----------------------------------------------------------


@dataclass
class Param(Node):
    decl_type: TypeRef
    name: str
    span: Span


@dataclass
class FieldDecl(Node):
    visibility: str
    is_static: bool
    is_final: bool
    decl_type: TypeRef
    name: str
    init: Expr | None
    span: Span
    name_span: Span


@dataclass
class MethodDecl(Node):
    visibility: str
    is_static: bool
    is_final: bool
    return_type: TypeRef | None  # None means void
    name: str
    params: list[Param]
    body: Block
    span: Span
    name_span: Span

    def signature(self) -> str:
        return method_signature(self.name, [p.decl_type.text() for p in self.params])


@dataclass
class CtorDecl(Node):
    visibility: str
    name: str
    params: list[Param]
    body: Block
    span: Span
    name_span: Span

    def signature(self) -> str:
        return method_signature("<init>", [p.decl_type.text() for p in self.params])


@dataclass
class ClassDecl(Node):
    visibility: str
    name: str
    superclass: str | None
    members: list[FieldDecl | MethodDecl | CtorDecl]
    span: Span
    name_span: Span


@dataclass
class CompilationUnit(Node):
    package: str | None
    class_decl: ClassDecl
    span: Span
    path: str | None = field(default=None, compare=False)


def method_signature(name: str, param_types: list[str]) -> str:
    return f"{name}({','.join(param_types)})"
