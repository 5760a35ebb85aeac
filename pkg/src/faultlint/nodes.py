"""AST node types for the analyzed Java subset.

Nodes are immutable after construction (frozen dataclasses, tuple
children) so parsed units can be shared freely across concurrent detector
runs. Every node carries the 1-based source line of its anchor token:
the operator for Binary/Assign, the keyword for loops and `new`, the
name for calls.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


class Expr:
    pass


class Stmt:
    pass


# --- expressions -----------------------------------------------------------

@dataclass(frozen=True)
class StringLit(Expr):
    lexeme: str  # with quotes, exactly as in source
    line: int


@dataclass(frozen=True)
class NumLit(Expr):
    lexeme: str
    line: int


@dataclass(frozen=True)
class BoolLit(Expr):
    value: bool
    line: int


@dataclass(frozen=True)
class CharLit(Expr):
    lexeme: str
    line: int


@dataclass(frozen=True)
class Name(Expr):
    ident: str
    line: int


@dataclass(frozen=True)
class FieldAccess(Expr):
    target: Expr
    name: str
    line: int


@dataclass(frozen=True)
class MethodCall(Expr):
    receiver: Expr | None  # None for bare calls like g(s)
    name: str
    args: tuple[Expr, ...]
    line: int


@dataclass(frozen=True)
class New(Expr):
    type_name: str
    args: tuple[Expr, ...]
    line: int


@dataclass(frozen=True)
class Binary(Expr):
    op: str  # one of == != < > <= >= + - * / && ||
    lhs: Expr
    rhs: Expr
    line: int


@dataclass(frozen=True)
class Assign(Expr):
    lhs: Expr
    rhs: Expr
    line: int


@dataclass(frozen=True)
class UnaryIncDec(Expr):
    op: str  # ++ or --
    operand: Expr
    prefix: bool
    line: int


@dataclass(frozen=True)
class Paren(Expr):
    inner: Expr
    line: int


# --- statements ------------------------------------------------------------

@dataclass(frozen=True)
class Block(Stmt):
    stmts: tuple[Stmt, ...]
    line: int


@dataclass(frozen=True)
class LocalVarDecl(Stmt):
    type_name: str
    name: str
    init: Expr | None
    line: int


@dataclass(frozen=True)
class ExprStmt(Stmt):
    expr: Expr
    line: int


@dataclass(frozen=True)
class If(Stmt):
    cond: Expr
    then_block: Block
    else_block: Block | None
    line: int


@dataclass(frozen=True)
class While(Stmt):
    cond: Expr
    body: Block
    line: int


@dataclass(frozen=True)
class DoWhile(Stmt):
    body: Block
    cond: Expr
    line: int


@dataclass(frozen=True)
class For(Stmt):
    init: Stmt | None  # LocalVarDecl or ExprStmt
    cond: Expr | None
    update: Expr | None
    body: Block
    line: int


@dataclass(frozen=True)
class CatchClause:
    type_name: str
    var_name: str
    body: Block
    line: int


@dataclass(frozen=True)
class TryCatch(Stmt):
    try_block: Block
    catches: tuple[CatchClause, ...]
    finally_block: Block | None
    line: int


@dataclass(frozen=True)
class Return(Stmt):
    expr: Expr | None
    line: int


@dataclass(frozen=True)
class Empty(Stmt):
    line: int


# --- declarations ----------------------------------------------------------

@dataclass(frozen=True)
class TypedName:
    type_name: str
    name: str


@dataclass(frozen=True)
class MethodDecl:
    name: str
    params: tuple[TypedName, ...]
    body: Block
    is_constructor: bool
    line: int


@dataclass(frozen=True)
class ClassDecl:
    name: str
    extends_list: tuple[str, ...]  # length > 1 preserved, never collapsed
    implements_list: tuple[str, ...]
    fields: tuple[TypedName, ...]
    methods: tuple[MethodDecl, ...]
    line: int


@dataclass(frozen=True)
class ParseDiagnostic:
    file_path: str
    line: int
    message: str
    skipped_span: tuple[int, int]  # (start line, end line), start <= end


@dataclass(frozen=True)
class CompilationUnit:
    file_path: str
    classes: tuple[ClassDecl, ...]
    diagnostics: tuple[ParseDiagnostic, ...]


# --- traversal helpers -----------------------------------------------------

def walk_exprs(expr: Expr):
    """Yield expr and all its subexpressions, preorder, source order."""
    yield expr
    if isinstance(expr, FieldAccess):
        yield from walk_exprs(expr.target)
    elif isinstance(expr, MethodCall):
        if expr.receiver is not None:
            yield from walk_exprs(expr.receiver)
        for arg in expr.args:
            yield from walk_exprs(arg)
    elif isinstance(expr, New):
        for arg in expr.args:
            yield from walk_exprs(arg)
    elif isinstance(expr, (Binary, Assign)):
        yield from walk_exprs(expr.lhs)
        yield from walk_exprs(expr.rhs)
    elif isinstance(expr, UnaryIncDec):
        yield from walk_exprs(expr.operand)
    elif isinstance(expr, Paren):
        yield from walk_exprs(expr.inner)


def child_exprs(stmt: Stmt):
    """Direct expressions of a statement, excluding nested statements."""
    if isinstance(stmt, LocalVarDecl):
        if stmt.init is not None:
            yield stmt.init
    elif isinstance(stmt, ExprStmt):
        yield stmt.expr
    elif isinstance(stmt, If):
        yield stmt.cond
    elif isinstance(stmt, While):
        yield stmt.cond
    elif isinstance(stmt, DoWhile):
        yield stmt.cond
    elif isinstance(stmt, For):
        if stmt.cond is not None:
            yield stmt.cond
        if stmt.update is not None:
            yield stmt.update
    elif isinstance(stmt, Return):
        if stmt.expr is not None:
            yield stmt.expr


def child_stmts(stmt: Stmt):
    """Direct nested statements, source order."""
    if isinstance(stmt, Block):
        yield from stmt.stmts
    elif isinstance(stmt, If):
        yield stmt.then_block
        if stmt.else_block is not None:
            yield stmt.else_block
    elif isinstance(stmt, While):
        yield stmt.body
    elif isinstance(stmt, DoWhile):
        yield stmt.body
    elif isinstance(stmt, For):
        if stmt.init is not None:
            yield stmt.init
        yield stmt.body
    elif isinstance(stmt, TryCatch):
        yield stmt.try_block
        for clause in stmt.catches:
            yield clause.body
        if stmt.finally_block is not None:
            yield stmt.finally_block


def iter_stmts(root: Stmt):
    """Preorder walk over a statement tree."""
    yield root
    for child in child_stmts(root):
        yield from iter_stmts(child)


def structure(node):
    """Line-insensitive structural fingerprint, for round-trip comparisons."""
    if dataclasses.is_dataclass(node) and not isinstance(node, type):
        parts = [type(node).__name__]
        for field in dataclasses.fields(node):
            if field.name == "line":
                continue
            parts.append(structure(getattr(node, field.name)))
        return tuple(parts)
    if isinstance(node, tuple):
        return tuple(structure(item) for item in node)
    return node
