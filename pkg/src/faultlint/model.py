"""Cross-file semantic model: class hierarchy, scopes, types, call index.

The hierarchy merges extends-edges found in the scanned corpus with a
seeded set of external edges (library classes such as Stack -> Vector
live outside any scanned file). Classes that list several superclasses
keep the full list for the inheritance detector, but depth and descendant
queries follow only the first superclass: the construct is illegal in the
analyzed language and has no deeper semantics here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fnmatch import fnmatchcase

from faultlint.nodes import (
    Block,
    ClassDecl,
    CompilationUnit,
    DoWhile,
    Expr,
    ExprStmt,
    For,
    If,
    LocalVarDecl,
    MethodDecl,
    Name,
    New,
    Paren,
    Return,
    Stmt,
    StringLit,
    TryCatch,
    While,
    walk_exprs,
)

ORIGIN_SEED = "external-seed"

DEFAULT_EXTENDS = (("Stack", "Vector"),)
DEFAULT_RESOURCE_TYPES = frozenset({
    "FileOutputStream",
    "FileInputStream",
    "DataOutputStream",
    "DataInputStream",
    "FileReader",
    "FileWriter",
    "BufferedReader",
    "BufferedWriter",
})
DEFAULT_PURE_ACCESSORS = (
    "get*",
    "size",
    "isEmpty",
    "length",
    "contains",
    "elementAt",
    "peek",
    "toString",
    "hashCode",
    "equals",
)


class CycleError(Exception):
    """Raised when a superclass chain revisits a class."""

    def __init__(self, cycle: list[str]):
        super().__init__("inheritance cycle: " + " -> ".join(cycle))
        self.cycle = cycle


class SeedError(ValueError):
    """Malformed external hierarchy seed file."""


@dataclass(frozen=True)
class ExternalHierarchySeed:
    extends_entries: tuple[tuple[str, str], ...] = DEFAULT_EXTENDS
    resource_types: frozenset[str] = DEFAULT_RESOURCE_TYPES
    pure_accessor_names: tuple[str, ...] = DEFAULT_PURE_ACCESSORS

    def is_pure_accessor(self, method_name: str) -> bool:
        return any(fnmatchcase(method_name, pat) for pat in self.pure_accessor_names)


def default_seed() -> ExternalHierarchySeed:
    return ExternalHierarchySeed()


def load_seed(path) -> ExternalHierarchySeed:
    """Load a seed file; keys not present fall back to the built-in defaults.

    Expected shape:
        { "extends": [["Stack", "Vector"], ...],
          "resource_types": ["FileOutputStream", ...],
          "pure_accessors": ["get*", ...] }
    """
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
    except json.JSONDecodeError as err:
        raise SeedError(f"seed file {path} is not valid JSON: {err}") from err
    if not isinstance(data, dict):
        raise SeedError(f"seed file {path} must contain a JSON object")

    extends = DEFAULT_EXTENDS
    if "extends" in data:
        raw = data["extends"]
        if (not isinstance(raw, list)
                or any(not isinstance(e, list) or len(e) != 2
                       or not all(isinstance(n, str) and n for n in e)
                       for e in raw)):
            raise SeedError(f"seed file {path}: 'extends' must be a list of [sub, super] name pairs")
        extends = tuple((e[0], e[1]) for e in raw)

    resources = DEFAULT_RESOURCE_TYPES
    if "resource_types" in data:
        raw = data["resource_types"]
        if not isinstance(raw, list) or any(not isinstance(n, str) or not n for n in raw):
            raise SeedError(f"seed file {path}: 'resource_types' must be a list of type names")
        resources = frozenset(raw)

    accessors = DEFAULT_PURE_ACCESSORS
    if "pure_accessors" in data:
        raw = data["pure_accessors"]
        if not isinstance(raw, list) or any(not isinstance(n, str) or not n for n in raw):
            raise SeedError(f"seed file {path}: 'pure_accessors' must be a list of name patterns")
        accessors = tuple(raw)

    return ExternalHierarchySeed(extends, resources, accessors)


@dataclass(frozen=True)
class ClassHierarchy:
    nodes: frozenset[str]
    super_edges: dict[str, tuple[str, ...]]
    origin: dict[str, str]  # class name -> corpus file path or ORIGIN_SEED
    unknown: frozenset[str]  # referenced superclasses declared nowhere


@dataclass(frozen=True)
class ProgramModel:
    hierarchy: ClassHierarchy
    classes: dict[str, ClassDecl]
    class_files: dict[str, str]
    method_index: dict[tuple[str, int], tuple[tuple[str, MethodDecl], ...]]
    units: tuple[CompilationUnit, ...]
    seed: ExternalHierarchySeed
    diagnostics: tuple[str, ...] = field(default_factory=tuple)

    def iter_methods(self):
        """(class name, file path, ClassDecl, MethodDecl) in (file, line) order."""
        for unit in self.units:
            for decl in unit.classes:
                if self.classes.get(decl.name) is not decl:
                    continue  # shadowed duplicate
                for method in decl.methods:
                    yield decl.name, unit.file_path, decl, method


def build_model(
    units: list[CompilationUnit] | tuple[CompilationUnit, ...],
    seed: ExternalHierarchySeed | None = None,
) -> ProgramModel:
    """Merge parsed units and the external seed into one ProgramModel.

    Deterministic in the set of units: the input order does not matter
    because everything is keyed by (file path, line). Duplicate class
    names keep the declaration from the lexically first file and are
    reported as model diagnostics.
    """
    seed = seed or default_seed()
    ordered_units = tuple(sorted(units, key=lambda u: u.file_path))
    diagnostics: list[str] = []

    classes: dict[str, ClassDecl] = {}
    class_files: dict[str, str] = {}
    for unit in ordered_units:
        for decl in unit.classes:
            if decl.name in classes:
                diagnostics.append(
                    f"duplicate class {decl.name} in {unit.file_path} ignored "
                    f"(already defined in {class_files[decl.name]})"
                )
                continue
            classes[decl.name] = decl
            class_files[decl.name] = unit.file_path

    super_edges: dict[str, tuple[str, ...]] = {}
    origin: dict[str, str] = {}
    for name, decl in classes.items():
        origin[name] = class_files[name]
        if decl.extends_list:
            super_edges[name] = tuple(decl.extends_list)

    seed_edges: dict[str, list[str]] = {}
    for sub, sup in seed.extends_entries:
        seed_edges.setdefault(sub, []).append(sup)
    for sub, sups in seed_edges.items():
        if sub in classes:
            continue  # corpus declaration wins over seeded edges
        super_edges[sub] = tuple(sups)
        origin.setdefault(sub, ORIGIN_SEED)
    for sub, sup in seed.extends_entries:
        if sub not in classes:
            origin.setdefault(sup, ORIGIN_SEED)

    nodes = frozenset(origin)
    unknown = frozenset(
        sup for sups in super_edges.values() for sup in sups if sup not in nodes
    )
    hierarchy = ClassHierarchy(nodes, super_edges, origin, unknown)

    seen_cycles: set[frozenset[str]] = set()
    for name in sorted(classes):
        try:
            _superclass_chain(name, hierarchy)
        except CycleError as err:
            key = frozenset(err.cycle)
            if key not in seen_cycles:
                seen_cycles.add(key)
                diagnostics.append(str(err))

    method_index: dict[tuple[str, int], list[tuple[str, MethodDecl]]] = {}
    for unit in ordered_units:
        for decl in unit.classes:
            if classes.get(decl.name) is not decl:
                continue
            for method in decl.methods:
                key = (method.name, len(method.params))
                method_index.setdefault(key, []).append((decl.name, method))

    return ProgramModel(
        hierarchy=hierarchy,
        classes=classes,
        class_files=class_files,
        method_index={k: tuple(v) for k, v in method_index.items()},
        units=ordered_units,
        seed=seed,
        diagnostics=tuple(diagnostics),
    )


def _superclass_chain(class_name: str, hierarchy: ClassHierarchy) -> list[str]:
    """Chain from class_name along first superclasses, including the start.

    An unknown external superclass ends the chain but is included (its
    edge is real even if nothing more is known about it).
    """
    chain = [class_name]
    visited = {class_name}
    current = class_name
    while True:
        supers = hierarchy.super_edges.get(current)
        if not supers:
            return chain
        first = supers[0]
        chain.append(first)
        if first not in hierarchy.nodes:
            return chain
        if first in visited:
            raise CycleError(chain)
        visited.add(first)
        current = first


def superclass_chain(class_name: str, hierarchy: ClassHierarchy) -> list[str]:
    if class_name not in hierarchy.nodes:
        raise KeyError(class_name)
    return _superclass_chain(class_name, hierarchy)


def inheritance_depth(class_name: str, hierarchy: ClassHierarchy) -> int:
    """Edge count of the first-superclass chain. Raises CycleError on cycles."""
    return len(superclass_chain(class_name, hierarchy)) - 1


def is_descendant(a: str, b: str, hierarchy: ClassHierarchy) -> bool:
    """True iff b is a strict ancestor of a along first-superclass edges."""
    if a == b:
        return False
    visited = {a}
    current = a
    while True:
        supers = hierarchy.super_edges.get(current)
        if not supers:
            return False
        first = supers[0]
        if first == b:
            return True
        if first not in hierarchy.nodes or first in visited:
            return False
        visited.add(first)
        current = first


class Scope:
    """Chained name -> declared type map; inner declarations shadow outer."""

    __slots__ = ("_names", "_parent")

    def __init__(self, parent: "Scope | None" = None):
        self._names: dict[str, str] = {}
        self._parent = parent

    def child(self) -> "Scope":
        return Scope(self)

    def declare(self, name: str, type_name: str) -> None:
        self._names[name] = type_name

    def lookup(self, name: str) -> str | None:
        scope: Scope | None = self
        while scope is not None:
            if name in scope._names:
                return scope._names[name]
            scope = scope._parent
        return None


def method_scope(class_decl: ClassDecl, method: MethodDecl) -> Scope:
    """Scope seeded with the enclosing class fields and the method params."""
    fields_scope = Scope()
    for f in class_decl.fields:
        fields_scope.declare(f.name, f.type_name)
    scope = fields_scope.child()
    for p in method.params:
        scope.declare(p.name, p.type_name)
    return scope


def static_type_of(expr: Expr, scope: Scope, model: ProgramModel | None = None) -> str | None:
    """Declared type of simple expressions; None for everything unknowable."""
    if isinstance(expr, StringLit):
        return "String"
    if isinstance(expr, Name):
        return scope.lookup(expr.ident)
    if isinstance(expr, New):
        return expr.type_name
    if isinstance(expr, Paren):
        return static_type_of(expr.inner, scope, model)
    return None


def resolve_callee(name: str, arity: int, model: ProgramModel) -> list[tuple[str, MethodDecl]]:
    """All corpus methods matching (name, arity), in (file path, line) order."""
    return list(model.method_index.get((name, arity), ()))


def iter_scoped_exprs(class_decl: ClassDecl, method: MethodDecl):
    """Yield (expr, scope) for every expression in the body, source order.

    Includes all subexpressions. The yielded scope reflects declarations in
    effect at that point and is only valid at yield time (it keeps mutating
    as the walk proceeds).
    """
    yield from _scoped_block(method.body, method_scope(class_decl, method).child())


def _scoped_block(block: Block, scope: Scope):
    for stmt in block.stmts:
        yield from _scoped_stmt(stmt, scope)


def _scoped_stmt(stmt: Stmt, scope: Scope):
    if isinstance(stmt, Block):
        yield from _scoped_block(stmt, scope.child())
    elif isinstance(stmt, LocalVarDecl):
        if stmt.init is not None:
            for expr in walk_exprs(stmt.init):
                yield expr, scope
        scope.declare(stmt.name, stmt.type_name)
    elif isinstance(stmt, ExprStmt):
        for expr in walk_exprs(stmt.expr):
            yield expr, scope
    elif isinstance(stmt, If):
        for expr in walk_exprs(stmt.cond):
            yield expr, scope
        yield from _scoped_block(stmt.then_block, scope.child())
        if stmt.else_block is not None:
            yield from _scoped_block(stmt.else_block, scope.child())
    elif isinstance(stmt, While):
        for expr in walk_exprs(stmt.cond):
            yield expr, scope
        yield from _scoped_block(stmt.body, scope.child())
    elif isinstance(stmt, DoWhile):
        yield from _scoped_block(stmt.body, scope.child())
        for expr in walk_exprs(stmt.cond):
            yield expr, scope
    elif isinstance(stmt, For):
        inner = scope.child()
        if stmt.init is not None:
            yield from _scoped_stmt(stmt.init, inner)
        for part in (stmt.cond, stmt.update):
            if part is not None:
                for expr in walk_exprs(part):
                    yield expr, inner
        yield from _scoped_block(stmt.body, inner.child())
    elif isinstance(stmt, TryCatch):
        yield from _scoped_block(stmt.try_block, scope.child())
        for clause in stmt.catches:
            catch_scope = scope.child()
            catch_scope.declare(clause.var_name, clause.type_name)
            yield from _scoped_block(clause.body, catch_scope)
        if stmt.finally_block is not None:
            yield from _scoped_block(stmt.finally_block, scope.child())
    elif isinstance(stmt, Return):
        if stmt.expr is not None:
            for expr in walk_exprs(stmt.expr):
                yield expr, scope
