"""Brute-force def-use oracle for cross-checking flow endpoints.

Deliberately naive and quadratic: for every definition it scans every later
statement inside the definition's segment (up to the next definition of the
same name) and records uses, then links chains across plain aliases. It
shares the parser and the sink decision rule with the analyzer but none of
the taint engine's marking or walking code, so agreement between the two is
meaningful evidence rather than an identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import SinkDecision, TaintConfig, is_sink_call
from .javaparser import (
    Assign,
    Call,
    Cast,
    Expr,
    ExprStmt,
    LocalDecl,
    MethodDecl,
    Name,
    ParsedFile,
    Return,
    Statement,
    iter_statements,
)

MAX_METHODS_PER_CLASS = 2


@dataclass(eq=False)
class DefUseChain:
    var: str
    def_line: int
    use_lines: list[int] = field(default_factory=list)
    linked_chains: list["DefUseChain"] = field(default_factory=list)
    # bookkeeping, not part of the chain identity
    stmt: Statement | None = field(default=None, repr=False)
    method: MethodDecl | None = field(default=None, repr=False)


def _definitions(stmts: list[Statement]) -> list[tuple[int, str, Statement]]:
    defs: list[tuple[int, str, Statement]] = []
    for idx, stmt in enumerate(stmts):
        if isinstance(stmt, LocalDecl):
            defs.append((idx, stmt.var, stmt))
        elif isinstance(stmt, ExprStmt) and isinstance(stmt.expr, Assign):
            target = stmt.expr.target
            if isinstance(target, Name):
                defs.append((idx, target.ident, stmt))
    return defs


def _defining_expr(stmt: Statement) -> Expr | None:
    if isinstance(stmt, LocalDecl):
        return stmt.init
    if isinstance(stmt, ExprStmt) and isinstance(stmt.expr, Assign):
        return stmt.expr.value
    return None


def enumerate_def_use_chains(parsed: ParsedFile) -> list[DefUseChain]:
    """Every definition's uses within its segment, with alias links.

    Raises ValueError when a class holds more than MAX_METHODS_PER_CLASS
    methods; the exhaustive pair scan is meant for small fixtures only.
    """
    for cls in parsed.iter_classes():
        if len(cls.methods) > MAX_METHODS_PER_CLASS:
            raise ValueError(
                f"class {cls.name!r} has {len(cls.methods)} methods; the "
                f"oracle handles at most {MAX_METHODS_PER_CLASS} per class"
            )
    chains: list[DefUseChain] = []
    for method in parsed.iter_methods():
        stmts = list(iter_statements(method.body))
        defs = _definitions(stmts)
        by_stmt: dict[int, DefUseChain] = {}
        for def_idx, var, def_stmt in defs:
            segment_end = len(stmts)
            for other_idx, other_var, _ in defs:
                if other_var == var and other_idx > def_idx:
                    segment_end = min(segment_end, other_idx)
            chain = DefUseChain(
                var=var, def_line=def_stmt.line, stmt=def_stmt, method=method
            )
            # exhaustive pair scan over (definition, later statement); the
            # redefining statement itself counts as a use only when its
            # right-hand side still reads the old value
            for use_idx in range(len(stmts)):
                if not (def_idx < use_idx <= segment_end):
                    continue
                stmt = stmts[use_idx]
                if use_idx == segment_end:
                    expr = _defining_expr(stmt)
                    if expr is not None and var in expr.referenced_names():
                        chain.use_lines.append(stmt.line)
                elif var in stmt.referenced_names():
                    chain.use_lines.append(stmt.line)
            chains.append(chain)
            by_stmt[def_idx] = chain
        # alias links: a later definition whose defining expression uses the
        # chain's variable continues that value under a new name
        for def_idx, var, _def_stmt in defs:
            chain = by_stmt[def_idx]
            for other_idx, _other_var, other_stmt in defs:
                if other_idx <= def_idx or other_stmt.line not in chain.use_lines:
                    continue
                expr = _defining_expr(other_stmt)
                if expr is not None and var in expr.referenced_names():
                    chain.linked_chains.append(by_stmt[other_idx])
    return chains


def _source_chains(
    chains: list[DefUseChain], config: TaintConfig
) -> list[DefUseChain]:
    out = []
    for chain in chains:
        stmt = chain.stmt
        if isinstance(stmt, LocalDecl):
            simple = stmt.type_name.replace("[", "").replace("]", "").rsplit(".", 1)[-1]
            if simple in config.sources:
                out.append(chain)
    return out


def _sink_args_at(stmt: Statement, config: TaintConfig) -> set[str]:
    """Argument names of leaking sink calls in the statement."""
    roots: list[Expr] = []
    if isinstance(stmt, LocalDecl) and stmt.init is not None:
        roots.append(stmt.init)
    elif isinstance(stmt, ExprStmt):
        roots.append(stmt.expr)
    elif isinstance(stmt, Return) and stmt.expr is not None:
        roots.append(stmt.expr)
    names: set[str] = set()
    for root in roots:
        for expr in root.walk():
            if isinstance(expr, Call) and is_sink_call(expr, config) is SinkDecision.SINK:
                for arg in expr.args:
                    names |= arg.referenced_names()
    return names


def oracle_flows(parsed: ParsedFile, config: TaintConfig) -> set[tuple[int, int]]:
    """(source declaration line, sink line) endpoint pairs.

    Follows each source-typed declaration's chain and the transitive
    closure of its alias links; a pair is recorded where a closure variable
    appears in a leaking sink call's arguments.
    """
    chains = enumerate_def_use_chains(parsed)
    line_stmts: dict[tuple[int, int], list[Statement]] = {}
    for m_idx, method in enumerate(parsed.iter_methods()):
        for stmt in iter_statements(method.body):
            line_stmts.setdefault((m_idx, stmt.line), []).append(stmt)
    method_index = {id(m): i for i, m in enumerate(parsed.iter_methods())}
    pairs: set[tuple[int, int]] = set()
    for source in _source_chains(chains, config):
        visited: set[int] = set()
        frontier = [source]
        closure: list[DefUseChain] = []
        while frontier:
            chain = frontier.pop()
            if id(chain) in visited:
                continue
            visited.add(id(chain))
            closure.append(chain)
            frontier.extend(chain.linked_chains)
        m_idx = method_index[id(source.method)]
        for chain in closure:
            for line in chain.use_lines:
                for stmt in line_stmts.get((m_idx, line), []):
                    if chain.var in _sink_args_at(stmt, config):
                        pairs.add((source.def_line, line))
    return pairs
