"""Taint pipeline over one parsed file.

Sinks are marked first; from each sink the def-use chain is walked backward
to the declarations feeding it; declarations built through same-file calls
pull the callee's return chain in (one level); marked declarations are then
classified into sources and sensitive sources by declared type; finally the
flows are drawn forward from each source and observed for findings.
Tracking is name-based, method-local and flow-insensitive, which matches
the line-oriented structure of decompiler output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .config import SinkDecision, TaintConfig, WARNING_MESSAGE, is_sink_call
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
    SourceFile,
    Statement,
    iter_statements,
    parse_file,
    simple_type_name,
)

Diagnostic = tuple[int, str]


class MarkTag(Enum):
    SINK = "sink"
    SOURCE = "source"
    SENSITIVE_SOURCE = "sensitive_source"
    LINE = "line"


@dataclass(eq=False)
class Mark:
    tag: MarkTag
    line: int
    tracked_vars: set[str] = field(default_factory=set)
    sink_method: str | None = None


@dataclass(eq=False)
class MarkedFile:
    parsed: ParsedFile
    marks: dict[Statement, Mark] = field(default_factory=dict)
    marked_declarations: list[LocalDecl] = field(default_factory=list)
    marked_methods: set[str] = field(default_factory=set)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    method_of: dict[Statement, MethodDecl] = field(default_factory=dict)

    def mark_of(self, stmt: Statement) -> Mark | None:
        return self.marks.get(stmt)

    def marked_lines_in(self, method: MethodDecl) -> list[int]:
        lines = sorted(
            {s.line for s in iter_statements(method.body) if s in self.marks}
        )
        return lines

    def sensitive_vars(self, method: MethodDecl) -> set[str]:
        out: set[str] = set()
        for stmt in iter_statements(method.body):
            mark = self.marks.get(stmt)
            if (
                mark is not None
                and mark.tag is MarkTag.SENSITIVE_SOURCE
                and isinstance(stmt, LocalDecl)
            ):
                out.add(stmt.var)
        return out


@dataclass(frozen=True)
class DataFlow:
    lines: tuple[int, ...]

    @property
    def source_line(self) -> int:
        return self.lines[0]

    @property
    def sink_line(self) -> int:
        return self.lines[-1]


class FindingKind(Enum):
    WARNING = "Warning"
    LEAK = "Leak"


@dataclass(frozen=True)
class Finding:
    kind: FindingKind
    line: int
    message: str


@dataclass(eq=False)
class FlowReport:
    flow: DataFlow
    findings: list[Finding]


@dataclass(eq=False)
class FileReport:
    file: str
    app_id: str
    flow_reports: list[FlowReport] = field(default_factory=list)
    diagnostics: list[Diagnostic] = field(default_factory=list)
    marked: MarkedFile | None = field(default=None, repr=False)
    source_path: str | None = field(default=None, repr=False)

    @property
    def flows(self) -> list[DataFlow]:
        return [fr.flow for fr in self.flow_reports]

    @property
    def findings(self) -> list[Finding]:
        return [f for fr in self.flow_reports for f in fr.findings]

    @property
    def leak_lines(self) -> list[int]:
        return sorted(
            {f.line for f in self.findings if f.kind is FindingKind.LEAK}
        )


# ---------------------------------------------------------------------------
# expression helpers


def _expr_roots(stmt: Statement) -> tuple[Expr, ...]:
    if isinstance(stmt, LocalDecl):
        return (stmt.init,) if stmt.init is not None else ()
    if isinstance(stmt, ExprStmt):
        return (stmt.expr,)
    if isinstance(stmt, Return):
        return (stmt.expr,) if stmt.expr is not None else ()
    return ()


def find_sink_call(stmt: Statement, config: TaintConfig) -> Call | None:
    """First call in the statement the decision rule classifies as a sink."""
    for root in _expr_roots(stmt):
        for node in root.walk():
            if isinstance(node, Call) and is_sink_call(node, config) is SinkDecision.SINK:
                return node
    return None


def _assignment_of(stmt: Statement) -> tuple[str, set[str]] | None:
    """(target name, value names) for a plain ``x = expr;`` statement."""
    if isinstance(stmt, ExprStmt) and isinstance(stmt.expr, Assign):
        target = stmt.expr.target
        if isinstance(target, Name):
            return target.ident, stmt.expr.value.referenced_names()
    return None


def _initializer_call(decl: LocalDecl) -> Call | None:
    """The call a declaration is built from, unwrapping casts."""
    node = decl.init
    while isinstance(node, Cast):
        node = node.expr
    return node if isinstance(node, Call) else None


def _defining_names(stmt: Statement) -> set[str]:
    """Names the statement's defining (right-hand) expression references."""
    assign = _assignment_of(stmt)
    if assign is not None:
        return assign[1]
    return stmt.referenced_names()


# ---------------------------------------------------------------------------
# pipeline steps


def mark_sinks(parsed: ParsedFile, config: TaintConfig) -> MarkedFile:
    """Mark every leaking sink call; exempt forms are left unmarked."""
    marked = MarkedFile(parsed=parsed)
    for method in parsed.iter_methods():
        for stmt in iter_statements(method.body):
            marked.method_of[stmt] = method
            call = find_sink_call(stmt, config)
            if call is None:
                continue
            tracked: set[str] = set()
            for arg in call.args:
                tracked |= arg.referenced_names()
            marked.marks[stmt] = Mark(
                tag=MarkTag.SINK,
                line=stmt.line,
                tracked_vars=tracked,
                sink_method=call.method,
            )
    return marked


def _propagate_backward(
    marked: MarkedFile, stmts: list[Statement], start: int, tracked: set[str]
) -> None:
    """Walk statements before ``start`` in reverse, marking the def-use
    chain of every tracked name and growing the set with each marked
    statement's defining expression."""
    for idx in range(start - 1, -1, -1):
        stmt = stmts[idx]
        if isinstance(stmt, LocalDecl):
            if stmt.var not in tracked:
                continue
            _mark_line(marked, stmt)
            tracked |= _defining_names(stmt)
            tracked.discard(stmt.var)  # the declaration bounds its own chain
            continue
        assign = _assignment_of(stmt)
        if assign is not None:
            target, value_names = assign
            if target not in tracked and not (value_names & tracked):
                continue
            _mark_line(marked, stmt)
            tracked |= value_names
            if target not in value_names:
                tracked.discard(target)
            continue
        names = stmt.referenced_names()
        if names & tracked:
            _mark_line(marked, stmt)
            tracked |= names


def _mark_line(marked: MarkedFile, stmt: Statement) -> None:
    mark = marked.marks.get(stmt)
    if mark is None:
        marked.marks[stmt] = Mark(tag=MarkTag.LINE, line=stmt.line)
    # an existing mark (e.g. a sink crossed by another chain) keeps its tag


def back_propagate(marked: MarkedFile) -> MarkedFile:
    """From every sink, mark the statements its arguments derive from."""
    for method in marked.parsed.iter_methods():
        stmts = list(iter_statements(method.body))
        sink_indices = [
            i
            for i, s in enumerate(stmts)
            if s in marked.marks and marked.marks[s].tag is MarkTag.SINK
        ]
        for idx in sink_indices:
            tracked = set(marked.marks[stmts[idx]].tracked_vars)
            _propagate_backward(marked, stmts, idx, tracked)
    return marked


def extract_marked_declarations(marked: MarkedFile) -> list[LocalDecl]:
    """Marked declarations whose value comes from a same-file method call."""
    table = marked.parsed.method_table()
    decls: list[LocalDecl] = []
    for stmt in sorted(marked.marks, key=lambda s: s.line):
        if not isinstance(stmt, LocalDecl):
            continue
        call = _initializer_call(stmt)
        if call is None:
            continue
        if call.method in table:
            decls.append(stmt)
        else:
            marked.diagnostics.append(
                (
                    stmt.line,
                    f"declaration built from {call.method!r} which is not "
                    "defined in this file",
                )
            )
    marked.marked_declarations = decls
    return decls


def back_propagate_declarations(
    marked: MarkedFile, decls: list[LocalDecl]
) -> MarkedFile:
    """Follow marked declarations one call level down: mark each callee's
    returns and back-propagate inside the callee."""
    table = marked.parsed.method_table()
    visited: set[str] = set()
    for decl in decls:
        call = _initializer_call(decl)
        if call is None:
            continue
        callee = table.get(call.method)
        if callee is None or callee.name in visited:
            continue
        visited.add(callee.name)
        marked.marked_methods.add(callee.name)
        stmts = list(iter_statements(callee.body))
        for idx, stmt in enumerate(stmts):
            if not isinstance(stmt, Return):
                continue
            _mark_line(marked, stmt)
            tracked = stmt.referenced_names()
            _propagate_backward(marked, stmts, idx, set(tracked))
    return marked


def classify_sources(marked: MarkedFile, config: TaintConfig) -> MarkedFile:
    """Retag marked declarations into sources / sensitive sources by type."""
    for stmt, mark in marked.marks.items():
        if mark.tag is not MarkTag.LINE or not isinstance(stmt, LocalDecl):
            continue
        simple = simple_type_name(stmt.type_name)
        if simple in config.sources:
            mark.tag = MarkTag.SOURCE
        elif simple in config.sensitive_sources:
            mark.tag = MarkTag.SENSITIVE_SOURCE
    return marked


def collect_marked_methods(marked: MarkedFile) -> set[str]:
    """Every method containing at least one mark, plus followed callees."""
    for method in marked.parsed.iter_methods():
        if any(s in marked.marks for s in iter_statements(method.body)):
            marked.marked_methods.add(method.name)
    return marked.marked_methods


def draw_data_flows(marked: MarkedFile) -> list[DataFlow]:
    """Walk forward from each source declaration and snapshot a flow at
    every sink its value reaches."""
    table = marked.parsed.method_table()
    flows: list[DataFlow] = []
    seen: set[tuple[int, int]] = set()
    for method in marked.parsed.iter_methods():
        stmts = list(iter_statements(method.body))
        for idx, stmt in enumerate(stmts):
            mark = marked.marks.get(stmt)
            if mark is None or mark.tag is not MarkTag.SOURCE:
                continue
            assert isinstance(stmt, LocalDecl)
            lines = [stmt.line]
            lines.extend(_callee_splice(marked, table, method, stmt))
            traced = {stmt.var}
            for later in stmts[idx + 1:]:
                later_mark = marked.marks.get(later)
                if later_mark is None:
                    continue
                if not _flow_step(later, traced, lines):
                    if not traced:
                        break
                    continue
                if later_mark.tag is MarkTag.SINK and (
                    later_mark.tracked_vars & traced
                ):
                    key = (lines[0], later.line)
                    if key not in seen:
                        seen.add(key)
                        flows.append(DataFlow(lines=tuple(lines)))
    flows.sort(key=lambda f: (f.source_line, f.sink_line))
    return flows


def _callee_splice(
    marked: MarkedFile,
    table: dict[str, MethodDecl],
    method: MethodDecl,
    decl: LocalDecl,
) -> list[int]:
    """Lines inlined into a flow when the source is built via a same-file
    call: the callee's declaration line then its marked lines."""
    call = _initializer_call(decl)
    if call is None:
        return []
    callee = table.get(call.method)
    if callee is None or callee is method or callee.name not in marked.marked_methods:
        return []
    return [callee.decl_line] + marked.marked_lines_in(callee)


def _flow_step(stmt: Statement, traced: set[str], lines: list[int]) -> bool:
    """Apply one marked statement to the forward walk; True if collected."""
    names = stmt.referenced_names()
    if isinstance(stmt, LocalDecl):
        if names & traced:
            lines.append(stmt.line)
            traced.add(stmt.var)
            return True
        if stmt.var in traced:  # redeclaration starts a new definition
            traced.discard(stmt.var)
        return False
    assign = _assignment_of(stmt)
    if assign is not None:
        target, value_names = assign
        if value_names & traced:
            lines.append(stmt.line)
            traced.add(target)
            return True
        if target in traced:  # clean reassignment ends the chain for target
            traced.discard(target)
        return False
    if names & traced:
        lines.append(stmt.line)
        return True
    return False


def observe_flow(
    flow: DataFlow, marked: MarkedFile, config: TaintConfig
) -> list[Finding]:
    """Findings along one flow: a warning on each line touching a sensitive
    variable, and the leak at the flow's own sink line."""
    by_line: dict[int, list[Statement]] = {}
    for stmt in marked.marks:
        by_line.setdefault(stmt.line, []).append(stmt)
    findings: list[Finding] = []
    for line in flow.lines:
        stmts = by_line.get(line)
        if not stmts:  # spliced method declaration lines carry no statement
            continue
        names: set[str] = set()
        sensitive: set[str] = set()
        for stmt in stmts:
            names |= stmt.referenced_names()
            method = marked.method_of.get(stmt)
            if method is not None:
                sensitive |= marked.sensitive_vars(method)
        if names & sensitive:
            findings.append(
                Finding(kind=FindingKind.WARNING, line=line, message=WARNING_MESSAGE)
            )
        if line == flow.sink_line:
            sink_method = None
            for stmt in stmts:
                mark = marked.marks.get(stmt)
                if mark is not None and mark.sink_method is not None:
                    sink_method = mark.sink_method
                    break
            findings.append(
                Finding(
                    kind=FindingKind.LEAK,
                    line=line,
                    message=config.tip_for(sink_method or "sendBroadcast"),
                )
            )
    return findings


def analyze_file(source: SourceFile, config: TaintConfig) -> FileReport:
    """Run the whole pipeline over one source file; never raises."""
    parsed = parse_file(source)
    diagnostics = list(parsed.parse_diagnostics)
    report = FileReport(
        file=source.path,
        app_id=source.app_id,
        diagnostics=diagnostics,
        source_path=source.path,
    )
    if not parsed.classes:
        return report
    marked = mark_sinks(parsed, config)
    back_propagate(marked)
    decls = extract_marked_declarations(marked)
    back_propagate_declarations(marked, decls)
    classify_sources(marked, config)
    collect_marked_methods(marked)
    flows = draw_data_flows(marked)
    report.flow_reports = [
        FlowReport(flow=flow, findings=observe_flow(flow, marked, config))
        for flow in flows
    ]
    report.diagnostics = diagnostics + marked.diagnostics
    report.marked = marked
    return report
