"""Report rendering: human text, versioned machine JSON, cleaned source.

The text form prints one block per flow (the flow line list, then its
findings). The machine form is deterministic JSON, schema_version 1:

    {
      "schema_version": 1,
      "apps": [
        {"app_id": "...",
         "files": [
           {"file": "...",
            "flows": [{"lines": [...],
                       "findings": [{"kind": "Leak", "line": 186,
                                     "message": "..."}]}],
            "diagnostics": [[12, "..."]]}
         ]}
      ],
      "totals": {"total_apps": 0, "apps_with_leaks": 0, "total_leaks": 0}
    }

Apps are sorted by app_id and files by path; totals are recomputed from the
per-file reports on every render and validated on parse, so rendering the
same scan twice is byte-identical and totals can never drift from the body.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .engine import (
    DataFlow,
    FileReport,
    Finding,
    FindingKind,
    FlowReport,
    MarkedFile,
)
from .javaparser import iter_statements

SCHEMA_VERSION = 1


@dataclass(eq=False)
class CorpusReport:
    app_ids: list[str] = field(default_factory=list)
    per_file: list[FileReport] = field(default_factory=list)


@dataclass(frozen=True)
class CorpusSummary:
    total_apps: int
    apps_with_leaks: int
    total_leaks: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.total_apps, self.apps_with_leaks, self.total_leaks)


def leak_keys(report: CorpusReport) -> set[tuple[str, str, int]]:
    """Distinct (app_id, file, sink line) leak sites in a corpus report."""
    keys: set[tuple[str, str, int]] = set()
    for fr in report.per_file:
        for finding in fr.findings:
            if finding.kind is FindingKind.LEAK:
                keys.add((fr.app_id, fr.file, finding.line))
    return keys


def summarize(report: CorpusReport) -> CorpusSummary:
    """Corpus totals; leaks deduplicate per (app, file, sink line)."""
    keys = leak_keys(report)
    return CorpusSummary(
        total_apps=len(set(report.app_ids)),
        apps_with_leaks=len({app for app, _, _ in keys}),
        total_leaks=len(keys),
    )


def render_text(report: FileReport) -> str:
    """One block per flow: the flow's lines, then each finding."""
    out: list[str] = []
    for fr in report.flow_reports:
        out.append("Flow: " + " ".join(str(n) for n in fr.flow.lines))
        for finding in fr.findings:
            out.append(f"{finding.kind.value}: {finding.message} - Line: {finding.line}")
    if not out:
        return ""
    return "\n".join(out) + "\n"


def render_machine(report: CorpusReport) -> bytes:
    """Deterministic machine-format bytes for a corpus report."""
    by_app: dict[str, list[FileReport]] = {app: [] for app in sorted(set(report.app_ids))}
    for fr in report.per_file:
        by_app.setdefault(fr.app_id, []).append(fr)
    apps = []
    for app_id in sorted(by_app):
        files = []
        for fr in sorted(by_app[app_id], key=lambda r: r.file):
            files.append(
                {
                    "file": fr.file,
                    "flows": [
                        {
                            "lines": list(flow_report.flow.lines),
                            "findings": [
                                {
                                    "kind": f.kind.value,
                                    "line": f.line,
                                    "message": f.message,
                                }
                                for f in flow_report.findings
                            ],
                        }
                        for flow_report in fr.flow_reports
                    ],
                    "diagnostics": [[line, msg] for line, msg in fr.diagnostics],
                }
            )
        apps.append({"app_id": app_id, "files": files})
    summary = summarize(report)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "apps": apps,
        "totals": {
            "total_apps": summary.total_apps,
            "apps_with_leaks": summary.apps_with_leaks,
            "total_leaks": summary.total_leaks,
        },
    }
    return (json.dumps(doc, indent=2, sort_keys=True) + "\n").encode("utf-8")


def parse_machine(data: bytes) -> CorpusReport:
    """Parse machine-format bytes; validates schema and total consistency."""
    doc = json.loads(data.decode("utf-8"))
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(
            f"unsupported schema_version {doc.get('schema_version')!r}"
        )
    report = CorpusReport()
    for app in doc["apps"]:
        app_id = app["app_id"]
        report.app_ids.append(app_id)
        for file_doc in app["files"]:
            fr = FileReport(file=file_doc["file"], app_id=app_id)
            for flow_doc in file_doc.get("flows", []):
                flow = DataFlow(lines=tuple(int(n) for n in flow_doc["lines"]))
                findings = [
                    Finding(
                        kind=FindingKind(f["kind"]),
                        line=int(f["line"]),
                        message=f["message"],
                    )
                    for f in flow_doc.get("findings", [])
                ]
                fr.flow_reports.append(FlowReport(flow=flow, findings=findings))
            fr.diagnostics = [
                (int(line), str(msg)) for line, msg in file_doc.get("diagnostics", [])
            ]
            report.per_file.append(fr)
    totals = doc.get("totals")
    if totals is not None:
        recomputed = summarize(report)
        stated = (
            totals.get("total_apps"),
            totals.get("apps_with_leaks"),
            totals.get("total_leaks"),
        )
        if stated != recomputed.as_tuple():
            raise ValueError(
                f"totals {stated} do not match report body {recomputed.as_tuple()}"
            )
    return report


def emit_cleaned_source(marked: MarkedFile, flows: list[DataFlow]) -> str:
    """The original source reduced to flow lines plus the declaration lines
    of every method a flow touches; empty when there are no flows."""
    flow_lines: set[int] = set()
    for flow in flows:
        flow_lines |= set(flow.lines)
    if not flow_lines:
        return ""
    keep = set(flow_lines)
    for method in marked.parsed.iter_methods():
        stmt_lines = {s.line for s in iter_statements(method.body)}
        if method.decl_line in flow_lines or (stmt_lines & flow_lines):
            keep.add(method.decl_line)
    text_lines = marked.parsed.source.text.splitlines()
    kept = [
        text_lines[line - 1]
        for line in sorted(keep)
        if 0 < line <= len(text_lines)
    ]
    return "\n".join(kept) + "\n"
