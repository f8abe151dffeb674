"""Command line interface.

Subcommands:
  analyze <file>   one decompiled .java file (or one package with --decompiler)
  scan <dir>       a corpus of app directories (or packages with --decompiler)
  compare <a> <b>  overlap between two machine-format reports

Exit codes: 0 the command ran, 1 internal error, 2 usage or config error.
When --config is absent the ICC_ANALYZER_CONFIG environment variable names
the configuration file.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import ConfigError, TaintConfig, default_config, load_config
from .corpus import compare_reports, scan_path
from .engine import FileReport, analyze_file
from .javaparser import SourceFile
from .reporting import (
    CorpusReport,
    emit_cleaned_source,
    parse_machine,
    render_machine,
    render_text,
    summarize,
)

CONFIG_ENV_VAR = "ICC_ANALYZER_CONFIG"
CLEANED_SUFFIX = ".flow.txt"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icc-analyzer",
        description="Find broadcast intents leaking vehicle data in decompiled Android app code.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze one decompiled source file")
    analyze.add_argument("file", help="a .java file (or app package with --decompiler)")
    _add_common(analyze)

    scan = sub.add_parser("scan", help="scan a corpus of app directories")
    scan.add_argument("root", help="directory holding one subdirectory per app")
    scan.add_argument(
        "--jobs",
        type=int,
        default=None,
        help="worker count for file analysis (default: available CPUs)",
    )
    _add_common(scan)

    compare = sub.add_parser("compare", help="compare two machine-format reports")
    compare.add_argument("report_a")
    compare.add_argument("report_b")
    compare.add_argument("--out", help="write the comparison to a file")
    return parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--config", help=f"configuration file (default: ${CONFIG_ENV_VAR})")
    sub.add_argument(
        "--format",
        choices=("text", "machine"),
        default="text",
        help="output format (default: text)",
    )
    sub.add_argument(
        "--emit-cleaned",
        action="store_true",
        help=f"write each flow-carrying file's kept lines to <file>{CLEANED_SUFFIX}",
    )
    sub.add_argument(
        "--decompiler",
        help="external decompiler, invoked as: <decompiler> <package> <output-dir>",
    )
    sub.add_argument("--out", help="write the report to a file instead of stdout")
    sub.add_argument(
        "-v", "--verbose", action="store_true", help="print diagnostics to stderr"
    )


def _resolve_config(args: argparse.Namespace) -> TaintConfig:
    config_path = getattr(args, "config", None) or os.environ.get(CONFIG_ENV_VAR)
    if config_path:
        return load_config(config_path)
    return default_config()


def _write_output(data: bytes, out: str | None) -> None:
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()


def _emit_cleaned(report: FileReport) -> None:
    if report.marked is None or not report.flows or report.source_path is None:
        return
    target = Path(report.source_path + CLEANED_SUFFIX)
    if not Path(report.source_path).exists():
        return  # decompiled temporaries are gone once the scan finishes
    target.write_text(
        emit_cleaned_source(report.marked, report.flows), encoding="utf-8"
    )


def _print_diagnostics(report: FileReport) -> None:
    for line, message in report.diagnostics:
        print(f"{report.app_id}/{report.file}:{line}: {message}", file=sys.stderr)


def _cmd_analyze(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    path = Path(args.file)
    if not path.exists():
        print(f"icc-analyzer: no such file: {path}", file=sys.stderr)
        return 2
    if path.is_dir():
        print(f"icc-analyzer: {path} is a directory (use the scan command)", file=sys.stderr)
        return 2
    if path.suffix.lower() != ".java":
        if args.decompiler:
            return _render_corpus(
                scan_path(path, config, decompiler=args.decompiler), args
            )
        print(
            f"icc-analyzer: {path} is not a .java file (pass --decompiler for app packages)",
            file=sys.stderr,
        )
        return 2
    source = SourceFile.from_path(path)
    source.path = path.name
    report = analyze_file(source, config)
    report.source_path = str(path)
    if args.verbose:
        _print_diagnostics(report)
    if args.emit_cleaned:
        _emit_cleaned(report)
    if args.format == "machine":
        corpus = CorpusReport(app_ids=[report.app_id], per_file=[report])
        _write_output(render_machine(corpus), args.out)
    else:
        _write_output(render_text(report).encode("utf-8"), args.out)
    return 0


def _render_corpus(corpus: CorpusReport, args: argparse.Namespace) -> int:
    if args.verbose:
        for fr in corpus.per_file:
            _print_diagnostics(fr)
    if args.emit_cleaned:
        for fr in corpus.per_file:
            _emit_cleaned(fr)
    if args.format == "machine":
        _write_output(render_machine(corpus), args.out)
        return 0
    blocks: list[str] = []
    for fr in corpus.per_file:
        if not fr.flow_reports:
            continue
        blocks.append(f"App: {fr.app_id}")
        blocks.append(f"File: {fr.file}")
        blocks.append(render_text(fr).rstrip("\n"))
        blocks.append("")
    summary = summarize(corpus)
    blocks.append(
        "Summary: "
        f"({summary.total_apps}, {summary.apps_with_leaks}, {summary.total_leaks})"
    )
    _write_output(("\n".join(blocks) + "\n").encode("utf-8"), args.out)
    return 0


def _cmd_scan(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    corpus = scan_path(
        args.root, config, jobs=args.jobs, decompiler=args.decompiler
    )
    return _render_corpus(corpus, args)


def _cmd_compare(args: argparse.Namespace) -> int:
    report_a = parse_machine(Path(args.report_a).read_bytes())
    report_b = parse_machine(Path(args.report_b).read_bytes())
    overlap = compare_reports(report_a, report_b)
    lines = [
        "Overlap: "
        f"both={len(overlap.both)} only_a={len(overlap.only_a)} only_b={len(overlap.only_b)}"
    ]
    for label, keys in (
        ("both", overlap.both),
        ("only_a", overlap.only_a),
        ("only_b", overlap.only_b),
    ):
        for app_id, file, line in sorted(keys):
            lines.append(f"{label}: {app_id} {file} {line}")
    _write_output(("\n".join(lines) + "\n").encode("utf-8"), args.out)
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "scan":
            return _cmd_scan(args)
        return _cmd_compare(args)
    except ConfigError as exc:
        print(f"icc-analyzer: configuration error: {exc}", file=sys.stderr)
        return 2
    except (FileNotFoundError, NotADirectoryError) as exc:
        print(f"icc-analyzer: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"icc-analyzer: invalid input: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"icc-analyzer: internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
