"""Corpus scanning: one directory per app, every .java file analyzed.

Scanning is embarrassingly parallel per file; results are assembled in
sorted path order so two scans of the same tree are byte-identical. An app
package (apk/jar/dex) can be decompiled first through an external tool
invoked as ``<decompiler> <package> <output-dir>``; a decompiler failure
becomes a per-app diagnostic and the scan moves on.
"""

from __future__ import annotations

import os
import re
import subprocess
import tempfile
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .config import TaintConfig
from .engine import FileReport, analyze_file
from .javaparser import SourceFile
from .reporting import CorpusReport, leak_keys

PACKAGE_SUFFIXES = (".apk", ".jar", ".dex")


@dataclass(frozen=True)
class OverlapReport:
    both: frozenset[tuple[str, str, int]]
    only_a: frozenset[tuple[str, str, int]]
    only_b: frozenset[tuple[str, str, int]]


def compare_reports(a: CorpusReport, b: CorpusReport) -> OverlapReport:
    """Partition the two reports' leak sites into both / only_a / only_b."""
    keys_a = leak_keys(a)
    keys_b = leak_keys(b)
    return OverlapReport(
        both=frozenset(keys_a & keys_b),
        only_a=frozenset(keys_a - keys_b),
        only_b=frozenset(keys_b - keys_a),
    )


def sanitize_app_id(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]", "_", name)


def _analyze_one(app_id: str, path: Path, rel: str, config: TaintConfig) -> FileReport:
    try:
        source = SourceFile.from_path(path, app_id=app_id)
    except OSError as exc:
        return FileReport(
            file=rel,
            app_id=app_id,
            diagnostics=[(0, f"unreadable file: {exc}")],
            source_path=str(path),
        )
    source.path = rel
    report = analyze_file(source, config)
    report.source_path = str(path)
    return report


def scan_corpus(
    root: str | Path, config: TaintConfig, jobs: int | None = None
) -> CorpusReport:
    """Analyze every app directory under root (never aborts on one file)."""
    root = Path(root)
    if not root.is_dir():
        raise NotADirectoryError(f"corpus root is not a directory: {root}")
    report = CorpusReport()
    tasks: list[tuple[str, Path, str]] = []
    for app_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        app_id = app_dir.name
        report.app_ids.append(app_id)
        for java_path in sorted(app_dir.rglob("*.java")):
            rel = java_path.relative_to(app_dir).as_posix()
            tasks.append((app_id, java_path, rel))
    if not tasks:
        return report
    workers = jobs if jobs and jobs > 0 else (os.cpu_count() or 1)
    workers = min(workers, len(tasks))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [
            pool.submit(_analyze_one, app_id, path, rel, config)
            for app_id, path, rel in tasks
        ]
        report.per_file = [f.result() for f in futures]
    # tasks were built in sorted order, and results keep task order
    return report


def _decompile(package: Path, decompiler: str, out_dir: Path) -> str | None:
    """Run the external decompiler; returns an error string on failure."""
    cmd = [decompiler, str(package), str(out_dir)]
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True)
    except OSError as exc:
        return f"decompiler could not run: {exc}"
    if proc.returncode != 0:
        detail = proc.stderr.strip().splitlines()
        suffix = f": {detail[-1]}" if detail else ""
        return f"decompiler exited with status {proc.returncode}{suffix}"
    return None


def scan_path(
    path: str | Path,
    config: TaintConfig,
    jobs: int | None = None,
    decompiler: str | None = None,
) -> CorpusReport:
    """Scan a corpus directory, or decompile-and-scan app packages.

    A directory is scanned as a corpus; with a decompiler configured, any
    top-level package files inside it (and a package file given directly)
    are decompiled into a temporary tree and scanned the same way.
    """
    path = Path(path)
    if path.is_file():
        if decompiler is None or path.suffix.lower() not in PACKAGE_SUFFIXES:
            raise NotADirectoryError(
                f"not a corpus directory (use --decompiler for app packages): {path}"
            )
        packages = [path]
        base = CorpusReport()
    elif path.is_dir():
        base = scan_corpus(path, config, jobs=jobs)
        packages = []
        if decompiler is not None:
            packages = sorted(
                p
                for p in path.iterdir()
                if p.is_file() and p.suffix.lower() in PACKAGE_SUFFIXES
            )
    else:
        raise FileNotFoundError(f"no such file or directory: {path}")
    if not packages:
        return base
    with tempfile.TemporaryDirectory(prefix="icc-analyzer-") as tmp:
        tmp_root = Path(tmp)
        failures: list[FileReport] = []
        for package in packages:
            app_id = sanitize_app_id(package.name)
            out_dir = tmp_root / app_id
            out_dir.mkdir(parents=True, exist_ok=True)
            error = _decompile(package, decompiler, out_dir)
            if error is not None:
                failures.append(
                    FileReport(
                        file=package.name,
                        app_id=app_id,
                        diagnostics=[(0, error)],
                    )
                )
        decompiled = scan_corpus(tmp_root, config, jobs=jobs)
    merged = CorpusReport(
        app_ids=sorted(set(base.app_ids) | set(decompiled.app_ids)),
        per_file=sorted(
            base.per_file + decompiled.per_file + failures,
            key=lambda fr: (fr.app_id, fr.file),
        ),
    )
    return merged
