"""Static taint-flow analyzer for broadcast intent leaks in decompiled
Android Auto / Android Automotive application code."""

from .config import (
    ConfigError,
    SinkDecision,
    TaintConfig,
    default_config,
    is_sink_call,
    load_config,
)
from .corpus import OverlapReport, compare_reports, scan_corpus, scan_path
from .engine import (
    DataFlow,
    FileReport,
    Finding,
    FindingKind,
    analyze_file,
)
from .javaparser import ParsedFile, SourceFile, parse_file
from .oracle import DefUseChain, enumerate_def_use_chains, oracle_flows
from .reporting import (
    CorpusReport,
    CorpusSummary,
    emit_cleaned_source,
    parse_machine,
    render_machine,
    render_text,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "SinkDecision",
    "TaintConfig",
    "default_config",
    "is_sink_call",
    "load_config",
    "OverlapReport",
    "compare_reports",
    "scan_corpus",
    "scan_path",
    "DataFlow",
    "FileReport",
    "Finding",
    "FindingKind",
    "analyze_file",
    "ParsedFile",
    "SourceFile",
    "parse_file",
    "DefUseChain",
    "enumerate_def_use_chains",
    "oracle_flows",
    "CorpusReport",
    "CorpusSummary",
    "emit_cleaned_source",
    "parse_machine",
    "render_machine",
    "render_text",
    "summarize",
    "__version__",
]
