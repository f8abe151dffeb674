"""Taint configuration: source/sink name sets and the sink decision rule.

The defaults target broadcast-intent leaks in Android Automotive code:
Intent declarations are sources, the Car service managers are sensitive
sources, and sendBroadcast is the sink. A broadcast is exempt when it goes
through a LocalBroadcastManager receiver chain or names a custom permission
(two or more arguments).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .javaparser import Call, Expr, FieldAccess, Name, New, OtherExpr

WARNING_MESSAGE = "Source variable contains sensitive information"

DEFAULT_BROADCAST_TIP = (
    "Send Broadcast leaking information to all the apps. Compliant solution "
    "requires usage of LocalBroadcastManager or sendBroadcast with custom "
    "permissions."
)

_CONFIG_SET_KEYS = ("sources", "sensitive_sources", "sinks", "local_broadcast_types")


class ConfigError(ValueError):
    """Raised for malformed or inconsistent configuration files."""


class SinkDecision(Enum):
    SINK = "sink"
    EXEMPT_LOCAL = "exempt_local"
    EXEMPT_PERMISSION = "exempt_permission"
    NOT_SINK = "not_sink"


@dataclass(frozen=True)
class TaintConfig:
    sources: frozenset[str]
    sensitive_sources: frozenset[str]
    sinks: frozenset[str]
    local_broadcast_types: frozenset[str]
    mitigation_tips: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        overlap = self.sources & self.sensitive_sources
        if overlap:
            raise ConfigError(
                "sources and sensitive_sources overlap: " + ", ".join(sorted(overlap))
            )
        for sink in self.sinks:
            if sink not in self.mitigation_tips:
                self.mitigation_tips[sink] = DEFAULT_BROADCAST_TIP

    def tip_for(self, sink: str) -> str:
        return self.mitigation_tips.get(sink, DEFAULT_BROADCAST_TIP)


def default_config() -> TaintConfig:
    """Built-in configuration for Android Automotive broadcast leaks."""
    return TaintConfig(
        sources=frozenset({"Intent"}),
        sensitive_sources=frozenset({"Car", "CarInfoManager", "CarPropertyManager"}),
        sinks=frozenset({"sendBroadcast"}),
        local_broadcast_types=frozenset({"LocalBroadcastManager"}),
        mitigation_tips={"sendBroadcast": DEFAULT_BROADCAST_TIP},
    )


def load_config(path: str | Path) -> TaintConfig:
    """Load a configuration file, overlaying the defaults.

    Format: one ``key = value`` pair per line; '#' starts a comment. The
    set-valued keys (sources, sensitive_sources, sinks,
    local_broadcast_types) take whitespace- or comma-separated names and
    replace the default set. ``tip.<sink> = text`` attaches the mitigation
    text reported for that sink.
    """
    base = default_config()
    sets: dict[str, frozenset[str]] = {
        "sources": base.sources,
        "sensitive_sources": base.sensitive_sources,
        "sinks": base.sinks,
        "local_broadcast_types": base.local_broadcast_types,
    }
    tips = dict(base.mitigation_tips)
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key in _CONFIG_SET_KEYS:
            names = frozenset(value.replace(",", " ").split())
            sets[key] = names
        elif key.startswith("tip."):
            sink = key[len("tip."):].strip()
            if not sink:
                raise ConfigError(f"line {lineno}: tip key names no sink")
            tips[sink] = value
        else:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
    return TaintConfig(
        sources=sets["sources"],
        sensitive_sources=sets["sensitive_sources"],
        sinks=sets["sinks"],
        local_broadcast_types=sets["local_broadcast_types"],
        mitigation_tips=tips,
    )


def is_sink_call(expr: Expr, config: TaintConfig) -> SinkDecision:
    """Classify one call expression; total over every call shape.

    Precedence: a receiver chain that originates from a local-broadcast
    type exempts the call regardless of arity; then two or more arguments
    mean a custom permission; a single argument is the leaking form.
    """
    if not isinstance(expr, Call) or expr.method not in config.sinks:
        return SinkDecision.NOT_SINK
    if expr.receiver is not None:
        chain = _receiver_chain_names(expr.receiver)
        if chain & config.local_broadcast_types:
            return SinkDecision.EXEMPT_LOCAL
    if len(expr.args) >= 2:
        return SinkDecision.EXEMPT_PERMISSION
    if len(expr.args) == 1:
        return SinkDecision.SINK
    return SinkDecision.NOT_SINK


def _receiver_chain_names(receiver: Expr) -> set[str]:
    """Names the receiver chain could originate from (idents and new types)."""
    names: set[str] = set()
    for node in receiver.walk():
        if isinstance(node, Name):
            names.add(node.ident)
        elif isinstance(node, New):
            names.add(node.type_name.rsplit(".", 1)[-1])
        elif isinstance(node, FieldAccess):
            names.add(node.fld)
        elif isinstance(node, OtherExpr):
            names |= node.names
    return names
