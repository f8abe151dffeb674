from __future__ import annotations

import pytest

from icc_analyzer.config import default_config
from icc_analyzer.javaparser import SourceFile, parse_file
from icc_analyzer.oracle import (
    MAX_METHODS_PER_CLASS,
    enumerate_def_use_chains,
    oracle_flows,
)

from conftest import CORPUS, GOLDEN_FILE, parse_source

CFG = default_config()


def chains_by(parsed):
    return {
        (c.var, c.def_line): c for c in enumerate_def_use_chains(parsed)
    }


def test_golden_chains():
    parsed = parse_file(SourceFile.from_path(GOLDEN_FILE))
    chains = chains_by(parsed)
    helper_intent = chains[("intent", 115)]
    assert helper_intent.use_lines == [116, 117, 129]
    broadcast_intent = chains[("intent", 176)]
    # line 190 uses the variable too (in an exempt call); uses are recorded
    # regardless, and only the sink filter in oracle_flows screens them out
    assert broadcast_intent.use_lines == [177, 179, 180, 181, 182, 183, 184, 186, 190]
    car_info = chains[("carInfo", 178)]
    assert car_info.use_lines == [179, 180, 181, 182, 183, 184]
    # fields never become chains: `car` is only a field
    assert not any(var == "car" for var, _ in chains)


def test_segment_ends_at_redefinition():
    parsed = parse_source(
        """
class A {
    void f() {
        Intent a = one();
        a.putExtra(k, v);
        a = two();
        sendBroadcast(a);
    }
}
"""
    )
    chains = chains_by(parsed)
    assert chains[("a", 4)].use_lines == [5]
    assert chains[("a", 6)].use_lines == [7]
    assert chains[("a", 4)].linked_chains == []


def test_self_referential_redefinition_counts_as_use_and_links():
    parsed = parse_source(
        """
class A {
    void f() {
        Intent a = one();
        a = a.withFlags(2);
        sendBroadcast(a);
    }
}
"""
    )
    chains = chains_by(parsed)
    first = chains[("a", 4)]
    assert first.use_lines == [5]
    assert [c.def_line for c in first.linked_chains] == [5]
    assert chains[("a", 5)].use_lines == [6]
    assert oracle_flows(parsed, CFG) == {(4, 6)}


def test_alias_declaration_links_chains():
    parsed = parse_source(
        """
class A {
    void f() {
        Intent base = one();
        Intent copy = base;
        sendBroadcast(copy);
    }
}
"""
    )
    chains = chains_by(parsed)
    assert [c.def_line for c in chains[("base", 4)].linked_chains] == [5]
    assert oracle_flows(parsed, CFG) == {(4, 6), (5, 6)}


def test_oracle_golden_endpoints():
    parsed = parse_file(SourceFile.from_path(GOLDEN_FILE))
    assert oracle_flows(parsed, CFG) == {(176, 186)}


@pytest.mark.parametrize(
    "app,file,expected",
    [
        (
            "com_abc_abcnews_apk",
            "GoogleNowAuthorizationService.java",
            {(22, 46), (22, 50)},
        ),
        ("com_jacapps_wilfm_apk", "TweetUploadService.java", {(126, 129)}),
        ("com_rideshare_tracker_apk", "TripBroadcaster.java", {(8, 12), (10, 12)}),
        (
            "com_fm_radio_hub_apk",
            "StationStatusService.java",
            {(8, 10), (8, 12)},
        ),
        ("com_cars_dashboard_apk", "VehicleStatusService.java", {(13, 16)}),
        ("com_localcast_messenger_apk", "LocalChatService.java", set()),
        ("com_secured_fleet_apk", "FleetStatusService.java", set()),
        ("com_podcast_offline_apk", "DownloadScheduler.java", set()),
        ("com_vin_decoder_apk", "IntentRelay.java", set()),
    ],
)
def test_oracle_endpoints_across_corpus(app, file, expected):
    parsed = parse_file(SourceFile.from_path(CORPUS / app / file))
    assert oracle_flows(parsed, CFG) == expected


def test_oracle_matches_engine_on_every_corpus_file():
    from icc_analyzer.engine import analyze_file

    for path in sorted(CORPUS.rglob("*.java")):
        source = SourceFile.from_path(path)
        engine = {
            (f.source_line, f.sink_line) for f in analyze_file(source, CFG).flows
        }
        oracle = oracle_flows(parse_file(source), CFG)
        assert engine == oracle, path.name


def test_receiver_only_use_is_not_a_flow_end():
    parsed = parse_source(
        """
class A {
    void f(Intent data) {
        Intent ctx = new Intent();
        ctx.sendBroadcast(data);
    }
}
"""
    )
    assert oracle_flows(parsed, CFG) == set()


def test_oracle_rejects_classes_with_too_many_methods():
    parsed = parse_source(
        "class A { void a() {} void b() {} void c() {} }"
    )
    assert MAX_METHODS_PER_CLASS == 2
    with pytest.raises(ValueError, match="3 methods"):
        enumerate_def_use_chains(parsed)
    with pytest.raises(ValueError):
        oracle_flows(parsed, CFG)


def test_two_methods_per_class_is_accepted():
    parsed = parse_source("class A { void a() {} void b() {} }")
    assert enumerate_def_use_chains(parsed) == []
