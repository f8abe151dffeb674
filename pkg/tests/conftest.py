from __future__ import annotations

from pathlib import Path

import pytest

from icc_analyzer import SourceFile, analyze_file, default_config, parse_file

FIXTURES = Path(__file__).parent / "fixtures"
CORPUS = FIXTURES / "corpus"
GOLDEN_APP = "com_example_automotiveintent_apk"
GOLDEN_FILE = CORPUS / GOLDEN_APP / "AutomotiveBroadcastService.java"
EXPECTED_REPORT = FIXTURES / "expected_broadcast_report.txt"
GROUND_TRUTH = FIXTURES / "ground_truth.json"
FAKE_DECOMPILER = FIXTURES / "fake_decompiler.py"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS


@pytest.fixture
def golden_path() -> Path:
    return GOLDEN_FILE


def parse_source(text: str, path: str = "Test.java", app_id: str = "test_app"):
    return parse_file(SourceFile(path=path, app_id=app_id, text=text))


def analyze_text(text: str, path: str = "Test.java", app_id: str = "test_app"):
    source = SourceFile(path=path, app_id=app_id, text=text)
    return analyze_file(source, default_config())
