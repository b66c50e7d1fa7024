"""Readability, power-word, sentiment and entity analysis for English text."""

import json
import os
from pathlib import Path

from . import _core
from ._core import *  # noqa: F401,F403
from ._core import (
    AnalysisConfig,
    Document,
    Resources,
    __version__,
    analyze,
    analyze_corpus,
)

_PACKAGED_DATA = Path(__file__).resolve().parent / "data"


def data_dir() -> Path:
    """Directory holding the bundled lexicons and word lists."""
    env = os.environ.get("POWERWORDS_DATA_DIR")
    if env:
        return Path(env)
    if _PACKAGED_DATA.is_dir():
        return _PACKAGED_DATA
    return Path(_core.default_data_dir())


def make_resources(sections=None, data=None) -> Resources:
    return Resources(AnalysisConfig(str(data or data_dir()), sections))


def analyze_text(text, doc_id="text", sections=None, resources=None) -> dict:
    """Analyze one text and return the structured report as a dict."""
    res = resources or make_resources(sections)
    return json.loads(analyze(Document(doc_id, text), res).to_json())


def analyze_manifest(manifest, sections=None, threads=1, resources=None) -> dict:
    """Analyze a corpus manifest; returns per-document reports and genre aggregates."""
    res = resources or make_resources(sections)
    reports, aggregates, table = analyze_corpus(str(manifest), res, threads)
    return {
        "documents": [
            {"genre": genre, **json.loads(report.to_json())} for report, genre in reports
        ],
        "aggregates": json.loads(aggregates),
        "distribution_csv": table,
    }

