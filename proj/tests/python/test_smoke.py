import os
from pathlib import Path

import pytest

import powerwords as pw

CORPUS = Path(os.environ.get("POWERWORDS_TEST_CORPUS", Path(__file__).resolve().parents[2] / "corpus"))

TEXT = (
    "Act now and claim your free bonus. This secret offer ends tonight. "
    "Do not miss the last chance to save money. You will love it."
)


def test_version():
    assert pw.__version__ == "1.0.0"


def test_tokenize_and_sentences():
    doc = pw.Document("d", TEXT)
    assert len(doc.sentences) == 4
    words = [t.text for t in doc.tokens if t.kind == pw.TokenKind.WORD]
    assert words[:3] == ["Act", "now", "and"]
    first = doc.tokens[0]
    assert TEXT[first.span.begin:first.span.end] == "Act"


def test_count_syllables():
    assert pw.count_syllables("cat") == 1
    assert pw.count_syllables("table") == 2


def test_readability_from_stats():
    s = pw.TextStats()
    s.word_count, s.sentence_count, s.syllable_count = 100, 5, 130
    s.letter_count, s.char_count = 420, 440
    s.polysyllable_count = s.complex_word_count = 5
    s.difficult_word_count = 8
    fre = pw.flesch_reading_ease(s)
    assert fre.score == pytest.approx(206.835 - 1.015 * 20 - 84.6 * 1.3)
    assert pw.flesch_kincaid_grade(s) == pytest.approx(0.39 * 20 + 11.8 * 1.3 - 15.59)
    report = pw.compute_readability(s)
    assert report.smog is not None and report.smog.low_sample


def test_text_standard():
    assert pw.text_standard([5.0]) == "5th and 6th grade"


def test_analyze_text_sections():
    out = pw.analyze_text(TEXT, "promo")
    assert out["id"] == "promo"
    assert list(out)[:2] == ["id", "sections"]
    assert out["power"]["total"] > 0
    assert sum(out["power"]["distribution"].values()) == pytest.approx(100.0, abs=0.05)
    assert -1.0 <= out["sentiment"]["polarity"] <= 1.0

    only = pw.analyze_text(TEXT, "promo", sections=["power"])
    assert "readability" not in only and "sentiment" not in only
    assert "power" in only


def test_unknown_section_is_value_error():
    with pytest.raises(ValueError):
        pw.analyze_text(TEXT, sections=["bogus"])


def test_missing_data_file():
    cfg = pw.AnalysisConfig(str(pw.data_dir()))
    cfg.lexicon = "/nonexistent/lexicon.csv"
    with pytest.raises(pw.DataFileError):
        pw.Resources(cfg)


def test_matcher_and_entities():
    data = pw.data_dir()
    lex = pw.PowerLexicon.load_file(str(data / "power_lexicon.csv"))
    hits = pw.Matcher(lex).scan(pw.Document("d", TEXT))
    assert hits.total == len(hits.matches)
    pct, empty = pw.distribution(hits)
    assert not empty and set(pct) >= {"Greed", "Fear"}

    gaz = pw.Gazetteer.load_file(str(data / "gazetteer.txt"))
    doc = pw.Document("g", "In 1963 Martin Luther King spoke in Washington.")
    labels = {e.surface: e.label for e in pw.tag_entities(doc, gaz)}
    assert labels.get("1963") == "DATE"


def test_cleaning_helpers():
    assert pw.strip_html("<p>Fish &amp; chips</p><script>x()</script>") == "Fish & chips"
    text, missing = pw.strip_gutenberg_boilerplate("plain text")
    assert missing and text == "plain text"


def test_corpus_manifest():
    out = pw.analyze_manifest(CORPUS / "manifest.csv", threads=2)
    genres = [g["genre"] for g in out["aggregates"]["genres"]]
    assert genres == ["fiction", "speech", "marketing"]
    assert out["distribution_csv"].startswith("genre,category,percentage")
    assert len(out["documents"]) >= 3
