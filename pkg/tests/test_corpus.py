import datetime
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from levex.corpus import (
    Corpus,
    Document,
    ingest,
    ingest_text,
    is_token,
    load_corpus,
    parse_record_date,
    tokenize,
)


class TestTokenize:
    def test_lowercases_and_splits_on_punctuation(self):
        assert tokenize("De Arts schreef, Benzedrine!") == [
            "de", "arts", "schreef", "benzedrine",
        ]

    def test_hyphen_kept_between_alphanumerics(self):
        assert tokenize("neo-pharmedrine") == ["neo-pharmedrine"]

    def test_hyphen_at_edges_trimmed(self):
        assert tokenize("--amfetamine--") == ["amfetamine"]

    def test_double_hyphen_splits(self):
        assert tokenize("a--b") == ["a", "b"]

    def test_diacritics_preserved(self):
        assert tokenize("Patiënt kreeg café") == ["patiënt", "kreeg", "café"]

    def test_underscore_is_a_separator(self):
        assert tokenize("foo_bar") == ["foo", "bar"]

    def test_digits_are_token_characters(self):
        assert tokenize("in 1969 waren er 12 gevallen") == [
            "in", "1969", "waren", "er", "12", "gevallen",
        ]

    def test_empty_and_punctuation_only(self):
        assert tokenize("") == []
        assert tokenize("... --- !!!") == []

    def test_hyphen_chain(self):
        assert tokenize("a-b-c") == ["a-b-c"]

    @given(st.text(max_size=200))
    def test_tokens_are_themselves_tokens(self, text):
        for token in tokenize(text):
            assert is_token(token)

    @given(st.text(max_size=200))
    def test_tokenize_is_idempotent_over_join(self, text):
        tokens = tokenize(text)
        assert tokenize(" ".join(tokens)) == tokens


class TestIsToken:
    @pytest.mark.parametrize("good", ["amfetamine", "neo-pharmedrine", "a1", "1969"])
    def test_accepts(self, good):
        assert is_token(good)

    @pytest.mark.parametrize("bad", ["", "two words", "Upper", "a*", "-a", "a-", "a--b"])
    def test_rejects(self, bad):
        assert not is_token(bad)


class TestParseRecordDate:
    def test_iso(self):
        assert parse_record_date("1967-05-09") == datetime.date(1967, 5, 9)

    def test_bare_year_lands_mid_year(self):
        assert parse_record_date("1967") == datetime.date(1967, 7, 1)

    def test_garbage_raises(self):
        with pytest.raises(ValueError):
            parse_record_date("not-a-date")


def _line(**kwargs) -> str:
    record = {
        "id": "d1", "date": "1950-01-01", "title": "t", "body": "hello", "source": "s",
    }
    record.update(kwargs)
    for key, value in list(record.items()):
        if value is None:
            del record[key]
    return json.dumps(record)


class TestIngest:
    def test_accepts_valid_records(self):
        corpus, report = ingest([_line(), _line(id="d2")])
        assert report.accepted == 2
        assert report.rejected == 0
        assert len(corpus) == 2
        assert "d1" in corpus and "d2" in corpus

    def test_blank_lines_skipped_silently(self):
        corpus, report = ingest(["", "   ", _line()])
        assert report.accepted == 1
        assert report.rejected == 0

    @pytest.mark.parametrize(
        "line,reason",
        [
            ("{not json", "bad json"),
            ('["a","list"]', "bad record"),
            ('"just a string"', "bad record"),
            (_line(id=None), "bad id"),
            (json.dumps({"id": 7, "date": "1950-01-01", "body": "x"}), "bad id"),
            (_line(id=""), "bad id"),
            (_line(date=None), "bad date"),
            (_line(date="14 juli 1950"), "bad date"),
            (json.dumps({"id": "d", "date": 1950, "body": "x"}), "bad date"),
            (_line(body=None), "empty body"),
            (_line(body="   "), "empty body"),
            (json.dumps({"id": "d", "date": "1950-01-01", "body": 3}), "empty body"),
        ],
    )
    def test_rejects_with_reason(self, line, reason):
        corpus, report = ingest([line])
        assert len(corpus) == 0
        assert report.rejected == 1
        assert report.rejections == [(1, reason)]

    def test_duplicate_id_keeps_first(self):
        corpus, report = ingest([_line(body="first"), _line(body="second")])
        assert report.accepted == 1
        assert report.rejections == [(2, "duplicate id")]
        assert corpus.get("d1").body == "first"

    def test_line_numbers_are_one_based_and_stable(self):
        corpus, report = ingest([_line(), "oops", _line(id="d2"), "{", ""])
        assert [n for n, _ in report.rejections] == [2, 4]

    def test_title_and_source_default_to_empty(self):
        corpus, _ = ingest([json.dumps({"id": "d", "date": "1950", "body": "x"})])
        doc = corpus.get("d")
        assert doc.title == "" and doc.source == ""

    def test_body_stored_verbatim(self):
        body = "  Rauwe  TEKST, met interpunctie!  "
        corpus, _ = ingest([_line(body=body)])
        assert corpus.get("d1").body == body

    def test_bare_year_date(self):
        corpus, _ = ingest([_line(date="1948")])
        assert corpus.get("d1").date == datetime.date(1948, 7, 1)


class TestCorpus:
    def test_duplicate_construction_rejected(self):
        doc = Document("x", datetime.date(1950, 1, 1), "", "b", "")
        with pytest.raises(ValueError):
            Corpus([doc, doc])

    def test_stats(self):
        corpus, _ = ingest([
            _line(id="a", date="1950-06-01", title="een twee", body="drie"),
            _line(id="b", date="1947-01-01", title="", body="vier vijf"),
        ])
        stats = corpus.stats()
        assert stats.doc_count == 2
        assert stats.date_min == datetime.date(1947, 1, 1)
        assert stats.date_max == datetime.date(1950, 6, 1)
        assert stats.token_count == 5

    def test_empty_stats(self):
        corpus, _ = ingest([])
        stats = corpus.stats()
        assert stats.doc_count == 0
        assert stats.date_min is None and stats.date_max is None

    def test_jsonl_round_trip(self, tmp_path):
        corpus, _ = ingest([_line(id="a"), _line(id="b", title="Patiënt")])
        path = tmp_path / "out.jsonl"
        corpus.to_jsonl(path)
        reloaded, report = load_corpus(path)
        assert report.rejected == 0
        assert [d.id for d in reloaded] == [d.id for d in corpus]
        assert reloaded.get("b").title == "Patiënt"

    def test_ingest_text(self):
        corpus, report = ingest_text(_line() + "\n" + _line(id="d2") + "\n")
        assert len(corpus) == 2 and report.rejected == 0
