import datetime
import json

import pytest

import levex
from levex.errors import NoSuchDocumentError
from levex.corpus import Document
from levex.reader import (
    MAX_PAGE_SIZE,
    Snippet,
    build_page,
    fetch_document,
    make_snippet,
    match_spans,
    order_results,
    snippet_spans,
)


def doc(body, date="1950-06-01", doc_id="d1", title="", source=""):
    return Document(
        id=doc_id, date=datetime.date.fromisoformat(date),
        title=title, body=body, source=source,
    )


class TestMakeSnippet:
    def test_single_match_window_one(self):
        got = make_snippet(
            doc("de amfetamine werd voorgeschreven door artsen"),
            {"amfetamine"}, window=1,
        )
        assert got.text == "de ⟦amfetamine⟧ werd"
        assert got.span_count == 1

    def test_two_fragments_with_ellipsis(self):
        body = ("de dokter schreef amfetamine voor omdat amfetamine hielp "
                "maar amfetamine bleef duur")
        got = make_snippet(doc(body), {"amfetamine"}, window=1, max_fragments=2)
        assert got.text == "schreef ⟦amfetamine⟧ voor … omdat ⟦amfetamine⟧ hielp"
        assert got.span_count == 2

    def test_overlapping_window_not_kept_but_its_match_marked(self):
        got = make_snippet(
            doc("een twee amfetamine drie amfetamine vier vijf"),
            {"amfetamine"}, window=2,
        )
        # second window overlaps the first and is dropped, yet its hit sits
        # inside the kept window and is still marked
        assert got.text == "een twee ⟦amfetamine⟧ drie ⟦amfetamine⟧"
        assert got.span_count == 2

    def test_no_match_gives_empty_snippet(self):
        got = make_snippet(doc("niets te zien hier"), {"amfetamine"})
        assert got == Snippet(text="", span_count=0)

    def test_matching_is_case_insensitive_via_tokens(self):
        got = make_snippet(doc("De Amfetamine werd verkocht"), {"amfetamine"}, window=1)
        assert got.text == "De ⟦Amfetamine⟧ werd"  # original casing preserved

    def test_punctuation_between_tokens_preserved(self):
        got = make_snippet(doc("arts: amfetamine, zei hij"), {"amfetamine"}, window=1)
        assert got.text == "arts: ⟦amfetamine⟧, zei"

    def test_max_fragments_cap(self):
        body = " lang verhaal ".join(["amfetamine"] * 6)
        got = make_snippet(doc(body), {"amfetamine"}, window=1, max_fragments=3)
        assert got.text.count("…") == 2

    def test_window_validation(self):
        with pytest.raises(ValueError):
            make_snippet(doc("x"), {"x"}, window=0)

    def test_window_clipped_at_document_edges(self):
        got = make_snippet(doc("amfetamine werd"), {"amfetamine"}, window=5)
        assert got.text == "⟦amfetamine⟧ werd"

    def test_hyphenated_term_marked_whole(self):
        got = make_snippet(
            doc("over neo-pharmedrine gesproken"), {"neo-pharmedrine"}, window=1,
        )
        assert got.text == "over ⟦neo-pharmedrine⟧ gesproken"


class TestSnippetSpans:
    def test_offsets_against_plain_text(self):
        snippet = Snippet(text="de ⟦amfetamine⟧ werd … ⟦wekamine⟧ ook", span_count=2)
        plain, offsets = snippet_spans(snippet)
        assert plain == "de amfetamine werd … wekamine ook"
        assert [plain[a:b] for a, b in offsets] == ["amfetamine", "wekamine"]

    def test_empty(self):
        assert snippet_spans(Snippet(text="", span_count=0)) == ("", [])

    def test_round_trip_with_make_snippet(self):
        got = make_snippet(
            doc("de amfetamine werd voorgeschreven"), {"amfetamine"}, window=1,
        )
        plain, offsets = snippet_spans(got)
        assert "⟦" not in plain and "⟧" not in plain
        assert len(offsets) == got.span_count


class TestMatchSpans:
    def test_offsets_in_raw_text(self):
        text = "De Amfetamine; amfetamine-achtig, amfetamine."
        got = match_spans(text, {"amfetamine"})
        assert [text[a:b] for a, b in got] == ["Amfetamine", "amfetamine"]

    def test_hyphenated_token_is_distinct(self):
        text = "amfetamine-achtig"
        assert match_spans(text, {"amfetamine"}) == []
        assert [text[a:b] for a, b in match_spans(text, {"amfetamine-achtig"})] == [text]

    def test_empty_terms(self):
        assert match_spans("wat dan ook", set()) == []


class TestOrderResults:
    @pytest.fixture()
    def corpus(self):
        records = [
            {"id": "b", "date": "1950-01-01", "body": "amfetamine amfetamine arts"},
            {"id": "a", "date": "1950-01-01", "body": "amfetamine"},
            {"id": "c", "date": "1948-05-05", "body": "amfetamine arts arts"},
            {"id": "d", "date": "1952-07-07", "title": "amfetamine",
             "body": "amfetamine amfetamine amfetamine"},
        ]
        corpus, _ = levex.ingest(json.dumps(r) for r in records)
        return corpus

    def test_date_asc_ties_by_id(self, corpus):
        got = order_results(["a", "b", "c", "d"], corpus, set(), "date_asc")
        assert got == ["c", "a", "b", "d"]

    def test_date_desc_ties_by_id_ascending(self, corpus):
        got = order_results(["a", "b", "c", "d"], corpus, set(), "date_desc")
        assert got == ["d", "a", "b", "c"]

    def test_relevance_counts_title_and_body_occurrences(self, corpus):
        got = order_results(["a", "b", "c", "d"], corpus, {"amfetamine"}, "relevance")
        # d: 4 occurrences, b: 2, then a and c with 1 (date breaks the tie)
        assert got == ["d", "b", "c", "a"]

    def test_unknown_order(self, corpus):
        with pytest.raises(ValueError):
            order_results(["a"], corpus, set(), "shuffled")

    def test_deterministic_on_repeat(self, corpus):
        ids = ["a", "b", "c", "d"]
        first = order_results(ids, corpus, {"amfetamine"}, "relevance")
        second = order_results(list(reversed(ids)), corpus, {"amfetamine"}, "relevance")
        assert first == second


class TestFetchDocument:
    def test_found(self, tiny_corpus):
        assert fetch_document(tiny_corpus, "a1").id == "a1"

    def test_missing(self, tiny_corpus):
        with pytest.raises(NoSuchDocumentError) as err:
            fetch_document(tiny_corpus, "ghost")
        assert err.value.code == "no_such_document"


class TestBuildPage:
    def test_pagination_slices_ordered_ids(self, tiny_corpus):
        ids = ["a1", "a2", "a3", "a4"]
        page = build_page(ids, tiny_corpus, set(), offset=1, limit=2)
        assert [item.doc_id for item in page.items] == ["a2", "a3"]
        assert page.total == 4
        assert page.offset == 1

    def test_offset_past_end(self, tiny_corpus):
        page = build_page(["a1"], tiny_corpus, set(), offset=5, limit=10)
        assert page.items == () and page.total == 1

    def test_limit_clamped_to_max(self, tiny_corpus):
        page = build_page(["a1"], tiny_corpus, set(), limit=10_000)
        assert len(page.items) == 1  # no error; clamp applied
        assert MAX_PAGE_SIZE == 200

    def test_negative_offset_rejected(self, tiny_corpus):
        with pytest.raises(ValueError):
            build_page(["a1"], tiny_corpus, set(), offset=-1)

    def test_items_carry_snippets(self, tiny_corpus):
        page = build_page(["a2"], tiny_corpus, {"wekamine"}, limit=1)
        assert page.items[0].snippet.span_count == 2  # both occurrences marked
