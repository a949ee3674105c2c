import re

import pytest
from hypothesis import given, strategies as st

from tonesum.corpus import (
    PreprocessConfig,
    RawDocument,
    load_corpus,
    load_wordlist,
    preprocess_cluster,
    remove_stopwords,
    segment_sentences,
    strip_markup,
    tokenize,
)
from tonesum.exceptions import DataError, EmptyClusterError


class TestStripMarkup:
    def test_text_element(self):
        assert strip_markup("<TEXT>hello world</TEXT>") == "hello world"

    def test_no_markup(self):
        assert strip_markup("no markup here") == "no markup here"

    def test_duc_keeps_only_body(self):
        raw = "<DOC><HEAD>skip</HEAD><TEXT>keep me</TEXT></DOC>"
        assert strip_markup(raw, duc_mode=True) == "keep me"
        assert strip_markup(raw, duc_mode=False) == "skip keep me"

    def test_duc_realistic_layout(self):
        raw = """<DOC>
<DOCNO> AP880911-0016 </DOCNO>
<HEAD>Hurricane Gilbert Heads Toward Dominican Coast</HEAD>
<TEXT>
   Hurricane Gilbert swept toward the Dominican Republic Sunday.
<P>The storm was moving west.</P>
</TEXT>
<TEXT>Second body.</TEXT>
</DOC>"""
        assert strip_markup(raw, duc_mode=True) == (
            "Hurricane Gilbert swept toward the Dominican Republic Sunday. "
            "The storm was moving west. Second body."
        )

    def test_duc_tag_names_configurable(self):
        raw = "<DOC><LP>lead</LP><TEXT>body</TEXT></DOC>"
        assert strip_markup(raw, duc_mode=True, text_tags=("LP", "TEXT")) == "lead body"

    def test_duc_lowercase_tags_and_attributes(self):
        assert strip_markup('<text type="x">body</text>', duc_mode=True) == "body"

    def test_duc_without_body_is_empty(self):
        assert strip_markup("<DOC><HEAD>only</HEAD></DOC>", duc_mode=True) == ""

    def test_unbalanced_bracket_is_literal(self):
        assert strip_markup("a < b and <i>c</i>") == "a < b and c"

    def test_nested_brackets(self):
        assert strip_markup("x <a<b>> y") == "x y"

    @given(st.text(alphabet="<>ab /\n", max_size=40), st.booleans())
    def test_no_tag_survives(self, text, duc):
        out = strip_markup(text, duc_mode=duc)
        assert not re.search(r"<[^<>]*>", out)
        assert "  " not in out and out == out.strip()


class TestSegmentSentences:
    def test_single(self):
        assert segment_sentences("One sentence only") == ["One sentence only"]

    def test_two(self):
        assert segment_sentences("First here. Second here.") == ["First here.", "Second here."]

    def test_abbreviation_guard(self):
        assert segment_sentences("Dr. Smith spoke. He left.") == ["Dr. Smith spoke.", "He left."]

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("Is it? Yes! Fine.", ["Is it?", "Yes!", "Fine."]),
            ("Wait... what?", ["Wait...", "what?"]),
            ('He said "go." Then left.', ['He said "go."', "Then left."]),
            ("The U.S. economy grew. Prices fell.", ["The U.S. economy grew.", "Prices fell."]),
            ("Pi is 3.14 exactly. Yes.", ["Pi is 3.14 exactly.", "Yes."]),
            ("(Mr. Lee) agreed.", ["(Mr. Lee) agreed."]),
            ("", []),
            ("   ", []),
        ],
    )
    def test_cases(self, text, expected):
        assert segment_sentences(text) == expected

    def test_custom_abbreviations(self):
        assert segment_sentences("See fig. Two.", abbreviations={"fig"}) == ["See fig. Two."]
        assert segment_sentences("See fig. Two.", abbreviations=set()) == ["See fig.", "Two."]

    @given(st.text(alphabet="ab .!?\n", max_size=60))
    def test_rejoin_reproduces_input(self, text):
        segs = segment_sentences(text)
        assert all(s and s == s.strip() for s in segs)
        assert " ".join(" ".join(segs).split()) == " ".join(text.split())


class TestTokenize:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("The cat, sat!", ["the", "cat", "sat"]),
            ("", []),
            ("abc123 x", ["abc123", "x"]),
            ("snake_case it's", ["snake", "case", "it", "s"]),
        ],
    )
    def test_examples(self, text, expected):
        assert tokenize(text) == expected

    @given(st.text(max_size=50))
    def test_lowercase_alnum(self, text):
        for tok in tokenize(text):
            assert tok.isalnum() and tok == tok.lower()


class TestStopwords:
    def test_examples(self):
        assert remove_stopwords(["the", "cat"], {"the"}) == ["cat"]
        assert remove_stopwords(["cat"], set()) == ["cat"]
        assert remove_stopwords(["a", "the", "a"], {"a", "the"}) == []

    @given(st.lists(st.sampled_from("abcde")), st.sets(st.sampled_from("abcde")))
    def test_idempotent(self, tokens, stop):
        once = remove_stopwords(tokens, stop)
        assert remove_stopwords(once, stop) == once

    def test_wordlist_file(self, tmp_path):
        p = tmp_path / "stop.txt"
        p.write_text("# comment\nthe\n\n a \n", encoding="utf-8")
        assert load_wordlist(p) == {"the", "a"}
        p.write_text("The\n", encoding="utf-8")
        with pytest.raises(DataError):
            load_wordlist(p)

    def test_packaged_list(self):
        stop = PreprocessConfig().stopwords
        assert 120 <= len(stop) <= 200
        assert {"the", "and", "of"} <= stop


class TestPreprocessCluster:
    def test_single_doc(self):
        cfg = PreprocessConfig(stopwords=set(), min_sentence_tokens=2)
        cluster = preprocess_cluster([RawDocument("d1", "Cats ran.")], cfg)
        (s,) = cluster.sentences
        assert s.content_tokens == ("cat", "ran")
        assert s.word_count == 2
        assert s.original_text == "Cats ran."

    def test_all_stopwords_is_empty_cluster(self):
        cfg = PreprocessConfig(stopwords={"the", "a", "of"}, min_sentence_tokens=1)
        with pytest.raises(EmptyClusterError):
            preprocess_cluster([RawDocument("d1", "The a. Of the.")], cfg)

    def test_ordering_across_documents(self):
        docs = [RawDocument("b", "Second doc one. Second doc two."),
                RawDocument("a", "First doc one. First doc two.")]
        cluster = preprocess_cluster(docs, PreprocessConfig(stopwords=set()))
        assert [s.ref for s in cluster.sentences] == [("a", 0), ("a", 1), ("b", 0), ("b", 1)]
        assert cluster.documents == ("a", "b")

    def test_short_sentences_dropped_but_indices_kept(self):
        cfg = PreprocessConfig(stopwords={"the"}, min_sentence_tokens=2)
        cluster = preprocess_cluster([RawDocument("d", "The dog. Big dogs bark. Hi.")], cfg)
        assert [(s.index, s.content_tokens) for s in cluster.sentences] == [(1, ("big", "dog", "bark"))]

    def test_stemming_after_stopword_removal(self):
        # "being" is a stopword; the stem "be" of a non-stopword survives
        cfg = PreprocessConfig(stopwords={"being"}, min_sentence_tokens=0)
        cluster = preprocess_cluster([RawDocument("d", "being beings")], cfg)
        assert cluster.sentences[0].content_tokens == ("be",)

    def test_empty_document_rejected(self):
        with pytest.raises(DataError):
            RawDocument("d", "  \n ")

    def test_duplicate_ids_rejected(self):
        with pytest.raises(DataError):
            preprocess_cluster([RawDocument("d", "x y."), RawDocument("d", "z w.")])

    def test_threads_do_not_change_result(self, fixture_corpus):
        docs = load_corpus(fixture_corpus)["flood"]
        assert preprocess_cluster(docs, n_jobs=4) == preprocess_cluster(docs, n_jobs=None)

    def test_invariants(self, fixture_corpus):
        cfg = PreprocessConfig()
        for cid, docs in load_corpus(fixture_corpus).items():
            cluster = preprocess_cluster(docs, cfg, cid)
            refs = [s.ref for s in cluster.sentences]
            assert refs == sorted(refs) and len(set(refs)) == len(refs)
            for s in cluster.sentences:
                assert s.word_count >= 1
                assert s.doc_id in cluster.documents
                assert all(t and t not in cfg.stopwords for t in s.content_tokens)


def test_load_corpus_layout(fixture_corpus):
    corpus = load_corpus(fixture_corpus)
    assert list(corpus) == ["election", "flood", "vaccine"]
    assert [d.doc_id for d in corpus["flood"]] == ["ap01", "ap02", "ap03"]
