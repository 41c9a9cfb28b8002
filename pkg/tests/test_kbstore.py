from __future__ import annotations

import itertools

from hypothesis import given, strategies as st

from candle.kbstore import KbIndex, query, read_kb, record_to_dict, write_kb
from candle.rank import FeatureScores, KbRecord


def record(cid, subject="germany", facet="drinks", combined=0.5, concepts=None):
    return KbRecord(
        cluster_id=cid,
        subject=subject,
        facet=facet,
        summary=f"Summary for {cid}.",
        concepts=concepts if concepts is not None else [{"phrase": "beer", "n": 1, "support": 0.75}],
        feature_scores=FeatureScores(0.1, 0.2, 0.3, combined * 4 - 0.6, combined),
        members=[
            {"sent_id": "d:0", "text": "Beer one.", "source_url": "https://a.com/1", "source_host": "a.com"},
            {"sent_id": "d:1", "text": "Beer two.", "source_url": "https://b.com/2", "source_host": "b.com"},
        ],
    )


class TestWriteKb:
    def test_sorted_by_combined_within_pair(self, tmp_path):
        path = tmp_path / "kb.jsonl"
        write_kb([record("a", combined=0.7), record("b", combined=0.9)], path)
        records = read_kb(path)
        assert [r.cluster_id for r in records] == ["b", "a"]

    def test_empty_kb(self, tmp_path):
        path = tmp_path / "kb.jsonl"
        assert write_kb([], path) == 0
        assert path.read_bytes() == b""
        assert read_kb(path) == []

    def test_rewrite_byte_identical(self, tmp_path):
        records = [record(f"c{i}", combined=i / 10) for i in range(5)]
        first, second = tmp_path / "kb1.jsonl", tmp_path / "kb2.jsonl"
        write_kb(records, first)
        write_kb(list(reversed(records)), second)
        assert first.read_bytes() == second.read_bytes()

    def test_round_trip_preserves_fields(self, tmp_path):
        path = tmp_path / "kb.jsonl"
        original = [record("a", combined=0.123456789012345)]
        write_kb(original, path)
        loaded = read_kb(path)
        assert [record_to_dict(r) for r in loaded] == [record_to_dict(r) for r in original]
        write_kb(loaded, tmp_path / "kb2.jsonl")
        assert (tmp_path / "kb2.jsonl").read_bytes() == path.read_bytes()


def sample_kb():
    return [
        record("g-dr-1", "germany", "drinks", 0.9),
        record("g-dr-2", "germany", "drinks", 0.7),
        record("g-fo-1", "germany", "food", 0.8, concepts=[{"phrase": "bread", "n": 1, "support": 1.0}]),
        record("j-fo-1", "japan", "food", 0.6, concepts=[{"phrase": "miso soup", "n": 2, "support": 0.8}]),
        record("j-dr-1", "japan", "drinks", 0.95),
    ]


class TestQuery:
    def test_concept_conjunction(self):
        index = KbIndex(sample_kb())
        out = query(index, subject="japan", concept="miso soup")
        assert [r.cluster_id for r in out] == ["j-fo-1"]

    def test_no_filters_returns_all_sorted(self):
        index = KbIndex(sample_kb())
        out = query(index)
        assert len(out) == 5
        scores = [r.feature_scores.combined for r in out]
        assert scores == sorted(scores, reverse=True)

    def test_min_score_above_bound_empty(self):
        assert query(KbIndex(sample_kb()), min_score=1.1) == []

    def test_unknown_subject_empty_not_error(self):
        assert query(KbIndex(sample_kb()), subject="atlantis") == []

    def test_subject_query_equals_union_over_facets(self):
        index = KbIndex(sample_kb())
        for subject in ("germany", "japan"):
            whole = {r.cluster_id for r in query(index, subject=subject)}
            union = set()
            for (s, facet) in index.by_facet:
                if s == subject:
                    union |= {r.cluster_id for r in query(index, subject=subject, facet=facet)}
            assert whole == union

    @given(st.lists(st.sampled_from(["germany", "japan"]), min_size=0, max_size=6))
    def test_index_consistency(self, subjects):
        records = [record(f"c{i}", subject=s) for i, s in enumerate(subjects)]
        index = KbIndex(records)
        indexed = set(itertools.chain.from_iterable(index.by_subject.values()))
        assert indexed == set(index.records)
        for cids in index.by_concept.values():
            assert all(cid in index.records for cid in cids)
