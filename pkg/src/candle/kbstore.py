"""Flat-file KB persistence with in-memory query indexes.

Records are line-delimited JSON in a fixed field order, sorted by
(subject, facet, combined desc, cluster_id); identical inputs serialize to
identical bytes. Read-only after load; queries are safe concurrently.
"""

from __future__ import annotations

import json
import os

from .rank import FeatureScores, KbRecord


def record_to_dict(record: KbRecord) -> dict:
    fs = record.feature_scores
    return {
        "cluster_id": record.cluster_id,
        "subject": record.subject,
        "facet": record.facet,
        "summary": record.summary,
        "concepts": [
            {"phrase": c["phrase"], "n": c["n"], "support": c["support"]} for c in record.concepts
        ],
        "feature_scores": {
            "frequency": fs.frequency,
            "distinctiveness": fs.distinctiveness,
            "specificity": fs.specificity,
            "domain_relevance": fs.domain_relevance,
            "combined": fs.combined,
        },
        "members": [
            {
                "sent_id": m["sent_id"],
                "text": m["text"],
                "source_url": m["source_url"],
                "source_host": m["source_host"],
            }
            for m in record.members
        ],
    }


def dict_to_record(raw: dict) -> KbRecord:
    return KbRecord(
        cluster_id=raw["cluster_id"],
        subject=raw["subject"],
        facet=raw["facet"],
        summary=raw["summary"],
        concepts=raw["concepts"],
        feature_scores=FeatureScores(**raw["feature_scores"]),
        members=raw["members"],
    )


def sort_key(record: KbRecord):
    return (record.subject, record.facet, -record.feature_scores.combined, record.cluster_id)


def write_kb(records: list[KbRecord], path) -> int:
    ordered = sorted(records, key=sort_key)
    tmp = f"{path}.tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        for record in ordered:
            fh.write(json.dumps(record_to_dict(record), ensure_ascii=False))
            fh.write("\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)
    return len(ordered)


def read_kb(path) -> list[KbRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                records.append(dict_to_record(json.loads(line)))
    return records


class KbIndex:
    def __init__(self, records: list[KbRecord]):
        self.records = {r.cluster_id: r for r in records}
        self.by_subject: dict[str, list[str]] = {}
        self.by_facet: dict[tuple[str, str], list[str]] = {}
        self.by_concept: dict[str, list[str]] = {}
        for r in records:
            self.by_subject.setdefault(r.subject, []).append(r.cluster_id)
            self.by_facet.setdefault((r.subject, r.facet), []).append(r.cluster_id)
            for c in r.concepts:
                self.by_concept.setdefault(c["phrase"], []).append(r.cluster_id)

    @classmethod
    def load(cls, path) -> "KbIndex":
        return cls(read_kb(path))


def query(
    index: KbIndex,
    subject: str | None = None,
    facet: str | None = None,
    concept: str | None = None,
    min_score: float | None = None,
) -> list[KbRecord]:
    """Conjunction of the provided filters, sorted by combined desc."""
    ids = set(index.records)
    if subject is not None:
        ids &= set(index.by_subject.get(subject, []))
    if facet is not None:
        ids &= {cid for (s, f), cids in index.by_facet.items() if f == facet for cid in cids}
    if concept is not None:
        ids &= set(index.by_concept.get(concept, []))
    out = [index.records[cid] for cid in ids]
    if min_score is not None:
        out = [r for r in out if r.feature_scores.combined >= min_score]
    out.sort(key=lambda r: (-r.feature_scores.combined, r.cluster_id))
    return out
