"""Six-stage orchestration with per-stage checkpoints and resumability.

Stage order: detect -> genfilter -> facetclf -> cluster -> concepts -> rank.
Each stage reads its predecessor's checkpoint files and writes its own
atomically (temp + rename + fsync), one file per stage per domain, so any
suffix of the pipeline can be re-run and reruns over identical inputs and
config produce byte-identical checkpoints under deterministic providers.

Within a stage, work units (documents, sentences, subject-facet pairs) are
independent; annotation can fan out to worker threads and is re-ordered by
document position before anything is written. The next stage starts only
after the previous checkpoint is fully on disk.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import cluster as clustermod
from . import facetclf, genfilter, kbstore, rank
from .catalog import SubjectCatalog, load_catalog
from .concepts import extract_concepts
from .config import PipelineConfig
from .detect import AliasIndex, detect_subjects
from .errors import StageError
from .ingest import (
    AnnotatedSentence,
    annotate,
    corpus_order_key,
    read_corpus,
    record_to_sentence,
    sentence_to_record,
)
from .providers.reference import stopwords

log = logging.getLogger(__name__)

STAGES = ("detect", "genfilter", "facetclf", "cluster", "concepts", "rank")
_REDUCTION_STAGES = {"detect", "genfilter", "facetclf", "rank"}


@dataclass
class StageReport:
    stage: str
    input_count: int = 0
    output_count: int = 0
    duration: float = 0.0
    warnings: list[str] = field(default_factory=list)
    metrics: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "stage": self.stage,
            "input_count": self.input_count,
            "output_count": self.output_count,
            "duration": self.duration,
            "warnings": self.warnings,
            "metrics": self.metrics,
        }


def _write_jsonl(path: Path, rows) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(json.dumps(row, ensure_ascii=False))
            fh.write("\n")
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def _read_jsonl(path: Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


class _CachingNli:
    """Memoizes (premise, hypothesis) pairs so counter probabilities and
    facet probabilities shared across a sentence's subjects are fetched once."""

    def __init__(self, nli):
        self._nli = nli
        self._cache: dict[tuple[str, str], float] = {}

    def entail(self, premise: str, hypotheses: list[str]) -> list[float]:
        missing = [h for h in hypotheses if (premise, h) not in self._cache]
        if missing:
            for h, p in zip(missing, self._nli.entail(premise, missing)):
                self._cache[(premise, h)] = p
        return [self._cache[(premise, h)] for h in hypotheses]


class Pipeline:
    def __init__(self, config: PipelineConfig, catalog: SubjectCatalog | None = None):
        self.config = config
        self.catalog = catalog if catalog is not None else load_catalog(config.catalog_path)
        self.providers = config.providers()
        self.dir = Path(config.checkpoint_dir)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.domains = sorted(self.catalog.domains)

    # --- checkpoint paths -------------------------------------------------

    def path(self, stage: str, domain: str, suffix: str = "jsonl") -> Path:
        return self.dir / f"{stage}.{domain}.{suffix}"

    def _require(self, stage: str, domain: str) -> Path:
        p = self.path(stage, domain)
        if not p.exists():
            producer = "detect" if stage == "sentences" else stage
            raise StageError(f"missing checkpoint {p.name}: run stage '{producer}' first")
        return p

    def _load_sentences(self, domain: str) -> dict[str, AnnotatedSentence]:
        rows = _read_jsonl(self._require("sentences", domain))
        return {r["sent_id"]: record_to_sentence(r) for r in rows}

    # --- stage: detect ----------------------------------------------------

    def run_detect(self) -> StageReport:
        report = StageReport("detect")
        start = time.monotonic()
        index = AliasIndex(self.catalog)
        per_domain_sentences: dict[str, dict[str, dict]] = {d: {} for d in self.domains}
        per_domain_matches: dict[str, list[dict]] = {d: [] for d in self.domains}
        match_counters: dict[str, int] = {d: 0 for d in self.domains}
        seen_sentences = 0
        matched_sentences: set[str] = set()

        reader = read_corpus(self.config.corpus_path)
        documents = iter(reader)
        annotator = self.providers.annotator

        def annotate_one(doc):
            return annotate(doc, annotator)

        if self.config.workers > 1:
            executor = ThreadPoolExecutor(max_workers=self.config.workers)
            sentence_lists = executor.map(annotate_one, documents)
        else:
            executor = None
            sentence_lists = map(annotate_one, documents)

        try:
            for sentences in sentence_lists:
                for sentence in sentences:
                    seen_sentences += 1
                    matches = detect_subjects(sentence, self.catalog, index)
                    if not matches:
                        continue
                    matched_sentences.add(sentence.sent_id)
                    for m in matches:
                        domain = self.catalog.subjects[m.subject].domain
                        match_counters[domain] += 1
                        per_domain_sentences[domain].setdefault(
                            sentence.sent_id, sentence_to_record(sentence)
                        )
                        per_domain_matches[domain].append(
                            {
                                "sent_id": m.sentence,
                                "subject_id": m.subject,
                                "method": m.method,
                                "span": [m.start, m.end],
                                "surface": m.matched_surface,
                            }
                        )
        finally:
            if executor is not None:
                executor.shutdown(wait=False)

        for domain in self.domains:
            rows = sorted(
                per_domain_sentences[domain].values(), key=lambda r: corpus_order_key(r["sent_id"])
            )
            _write_jsonl(self.path("sentences", domain), rows)
            matches = sorted(
                per_domain_matches[domain],
                key=lambda r: (corpus_order_key(r["sent_id"]), r["subject_id"], r["span"]),
            )
            _write_jsonl(self.path("detect", domain), matches)

        if reader.skipped:
            report.warnings.append(f"skipped {reader.skipped} malformed corpus line(s)")
        report.metrics = {f"matches.{d}": n for d, n in sorted(match_counters.items())}
        report.input_count = seen_sentences
        report.output_count = len(matched_sentences)
        report.duration = time.monotonic() - start
        return report

    # --- stage: genfilter ---------------------------------------------------

    def run_genfilter(self) -> StageReport:
        report = StageReport("genfilter")
        start = time.monotonic()
        in_sentences: set[str] = set()
        out_sentences: set[str] = set()
        for domain_id in self.domains:
            domain = self.catalog.domains[domain_id]
            sentences = self._load_sentences(domain_id)
            matches = _read_jsonl(self._require("detect", domain_id))
            active_by_facet = {
                f.id: genfilter.active_rules_for(domain, f.id) for f in domain.facets
            }
            survivors: list[dict] = []
            rejects: list[dict] = []
            for sent_id, subject_id in sorted(
                {(m["sent_id"], m["subject_id"]) for m in matches},
                key=lambda t: (corpus_order_key(t[0]), t[1]),
            ):
                in_sentences.add(sent_id)
                failures = set(genfilter.failing_rules(sentences[sent_id]))
                for facet in domain.facets:
                    active_failures = sorted(failures & active_by_facet[facet.id])
                    row = {
                        "sent_id": sent_id,
                        "subject_id": subject_id,
                        "facet": facet.id,
                        "failed_rule": active_failures[0] if active_failures else None,
                    }
                    if active_failures:
                        rejects.append(row)
                    else:
                        survivors.append(row)
                        out_sentences.add(sent_id)
            _write_jsonl(self.path("genfilter", domain_id), survivors)
            _write_jsonl(self.path("genfilter", domain_id, "rejects.jsonl"), rejects)
        report.input_count = len(in_sentences)
        report.output_count = len(out_sentences)
        report.duration = time.monotonic() - start
        return report

    # --- stage: facetclf ----------------------------------------------------

    def run_facetclf(self) -> StageReport:
        report = StageReport("facetclf")
        start = time.monotonic()
        clf_config = self.config.classifier_config()
        nli = _CachingNli(self.providers.nli)
        in_sentences: set[str] = set()
        out_sentences: set[str] = set()
        for domain_id in self.domains:
            domain = self.catalog.domains[domain_id]
            sentences = self._load_sentences(domain_id)
            candidates = _read_jsonl(self._require("genfilter", domain_id))
            by_subject: dict[tuple[str, str], set[str]] = {}
            for row in candidates:
                by_subject.setdefault((row["sent_id"], row["subject_id"]), set()).add(row["facet"])
            rows: list[dict] = []
            for (sent_id, subject_id), facet_subset in sorted(
                by_subject.items(), key=lambda t: (corpus_order_key(t[0][0]), t[0][1])
            ):
                in_sentences.add(sent_id)
                decisions = facetclf.classify_all_facets(
                    sentences[sent_id].text, sent_id, domain, clf_config, nli, facet_subset
                )
                for d in decisions:
                    rows.append(
                        {
                            "sent_id": d.sentence,
                            "subject_id": subject_id,
                            "facet": d.facet,
                            "p_facet": d.p_facet,
                            "counter_probs": {
                                label: d.counter_probs[label] for label in clf_config.counter_labels
                            },
                            "accepted": d.accepted,
                        }
                    )
                    if d.accepted:
                        out_sentences.add(sent_id)
            _write_jsonl(self.path("facetclf", domain_id), rows)
        report.input_count = len(in_sentences)
        report.output_count = len(out_sentences)
        report.duration = time.monotonic() - start
        return report

    # --- stage: cluster -----------------------------------------------------

    def run_cluster(self) -> StageReport:
        report = StageReport("cluster")
        start = time.monotonic()
        truncated_pairs = 0
        assertions_in = 0
        clusters_out = 0
        for domain_id in self.domains:
            sentences = self._load_sentences(domain_id)
            decisions = _read_jsonl(self._require("facetclf", domain_id))
            pairs: dict[tuple[str, str], list[str]] = {}
            for row in decisions:
                if row["accepted"]:
                    pairs.setdefault((row["subject_id"], row["facet"]), []).append(row["sent_id"])
            rows: list[dict] = []
            for (subject_id, facet_id) in sorted(pairs):
                sent_ids = sorted(set(pairs[(subject_id, facet_id)]), key=corpus_order_key)
                assertions_in += len(sent_ids)
                kept, was_truncated = clustermod.truncate_pair(sent_ids, self.config.pair_cap)
                truncated_pairs += was_truncated
                texts = {sid: sentences[sid].text for sid in kept}
                vectors = clustermod.embed_assertions(texts, self.providers.embedder)
                matrix = np.stack([vectors[sid] for sid in kept])
                labels = clustermod.hac_cluster(matrix, self.config.distance_threshold)
                by_label: dict[int, list[str]] = {}
                for sid, label in zip(kept, labels):
                    by_label.setdefault(label, []).append(sid)
                clusters = [
                    clustermod.AssertionCluster(
                        cluster_id=f"{subject_id}:{facet_id}:{label:05d}",
                        subject=subject_id,
                        facet=facet_id,
                        members=sorted(members, key=corpus_order_key),
                    )
                    for label, members in sorted(by_label.items())
                ]
                for c in clustermod.clusters_to_summarize(
                    clusters, self.config.min_summary_size, self.config.max_summarized_clusters
                ):
                    clustermod.summarize_cluster(c, texts, vectors, self.providers.summarizer)
                clusters_out += len(clusters)
                rows.extend(
                    {
                        "cluster_id": c.cluster_id,
                        "subject": c.subject,
                        "facet": c.facet,
                        "members": c.members,
                        "summary": c.summary,
                        "summary_source": c.summary_source,
                    }
                    for c in clusters
                )
            _write_jsonl(self.path("cluster", domain_id), rows)
        if truncated_pairs:
            report.warnings.append(f"truncated {truncated_pairs} subject-facet pair(s) at {self.config.pair_cap}")
        report.input_count = assertions_in
        report.output_count = clusters_out
        report.duration = time.monotonic() - start
        return report

    # --- stage: concepts ----------------------------------------------------

    def run_concepts(self) -> StageReport:
        report = StageReport("concepts")
        start = time.monotonic()
        clusters_in = 0
        concepts_out = 0
        stop = stopwords()
        for domain_id in self.domains:
            sentences = self._load_sentences(domain_id)
            rows = _read_jsonl(self._require("cluster", domain_id))
            for row in rows:
                clusters_in += 1
                aliases = list(self.catalog.subjects[row["subject"]].aliases)
                member_tokens = [list(sentences[sid].tokens) for sid in row["members"]]
                found = extract_concepts(member_tokens, aliases, stop)
                row["concepts"] = [
                    {"phrase": c.phrase, "n": c.n, "support": c.support} for c in found
                ]
                concepts_out += len(found)
            _write_jsonl(self.path("concepts", domain_id), rows)
        report.input_count = clusters_in
        report.output_count = concepts_out
        report.duration = time.monotonic() - start
        return report

    # --- stage: rank ----------------------------------------------------------

    def run_rank(self) -> StageReport:
        report = StageReport("rank")
        start = time.monotonic()
        params = self.config.similarity_params()
        patterns = self.config.pattern_set()
        clusters_in = 0
        all_records: list[kbstore.KbRecord] = []
        for domain_id in self.domains:
            sentences = self._load_sentences(domain_id)
            probs = {
                (r["sent_id"], r["subject_id"], r["facet"]): r["p_facet"]
                for r in _read_jsonl(self._require("facetclf", domain_id))
            }
            rows = _read_jsonl(self._require("concepts", domain_id))
            entering: list[tuple[dict, clustermod.AssertionCluster]] = []
            for row in rows:
                if row["summary"] is None:
                    continue
                clusters_in += 1
                entering.append(
                    (
                        row,
                        clustermod.AssertionCluster(
                            cluster_id=row["cluster_id"],
                            subject=row["subject"],
                            facet=row["facet"],
                            members=row["members"],
                            summary=row["summary"],
                            summary_source=row["summary_source"],
                        ),
                    )
                )

            by_facet: dict[str, list[clustermod.AssertionCluster]] = {}
            by_pair: dict[tuple[str, str], list[clustermod.AssertionCluster]] = {}
            for _, c in entering:
                by_facet.setdefault(c.facet, []).append(c)
                by_pair.setdefault((c.subject, c.facet), []).append(c)

            distinctiveness: dict[str, float] = {}
            for facet_id in sorted(by_facet):
                distinctiveness.update(
                    rank.distinctiveness_scores(
                        by_facet[facet_id], self.catalog, self.providers.embedder, params
                    )
                )
            frequency: dict[str, float] = {}
            for pair in sorted(by_pair):
                frequency.update(rank.frequency_scores(by_pair[pair]))

            records_by_pair: dict[tuple[str, str], list[rank.KbRecord]] = {}
            for row, c in entering:
                summary_sentences = self.providers.annotator.annotate(c.summary)
                summary_tokens = [
                    t for s in summary_sentences for t in s["tokens"]
                ]
                spec = rank.specificity([_TokenView(t) for t in summary_tokens])
                member_probs = {
                    sid: probs[(sid, c.subject, c.facet)]
                    for sid in c.members
                    if (sid, c.subject, c.facet) in probs
                }
                relevance = rank.domain_relevance(c, member_probs)
                combined = rank.combined_score(
                    frequency[c.cluster_id], distinctiveness[c.cluster_id], spec, relevance
                )
                record = rank.KbRecord(
                    cluster_id=c.cluster_id,
                    subject=c.subject,
                    facet=c.facet,
                    summary=c.summary,
                    concepts=row["concepts"],
                    feature_scores=rank.FeatureScores(
                        frequency=frequency[c.cluster_id],
                        distinctiveness=distinctiveness[c.cluster_id],
                        specificity=spec,
                        domain_relevance=relevance,
                        combined=combined,
                    ),
                    members=[
                        {
                            "sent_id": sid,
                            "text": sentences[sid].text,
                            "source_url": sentences[sid].source_url,
                            "source_host": sentences[sid].source_host,
                        }
                        for sid in c.members
                    ],
                )
                records_by_pair.setdefault((c.subject, c.facet), []).append(record)

            domain_records: list[rank.KbRecord] = []
            for pair in sorted(records_by_pair):
                domain_records.extend(
                    rank.post_filter(
                        records_by_pair[pair],
                        patterns,
                        self.config.max_clusters_per_pair,
                        self.config.min_source_hosts,
                    )
                )
            domain_records.sort(key=kbstore.sort_key)
            _write_jsonl(self.path("rank", domain_id), map(kbstore.record_to_dict, domain_records))
            all_records.extend(domain_records)

        kbstore.write_kb(all_records, self.config.output_kb)
        report.input_count = clusters_in
        report.output_count = len(all_records)
        report.duration = time.monotonic() - start
        return report

    # --- orchestration ----------------------------------------------------

    def run(self, stages=None) -> list[StageReport]:
        selected = list(STAGES) if stages is None else [s for s in STAGES if s in set(stages)]
        unknown = (set(stages) - set(STAGES)) if stages is not None else set()
        if unknown:
            raise StageError(f"unknown stage(s): {sorted(unknown)}")
        runners = {
            "detect": self.run_detect,
            "genfilter": self.run_genfilter,
            "facetclf": self.run_facetclf,
            "cluster": self.run_cluster,
            "concepts": self.run_concepts,
            "rank": self.run_rank,
        }
        reports = []
        for stage in selected:
            report = runners[stage]()
            if stage in _REDUCTION_STAGES and report.output_count > report.input_count:
                raise StageError(
                    f"stage {stage} produced more output ({report.output_count}) than input ({report.input_count})"
                )
            log.info(
                "stage %-9s in=%-8d out=%-8d %.2fs", stage, report.input_count, report.output_count, report.duration
            )
            reports.append(report)
        self._save_reports(reports)
        return reports

    def _save_reports(self, reports: list[StageReport]) -> None:
        path = self.dir / "reports.json"
        existing: dict[str, dict] = {}
        if path.exists():
            existing = json.loads(path.read_text(encoding="utf-8"))
        for report in reports:
            existing[report.stage] = report.to_dict()
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(json.dumps(existing, indent=2, ensure_ascii=False), encoding="utf-8")
        os.replace(tmp, path)

    def surviving_sentence_ids(self, stage: str, domain_id: str) -> set[str]:
        """Sentence ids still alive after a stage, per that stage's checkpoint."""
        if stage == "detect":
            return {r["sent_id"] for r in _read_jsonl(self._require("detect", domain_id))}
        if stage == "genfilter":
            return {r["sent_id"] for r in _read_jsonl(self._require("genfilter", domain_id))}
        if stage == "facetclf":
            return {
                r["sent_id"] for r in _read_jsonl(self._require("facetclf", domain_id)) if r["accepted"]
            }
        raise ValueError(f"no sentence-id survival defined for stage {stage!r}")


class _TokenView:
    """Duck-typed token for rank.specificity over raw provider dicts."""

    __slots__ = ("pos",)

    def __init__(self, raw: dict):
        self.pos = raw["pos"]


def format_report_table(reports: list[dict]) -> str:
    """Stage metrics as a fixed-width table with per-stage reduction."""
    lines = [f"{'#':<3}{'Stage':<12}{'Input':>10} {'Output':>10} {'Change':>8} {'Time':>9}  Warnings"]
    for i, r in enumerate(reports, 1):
        change = ""
        if r["input_count"]:
            pct = (r["output_count"] - r["input_count"]) / r["input_count"] * 100
            change = f"{pct:+.0f}%"
        lines.append(
            f"{i:<3}{r['stage']:<12}{r['input_count']:>10} {r['output_count']:>10} "
            f"{change:>8} {r['duration']:>8.2f}s  {'; '.join(r['warnings'])}"
        )
    return "\n".join(lines)
