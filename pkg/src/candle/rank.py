"""Stage 6: score clusters and post-filter them into final KB records.

Four features, each min-max normalized into [0,1] where applicable, averaged
into the combined interestingness score:

* frequency - min-max of cluster sizes within one (subject, facet) pair.
* distinctiveness - inverse-document-frequency over the clusters of one
  (facet, domain) group. Cluster similarity is the cosine of their summary
  embeddings with every catalog-subject alias masked out, binarized at
  theta; IDF(c) = sum(sizes) / sum(sizes of clusters similar to c), and the
  scores are the min-max of ln(IDF). Self-similarity is always 1, so the
  denominator never vanishes and IDF >= 1.
* specificity - fraction of nouns among the summary's non-punctuation tokens.
* domain_relevance - mean classifier probability of the members.

Degenerate min-max (all values equal) maps everything to 1.0: a constant
feature cannot reorder clusters within its group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .catalog import SubjectCatalog
from .cluster import AssertionCluster, normalize
from .errors import ConfigError, StageError

THETA = 0.8
MASK_TOKEN = "[MASK]"
MAX_CLUSTERS_PER_PAIR = 500
MIN_SOURCE_HOSTS = 2
IDENTICAL_MEMBER_FRACTION = 2.0 / 3.0
BAD_PATTERN_MEMBER_FRACTION = 0.5


@dataclass(frozen=True)
class SimilarityParams:
    theta: float = THETA
    mask_token: str = MASK_TOKEN

    def __post_init__(self):
        if not 0.0 <= self.theta <= 1.0:
            raise ConfigError(f"theta must be in [0,1], got {self.theta}")


@dataclass(frozen=True)
class FeatureScores:
    frequency: float
    distinctiveness: float
    specificity: float
    domain_relevance: float
    combined: float


@dataclass
class KbRecord:
    cluster_id: str
    subject: str
    facet: str
    summary: str
    concepts: list[dict]  # {phrase, n, support}
    feature_scores: FeatureScores
    members: list[dict] = field(default_factory=list)  # {sent_id, text, source_url, source_host}


def _min_max(values: dict[str, float]) -> dict[str, float]:
    lo, hi = min(values.values()), max(values.values())
    if hi == lo:
        return {k: 1.0 for k in values}
    return {k: (v - lo) / (hi - lo) for k, v in values.items()}


def frequency_scores(clusters: list[AssertionCluster]) -> dict[str, float]:
    """Min-max normalized cluster sizes for one (subject, facet) pair."""
    if not clusters:
        return {}
    return _min_max({c.cluster_id: float(len(c.members)) for c in clusters})


def _alias_pattern(catalog: SubjectCatalog) -> re.Pattern | None:
    aliases = sorted(catalog.all_aliases(), key=len, reverse=True)
    if not aliases:
        return None
    alternatives = "|".join(re.escape(a) for a in aliases)
    return re.compile(rf"(?<![A-Za-z0-9])(?:{alternatives})(?![A-Za-z0-9])", re.IGNORECASE)


def mask_subjects(text: str, catalog: SubjectCatalog, mask_token: str = MASK_TOKEN) -> str:
    """Replace every alias occurrence of ANY catalog subject with the mask."""
    pattern = _alias_pattern(catalog)
    if pattern is None:
        return text
    return pattern.sub(mask_token, text)


def masked_summary_embedding(
    cluster: AssertionCluster, catalog: SubjectCatalog, embedder, params: SimilarityParams = SimilarityParams()
) -> np.ndarray:
    if cluster.summary is None:
        raise StageError(f"cluster {cluster.cluster_id} has no summary")
    masked = mask_subjects(cluster.summary, catalog, params.mask_token)
    return normalize(embedder.embed([masked]))[0]


def idf_scores(sizes: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    """IDF per cluster from sizes and the binary similarity matrix."""
    total = float(sizes.sum())
    return total / (sigma @ sizes)


def distinctiveness_scores(
    clusters: list[AssertionCluster],
    catalog: SubjectCatalog,
    embedder,
    params: SimilarityParams = SimilarityParams(),
) -> dict[str, float]:
    """Min-max of ln(IDF) over all clusters of one (facet, domain) group."""
    if not clusters:
        return {}
    masked = [mask_subjects(c.summary, catalog, params.mask_token) for c in clusters]
    vectors = normalize(embedder.embed(masked))
    sims = vectors @ vectors.T
    sigma = (sims >= params.theta).astype(np.float64)
    np.fill_diagonal(sigma, 1.0)
    sizes = np.array([float(len(c.members)) for c in clusters])
    log_idf = np.log(idf_scores(sizes, sigma))
    return _min_max({c.cluster_id: float(v) for c, v in zip(clusters, log_idf)})


def specificity(summary_tokens) -> float:
    """Fraction of NOUN/PROPN among non-punctuation tokens; empty -> 0."""
    non_punct = [t for t in summary_tokens if t.pos != "PUNCT"]
    if not non_punct:
        return 0.0
    nouns = sum(1 for t in non_punct if t.pos in ("NOUN", "PROPN"))
    return nouns / len(non_punct)


def domain_relevance(cluster: AssertionCluster, member_probs: dict[str, float]) -> float:
    """Mean facet probability of the members, as stored by the classifier."""
    missing = [m for m in cluster.members if m not in member_probs]
    if missing:
        raise StageError(
            f"cluster {cluster.cluster_id}: no stored facet probability for members {missing[:3]}"
        )
    return float(np.mean([member_probs[m] for m in cluster.members]))


def combined_score(frequency: float, distinctiveness: float, spec: float, relevance: float) -> float:
    return (frequency + distinctiveness + spec + relevance) / 4.0


class BadPatternSet:
    """Case-insensitive regex block list: one pattern per line, '#' comments."""

    def __init__(self, patterns: list[str], source: str = "<memory>"):
        self.patterns = []
        for i, raw in enumerate(patterns, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                self.patterns.append(re.compile(line, re.IGNORECASE))
            except re.error as exc:
                raise ConfigError(f"bad pattern at {source}:{i}: {exc}") from exc

    @classmethod
    def from_file(cls, path) -> "BadPatternSet":
        try:
            with open(path, encoding="utf-8") as fh:
                return cls(fh.readlines(), source=str(path))
        except OSError as exc:
            raise ConfigError(f"cannot read pattern file {path}: {exc}") from exc

    def matches(self, text: str) -> bool:
        return any(p.search(text) for p in self.patterns)


def post_filter(
    records: list[KbRecord],
    patterns: BadPatternSet,
    max_per_pair: int = MAX_CLUSTERS_PER_PAIR,
    min_hosts: int = MIN_SOURCE_HOSTS,
    identical_fraction: float = IDENTICAL_MEMBER_FRACTION,
    bad_member_fraction: float = BAD_PATTERN_MEMBER_FRACTION,
) -> list[KbRecord]:
    """Hand-crafted noise filters for one (subject, facet) pair, then the
    top ``max_per_pair`` records by combined score (ties -> smaller id)."""
    survivors = []
    for record in records:
        if not record.concepts:
            continue
        texts = [m["text"] for m in record.members]
        top_count = max(map(texts.count, set(texts)))
        if top_count / len(texts) > identical_fraction:
            continue
        if len({m["source_host"] for m in record.members}) < min_hosts:
            continue
        if patterns.matches(record.summary):
            continue
        bad_members = sum(1 for t in texts if patterns.matches(t))
        if bad_members / len(texts) >= bad_member_fraction:
            continue
        survivors.append(record)
    survivors.sort(key=lambda r: (-r.feature_scores.combined, r.cluster_id))
    return survivors[:max_per_pair]
