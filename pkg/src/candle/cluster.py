"""Stage 4: group near-duplicate assertions per (subject, facet) and summarize.

Clustering is hierarchical agglomerative with Ward linkage over Euclidean
distances of unit-normalized embeddings, merging while the smallest linkage
distance stays at or below the threshold. The recurrence runs on squared
distances (Lance-Williams); reported linkage distances are their square
roots, so a pair of singletons merges exactly when their Euclidean distance
is within the threshold.

Determinism contract: among equally distant pairs, the pair whose clusters
contain the smallest original indices merges first, and final labels are
numbered 0..k-1 by each cluster's smallest member index. Each (subject,
facet) pair clusters independently; one pair's HAC is single-threaded.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from .errors import ProviderError
from .ingest import corpus_order_key

log = logging.getLogger(__name__)

DISTANCE_THRESHOLD = 1.5
PAIR_CAP = 50_000
MIN_SUMMARY_SIZE = 3
MAX_SUMMARIZED_CLUSTERS = 500

GENERATED = "GENERATED"
MEDOID = "MEDOID"
NONE = "NONE"


@dataclass
class AssertionCluster:
    cluster_id: str
    subject: str
    facet: str
    members: list[str]  # sent_ids, non-empty
    summary: str | None = None
    summary_source: str = NONE


def normalize(vectors: np.ndarray) -> np.ndarray:
    """Rows scaled to unit L2 norm; zero rows raise."""
    vectors = np.asarray(vectors, dtype=np.float64)
    norms = np.linalg.norm(vectors, axis=-1, keepdims=True)
    if np.any(norms == 0.0):
        raise ValueError("cannot normalize a zero vector")
    return vectors / norms


def embed_assertions(sentences: dict[str, str], embedder) -> dict[str, np.ndarray]:
    """sent_id -> unit-norm vector. Normalization happens here regardless of
    what the provider returns."""
    if not sentences:
        return {}
    ids = sorted(sentences, key=corpus_order_key)
    vectors = normalize(embedder.embed([sentences[i] for i in ids]))
    return {sent_id: vectors[i] for i, sent_id in enumerate(ids)}


def truncate_pair(sent_ids: list[str], cap: int = PAIR_CAP) -> tuple[list[str], bool]:
    """First ``cap`` sentences in corpus order; flags whether anything was cut."""
    ordered = sorted(sent_ids, key=corpus_order_key)
    if len(ordered) <= cap:
        return ordered, False
    log.info("truncating subject-facet pair: %d -> %d sentences", len(ordered), cap)
    return ordered[:cap], True


def hac_cluster(vectors: np.ndarray, distance_threshold: float = DISTANCE_THRESHOLD) -> list[int]:
    """Ward-linkage agglomeration; returns one label per input row.

    Merging stops when no pair of clusters has linkage distance <= threshold.
    Labels are contiguous from 0, ordered by smallest member index.
    """
    vectors = np.asarray(vectors, dtype=np.float64)
    if vectors.ndim != 2 or len(vectors) == 0:
        raise ValueError("need a non-empty 2-D array of vectors")
    n = len(vectors)
    if n == 1:
        return [0]

    # squared Euclidean distance matrix; merged-away rows stay at inf
    sq = np.sum(vectors**2, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (vectors @ vectors.T)
    np.maximum(d2, 0.0, out=d2)
    np.fill_diagonal(d2, np.inf)

    sizes = np.ones(n)
    members: list[list[int] | None] = [[i] for i in range(n)]
    reps = np.arange(n)  # smallest original index per active cluster
    threshold_sq = distance_threshold * distance_threshold

    for _ in range(n - 1):
        best = np.min(d2)
        if best > threshold_sq:
            break
        ties = np.argwhere(d2 == best)
        # clusters are indexed by their smallest original member
        a, b = min(
            ((i, j) for i, j in ties if i < j),
            key=lambda p: (min(reps[p[0]], reps[p[1]]), max(reps[p[0]], reps[p[1]])),
        )
        na, nb, nc = sizes[a], sizes[b], sizes
        new_d2 = ((na + nc) * d2[a] + (nb + nc) * d2[b] - nc * d2[a, b]) / (na + nb + nc)
        d2[a] = new_d2
        d2[:, a] = new_d2
        d2[a, a] = np.inf
        d2[b] = np.inf
        d2[:, b] = np.inf
        sizes[a] = na + nb
        members[a] = members[a] + members[b]  # type: ignore[operator]
        members[b] = None
        reps[a] = min(reps[a], reps[b])

    clusters = sorted((m for m in members if m), key=min)
    labels = [0] * n
    for label, member_list in enumerate(clusters):
        for i in member_list:
            labels[i] = label
    return labels


def medoid_index(vectors: np.ndarray) -> int:
    """Row nearest the centroid; ties -> smallest index."""
    centroid = vectors.mean(axis=0)
    distances = np.linalg.norm(vectors - centroid, axis=1)
    return int(np.argmin(distances))


def first_sentence(text: str) -> str:
    """First sentence of generated output, trimmed."""
    text = text.strip()
    for i, ch in enumerate(text):
        if ch in ".!?" and (i + 1 == len(text) or text[i + 1].isspace()):
            return text[: i + 1]
    return text


def summarize_cluster(
    cluster: AssertionCluster,
    member_texts: dict[str, str],
    member_vectors: dict[str, np.ndarray],
    summarizer,
) -> AssertionCluster:
    """Attach a summary: provider output's first sentence, or the medoid
    member on provider failure / empty output."""
    ordered = sorted(cluster.members, key=corpus_order_key)
    texts = [member_texts[m] for m in ordered]
    summary = ""
    try:
        summary = first_sentence(summarizer.summarize(texts))
        source = GENERATED
    except ProviderError as exc:
        log.warning("summarizer failed for %s, falling back to medoid: %s", cluster.cluster_id, exc)
    if not summary:
        vectors = np.stack([member_vectors[m] for m in ordered])
        summary = texts[medoid_index(vectors)]
        source = MEDOID
    cluster.summary = summary
    cluster.summary_source = source
    return cluster


def clusters_to_summarize(
    clusters: list[AssertionCluster],
    min_size: int = MIN_SUMMARY_SIZE,
    max_clusters: int = MAX_SUMMARIZED_CLUSTERS,
) -> list[AssertionCluster]:
    """The most populated ``max_clusters`` clusters of one pair, minimum size
    ``min_size``; ties by cluster_id."""
    by_population = sorted(clusters, key=lambda c: (-len(c.members), c.cluster_id))
    return [c for c in by_population[:max_clusters] if len(c.members) >= min_size]
