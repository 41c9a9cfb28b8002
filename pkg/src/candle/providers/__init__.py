"""Model provider interfaces and factories.

Four narrow interfaces (annotation, embedding, NLI, summarization) instead of
one generic model API: each has its own batching shape and failure semantics.
The deterministic reference implementations run with no model weights; the
remote implementations speak the HTTP wire protocol in docs/formats.md.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ProviderEndpointConfig:
    base_url: str
    timeout_ms: int = 30_000
    max_batch: int = 64
    retries: int = 2

    def __post_init__(self):
        if self.max_batch < 1:
            raise ValueError("max_batch must be >= 1")
        if self.retries < 0:
            raise ValueError("retries must be >= 0")


class Annotator:
    def annotate(self, text: str) -> list[dict]:
        """Sentences of ``text``: {text, root, tokens:[{surface, lemma, pos,
        ner, is_stop, start, end}]} with token spans relative to the
        sentence."""
        raise NotImplementedError


class Embedder:
    dim: int

    def embed(self, texts: list[str]) -> np.ndarray:
        """(len(texts), dim) array; rows are L2-normalized downstream."""
        raise NotImplementedError


class NliScorer:
    def entail(self, premise: str, hypotheses: list[str]) -> list[float]:
        """P[premise => h] in [0,1] for each hypothesis, order preserved."""
        raise NotImplementedError


class Summarizer:
    def summarize(self, sentences: list[str]) -> str:
        """One generated passage; empty output triggers the medoid fallback."""
        raise NotImplementedError


@dataclass
class ProviderSet:
    annotator: Annotator
    embedder: Embedder
    nli: NliScorer
    summarizer: Summarizer


def reference_providers() -> ProviderSet:
    from .reference import (
        ReferenceAnnotator,
        ReferenceEmbedder,
        ReferenceNli,
        ReferenceSummarizer,
    )

    return ProviderSet(ReferenceAnnotator(), ReferenceEmbedder(), ReferenceNli(), ReferenceSummarizer())


def remote_providers(endpoint: ProviderEndpointConfig) -> ProviderSet:
    from .remote import RemoteAnnotator, RemoteEmbedder, RemoteNli, RemoteSummarizer

    return ProviderSet(
        RemoteAnnotator(endpoint),
        RemoteEmbedder(endpoint),
        RemoteNli(endpoint),
        RemoteSummarizer(endpoint),
    )
