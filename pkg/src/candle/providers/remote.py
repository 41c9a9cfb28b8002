"""HTTP clients for the sidecar wire protocol.

Endpoints: POST /v1/annotate, /v1/embed, /v1/nli, /v1/summarize and
GET /v1/health, JSON bodies throughout (schemas in docs/formats.md).
Requests are batched up to max_batch, responses are length-checked against
requests, and transport failures retry with exponential backoff. A pooled
session is shared; providers tolerate concurrent callers.
"""

from __future__ import annotations

import logging
import time

import numpy as np
import requests

from ..errors import ProviderError
from . import Annotator, Embedder, NliScorer, ProviderEndpointConfig, Summarizer

log = logging.getLogger(__name__)

_BACKOFF_BASE_S = 0.2


class RemoteEndpoint:
    def __init__(self, config: ProviderEndpointConfig, session=None, sleep=time.sleep):
        self.config = config
        self.session = session or requests.Session()
        self._sleep = sleep

    def call(self, path: str, payload: dict) -> dict:
        """POST one batch; retries transport failures, then raises ProviderError."""
        url = self.config.base_url.rstrip("/") + path
        timeout = self.config.timeout_ms / 1000.0
        last_error = None
        for attempt in range(self.config.retries + 1):
            if attempt:
                self._sleep(_BACKOFF_BASE_S * 2 ** (attempt - 1))
            try:
                response = self.session.post(url, json=payload, timeout=timeout)
            except requests.RequestException as exc:
                last_error = f"transport failure: {exc}"
                log.warning("%s %s (attempt %d/%d)", path, last_error, attempt + 1, self.config.retries + 1)
                continue
            if response.status_code in (500, 502, 503, 504):
                last_error = f"server error {response.status_code}"
                log.warning("%s %s (attempt %d/%d)", path, last_error, attempt + 1, self.config.retries + 1)
                continue
            if response.status_code != 200:
                raise ProviderError(f"{path} returned {response.status_code}: {response.text[:200]}")
            try:
                return response.json()
            except ValueError as exc:
                raise ProviderError(f"{path} returned invalid JSON: {exc}") from exc
        raise ProviderError(f"{path} failed after {self.config.retries + 1} attempts: {last_error}")

    def health(self) -> dict:
        url = self.config.base_url.rstrip("/") + "/v1/health"
        try:
            response = self.session.get(url, timeout=self.config.timeout_ms / 1000.0)
        except requests.RequestException as exc:
            raise ProviderError(f"health check failed: {exc}") from exc
        if response.status_code != 200:
            raise ProviderError(f"health check returned {response.status_code}")
        return response.json()


def _batches(items: list, size: int):
    for i in range(0, len(items), size):
        yield items[i : i + size]


class RemoteAnnotator(Annotator):
    def __init__(self, config: ProviderEndpointConfig, **kw):
        self.endpoint = RemoteEndpoint(config, **kw)

    def annotate(self, text: str) -> list[dict]:
        body = self.endpoint.call("/v1/annotate", {"texts": [text]})
        docs = body.get("documents")
        if not isinstance(docs, list) or len(docs) != 1:
            raise ProviderError(f"/v1/annotate returned {len(docs) if isinstance(docs, list) else 'no'} documents for 1 text")
        return docs[0]["sentences"]


class RemoteEmbedder(Embedder):
    def __init__(self, config: ProviderEndpointConfig, **kw):
        self.endpoint = RemoteEndpoint(config, **kw)
        self.dim: int | None = None

    def embed(self, texts: list[str]) -> np.ndarray:
        rows: list[list[float]] = []
        for batch in _batches(texts, self.endpoint.config.max_batch):
            body = self.endpoint.call("/v1/embed", {"texts": batch})
            vectors = body.get("vectors")
            if not isinstance(vectors, list) or len(vectors) != len(batch):
                raise ProviderError(
                    f"/v1/embed returned {len(vectors) if isinstance(vectors, list) else 'no'} vectors for {len(batch)} texts"
                )
            rows.extend(vectors)
        out = np.asarray(rows, dtype=np.float64)
        if out.ndim != 2:
            raise ProviderError("/v1/embed returned ragged vectors")
        # a dimension change mid-run would corrupt every distance downstream
        if self.dim is None:
            self.dim = out.shape[1]
        elif out.shape[1] != self.dim:
            raise ProviderError(f"/v1/embed dimension changed from {self.dim} to {out.shape[1]}")
        return out


class RemoteNli(NliScorer):
    def __init__(self, config: ProviderEndpointConfig, **kw):
        self.endpoint = RemoteEndpoint(config, **kw)

    def entail(self, premise: str, hypotheses: list[str]) -> list[float]:
        probs: list[float] = []
        for batch in _batches(hypotheses, self.endpoint.config.max_batch):
            body = self.endpoint.call("/v1/nli", {"premise": premise, "hypotheses": batch})
            batch_probs = body.get("entail_probs")
            if not isinstance(batch_probs, list) or len(batch_probs) != len(batch):
                raise ProviderError(
                    f"/v1/nli returned {len(batch_probs) if isinstance(batch_probs, list) else 'no'} probs for {len(batch)} hypotheses"
                )
            for p in batch_probs:
                if not isinstance(p, (int, float)) or not 0.0 <= p <= 1.0:
                    raise ProviderError(f"/v1/nli returned probability {p!r} outside [0,1]")
            probs.extend(float(p) for p in batch_probs)
        return probs


class RemoteSummarizer(Summarizer):
    def __init__(self, config: ProviderEndpointConfig, **kw):
        self.endpoint = RemoteEndpoint(config, **kw)

    def summarize(self, sentences: list[str]) -> str:
        body = self.endpoint.call("/v1/summarize", {"sentences": sentences})
        summary = body.get("summary")
        if not isinstance(summary, str):
            raise ProviderError("/v1/summarize returned no summary string")
        return summary
