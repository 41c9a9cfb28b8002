from __future__ import annotations

from pathlib import Path

import pytest

from candle.catalog import load_catalog
from candle.ingest import Document, annotate
from candle.providers import reference_providers

REPO_ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = REPO_ROOT / "data" / "golden"


@pytest.fixture(scope="session")
def catalog():
    return load_catalog(GOLDEN_DIR / "catalog.json")


@pytest.fixture(scope="session")
def providers():
    return reference_providers()


@pytest.fixture(scope="session")
def sentence_of(providers):
    """Annotate one-sentence text into an AnnotatedSentence."""

    def build(text: str, doc_id: str = "doc", url: str = "https://example.com/a"):
        sentences = annotate(Document(doc_id, url, text=text), providers.annotator)
        assert len(sentences) == 1, f"expected one sentence, got {len(sentences)}"
        return sentences[0]

    return build
