"""Corpus streaming and sentence annotation.

Input is line-delimited JSON, one document per line, in either raw mode
(``id``/``url``/``text``) or pre-annotated mode (``id``/``url``/``sentences``
with token arrays); both schemas are in docs/formats.md. Documents are
independent work units: annotation may run in parallel as long as output is
re-ordered by document position.
"""

from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ProviderError
from .textutil import registrable_domain

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str
    ner: str | None
    is_stop: bool
    start: int
    end: int


@dataclass(frozen=True)
class AnnotatedSentence:
    sent_id: str
    text: str
    tokens: tuple[Token, ...]
    source_url: str
    source_host: str
    root_index: int  # index of the dependency-root token, -1 when absent

    def surfaces(self) -> list[str]:
        return [t.surface for t in self.tokens]


@dataclass(frozen=True)
class Document:
    doc_id: str
    url: str
    text: str = ""
    sentences: tuple[AnnotatedSentence, ...] | None = None  # pre-annotated mode

    @property
    def pre_annotated(self) -> bool:
        return self.sentences is not None


class CorpusReader:
    """Streams documents from a records file or a directory of such files.

    Malformed lines are logged and counted in ``skipped``, never fatal.
    An unreadable file raises.
    """

    def __init__(self, path):
        self.path = str(path)
        self.skipped = 0

    def _files(self) -> list[str]:
        if os.path.isdir(self.path):
            return sorted(
                os.path.join(self.path, f) for f in os.listdir(self.path) if not f.startswith(".")
            )
        return [self.path]

    def __iter__(self) -> Iterator[Document]:
        for file_path in self._files():
            with open(file_path, encoding="utf-8") as fh:
                for lineno, line in enumerate(fh, 1):
                    if not line.strip():
                        continue
                    doc = self._parse_line(line, file_path, lineno)
                    if doc is not None:
                        yield doc

    def _parse_line(self, line: str, file_path: str, lineno: int) -> Document | None:
        try:
            raw = json.loads(line)
            doc_id = raw["id"]
            url = raw["url"]
            if not isinstance(doc_id, str) or not isinstance(url, str) or not doc_id:
                raise ValueError("id and url must be non-empty strings")
            if "sentences" in raw:
                sentences = tuple(
                    _sentence_from_record(doc_id, i, s, url) for i, s in enumerate(raw["sentences"])
                )
                return Document(doc_id, url, sentences=sentences)
            text = raw["text"]
            if not isinstance(text, str):
                raise ValueError("text must be a string")
            return Document(doc_id, url, text=text)
        except (json.JSONDecodeError, KeyError, ValueError, TypeError, IndexError) as exc:
            self.skipped += 1
            log.warning("skipping malformed line %s:%d: %s", file_path, lineno, exc)
            return None


def read_corpus(path) -> CorpusReader:
    return CorpusReader(path)


def _sentence_from_record(doc_id: str, index: int, rec: dict, url: str) -> AnnotatedSentence:
    tokens = tuple(
        Token(
            surface=t["surface"],
            lemma=t["lemma"],
            pos=t["pos"],
            ner=t.get("ner"),
            is_stop=bool(t.get("is_stop", False)),
            start=int(t["start"]),
            end=int(t["end"]),
        )
        for t in rec["tokens"]
    )
    text = rec["text"]
    _check_spans(text, tokens)
    return AnnotatedSentence(
        sent_id=f"{doc_id}:{index}",
        text=text,
        tokens=tokens,
        source_url=url,
        source_host=registrable_domain(url),
        root_index=int(rec.get("root", -1)),
    )


def _check_spans(text: str, tokens: tuple[Token, ...]) -> None:
    prev_end = 0
    for t in tokens:
        if not (0 <= t.start <= t.end <= len(text)) or t.start < prev_end:
            raise ValueError(f"token span [{t.start},{t.end}) out of order or out of bounds")
        if text[t.start : t.end] != t.surface:
            raise ValueError(f"token surface {t.surface!r} does not match text at [{t.start},{t.end})")
        prev_end = t.end


def annotate(document: Document, annotator) -> list[AnnotatedSentence]:
    """Sentences of one document, in order, with sent_ids ``doc_id:0``, ``doc_id:1``, ...

    Pre-annotated documents bypass the provider entirely.
    """
    if document.pre_annotated:
        return list(document.sentences)
    if not document.text.strip():
        return []
    host = registrable_domain(document.url)
    out: list[AnnotatedSentence] = []
    for i, sent in enumerate(annotator.annotate(document.text)):
        tokens = tuple(
            Token(t["surface"], t["lemma"], t["pos"], t.get("ner"), bool(t["is_stop"]), t["start"], t["end"])
            for t in sent["tokens"]
        )
        _check_spans(sent["text"], tokens)
        out.append(
            AnnotatedSentence(
                sent_id=f"{document.doc_id}:{i}",
                text=sent["text"],
                tokens=tokens,
                source_url=document.url,
                source_host=host,
                root_index=int(sent.get("root", -1)),
            )
        )
    return out


def annotate_stream(
    documents: Iterable[Document], annotator, *, on_failure=None
) -> Iterator[AnnotatedSentence]:
    """Annotate documents in order; provider failures exclude the document."""
    for doc in documents:
        try:
            yield from annotate(doc, annotator)
        except ProviderError as exc:
            log.error("annotation failed for document %s: %s", doc.doc_id, exc)
            if on_failure is not None:
                on_failure(doc, exc)


def sentence_to_record(s: AnnotatedSentence) -> dict:
    """Writable checkpoint form (inverse of record_to_sentence)."""
    return {
        "sent_id": s.sent_id,
        "text": s.text,
        "url": s.source_url,
        "host": s.source_host,
        "root": s.root_index,
        "tokens": [
            {
                "surface": t.surface,
                "lemma": t.lemma,
                "pos": t.pos,
                "ner": t.ner,
                "is_stop": t.is_stop,
                "start": t.start,
                "end": t.end,
            }
            for t in s.tokens
        ],
    }


def record_to_sentence(rec: dict) -> AnnotatedSentence:
    return AnnotatedSentence(
        sent_id=rec["sent_id"],
        text=rec["text"],
        tokens=tuple(
            Token(t["surface"], t["lemma"], t["pos"], t["ner"], t["is_stop"], t["start"], t["end"])
            for t in rec["tokens"]
        ),
        source_url=rec["url"],
        source_host=rec["host"],
        root_index=rec["root"],
    )


def corpus_order_key(sent_id: str) -> tuple[str, int]:
    """(doc_id, sentence index) for corpus-order sorting of sent_ids."""
    doc_id, _, idx = sent_id.rpartition(":")
    return (doc_id, int(idx))
