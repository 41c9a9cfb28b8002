"""Deterministic reference providers: pure functions of their inputs.

These exist so the whole pipeline and its CI run without model weights. They
are documented stand-ins, not approximations of any particular model:

* ReferenceAnnotator - regex sentencizer + lexicon/suffix POS tagger +
  gazetteer NER + rule lemmatizer. Root = first VERB token (first AUX if no
  VERB), the finite-verb heuristic.
* ReferenceEmbedder - hashed character n-grams, fixed 64 dims, unit norm.
* ReferenceNli - cue-lexicon scorer for "This text is about {label}"
  hypotheses: p = min(1, 0.05 + 0.25 * cue_hits). Any other hypothesis is
  scored by content-token overlap, so self-entailment stays high.
* ReferenceSummarizer - returns no text, which makes the cluster stage fall
  back to the medoid member.
"""

from __future__ import annotations

import hashlib
import json
import re
from functools import lru_cache
from importlib import resources

import numpy as np

from . import Annotator, Embedder, NliScorer, Summarizer
from .lexicon import (
    CLOSED_CLASS,
    CONTENT_LEXICON,
    GAZETTEER,
    GAZETTEER_MAX_TOKENS,
    IRREGULAR_NOUN_LEMMAS,
    IRREGULAR_VERB_LEMMAS,
)


@lru_cache(maxsize=1)
def stopwords() -> frozenset[str]:
    text = resources.files("candle.data").joinpath("stopwords.txt").read_text(encoding="utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


@lru_cache(maxsize=1)
def cue_lexicon() -> dict[str, frozenset[str]]:
    raw = json.loads(resources.files("candle.data").joinpath("nli_cues.json").read_text(encoding="utf-8"))
    return {label: frozenset(words) for label, words in raw.items()}


# --- annotation ---------------------------------------------------------

_TOKEN_RE = re.compile(
    r"(?:https?://|www\.)\S+"  # URLs stay one token
    r"|[A-Za-z0-9]+(?:\.[A-Za-z0-9]+)+\.?"  # dotted tokens: U.S., example.com
    r"|[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*"  # words, contractions, hyphens
    r"|[^\sA-Za-z0-9]"  # anything else, one char at a time
)

_SENT_SPLIT_RE = re.compile(r"(?<=[.!?])\s+(?=[\"'A-Z0-9])")
_HONORIFICS = frozenset({"mr.", "mrs.", "ms.", "dr.", "st.", "prof.", "e.g.", "i.e.", "etc.", "vs."})
_WORD_RE = re.compile(r"[a-z0-9']+")
_NUM_RE = re.compile(r"^\d[\d,.]*$")

_SIBILANT_ES = ("sses", "shes", "ches", "xes", "zes")


def _split_sentences(text: str) -> list[tuple[str, int]]:
    """(sentence, start offset) pairs; honorific periods do not split."""
    pieces: list[tuple[str, int]] = []
    start = 0
    for m in _SENT_SPLIT_RE.finditer(text):
        candidate = text[start : m.start()]
        last_word = candidate.rsplit(None, 1)[-1].lower() if candidate.split() else ""
        if last_word in _HONORIFICS:
            continue
        pieces.append((candidate, start))
        start = m.end()
    tail = text[start:]
    if tail.strip():
        pieces.append((tail, start))
    return [(s.strip(), off + (len(s) - len(s.lstrip()))) for s, off in pieces if s.strip()]


def _depluralize(lower: str) -> str | None:
    if lower in IRREGULAR_NOUN_LEMMAS:
        return IRREGULAR_NOUN_LEMMAS[lower]
    if lower.endswith("ies") and len(lower) > 4:
        return lower[:-3] + "y"
    if lower.endswith(_SIBILANT_ES):
        return lower[:-2]
    if lower.endswith("s") and not lower.endswith(("ss", "us", "is")):
        return lower[:-1]
    return None


def _verb_base(lower: str) -> str | None:
    if lower in IRREGULAR_VERB_LEMMAS:
        return IRREGULAR_VERB_LEMMAS[lower]
    for suffix in ("ing", "ed", "es", "s"):
        if lower.endswith(suffix) and len(lower) > len(suffix) + 1:
            stem = lower[: -len(suffix)]
            if stem in CONTENT_LEXICON and CONTENT_LEXICON[stem] == "VERB":
                return stem
            if stem + "e" in CONTENT_LEXICON and CONTENT_LEXICON[stem + "e"] == "VERB":
                return stem + "e"
            if len(stem) > 2 and stem[-1] == stem[-2] and stem[:-1] in CONTENT_LEXICON:
                if CONTENT_LEXICON[stem[:-1]] == "VERB":
                    return stem[:-1]
    return None


class ReferenceAnnotator(Annotator):
    def annotate(self, text: str) -> list[dict]:
        out = []
        for sent_text, _off in _split_sentences(text):
            out.append(self._annotate_sentence(sent_text))
        return out

    def _annotate_sentence(self, sent: str) -> dict:
        spans = [(m.group(), m.start(), m.end()) for m in _TOKEN_RE.finditer(sent)]
        surfaces = [s for s, _, _ in spans]
        ner = self._ner_tags(surfaces)
        tokens = []
        prev_pos = None
        for i, (surface, start, end) in enumerate(spans):
            pos, lemma = self._pos_lemma(surface, i, ner[i], prev_pos)
            tokens.append(
                {
                    "surface": surface,
                    "lemma": lemma,
                    "pos": pos,
                    "ner": ner[i],
                    "is_stop": surface.lower() in stopwords(),
                    "start": start,
                    "end": end,
                }
            )
            prev_pos = pos
        root = -1
        for i, t in enumerate(tokens):
            if t["pos"] == "VERB":
                root = i
                break
        if root == -1:
            for i, t in enumerate(tokens):
                if t["pos"] == "AUX":
                    root = i
                    break
        return {"text": sent, "root": root, "tokens": tokens}

    def _ner_tags(self, surfaces: list[str]) -> list[str | None]:
        tags: list[str | None] = [None] * len(surfaces)
        i = 0
        while i < len(surfaces):
            hit_len = 0
            hit_tag = None
            for length in range(min(GAZETTEER_MAX_TOKENS, len(surfaces) - i), 0, -1):
                phrase = " ".join(s.lower() for s in surfaces[i : i + length])
                if phrase in GAZETTEER:
                    hit_len, hit_tag = length, GAZETTEER[phrase]
                    break
            if hit_len and any(s[0].isupper() for s in surfaces[i : i + hit_len]):
                for j in range(i, i + hit_len):
                    tags[j] = hit_tag
                i += hit_len
            else:
                i += 1
        return tags

    def _pos_lemma(self, surface: str, index: int, ner: str | None, prev_pos: str | None):
        lower = surface.lower()
        if not any(c.isalnum() for c in surface):
            return "PUNCT", surface
        if _NUM_RE.match(surface):
            return "NUM", surface
        if ner is not None:
            return "PROPN", _depluralize(lower) or lower
        if lower in CLOSED_CLASS:
            return CLOSED_CLASS[lower], lower

        pos, lemma = self._open_class(surface, lower, index)
        # a verb reading directly after a determiner is a noun ("a drink")
        if pos == "VERB" and prev_pos == "DET":
            pos = "NOUN"
            lemma = _depluralize(lower) or lower
        return pos, lemma

    def _open_class(self, surface: str, lower: str, index: int):
        if lower in CONTENT_LEXICON:
            pos = CONTENT_LEXICON[lower]
            if pos == "VERB":
                return pos, IRREGULAR_VERB_LEMMAS.get(lower, lower)
            return pos, lower
        singular = _depluralize(lower)
        if singular is not None and CONTENT_LEXICON.get(singular) in ("NOUN", "ADJ", "PROPN"):
            return "NOUN", singular
        base = _verb_base(lower)
        if base is not None:
            return "VERB", base
        if surface[0].isupper() and index > 0:
            return "PROPN", singular or lower
        # suffix heuristics, then default to NOUN
        if lower.endswith("ly"):
            return "ADV", lower
        if lower.endswith(("ous", "ful", "ive", "ic", "ish", "able", "ible")):
            return "ADJ", lower
        if lower.endswith("ing") and len(lower) > 4:
            return "VERB", lower[:-3]
        if lower.endswith("ed") and len(lower) > 3:
            return "VERB", lower[:-2]
        return "NOUN", singular or lower


# --- embeddings ---------------------------------------------------------


class ReferenceEmbedder(Embedder):
    """Hashed character n-gram embedding.

    For every 3- and 4-gram of the padded, lowercased text: an 8-byte blake2b
    digest picks bucket = h % dim and sign = +1/-1 from bit 6. Empty texts map
    to the fixed basis vector e0. Rows come out unit-norm.
    """

    dim = 64

    def embed(self, texts: list[str]) -> np.ndarray:
        out = np.zeros((len(texts), self.dim), dtype=np.float64)
        for row, text in enumerate(texts):
            padded = f" {text.lower()} "
            for n in (3, 4):
                for i in range(max(0, len(padded) - n + 1)):
                    gram = padded[i : i + n]
                    h = int.from_bytes(
                        hashlib.blake2b(gram.encode("utf-8"), digest_size=8).digest(), "big"
                    )
                    sign = 1.0 if (h >> 6) & 1 else -1.0
                    out[row, h % self.dim] += sign
            norm = np.linalg.norm(out[row])
            if norm == 0.0:
                out[row, 0] = 1.0
            else:
                out[row] /= norm
        return out


# --- NLI ----------------------------------------------------------------


class ReferenceNli(NliScorer):
    """Cue-lexicon entailment scorer.

    Template hypotheses ("This text is about {label}"): p = min(1, base +
    0.25 * hits) where hits counts premise tokens found in the label's cue
    list and base = 0.05; unknown labels score base only. Non-template
    hypotheses are scored by token-set overlap so that identical premise and
    hypothesis approach 1.0.
    """

    base = 0.05
    per_hit = 0.25

    def __init__(self, hypothesis_template: str = "This text is about {label}"):
        prefix, _, suffix = hypothesis_template.partition("{label}")
        self._prefix = prefix
        self._suffix = suffix

    def entail(self, premise: str, hypotheses: list[str]) -> list[float]:
        tokens = _WORD_RE.findall(premise.lower())
        return [self._score(tokens, premise, h) for h in hypotheses]

    def _score(self, premise_tokens: list[str], premise: str, hypothesis: str) -> float:
        label = self._extract_label(hypothesis)
        if label is not None:
            cues = cue_lexicon().get(label)
            if cues is None:
                return self.base
            hits = sum(1 for t in premise_tokens if t in cues)
            return min(1.0, self.base + self.per_hit * hits)
        hyp_tokens = set(_WORD_RE.findall(hypothesis.lower()))
        if not hyp_tokens:
            return self.base
        overlap = len(hyp_tokens & set(premise_tokens)) / len(hyp_tokens)
        return min(1.0, self.base + 0.9 * overlap)

    def _extract_label(self, hypothesis: str) -> str | None:
        h = hypothesis.strip().rstrip(".")
        if h.startswith(self._prefix) and h.endswith(self._suffix) and len(h) > len(self._prefix) + len(self._suffix):
            end = len(h) - len(self._suffix) if self._suffix else len(h)
            label = h[len(self._prefix) : end].strip().lower()
            return label or None
        return None


# --- summarization ------------------------------------------------------


class ReferenceSummarizer(Summarizer):
    """Generates nothing; the cluster stage then selects the medoid member."""

    def summarize(self, sentences: list[str]) -> str:
        return ""
