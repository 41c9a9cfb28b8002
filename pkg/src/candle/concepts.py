"""Stage 5: salient concepts of a cluster as frequent shared n-grams.

Candidates are 1..3-grams over lowercased token surfaces. An n-gram is
skipped where it contains punctuation, overlaps a subject-alias occurrence,
or consists entirely of stop words. Noun-headed n-grams are singularized via
the annotation lemma at extraction time, so surface variants ("beer
festival" / "beer festivals") count as one phrase. Support counts member
sentences containing the phrase at least once; kept phrases need support
strictly above the threshold, and a kept phrase that is a contiguous
sub-sequence of a longer kept phrase is dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ingest import Token
from .textutil import normalize_phrase

MAX_N = 3
SUPPORT_THRESHOLD = 0.6


@dataclass(frozen=True)
class Concept:
    phrase: str
    n: int
    support: float


def singularize(words: tuple[str, ...], tokens: list[Token] | tuple[Token, ...]) -> tuple[str, ...]:
    """Singularize the head (last) token of a noun phrase.

    A phrase counts as a noun phrase when its last token is NOUN/PROPN and no
    token is a verb; verb-headed phrases ("save lives") pass through.
    """
    if not tokens or tokens[-1].pos not in ("NOUN", "PROPN"):
        return words
    if any(t.pos in ("VERB", "AUX") for t in tokens):
        return words
    lemma = tokens[-1].lemma.lower()
    if lemma and lemma != words[-1]:
        return words[:-1] + (lemma,)
    return words


def _alias_token_spans(tokens, alias_words: list[tuple[str, ...]]) -> set[int]:
    """Indices of tokens covered by any subject-alias occurrence."""
    covered: set[int] = set()
    surfaces = [normalize_phrase(t.surface) for t in tokens]
    for words in alias_words:
        L = len(words)
        if L == 0:
            continue
        for i in range(len(tokens) - L + 1):
            if tuple(surfaces[i : i + L]) == words:
                covered.update(range(i, i + L))
    return covered


def member_ngrams(tokens, alias_words: list[tuple[str, ...]], stop: frozenset[str]) -> set[tuple[str, ...]]:
    """Distinct eligible n-gram phrases of one member, singularized."""
    covered = _alias_token_spans(tokens, alias_words)
    found: set[tuple[str, ...]] = set()
    for n in range(1, MAX_N + 1):
        for i in range(len(tokens) - n + 1):
            run = tokens[i : i + n]
            if any(t.pos == "PUNCT" for t in run):
                continue
            if any(j in covered for j in range(i, i + n)):
                continue
            words = tuple(t.surface.lower() for t in run)
            if all(w in stop for w in words):
                continue
            found.add(singularize(words, run))
    return found


def extract_concepts(
    cluster_member_tokens: list,
    subject_aliases: list[str],
    stopword_list: frozenset[str],
    threshold: float = SUPPORT_THRESHOLD,
) -> list[Concept]:
    """Concepts of one cluster, sorted by (support desc, phrase asc)."""
    if not cluster_member_tokens:
        return []
    alias_words = [tuple(normalize_phrase(a).split()) for a in subject_aliases]
    total = len(cluster_member_tokens)

    counts: dict[tuple[str, ...], int] = {}
    for tokens in cluster_member_tokens:
        for words in member_ngrams(tokens, alias_words, stopword_list):
            counts[words] = counts.get(words, 0) + 1

    kept = {words: c for words, c in counts.items() if c / total > threshold}

    def contains(longer: tuple[str, ...], shorter: tuple[str, ...]) -> bool:
        return any(
            longer[i : i + len(shorter)] == shorter for i in range(len(longer) - len(shorter) + 1)
        )

    concepts = [
        Concept(" ".join(words), len(words), count / total)
        for words, count in kept.items()
        if not any(len(o) > len(words) and contains(o, words) for o in kept)
    ]
    concepts.sort(key=lambda c: (-c.support, c.phrase))
    return concepts
