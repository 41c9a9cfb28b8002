"""Stage 1: find sentences mentioning catalog subjects.

Two complementary devices share one gazetteer gate: NER spans whose surface
equals a subject alias (and whose tag the subject's domain accepts), and
exact-phrase alias matching over token boundaries. NER spans matching no
alias are dropped, not fuzzy-linked. Stateless per sentence; embarrassingly
parallel given the immutable catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .catalog import SubjectCatalog
from .ingest import AnnotatedSentence
from .textutil import normalize_phrase

NER_TAG = "NER_TAG"
ALIAS_MATCH = "ALIAS_MATCH"


@dataclass(frozen=True)
class SubjectMatch:
    sentence: str  # sent_id
    subject: str  # subject id
    method: str  # NER_TAG | ALIAS_MATCH
    start: int
    end: int
    matched_surface: str


class AliasIndex:
    """Token-level alias lookup: first token -> (alias token tuple, subjects)."""

    def __init__(self, catalog: SubjectCatalog):
        self.by_first: dict[str, list[tuple[tuple[str, ...], list[str]]]] = {}
        self.by_phrase: dict[str, list[str]] = {}
        self.max_len = 1
        collected: dict[tuple[str, ...], list[str]] = {}
        for subject in catalog.subjects.values():
            for alias in subject.aliases:
                words = tuple(normalize_phrase(alias).split())
                if not words:
                    continue
                collected.setdefault(words, [])
                if subject.id not in collected[words]:
                    collected[words].append(subject.id)
        for words, subject_ids in collected.items():
            self.by_first.setdefault(words[0], []).append((words, subject_ids))
            self.by_phrase[" ".join(words)] = subject_ids
            self.max_len = max(self.max_len, len(words))
        # longest aliases first so greedy scans prefer "east asian" over "asia"
        for entries in self.by_first.values():
            entries.sort(key=lambda e: (-len(e[0]), e[0]))

    def subjects_for_phrase(self, phrase: str) -> list[str]:
        return self.by_phrase.get(normalize_phrase(phrase), [])


def _ner_spans(sentence: AnnotatedSentence) -> list[tuple[int, int, str]]:
    """Maximal runs of identically-tagged tokens as (tok_start, tok_end, tag)."""
    spans = []
    i = 0
    tokens = sentence.tokens
    while i < len(tokens):
        tag = tokens[i].ner
        if tag is None:
            i += 1
            continue
        j = i + 1
        while j < len(tokens) and tokens[j].ner == tag:
            j += 1
        spans.append((i, j, tag))
        i = j
    return spans


def detect_subjects(
    sentence: AnnotatedSentence, catalog: SubjectCatalog, index: AliasIndex | None = None
) -> list[SubjectMatch]:
    """All subject mentions in one sentence, sorted by span start.

    Overlapping candidate spans keep the longest (leftmost on ties); an
    identical span may still yield one match per distinct subject. When both
    devices find the same (subject, span), NER_TAG wins.
    """
    if index is None:
        index = AliasIndex(catalog)
    tokens = sentence.tokens
    # candidates keyed by (tok_start, tok_end): subject id -> method
    candidates: dict[tuple[int, int], dict[str, str]] = {}

    for tok_start, tok_end, tag in _ner_spans(sentence):
        surface = sentence.text[tokens[tok_start].start : tokens[tok_end - 1].end]
        for subject_id in index.subjects_for_phrase(surface):
            if tag in catalog.domain_of(subject_id).ner_tags:
                candidates.setdefault((tok_start, tok_end), {})[subject_id] = NER_TAG

    for i in range(len(tokens)):
        first = normalize_phrase(tokens[i].surface)
        for words, subject_ids in index.by_first.get(first, []):
            j = i + len(words)
            if j > len(tokens):
                continue
            window = normalize_phrase(" ".join(t.surface for t in tokens[i:j]))
            if window != " ".join(words):
                continue
            span = candidates.setdefault((i, j), {})
            for subject_id in subject_ids:
                span.setdefault(subject_id, ALIAS_MATCH)

    # longest span wins among overlaps; ties leftmost; identical spans coexist
    chosen: list[tuple[int, int]] = []
    for span in sorted(candidates, key=lambda s: (-(s[1] - s[0]), s[0])):
        overlapping = next((c for c in chosen if c[0] < span[1] and span[0] < c[1]), None)
        if overlapping is None or overlapping == span:
            chosen.append(span)

    matches = []
    for tok_start, tok_end in chosen:
        char_start = tokens[tok_start].start
        char_end = tokens[tok_end - 1].end
        surface = sentence.text[char_start:char_end]
        for subject_id, method in sorted(candidates[(tok_start, tok_end)].items()):
            matches.append(
                SubjectMatch(sentence.sent_id, subject_id, method, char_start, char_end, surface)
            )
    matches.sort(key=lambda m: (m.start, m.end, m.subject))
    return matches


def run_detect_stage(
    sentences: Iterable[AnnotatedSentence], catalog: SubjectCatalog
) -> Iterator[tuple[AnnotatedSentence, list[SubjectMatch]]]:
    """Emit only sentences with at least one match."""
    index = AliasIndex(catalog)
    for sentence in sentences:
        matches = detect_subjects(sentence, catalog, index)
        if matches:
            yield sentence, matches
