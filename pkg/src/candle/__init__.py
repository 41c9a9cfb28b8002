"""Corpus-to-knowledge-base engine for cultural commonsense assertions.

Six stages turn a web-text corpus into a ranked, clustered KB of
(subject, facet) assertions: subject detection, generic-sentence filtering,
zero-shot facet gating, embedding clustering with summarization, concept
extraction, and interestingness ranking with post-filters. Model access goes
through pluggable providers; deterministic reference providers make the
whole pipeline runnable offline.
"""

__version__ = "0.1.0"
