"""Stages 5-6 walkthrough: concept mining and interestingness scoring.

Concepts are 1..3-grams shared by more than 60% of a cluster's members
(minus subject aliases and pure stop-word grams), singularized, longest
phrase kept. Ranking averages four [0,1] features: frequency,
distinctiveness (masked-summary IDF), specificity (noun fraction) and
domain relevance (mean classifier probability).
"""

from pathlib import Path

from candle.catalog import load_catalog
from candle.cluster import AssertionCluster
from candle.concepts import extract_concepts
from candle.ingest import Document, annotate
from candle.providers import reference_providers
from candle.providers.reference import stopwords
from candle.rank import (
    combined_score,
    distinctiveness_scores,
    frequency_scores,
    mask_subjects,
    specificity,
)

GOLDEN = Path(__file__).resolve().parent.parent / "data" / "golden"
catalog = load_catalog(GOLDEN / "catalog.json")
providers = reference_providers()


def tokens_of(text):
    (s,) = annotate(Document("demo", "https://example.com", text=text), providers.annotator)
    return list(s.tokens)


member_texts = [
    "Germans brew excellent beer for the October beer festivals.",
    "Germans brew fine beer during beer festivals in October.",
    "Germans brew strong beer for beer festivals each October.",
]
concepts = extract_concepts([tokens_of(t) for t in member_texts], ["Germany", "Germans", "German"], stopwords())
print("concepts of the beer-festival cluster:")
for c in concepts:
    print(f"  {c.phrase!r:<28} n={c.n} support={c.support:.2f}")
print()

print("subject masking before distinctiveness comparison:")
for text in ("Germans enjoy drinking local wine with dinner.",
             "Frenchmen enjoy drinking local wine with dinner."):
    print(f"  {text!r} -> {mask_subjects(text, catalog)!r}")
print()

clusters = [
    AssertionCluster("germany:drinks:00000", "germany", "drinks",
                     ["a:0", "a:1", "a:2", "a:3"],
                     "Germans brew strong beer for beer festivals each October.", "MEDOID"),
    AssertionCluster("germany:drinks:00001", "germany", "drinks",
                     ["b:0", "b:1", "b:2"],
                     "Germans enjoy drinking local wine with dinner.", "MEDOID"),
    AssertionCluster("france:drinks:00000", "france", "drinks",
                     ["c:0", "c:1", "c:2"],
                     "Frenchmen enjoy drinking local wine with dinner.", "MEDOID"),
]

distinctiveness = distinctiveness_scores(clusters, catalog, providers.embedder)
print("distinctiveness over the (drinks, geography.country) group:")
print("  (the wine twins collapse after masking and split the IDF mass)")
for c in clusters:
    print(f"  {c.cluster_id:<24} {distinctiveness[c.cluster_id]:.3f}")
print()

germany_pair = [c for c in clusters if c.subject == "germany"]
frequency = frequency_scores(germany_pair)
for c in germany_pair:
    spec = specificity(tokens_of(c.summary))
    relevance = 0.65  # stands in for the stored classifier probabilities
    combined = combined_score(frequency[c.cluster_id], distinctiveness[c.cluster_id], spec, relevance)
    print(f"{c.cluster_id}: freq={frequency[c.cluster_id]:.2f} dist={distinctiveness[c.cluster_id]:.2f} "
          f"spec={spec:.2f} rel={relevance:.2f} -> combined={combined:.3f}")
