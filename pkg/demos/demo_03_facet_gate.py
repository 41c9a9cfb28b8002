"""Stage 3 walkthrough: zero-shot facet gating with entailment probabilities.

Each facet becomes the hypothesis "This text is about <facet>". A sentence
passes when the facet probability reaches the positive threshold (0.5) and
no counter-label (politics, business) exceeds the negative threshold (0.3).
A sentence may pass several facets; religion/occupation sentences passing
none fall into the catch-all facet "other".
"""

from pathlib import Path

from candle.catalog import load_catalog
from candle.facetclf import ClassifierConfig, classify_all_facets
from candle.providers import reference_providers

GOLDEN = Path(__file__).resolve().parent.parent / "data" / "golden"
catalog = load_catalog(GOLDEN / "catalog.json")
nli = reference_providers().nli
config = ClassifierConfig()

print(f"thresholds: positive >= {config.rho_plus}, counters <= {config.rho_minus}")
print(f"counter labels: {', '.join(config.counter_labels)}")
print()

cases = [
    ("German October festivals are a celebration of beer and fun", "geography.country"),
    ("Germans like their currywurst with fried sausages and bread.", "geography.country"),
    ("Germans vote for beer policies in parliament elections.", "geography.country"),
    ("Lawyers keep long hours in quiet offices.", "occupation"),
]

for text, domain_id in cases:
    print(text)
    decisions = classify_all_facets(text, "demo:0", catalog.domains[domain_id], config, nli)
    for d in decisions:
        flag = "ACCEPT" if d.accepted else "      "
        counters = ", ".join(f"{k}={v:.2f}" for k, v in d.counter_probs.items())
        print(f"  {flag} {d.facet:<12} p={d.p_facet:.2f}  counters: {counters}")
    if not any(d.accepted for d in decisions):
        print("  -> dropped (geography has no catch-all facet)" if domain_id.startswith("geography")
              else "  -> nothing accepted")
    print()
