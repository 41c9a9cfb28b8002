"""Stage 2 walkthrough: keeping generic assertions, dropping episodic noise.

Twelve lexico-syntactic rules run in id order; the first failure is
reported. Domains and facets can switch rules off in the catalog: geography
drops the no-determiner-first rule, the traditions facet drops the
past-tense-root rule, religion drops the PERSON-entity rule.
"""

from pathlib import Path

from candle.catalog import load_catalog
from candle.genfilter import RULES, active_rules_for, is_generic
from candle.ingest import Document, annotate
from candle.providers import reference_providers

GOLDEN = Path(__file__).resolve().parent.parent / "data" / "golden"
catalog = load_catalog(GOLDEN / "catalog.json")
providers = reference_providers()


def sentence(text):
    (s,) = annotate(Document("demo", "https://example.com", text=text), providers.annotator)
    return s


print("Rule registry:")
for rule in RULES.values():
    print(f"  {rule.id:<20} {rule.kind:<10} {rule.description}")
print()

geography_food = active_rules_for(catalog.domains["geography.country"], "food")
geography_trad = active_rules_for(catalog.domains["geography.country"], "traditions")
religion_rituals = active_rules_for(catalog.domains["religion"], "rituals")

cases = [
    ("Germans like their currywurst.", geography_food, "a generic assertion"),
    ("I visited Germany to eat currywurst.", geography_food, "a personal experience"),
    ("This restaurant serves German currywurst.", geography_food, "an advertisement-style deictic"),
    ("The Chinese use chopsticks to eat their food.", geography_food, "determiner-first, saved by the geography toggle"),
    ("Germans wore traditional costumes at old harvest festivals.", geography_food, "past root, food facet"),
    ("Germans wore traditional costumes at old harvest festivals.", geography_trad, "past root, traditions facet"),
    ("Buddhists honor Buddha with incense and quiet prayers.", religion_rituals, "PERSON entity, religion toggle"),
]

for text, rules, note in cases:
    decision = is_generic(sentence(text), rules)
    verdict = "ACCEPT" if decision.accepted else f"reject ({decision.failed_rule})"
    print(f"  {verdict:<24} {text}")
    print(f"  {'':<24} note: {note}")
