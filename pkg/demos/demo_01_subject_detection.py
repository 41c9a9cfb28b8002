"""Stage 1 walkthrough: finding subject mentions with NER + alias matching.

The catalog supplies, per subject, a list of aliases (alternate names,
demonyms, auto-added plurals). A sentence mention counts when an entity span
matches an alias under an accepted tag, or when the alias appears verbatim
over token boundaries.
"""

from pathlib import Path

from candle.catalog import load_catalog
from candle.detect import detect_subjects
from candle.ingest import Document, annotate
from candle.providers import reference_providers

GOLDEN = Path(__file__).resolve().parent.parent / "data" / "golden"

catalog = load_catalog(GOLDEN / "catalog.json")
providers = reference_providers()

print("Catalog:", ", ".join(sorted(catalog.subjects)))
print("Aliases of 'firefighter':", catalog.subjects["firefighter"].aliases)
print()

examples = [
    "Tofu is a major ingredient in many East Asian cuisines.",
    "Lawyers wear suits to look professional.",
    "Germans like their currywurst.",
    "Firemen train hard and practice rescue drills daily.",
    "Chadwick cooked dinner yesterday.",  # no bare-substring matches
    "The sky is blue.",
]

for text in examples:
    (sentence,) = annotate(Document("demo", "https://example.com", text=text), providers.annotator)
    matches = detect_subjects(sentence, catalog)
    if not matches:
        print(f"  no subject   | {text}")
    for m in matches:
        print(f"  {m.subject:<12} | {text}")
        print(f"               | matched {m.matched_surface!r} at [{m.start},{m.end}) via {m.method}")
