"""End-to-end walkthrough: the bundled 200-sentence corpus through all six
stages, then a few queries against the resulting knowledge base.

Uses the deterministic reference providers, so the output below reproduces
exactly; swap `providers.mode` to "remote" with a sidecar URL to run the
same corpus through real models.
"""

import tempfile
from pathlib import Path

from candle.config import PipelineConfig
from candle.kbstore import KbIndex, query
from candle.pipeline import Pipeline, format_report_table

GOLDEN = Path(__file__).resolve().parent.parent / "data" / "golden"
work = Path(tempfile.mkdtemp(prefix="candle-demo-"))

config = PipelineConfig(
    corpus_path=str(GOLDEN / "corpus.jsonl"),
    catalog_path=str(GOLDEN / "catalog.json"),
    checkpoint_dir=str(work / "checkpoints"),
    output_kb=str(work / "kb.jsonl"),
)

reports = Pipeline(config).run()
print(format_report_table([r.to_dict() for r in reports]))
print()

index = KbIndex.load(work / "kb.jsonl")

print("top assertions for (germany, drinks):")
for record in query(index, subject="germany", facet="drinks"):
    print(f"  {record.feature_scores.combined:.3f}  {record.summary}")
print()

print("concept-centric browsing, concept='beer festival':")
for record in query(index, concept="beer festival"):
    print(f"  [{record.subject}/{record.facet}] {record.summary}")
print()

print("high-interestingness slice (combined >= 0.7):")
for record in query(index, min_score=0.7):
    print(f"  {record.feature_scores.combined:.3f}  [{record.subject}/{record.facet}] {record.summary}")

print()
print(f"checkpoints and KB left in {work}")
