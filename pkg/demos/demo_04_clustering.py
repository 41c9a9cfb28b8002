"""Stage 4 walkthrough: Ward clustering of assertion embeddings + summaries.

Assertions of one (subject, facet) pair are embedded, unit-normalized and
agglomerated with Ward linkage until no pair of clusters sits within the
distance threshold (1.5). Each sufficiently large cluster gets one summary
sentence; without a generative provider that is the medoid member.
"""

import numpy as np

from candle.cluster import (
    AssertionCluster,
    embed_assertions,
    hac_cluster,
    summarize_cluster,
)
from candle.providers import reference_providers

providers = reference_providers()

texts = {
    "d:0": "Fried rice is a popular Chinese dish.",
    "d:1": "Fried rice is a famous dish from China.",
    "d:2": "One of the most popular Chinese food is fried rice.",
    "d:3": "Green tea accompanies most meals in China.",
    "d:4": "Green tea is served with most Chinese meals.",
    "d:5": "Green tea arrives with nearly every Chinese meal.",
}

vectors = embed_assertions(texts, providers.embedder)
ids = sorted(texts)
labels = hac_cluster(np.stack([vectors[i] for i in ids]), distance_threshold=1.5)

print("assignments:")
for sent_id, label in zip(ids, labels):
    print(f"  cluster {label} <- {texts[sent_id]}")
print()

for label in sorted(set(labels)):
    members = [sent_id for sent_id, l in zip(ids, labels) if l == label]
    cluster = AssertionCluster(f"china:food:{label:05d}", "china", "food", members)
    summarize_cluster(cluster, texts, vectors, providers.summarizer)
    print(f"cluster {label}: {len(members)} members, summary ({cluster.summary_source}):")
    print(f"  {cluster.summary}")

print()
print("threshold sweep on the same six assertions:")
for threshold in (0.5, 1.0, 1.5, 2.5):
    labels = hac_cluster(np.stack([vectors[i] for i in ids]), distance_threshold=threshold)
    print(f"  threshold {threshold:>4}: {max(labels) + 1} cluster(s) {labels}")
