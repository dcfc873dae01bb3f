"""
How corpus size moves the scores
================================

With tf-idf weights, cosine similarity between two fixed documents shifts as
unrelated documents are added: document frequencies change, and so do the
weights. TSS does not use weights at all, so TSCS moves about half as much at
alpha = 0.5.

Seed pair 1 is a near-duplicate news item; seed pair 2 is two differently
worded reports of the same storm. Fillers are unrelated short items.
"""

import sys
from importlib import resources
from pathlib import Path

from tscs.evaluation import corpus_sensitivity, variation_range, write_sensitivity_csv

base = Path(str(resources.files("tscs") / "data" / "sensitivity"))
seeds = [(base / "seeds" / f"{n}.txt").read_text(encoding="utf-8") for n in ("set1_a", "set1_b", "set2_a", "set2_b")]
fillers = [p.read_text(encoding="utf-8") for p in sorted((base / "fillers").glob("*.txt"))]

sizes = [4, 5, 10, 15, 20, 30, 40]
rows_tscs, rows_cos = corpus_sensitivity(seeds[:2], seeds[2:], fillers, sizes, alpha=0.5, weighting="tfidf")
write_sensitivity_csv(rows_tscs, rows_cos, sys.stdout)

# %%
print("range of TSCS   (set 1, set 2):", [round(x, 3) for x in variation_range(rows_tscs)])
print("range of cosine (set 1, set 2):", [round(x, 3) for x in variation_range(rows_cos)])

# %%
# Plain term-frequency weights ignore the corpus, so nothing moves.
flat_tscs, flat_cos = corpus_sensitivity(seeds[:2], seeds[2:], fillers, sizes, weighting="tf")
print("tf ranges:", variation_range(flat_tscs), variation_range(flat_cos))
