"""
Sweeping alpha for paraphrase detection
=======================================

Each pair in an STS-style file (``sentence<TAB>sentence``) is scored once for
cosine and TSS; the sweep then counts how many pairs reach the 0.5 cutoff
for each alpha. The package ships a 20-pair toy set; the same code runs on
the SemEval-2012 STS training files if you have them locally.
"""

from importlib import resources

from tscs.evaluation import alpha_sweep, load_sts_dataset, score_pairs

data = resources.files("tscs") / "data"
pairs = load_sts_dataset(str(data / "mini_sts.tsv"), str(data / "mini_sts.gold.txt"))

for point in alpha_sweep(pairs):
    bar = "#" * point.detected
    print(f"alpha={point.alpha:.1f}  {point.detected:2d}/{point.total}  {bar}")

# %%
# Pairs whose words are reordered ("The dog bit the man" / "The man bit the
# dog") have cosine 1 but low TSS.
for s in score_pairs(pairs)[:3]:
    print(s.id, f"cosine={s.cosine:.2f} tss={s.tss:.2f} gold={s.gold}")

# %%
# With gold scores available, accuracy against "gold >= 3" labels.
for point in alpha_sweep(pairs, [0.0, 0.5, 1.0], gold_cutoff=3.0):
    print(f"alpha={point.alpha:.1f}  accuracy={point.rate:.2f}")
