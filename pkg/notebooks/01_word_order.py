"""
Word order and cosine similarity
================================

Cosine similarity compares bags of words, so two sentences built from the
same words in a different order look identical to it. TSS looks at where
each shared word sits, and TSCS blends the two.
"""

from tscs import positional_map, preprocess, tscs, tss

a = preprocess("John loves Mary")
b = preprocess("Mary loves John")
print(a.terms, b.terms)

# Positions are counted after stop-words are dropped, starting at 0.
print(positional_map(a))
print(positional_map(b))

# john: |0 - 2| / 2 = 1, love: 0, mari: 1 -> spatial sum 2 over 3 matches.
t = tss(a, b)
print(f"TSS = 1 - {t.spatial_sum} / {t.matches} = {t.score:.4f}")

# %%
# Blending with cosine. alpha = 1 is plain cosine, alpha = 0 is plain TSS.
for alpha in (1.0, 0.5, 0.0):
    r = tscs(a, b, alpha)
    print(f"alpha={alpha:.1f}  cosine={r.cosine:.4f}  tss={r.tss:.4f}  tscs={r.tscs:.4f}")

# %%
# A sentence compared with itself scores 1 under every measure.
print(tscs(a, a).tscs)
