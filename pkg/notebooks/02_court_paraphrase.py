"""
A paraphrase that cosine misses
===============================

Two reports of the same courtroom scene share only a few content words, so
their cosine similarity is low. The shared words appear in nearly the same
order, which TSS rewards.

The two texts are scored inside a two-document corpus with tf-idf weights,
so words that appear in only one text carry more weight than shared ones.
"""

from importlib import resources

from tscs import load_directory, pairwise_matrix, score_matrix

court = resources.files("tscs") / "data" / "court"
corpus = load_directory(str(court))
for doc in corpus:
    print(doc.id, doc.terms)

# %%
# Pairwise matrices: alpha = 1 gives cosine, alpha = 0.5 the balanced TSCS.
cos = score_matrix(pairwise_matrix(corpus, alpha=1.0, scheme="tfidf"))
both = score_matrix(pairwise_matrix(corpus, alpha=0.5, scheme="tfidf"))
print("cosine\n", cos.round(2))
print("tscs\n", both.round(2))

# %%
# With the usual 0.5 cutoff only TSCS calls this pair a paraphrase.
threshold = 0.5
print("cosine says paraphrase:", cos[0, 1] >= threshold)
print("tscs says paraphrase:  ", both[0, 1] >= threshold)
