import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_spatial_difference, brute_tss, dense_cosine, smoothed_idf
from tscs.corpus import CorpusStats
from tscs.similarity import (
    TF,
    WeightingScheme,
    cosine,
    positional_map,
    spatial_difference,
    term_vector,
    tscs,
    tss,
)
from tscs.text import PipelineConfig, ProcessedDocument, preprocess

NO_STEM = PipelineConfig(stemming="none")
JLM = preprocess("John loves Mary", NO_STEM)
MLJ = preprocess("Mary loves John", NO_STEM)

docs = st.lists(st.sampled_from("abcdefghij"), max_size=30)
nonempty_docs = st.lists(st.sampled_from("abcdefghij"), min_size=1, max_size=30)


def tf_scheme_for(*term_lists):
    return WeightingScheme("tfidf", CorpusStats.from_documents(ProcessedDocument("", t) for t in term_lists))


class TestPositionalMap:
    def test_examples(self):
        assert positional_map(["john", "loves", "mary"]) == {"john": (0,), "loves": (1,), "mary": (2,)}
        assert positional_map([]) == {}
        assert positional_map(["a", "b", "a"]) == {"a": (0, 2), "b": (1,)}

    @given(docs)
    def test_positions_partition_the_document(self, terms):
        pm = positional_map(terms)
        flat = sorted(p for ps in pm.values() for p in ps)
        assert flat == list(range(len(terms)))
        for ps in pm.values():
            assert all(a < b for a, b in zip(ps, ps[1:]))


class TestSpatialDifference:
    @pytest.mark.parametrize(
        "pi, pj, expected",
        [
            ((0,), (2,), (1.0, 1)),
            ((1,), (1,), (0.0, 1)),
            ((0,), (0,), (0.0, 1)),
            ((1, 3), (2,), (1 / 3, 1)),
            ((), (4, 5), (0.0, 0)),
        ],
    )
    def test_examples(self, pi, pj, expected):
        s, m = spatial_difference(pi, pj)
        assert m == expected[1]
        assert s == pytest.approx(expected[0], abs=1e-12)

    def test_example_matches_brute_force(self):
        frac, k = brute_spatial_difference([1, 3], [2])
        assert (frac, k) == (Fraction(1, 3), 1)
        assert spatial_difference([1, 3], [2]) == (float(frac), k)

    @given(st.lists(st.integers(0, 40), max_size=8, unique=True), st.lists(st.integers(0, 40), max_size=8, unique=True))
    def test_each_summand_in_unit_interval(self, a, b):
        a, b = sorted(a), sorted(b)
        for x, y in zip(a, b):
            s, m = spatial_difference([x], [y])
            assert m == 1 and 0.0 <= s <= 1.0
        s, m = spatial_difference(a, b)
        assert 0.0 <= s <= m


class TestTSS:
    def test_worked_example(self):
        r = tss(JLM, MLJ)
        assert r.score == pytest.approx(1 / 3, abs=1e-9)
        assert r.matches == 3
        assert r.spatial_sum == 2.0

    def test_swap_two_terms(self):
        r = tss(list("abc"), list("acb"))
        frac, lam, _ = brute_tss(list("abc"), list("acb"))
        assert frac == Fraction(7, 9) and lam == 3
        assert r.score == pytest.approx(7 / 9, abs=1e-12)
        assert r.matches == 3

    def test_disjoint(self):
        assert tss(["a", "b"], ["c"]) == (0.0, 0, 0.0)

    def test_accepts_positional_maps(self):
        assert tss(positional_map(JLM), positional_map(MLJ)) == tss(JLM, MLJ)

    @given(nonempty_docs)
    def test_self_similarity(self, d):
        assert tss(d, d).score == 1.0

    @given(docs, docs)
    def test_bounds_and_symmetry(self, a, b):
        r = tss(a, b)
        assert 0.0 <= r.score <= 1.0
        assert r == tss(b, a)
        if r.matches == 0:
            assert r.score == 0.0 and r.spatial_sum == 0.0

    @settings(max_examples=300)
    @given(st.lists(st.sampled_from("abcde"), max_size=12), st.lists(st.sampled_from("abcde"), max_size=12))
    def test_matches_rational_oracle(self, a, b):
        score, lam, total = brute_tss(a, b)
        r = tss(a, b)
        assert r.matches == lam
        assert r.score == float(score)
        assert r.spatial_sum == float(total)

    def test_long_documents_stay_fast_and_exact(self):
        rng = random.Random(3)
        a = [rng.choice("abcdefghijklmnop") for _ in range(3000)]
        b = [rng.choice("abcdefghijklmnop") for _ in range(3000)]
        score, lam, _ = brute_tss(a[:400], b[:400])
        assert tss(a[:400], b[:400]).score == float(score)
        r = tss(a, b)
        assert 0.0 <= r.score <= 1.0 and r.matches > 0


class TestTermVectorAndCosine:
    def test_tf(self):
        assert term_vector(["john", "loves", "mary"]) == {"john": 1, "loves": 1, "mary": 1}
        assert term_vector(["a", "b", "a"]) == {"a": 2, "b": 1}

    def test_tfidf_full_df(self):
        stats = CorpusStats(10, {"x": 10})
        assert term_vector(["x"], WeightingScheme("tfidf", stats)) == {"x": 1.0}

    def test_tfidf_df_floor(self):
        stats = CorpusStats(4, {"x": 2})
        v = term_vector(["x", "y"], WeightingScheme("tfidf", stats))
        assert v["x"] == pytest.approx(1 + math.log(2))
        assert v["y"] == pytest.approx(1 + math.log(4))

    def test_tfidf_requires_stats(self):
        with pytest.raises(ValueError):
            WeightingScheme("tfidf")
        with pytest.raises(ValueError):
            WeightingScheme("tfidf", CorpusStats())
        with pytest.raises(ValueError):
            WeightingScheme("bm25")

    def test_permutation_blindness_example(self):
        assert cosine(term_vector(JLM), term_vector(MLJ)) == 1.0

    def test_identical_and_disjoint(self):
        v = {"a": 2.0, "b": 0.5}
        assert cosine(v, v) == 1.0
        assert cosine({"a": 1.0}, {"b": 3.0}) == 0.0
        assert cosine({}, v) == 0.0

    @given(nonempty_docs, st.randoms(use_true_random=False))
    def test_cosine_is_permutation_blind(self, d, rnd):
        p = list(d)
        rnd.shuffle(p)
        assert cosine(term_vector(d), term_vector(p)) == pytest.approx(1.0, abs=1e-12)

    @given(docs, docs)
    def test_matches_dense_oracle(self, a, b):
        assert cosine(term_vector(a), term_vector(b)) == pytest.approx(dense_cosine(a, b), abs=1e-12)
        scheme = tf_scheme_for(a, b, list("abc"))
        idf = smoothed_idf([a, b, list("abc")])
        got = cosine(term_vector(a, scheme), term_vector(b, scheme))
        assert got == pytest.approx(dense_cosine(a, b, idf), abs=1e-12)

    @given(docs, docs)
    def test_symmetric_and_bounded(self, a, b):
        va, vb = term_vector(a), term_vector(b)
        c = cosine(va, vb)
        assert c == cosine(vb, va)
        assert 0.0 <= c <= 1.0


class TestTSCS:
    def test_worked_example(self):
        r = tscs(JLM, MLJ, 0.5)
        assert r.tscs == pytest.approx(2 / 3, abs=1e-9)
        assert r.cosine == 1.0
        assert r.matches == 3

    def test_stemming_does_not_change_worked_example(self):
        r = tscs(preprocess("John loves Mary"), preprocess("Mary loves John"))
        assert r.tscs == pytest.approx(2 / 3, abs=1e-9)

    def test_alpha_validation(self):
        with pytest.raises(ValueError):
            tscs(JLM, MLJ, 1.5)
        with pytest.raises(ValueError):
            tscs(JLM, MLJ, -0.1)

    def test_empty_documents(self):
        r = tscs([], [])
        assert (r.cosine, r.tss, r.tscs, r.matches) == (0.0, 0.0, 0.0, 0)
        assert r.degenerate
        r = tscs([], ["a"])
        assert r.tscs == 0.0 and not r.degenerate

    @given(docs, docs, st.floats(0, 1))
    def test_invariants(self, a, b, alpha):
        r = tscs(a, b, alpha)
        assert 0.0 <= r.tscs <= 1.0
        assert abs(r.tscs - (alpha * r.cosine + (1 - alpha) * r.tss)) <= 1e-12
        assert r.tscs == tscs(b, a, alpha).tscs
        if r.matches == 0:
            assert r.tss == 0.0 and r.spatial_sum == 0.0

    @given(docs, docs)
    def test_degenerate_alphas(self, a, b):
        r1, r0 = tscs(a, b, 1.0), tscs(a, b, 0.0)
        assert r1.tscs == r1.cosine == cosine(term_vector(a), term_vector(b))
        assert r0.tscs == r0.tss == tss(a, b).score

    @given(nonempty_docs, st.floats(0, 1))
    def test_self_similarity(self, d, alpha):
        assert tscs(d, d, alpha).tscs == pytest.approx(1.0, abs=1e-12)
        assert tscs(d, d, alpha, tf_scheme_for(d, list("xyz"))).tscs == pytest.approx(1.0, abs=1e-12)

    @given(docs, docs)
    def test_affine_in_alpha(self, a, b):
        t1, t0 = tscs(a, b, 1.0).tscs, tscs(a, b, 0.0).tscs
        for i in range(11):
            alpha = i / 10
            assert abs(tscs(a, b, alpha).tscs - (alpha * t1 + (1 - alpha) * t0)) <= 1e-12

    def test_default_scheme_is_tf(self):
        assert tscs(JLM, MLJ) == tscs(JLM, MLJ, 0.5, TF)
