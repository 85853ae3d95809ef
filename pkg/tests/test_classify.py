import json
from fractions import Fraction

import numpy as np
import pytest

from rumourlens.classify import (
    CLASSES,
    FeatureVector,
    ForestConfig,
    build_matrix,
    compute_medians,
    cross_validate,
    evaluate,
    fit_forest,
    metrics_from_confusion,
    model_from_json,
    model_to_json,
    oversample,
    split_train_test,
    stratified_folds,
)
from rumourlens.errors import FeatureMismatch, SingleClass, TooFewSamples


def vec(i, label, **values):
    return FeatureVector(tweet_id=f"t{i}", values=values, label=label)


def blob_vectors(n_per_class=100, distance=6.0, seed=0, d=2):
    """Two unit-variance blobs `distance` apart along every axis."""
    rng = np.random.default_rng(seed)
    vectors = []
    for cls, label in enumerate(CLASSES):
        center = cls * distance
        pts = rng.normal(center, 1.0, size=(n_per_class, d))
        for i, row in enumerate(pts):
            vectors.append(
                FeatureVector(
                    tweet_id=f"{label}-{i}",
                    values={f"f{j}": float(v) for j, v in enumerate(row)},
                    label=label,
                )
            )
    return vectors, [f"f{j}" for j in range(d)]


class TestSplit:
    def test_stratified_80_20(self):
        vectors = [vec(i, "rumour", x=1.0) for i in range(50)]
        vectors += [vec(50 + i, "non-rumour", x=0.0) for i in range(50)]
        train, test = split_train_test(vectors, ratio=0.8, seed=1)
        assert len(train) == 80 and len(test) == 20
        assert sum(1 for v in test if v.label == "rumour") == 10
        assert sum(1 for v in train if v.label == "rumour") == 40

    def test_deterministic(self):
        vectors, _ = blob_vectors(20)
        a = split_train_test(vectors, seed=7)
        b = split_train_test(vectors, seed=7)
        assert [v.tweet_id for v in a[0]] == [v.tweet_id for v in b[0]]
        assert [v.tweet_id for v in a[1]] == [v.tweet_id for v in b[1]]

    def test_heavy_imbalance_keeps_both_classes_in_test(self):
        # 4 non-rumour vs 229 rumour sources
        vectors = [vec(i, "rumour", x=float(i)) for i in range(229)]
        vectors += [vec(300 + i, "non-rumour", x=float(i)) for i in range(4)]
        train, test = split_train_test(vectors, ratio=0.8, seed=3)
        test_labels = {v.label for v in test}
        assert test_labels == {"rumour", "non-rumour"}
        assert len(train) + len(test) == 233

    def test_disjoint(self):
        vectors, _ = blob_vectors(25)
        train, test = split_train_test(vectors, seed=2)
        assert not {v.tweet_id for v in train} & {v.tweet_id for v in test}

    def test_too_few(self):
        with pytest.raises(TooFewSamples):
            split_train_test([vec(0, "rumour", x=1.0), vec(1, "non-rumour", x=0.0)])


class TestOversample:
    def test_40_10_becomes_40_40(self):
        vectors = [vec(i, "rumour", x=float(i)) for i in range(40)]
        vectors += [vec(100 + i, "non-rumour", x=float(i)) for i in range(10)]
        balanced = oversample(vectors, seed=5)
        by_label = {"rumour": 0, "non-rumour": 0}
        for v in balanced:
            by_label[v.label] += 1
        assert by_label == {"rumour": 40, "non-rumour": 40}
        # every duplicate is an exact copy of an existing minority row
        originals = {v.tweet_id: v for v in vectors}
        for v in balanced:
            assert originals[v.tweet_id].values == v.values

    def test_balanced_unchanged(self):
        vectors = [vec(i, "rumour", x=1.0) for i in range(5)]
        vectors += [vec(10 + i, "non-rumour", x=0.0) for i in range(5)]
        assert oversample(vectors, seed=1) == vectors

    def test_single_class_rejected(self):
        with pytest.raises(SingleClass):
            oversample([vec(0, "rumour", x=1.0)])


class TestForest:
    def test_perfectly_separable_training_accuracy(self):
        vectors = [vec(i, "non-rumour", x=-1.0 - i) for i in range(10)]
        vectors += [vec(50 + i, "rumour", x=1.0 + i) for i in range(10)]
        model = fit_forest(vectors, ["x"], ForestConfig(n_trees=20), seed=0)
        metrics = evaluate(model, vectors)
        assert metrics.accuracy == 1.0

    def test_blob_holdout_accuracy(self):
        # pinned experiment: this seed yields perfect held-out accuracy
        vectors, names = blob_vectors(100, distance=6.0, seed=12345)
        train, test = split_train_test(vectors, ratio=0.8, seed=12345)
        model = fit_forest(oversample(train, seed=12345), names, seed=12345)
        metrics = evaluate(model, test)
        assert metrics.accuracy >= 0.95
        assert metrics.accuracy == pytest.approx(1.0)

    def test_determinism_same_seed_identical_json(self):
        vectors, names = blob_vectors(30, seed=9)
        a = model_to_json(fit_forest(vectors, names, seed=4))
        b = model_to_json(fit_forest(vectors, names, seed=4))
        assert a == b

    def test_thread_count_does_not_change_model(self):
        vectors, names = blob_vectors(20, seed=10)
        a = model_to_json(fit_forest(vectors, names, seed=4, threads=1))
        b = model_to_json(fit_forest(vectors, names, seed=4, threads=4))
        assert a == b

    def test_different_seed_different_model(self):
        vectors, names = blob_vectors(30, seed=9)
        assert model_to_json(fit_forest(vectors, names, seed=4)) != model_to_json(
            fit_forest(vectors, names, seed=5)
        )

    def test_single_tree_forest_matches_tree(self):
        vectors, names = blob_vectors(30, seed=2)
        model = fit_forest(vectors, names, ForestConfig(n_trees=1), seed=1)
        X, _ = build_matrix(vectors, model.feature_names, model.medians)
        assert np.array_equal(model.predict_proba(X), model.trees[0].predict_prob(X))

    def test_degenerate_identical_rows_mixed_labels(self):
        vectors = [vec(i, CLASSES[i % 2], x=1.0) for i in range(8)]
        with pytest.warns(UserWarning, match="unsplittable"):
            model = fit_forest(vectors, ["x"], ForestConfig(n_trees=3), seed=0)
        X, _ = build_matrix(vectors, model.feature_names, model.medians)
        assert set(model.predict(X)) <= {0, 1}

    def test_feature_mismatch(self):
        vectors, names = blob_vectors(10, seed=3)
        model = fit_forest(vectors, names, ForestConfig(n_trees=2), seed=0)
        with pytest.raises(FeatureMismatch):
            model.predict_proba(np.zeros((2, 5)))

    def test_serialization_round_trip(self):
        vectors, names = blob_vectors(20, seed=6)
        model = fit_forest(vectors, names, ForestConfig(n_trees=5), seed=8)
        reloaded = model_from_json(model_to_json(model))
        X, _ = build_matrix(vectors, model.feature_names, model.medians)
        assert np.array_equal(model.predict_proba(X), reloaded.predict_proba(X))
        assert model_to_json(reloaded) == model_to_json(model)

    def test_tree_structural_invariants(self):
        # every node reachable exactly once, finite thresholds at splits,
        # positive class counts at leaves
        vectors, names = blob_vectors(40, seed=14, d=3)
        model = fit_forest(vectors, names, ForestConfig(n_trees=10), seed=2)
        for tree in model.trees:
            n = len(tree.feature)
            seen = set()
            stack = [0]
            while stack:
                node = stack.pop()
                assert node not in seen
                seen.add(node)
                if tree.feature[node] == -1:
                    assert tree.counts[node].sum() > 0
                else:
                    assert np.isfinite(tree.threshold[node])
                    stack.extend((int(tree.left[node]), int(tree.right[node])))
            assert seen == set(range(n))


class TestImputation:
    def test_median_from_defined_values_only(self):
        vectors = [
            vec(0, "rumour", x=1.0, y=None),
            vec(1, "rumour", x=3.0, y=10.0),
            vec(2, "non-rumour", x=None, y=20.0),
        ]
        medians = compute_medians(vectors, ["x", "y"])
        assert medians == {"x": 2.0, "y": 15.0}

    def test_all_absent_defaults_to_zero(self):
        medians = compute_medians([vec(0, "rumour", x=None)], ["x"])
        assert medians["x"] == 0.0

    def test_imputed_matrix(self):
        vectors = [vec(0, "rumour", x=None)]
        X, y = build_matrix(vectors, ["x"], {"x": 7.5})
        assert X[0, 0] == 7.5
        assert y[0] == CLASSES.index("rumour")


class TestCrossValidate:
    def test_fold_shapes(self):
        vectors, _ = blob_vectors(50, seed=1)
        folds = stratified_folds(vectors, k=10, seed=0)
        assert len(folds) == 10
        assert sorted(i for f in folds for i in f) == list(range(100))
        assert all(len(f) == 10 for f in folds)

    def test_fold_determinism(self):
        vectors, _ = blob_vectors(30, seed=1)
        assert stratified_folds(vectors, 10, seed=3) == stratified_folds(vectors, 10, seed=3)

    def test_k_reduced_with_warning(self):
        vectors = [vec(i, "rumour", x=float(i)) for i in range(3)]
        vectors += [vec(10 + i, "non-rumour", x=float(i)) for i in range(20)]
        with pytest.warns(UserWarning, match="reducing folds"):
            folds = stratified_folds(vectors, k=10, seed=0)
        assert len(folds) == 3

    def test_no_leakage_even_as_duplicate(self):
        # oversampling happens inside the fold's training side only, so
        # no test-fold row may appear in it, not even as a copy
        vectors, names = blob_vectors(15, seed=4)
        folds = stratified_folds(vectors, k=5, seed=2)
        for fold_idx, test_idx in enumerate(folds):
            test_ids = {vectors[i].tweet_id for i in test_idx}
            fold_train = [v for i, v in enumerate(vectors) if i not in set(test_idx)]
            balanced = oversample(fold_train, seed=fold_idx)
            assert not test_ids & {v.tweet_id for v in balanced}

    def test_cv_runs_and_reports(self):
        vectors, names = blob_vectors(20, seed=5)
        results = cross_validate(vectors, names, k=4, config=ForestConfig(n_trees=10), seed=1)
        assert len(results) == 4
        assert all(0.0 <= m.accuracy <= 1.0 for m in results)


class TestMetrics:
    def test_perfect(self):
        m = metrics_from_confusion([[10, 0], [0, 10]])
        assert (m.accuracy, m.precision, m.recall, m.f1) == (1.0, 1.0, 1.0, 1.0)

    def test_hand_computed_confusion(self):
        # [[8,2],[1,9]]: P0=8/9, R0=8/10, P1=9/11, R1=9/10, equal support
        m = metrics_from_confusion([[8, 2], [1, 9]], averaging="weighted")
        assert m.accuracy == pytest.approx(0.85)
        expect_p = (Fraction(8, 9) + Fraction(9, 11)) / 2
        expect_r = Fraction(85, 100)
        expect_f = (Fraction(16, 19) + Fraction(6, 7)) / 2
        assert m.precision == pytest.approx(float(expect_p), abs=1e-12)  # 0.8535...
        assert m.recall == pytest.approx(float(expect_r), abs=1e-12)  # 0.85
        assert m.f1 == pytest.approx(float(expect_f), abs=1e-12)  # 0.8496...

    def test_binary_and_macro_averaging(self):
        cm = [[8, 2], [1, 9]]
        binary = metrics_from_confusion(cm, averaging="binary")
        assert binary.precision == pytest.approx(9 / 11)
        assert binary.recall == pytest.approx(9 / 10)
        macro = metrics_from_confusion(cm, averaging="macro")
        assert macro.recall == pytest.approx((0.8 + 0.9) / 2)

    def test_zero_division_precision(self):
        m = metrics_from_confusion([[5, 0], [5, 0]])
        assert m.accuracy == 0.5
        assert 0.0 <= m.precision <= 1.0

    def test_bounds_and_trace(self):
        m = metrics_from_confusion([[3, 4], [2, 6]])
        assert m.accuracy == pytest.approx(9 / 15)
        for value in (m.accuracy, m.precision, m.recall, m.f1):
            assert 0.0 <= value <= 1.0
