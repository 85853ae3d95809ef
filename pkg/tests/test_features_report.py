import pytest

from rumourlens import report
from rumourlens.corpus import EventCorpus, Label, PartitionCounts, Role, Tweet
from rumourlens.emotions import LexiconFallbackProvider
from rumourlens.features import EMOTION_FEATURES, Featurizer, emotion_argmax, feature_names
from rumourlens.readability import SCORE_NAMES
from rumourlens.senticnet import DIMENSIONS


@pytest.fixture()
def featurizer(demo_lexicon, demo_sentic_table):
    return Featurizer(demo_lexicon, demo_sentic_table, emotion_provider=LexiconFallbackProvider())


def toy_corpus():
    src = Tweet("1", "Terrified crowds run from the park fire. So scary!", "e", Role.SOURCE, Label.RUMOUR)
    empty = Tweet("2", "   ", "e", Role.REACTION, Label.RUMOUR, parent_id="1")
    punct = Tweet("3", "?!?!", "e", Role.REACTION, Label.RUMOUR, parent_id="1")
    return EventCorpus(event="e", sources=[src], reactions=[empty, punct])


class TestFeaturizer:
    def test_feature_name_layout(self, demo_lexicon):
        names = feature_names(demo_lexicon)
        assert names[0] == "WC"
        assert "allpunct" in names
        assert set(SCORE_NAMES) <= set(names)
        assert set(DIMENSIONS) <= set(names)
        assert set(EMOTION_FEATURES) <= set(names)
        assert len(names) == len(set(names)) == 33

    def test_rows_cover_all_tweets(self, featurizer):
        rows = featurizer.featurize_corpus(toy_corpus())
        assert [r.tweet_id for r in rows] == ["1", "2", "3"]
        assert rows[0].role is Role.SOURCE

    def test_empty_text_row_flagged_and_absent(self, featurizer):
        rows = featurizer.featurize_corpus(toy_corpus())
        empty_row = rows[1]
        assert empty_row.empty_text
        assert empty_row.values["WC"] == 0.0
        assert empty_row.values["function"] is None
        for name in SCORE_NAMES:
            assert empty_row.values[name] is None

    def test_punctuation_only_readability_absent(self, featurizer):
        rows = featurizer.featurize_corpus(toy_corpus())
        punct_row = rows[2]
        assert punct_row.values["WC"] == 0.0
        assert punct_row.values["flesch_score"] is None

    def test_emotion_scores_attached(self, featurizer):
        rows = featurizer.featurize_corpus(toy_corpus())
        scores = {lab: rows[0].values[lab] for lab in EMOTION_FEATURES}
        assert sum(scores.values()) == pytest.approx(1.0, abs=1e-6)
        assert emotion_argmax(rows[0].values) == "fear"

    def test_no_provider_means_no_emotion_columns(self, demo_lexicon, demo_sentic_table):
        f = Featurizer(demo_lexicon, demo_sentic_table, emotion_provider=None)
        rows = f.featurize_corpus(toy_corpus())
        assert "anger" not in f.names
        assert "anger" not in rows[0].values


class TestFeaturesCsv:
    def test_round_trip_preserves_absence(self, featurizer, tmp_path):
        rows = featurizer.featurize_corpus(toy_corpus())
        path = tmp_path / "features.csv"
        report.write_features_csv(path, rows, featurizer.names)
        loaded, names = report.read_features_csv(path)
        assert names == featurizer.names
        assert len(loaded) == 3
        assert loaded[1]["values"]["function"] is None
        assert loaded[0]["values"]["WC"] == rows[0].values["WC"]
        assert loaded[1]["empty_text"] is True

    def test_header_carries_absence_sentinels(self, featurizer, tmp_path):
        path = tmp_path / "features.csv"
        report.write_features_csv(path, [], featurizer.names)
        header = path.read_text().splitlines()[0].split(",")
        assert "flesch_score" in header and "flesch_score__absent" in header


class TestTableSchemas:
    def test_partitions_round_trip(self, tmp_path):
        counts = [PartitionCounts("e1", 5, 4, 10, 20), PartitionCounts("e2", 0, 0, 0, 0)]
        path = tmp_path / "partitions.csv"
        report.write_partitions_csv(path, counts)
        assert report.read_partitions_csv(path) == counts
        assert path.read_text().splitlines()[0] == "event,nr_src,r_src,nr_re,r_re,total"

    def test_ks_csv_schema(self, tmp_path):
        from rumourlens.stats import significance_matrix

        samples = {"wc": {"e1": ([1.0, 2.0], [3.0, 4.0])}}
        m = significance_matrix(samples, alpha=0.05, population_pair="sources")
        path = tmp_path / "ks.csv"
        report.write_ks_csv(path, [m])
        rows = report.read_ks_csv(path)
        assert list(rows[0]) == report.KS_HEADER
        assert rows[0]["population_pair"] == "sources"

    def test_emotions_round_trip(self, tmp_path):
        table = {
            "r_src": {lab: (100.0 if lab == "fear" else 0.0) for lab in EMOTION_FEATURES},
            "nr_re": {lab: 100.0 / 7 for lab in EMOTION_FEATURES},
        }
        path = tmp_path / "emotions.csv"
        report.write_emotions_csv(path, table)
        loaded = report.read_emotions_csv(path)
        assert loaded["r_src"]["fear"] == 100.0
        assert loaded["nr_re"]["joy"] == pytest.approx(100.0 / 7)
        assert "r_re" not in loaded
        assert path.read_text().splitlines()[0] == "label,r_src,nr_src,r_re,nr_re"

    def test_means_and_metrics_headers_stable(self, tmp_path):
        report.write_means_csv(tmp_path / "means.csv", {})
        assert (tmp_path / "means.csv").read_text().splitlines()[0] == (
            "feature,population,mean,n,absent"
        )
        report.write_metrics_csv(tmp_path / "metrics.csv", [])
        assert (tmp_path / "metrics.csv").read_text().splitlines()[0] == (
            ",".join(report.METRICS_HEADER)
        )


class TestMarkdown:
    def test_skipped_sections_named(self):
        analysis = report.AnalysisReport(
            partitions=[PartitionCounts("e1", 1, 1, 1, 1)],
            skipped={"emotions": "no emotion provider", "train": "training stage not run",
                     "explain": "explain stage not run", "compare": "not run"},
        )
        text = report.render_markdown(analysis)
        assert "skipped: no emotion provider" in text
        assert "skipped: training stage not run" in text

    def test_significance_marks(self):
        rows = [
            {"feature": "wc", "event": "e1", "population_pair": "sources", "n1": "5",
             "n2": "5", "d_stat": "1", "p_value": "0.001", "mean_rumour": "1",
             "mean_nonrumour": "2", "significant": "true"},
            {"feature": "wc", "event": "e2", "population_pair": "sources", "n1": "5",
             "n2": "5", "d_stat": "0.2", "p_value": "0.9", "mean_rumour": "1",
             "mean_nonrumour": "1", "significant": "false"},
        ]
        analysis = report.AnalysisReport(ks_rows=rows)
        text = report.render_markdown(analysis)
        assert "0.001 ✓" in text
        assert "0.9 ✗" in text

    def test_render_is_deterministic(self):
        analysis = report.AnalysisReport(partitions=[PartitionCounts("e1", 1, 2, 3, 4)])
        assert report.render_markdown(analysis) == report.render_markdown(analysis)
