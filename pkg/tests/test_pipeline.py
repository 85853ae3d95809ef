import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from rumourlens import report
from rumourlens.config import RunConfig
from rumourlens.emotions import CassetteProvider, LexiconFallbackProvider, RemoteProvider
from rumourlens.pipeline import make_emotion_provider
from rumourlens.senticnet import fetch_concepts, load_sentic_table


class TestProviderSelection:
    def test_none(self):
        cfg = RunConfig(dataset="x", emotion_provider="none")
        assert make_emotion_provider(cfg) is None

    def test_fallback(self):
        cfg = RunConfig(dataset="x", emotion_provider="fallback")
        assert isinstance(make_emotion_provider(cfg), LexiconFallbackProvider)

    def test_cassette(self, tmp_path):
        tape = tmp_path / "tape.jsonl"
        tape.write_text("")
        cfg = RunConfig(dataset="x", emotion_provider="cassette", emotion_cassette=str(tape))
        assert isinstance(make_emotion_provider(cfg), CassetteProvider)

    def test_remote(self):
        cfg = RunConfig(dataset="x", emotion_provider="remote", emotion_url="http://h")
        provider = make_emotion_provider(cfg)
        assert isinstance(provider, RemoteProvider)
        assert provider.max_in_flight == 4


class TestRenderBundle:
    def test_csv_bundle_round_trips_stage_output(self, tmp_path):
        # re-rendering the bundle from read-back artifacts reproduces the
        # stage-written bytes (schema stability)
        golden = report.AnalysisReport(
            partitions=report.read_partitions_csv("tests/goldens/fixture_run/partitions.csv"),
            ks_rows=[
                row
                for name in ("ks_sources.csv", "ks_reactions.csv", "ks_aggregated.csv")
                for row in report.read_ks_csv(f"tests/goldens/fixture_run/{name}")
            ],
            means=report.read_means_csv("tests/goldens/fixture_run/means.csv"),
            emotion_table=report.read_emotions_csv("tests/goldens/fixture_run/emotions.csv"),
            metrics=report.read_metrics_csv("tests/goldens/fixture_run/metrics.csv"),
            shap_rankings=report.read_shap_rankings_json(
                "tests/goldens/fixture_run/shap_rankings.json"
            ),
        )
        written = report.render(golden, tmp_path, "csv-bundle")
        for name in ("partitions.csv", "ks_sources.csv", "ks_reactions.csv",
                     "ks_aggregated.csv", "means.csv", "emotions.csv", "metrics.csv",
                     "shap_rankings.json"):
            assert name in written
            got = (tmp_path / name).read_bytes()
            expected = open(f"tests/goldens/fixture_run/{name}", "rb").read()
            assert got == expected, name

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            report.render(report.AnalysisReport(), tmp_path, "pdf")


class _SenticHandler(BaseHTTPRequestHandler):
    def do_GET(self):
        concept = self.path.rsplit("/", 1)[-1]
        if concept == "unknownword":
            self.send_response(404)
            self.end_headers()
            return
        body = json.dumps(
            {
                "pleasantness": 0.25,
                "attention": -0.1,
                "sensitivity": 0.0,
                "aptitude": 0.5,
                "polarity": 0.3,
            }
        ).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


class TestSenticFetcher:
    def test_fetch_and_cache(self, tmp_path):
        server = HTTPServer(("127.0.0.1", 0), _SenticHandler)
        threading.Thread(target=server.serve_forever, daemon=True).start()
        try:
            url = f"http://127.0.0.1:{server.server_port}"
            cache = tmp_path / "table.csv"
            table = fetch_concepts(url, ["good_news", "unknownword", "calm"], cache_path=cache)
            assert set(table.entries) == {"good_news", "calm"}
            reloaded = load_sentic_table(cache)
            assert reloaded.entries["good_news"][0] == pytest.approx(0.25)
        finally:
            server.shutdown()
