"""Stage implementations behind the CLI.

Stages communicate through files in the run directory and a manifest
recording which stages completed, so each command is idempotent and
later stages can refuse to run out of order. Events lacking one of the
two source populations are loaded and counted but excluded from the
comparison/classification stages with a warning.
"""

from __future__ import annotations

import json
import warnings
from pathlib import Path

import numpy as np

from . import classify, emotions, lexicon, report, senticnet, shapley, stats, textprep
from .classify import FeatureVector, ForestConfig, derive_seed
from .config import RunConfig, save_config
from .corpus import AGGREGATED_EVENT, load_jsonl, load_pheme_tree, partition
from .errors import MissingArtifact, TooFewSamples
from .features import EMOTION_FEATURES, Featurizer, emotion_argmax

MANIFEST = "manifest.json"

STAGE_DEPS = {
    "ingest": (),
    "featurize": ("ingest",),
    "compare": ("featurize",),
    "train": ("featurize",),
    "explain": ("train",),
    "report": ("featurize", "compare"),
}

SCOPES = ("sources", "reactions")

_DATA_DIR = "rumourlens.data"


def _bundled(name: str) -> Path:
    from importlib import resources

    return Path(str(resources.files(_DATA_DIR).joinpath(name)))


def run_dir(cfg: RunConfig) -> Path:
    d = cfg.run_dir()
    d.mkdir(parents=True, exist_ok=True)
    return d


def _read_manifest(cfg: RunConfig) -> dict:
    path = run_dir(cfg) / MANIFEST
    if path.exists():
        return json.loads(path.read_text(encoding="utf-8"))
    return {"stages": {}}


def _mark_stage(cfg: RunConfig, stage: str) -> None:
    manifest = _read_manifest(cfg)
    manifest["stages"][stage] = True
    (run_dir(cfg) / MANIFEST).write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def require_stages(cfg: RunConfig, stage: str) -> None:
    done = _read_manifest(cfg)["stages"]
    missing = [dep for dep in STAGE_DEPS[stage] if not done.get(dep)]
    if missing:
        raise MissingArtifact(
            f"stage {stage!r} needs {', '.join(missing)} to run first (run directory: {run_dir(cfg)})"
        )


def load_corpora(cfg: RunConfig):
    if cfg.dataset_format == "pheme":
        return load_pheme_tree(cfg.dataset)
    return load_jsonl(cfg.dataset)


def make_emotion_provider(cfg: RunConfig):
    if cfg.emotion_provider == "none":
        return None
    if cfg.emotion_provider == "fallback":
        path = cfg.emotion_lexicon_path or None
        return emotions.LexiconFallbackProvider(emotions.load_emotion_lexicon(path))
    if cfg.emotion_provider == "cassette":
        return emotions.CassetteProvider(cfg.emotion_cassette, batch_size=cfg.emotion_batch_size)
    return emotions.RemoteProvider(
        cfg.emotion_url,
        timeout=cfg.emotion_timeout,
        retries=cfg.emotion_retries,
        batch_size=cfg.emotion_batch_size,
        max_in_flight=cfg.emotion_parallel,
    )


def make_featurizer(cfg: RunConfig) -> Featurizer:
    lex = lexicon.load_lexicon(cfg.lexicon or _bundled("demo_lexicon.json"))
    table = senticnet.load_sentic_table(cfg.sentic_table or _bundled("sentic_demo.csv"))
    stopwords = textprep.load_stopwords(cfg.stopwords_path or None)
    easy = textprep.load_easy_words(cfg.easy_words_path or None)
    lemmatizer = textprep.RuleLemmatizer(
        textprep.load_lemma_exceptions(cfg.lemma_exceptions_path or None)
    )
    return Featurizer(
        lexicon=lex,
        sentic_table=table,
        emotion_provider=make_emotion_provider(cfg),
        stopwords=stopwords,
        lemmatizer=lemmatizer,
        easy_words=easy,
    )


def forest_config(cfg: RunConfig) -> ForestConfig:
    return ForestConfig(
        n_trees=cfg.n_trees,
        max_features=cfg.max_features,
        min_samples_split=cfg.min_samples_split,
        max_depth=cfg.max_depth or None,
    )


# ---------------------------------------------------------------------------
# stages


def stage_ingest(cfg: RunConfig) -> Path:
    out = run_dir(cfg)
    save_config(cfg, out / "run_config.json")
    corpora = load_corpora(cfg)
    counts = [partition(c).counts() for c in corpora]
    report.write_partitions_csv(out / report.PARTITIONS_CSV, counts)
    _mark_stage(cfg, "ingest")
    return out / report.PARTITIONS_CSV


def stage_featurize(cfg: RunConfig) -> Path:
    require_stages(cfg, "featurize")
    out = run_dir(cfg)
    corpora = load_corpora(cfg)
    featurizer = make_featurizer(cfg)
    rows = []
    for corpus in corpora:
        rows.extend(featurizer.featurize_corpus(corpus))
    report.write_features_csv(out / report.FEATURES_CSV, rows, featurizer.names)
    _mark_stage(cfg, "featurize")
    return out / report.FEATURES_CSV


def _usable_events(rows: list[dict]) -> list[str]:
    per_event: dict[str, set[str]] = {}
    for r in rows:
        if r["role"] == "source":
            per_event.setdefault(r["event"], set()).add(r["label"])
    usable = []
    for event in sorted(per_event):
        if per_event[event] >= {"rumour", "non-rumour"}:
            usable.append(event)
        else:
            warnings.warn(
                f"event {event!r} lacks a rumour or non-rumour source population; excluded",
                stacklevel=2,
            )
    return usable


def _population_of(row: dict) -> str:
    side = "r" if row["label"] == "rumour" else "nr"
    kind = "src" if row["role"] == "source" else "re"
    return f"{side}_{kind}"


def stage_compare(cfg: RunConfig) -> list[Path]:
    require_stages(cfg, "compare")
    out = run_dir(cfg)
    rows, feature_names = report.read_features_csv(out / report.FEATURES_CSV)
    usable = _usable_events(rows)
    rows = [r for r in rows if r["event"] in usable]

    # emotion scores feed the emotion table, not the KS matrices
    ks_features = [f for f in feature_names if f not in EMOTION_FEATURES]

    matrices = []
    for pair, roles in (("sources", ("source",)), ("reactions", ("reaction",))):
        samples: dict[str, dict[str, tuple[list[float], list[float]]]] = {}
        for feature in ks_features:
            samples[feature] = {}
            for event in usable + [AGGREGATED_EVENT]:
                rum, non = [], []
                for r in rows:
                    if r["role"] not in roles:
                        continue
                    if event != AGGREGATED_EVENT and r["event"] != event:
                        continue
                    v = r["values"][feature]
                    if v is None:
                        continue
                    (rum if r["label"] == "rumour" else non).append(v)
                samples[feature][event] = (rum, non)
        matrices.append(
            stats.significance_matrix(
                samples,
                alpha=cfg.alpha,
                population_pair=pair,
                feature_order=ks_features,
                event_order=usable + [AGGREGATED_EVENT],
            )
        )

    written = []
    report.write_ks_csv(out / report.KS_SOURCES_CSV, [matrices[0]], events=usable)
    report.write_ks_csv(out / report.KS_REACTIONS_CSV, [matrices[1]], events=usable)
    report.write_ks_csv(out / report.KS_AGGREGATED_CSV, matrices, events=[AGGREGATED_EVENT])
    written += [out / report.KS_SOURCES_CSV, out / report.KS_REACTIONS_CSV, out / report.KS_AGGREGATED_CSV]

    mean_samples: dict[str, dict[str, list[float | None]]] = {}
    for feature in feature_names:
        mean_samples[feature] = {pop: [] for pop in emotions.POPULATIONS}
        for r in rows:
            mean_samples[feature][_population_of(r)].append(r["values"][feature])
    report.write_means_csv(out / report.MEANS_CSV, stats.mean_report(mean_samples))
    written.append(out / report.MEANS_CSV)

    if any(f in feature_names for f in EMOTION_FEATURES):
        table: dict[str, dict[str, float]] = {}
        for pop in emotions.POPULATIONS:
            labels = [emotion_argmax(r["values"]) for r in rows if _population_of(r) == pop]
            labels = [lab for lab in labels if lab is not None]
            if not labels:
                continue
            table[pop] = {
                lab: 100.0 * sum(1 for x in labels if x == lab) / len(labels)
                for lab in EMOTION_FEATURES
            }
        report.write_emotions_csv(out / report.EMOTIONS_CSV, table)
        written.append(out / report.EMOTIONS_CSV)

    _mark_stage(cfg, "compare")
    return written


def _vectors_for(rows: list[dict], event: str, scope: str) -> list[FeatureVector]:
    role = "source" if scope == "sources" else "reaction"
    return [
        FeatureVector(tweet_id=r["tweet_id"], values=r["values"], label=r["label"])
        for r in rows
        if r["event"] == event and r["role"] == role
    ]


def _scopes(cfg: RunConfig) -> tuple[str, ...]:
    return SCOPES if cfg.scope == "both" else (cfg.scope,)


def _model_path(out: Path, event: str, scope: str) -> Path:
    return out / f"model_{event}_{scope}.json"


def stage_train(cfg: RunConfig) -> Path:
    require_stages(cfg, "train")
    out = run_dir(cfg)
    rows, feature_names = report.read_features_csv(out / report.FEATURES_CSV)
    usable = _usable_events(rows)
    config = forest_config(cfg)
    metrics_rows = []
    for event in usable:
        for scope in _scopes(cfg):
            vectors = _vectors_for(rows, event, scope)
            seed = derive_seed(cfg.seed, event, scope)
            try:
                train, test = classify.split_train_test(vectors, ratio=cfg.split_ratio, seed=seed)
                fold_metrics = classify.cross_validate(
                    train,
                    feature_names,
                    k=cfg.k_folds,
                    config=config,
                    seed=seed,
                    averaging=cfg.averaging,
                )
            except TooFewSamples as exc:
                warnings.warn(f"{event}/{scope}: {exc}; model skipped", stacklevel=2)
                continue
            medians = classify.compute_medians(train, feature_names)
            balanced = classify.oversample(train, seed=seed)
            model = classify.fit_forest(
                balanced,
                feature_names,
                config=config,
                seed=seed,
                medians=medians,
                threads=cfg.effective_threads(),
            )
            fold_scores = [m.accuracy for m in fold_metrics]
            model.fold_scores = fold_scores
            final = classify.evaluate(model, test, averaging=cfg.averaging)
            _model_path(out, event, scope).write_text(
                classify.model_to_json(model), encoding="utf-8"
            )
            metrics_rows.append(
                {
                    "event": event,
                    "scope": scope,
                    "n_train": len(train),
                    "n_test": len(test),
                    "cv_folds": len(fold_scores),
                    "cv_accuracy_mean": float(np.mean(fold_scores)),
                    "cv_accuracy_std": float(np.std(fold_scores)),
                    "accuracy": final.accuracy,
                    "precision": final.precision,
                    "recall": final.recall,
                    "f1": final.f1,
                }
            )
    report.write_metrics_csv(out / report.METRICS_CSV, metrics_rows)
    _mark_stage(cfg, "train")
    return out / report.METRICS_CSV


def stage_explain(cfg: RunConfig) -> list[Path]:
    require_stages(cfg, "explain")
    out = run_dir(cfg)
    rows, _ = report.read_features_csv(out / report.FEATURES_CSV)
    usable = _usable_events(rows)
    rankings: dict = {}
    written = []
    for event in usable:
        event_points: list[dict] = []
        for scope in _scopes(cfg):
            model_path = _model_path(out, event, scope)
            if not model_path.exists():
                continue
            model = classify.model_from_json(model_path.read_text(encoding="utf-8"))
            vectors = _vectors_for(rows, event, scope)
            seed = derive_seed(cfg.seed, event, scope)
            train, _test = classify.split_train_test(vectors, ratio=cfg.split_ratio, seed=seed)
            summary = shapley.shap_summary(
                model,
                vectors,
                background=train,
                background_limit=cfg.shap_background,
                seed=derive_seed(cfg.seed, event, scope, "background"),
            )
            rankings.setdefault(event, {})[scope] = [
                {"rank": i + 1, "feature": name, "mean_abs_phi": value}
                for i, (name, value) in enumerate(summary.ranking)
            ]
            event_points.extend(
                {
                    "scope": scope,
                    "instance_id": p.instance_id,
                    "feature": p.feature,
                    "value": p.value,
                    "phi": p.phi,
                    "above_median": p.above_median,
                }
                for p in summary.points
            )
        if event_points:
            path = out / f"shap_{event}.csv"
            report.write_shap_points_csv(path, event_points)
            written.append(path)
    report.write_shap_rankings_json(out / report.SHAP_RANKINGS_JSON, rankings)
    written.append(out / report.SHAP_RANKINGS_JSON)
    _mark_stage(cfg, "explain")
    return written


def stage_report(cfg: RunConfig) -> Path:
    require_stages(cfg, "report")
    out = run_dir(cfg)
    done = _read_manifest(cfg)["stages"]
    analysis = report.AnalysisReport(alpha=cfg.alpha)
    analysis.partitions = report.read_partitions_csv(out / report.PARTITIONS_CSV)
    for fname in (report.KS_SOURCES_CSV, report.KS_REACTIONS_CSV, report.KS_AGGREGATED_CSV):
        analysis.ks_rows.extend(report.read_ks_csv(out / fname))
    analysis.means = report.read_means_csv(out / report.MEANS_CSV)
    if (out / report.EMOTIONS_CSV).exists():
        analysis.emotion_table = report.read_emotions_csv(out / report.EMOTIONS_CSV)
    else:
        analysis.skipped["emotions"] = "no emotion provider"
    if done.get("train") and (out / report.METRICS_CSV).exists():
        analysis.metrics = report.read_metrics_csv(out / report.METRICS_CSV)
    else:
        analysis.skipped["train"] = "training stage not run"
    if done.get("explain") and (out / report.SHAP_RANKINGS_JSON).exists():
        analysis.shap_rankings = report.read_shap_rankings_json(out / report.SHAP_RANKINGS_JSON)
    else:
        analysis.skipped["explain"] = "explain stage not run"
    report.render(analysis, out, "markdown")
    _mark_stage(cfg, "report")
    return out / report.REPORT_MD


def stage_all(cfg: RunConfig) -> Path:
    stage_ingest(cfg)
    stage_featurize(cfg)
    stage_compare(cfg)
    stage_train(cfg)
    stage_explain(cfg)
    return stage_report(cfg)
