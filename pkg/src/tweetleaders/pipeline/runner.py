"""Stage orchestration over a working directory of cached artifacts.

Stages run in a fixed order, each writing stable artifact files; a stage
whose artifacts already exist is loaded instead of recomputed, so deleting
one artifact and re-running recomputes exactly that stage. All randomness
derives from the config seed, so two runs over the same input and config
produce byte-identical artifacts.
"""

from __future__ import annotations

import csv
import json
import shutil
from collections import Counter
from pathlib import Path

import numpy as np

from ..classify import (
    concern_indicator_block,
    cross_validate_ablation,
    emotion_block,
)
from ..concerns import (
    annotate_concerns,
    chi_square_independence,
    concern_alignment,
    merged_concern_name,
)
from ..corpus import (
    CleanTweet,
    IngestStats,
    RawTweet,
    ingest_jsonl,
    parse_timestamp,
    preprocess_corpus,
)
from ..emotion import EmotionLexicon, aggregate_emotions, save_emotion_shares_csv, score_emotions
from ..graph import (
    best_partition,
    build_retweet_graph,
    girvan_newman,
    load_edges_csv,
    load_partition_csv,
    pagerank,
    save_edges_csv,
    save_pagerank_csv,
    save_partition_csv,
    select_leaders,
)
from ..topics import GibbsLda, save_sweep_csv, save_topics_csv, select_by_coherence, sweep_topic_count
from .config import PipelineConfig

STAGES = (
    "ingest",
    "preprocess",
    "graph",
    "communities",
    "emotions",
    "topics",
    "concerns",
    "classify",
    "report",
)

STAGE_ARTIFACTS: dict[str, tuple[str, ...]] = {
    "ingest": ("tweets_ingested.jsonl", "ingest_stats.json"),
    "preprocess": ("tweets_clean.jsonl",),
    "graph": ("graph_edges.csv", "pagerank.csv", "leaders.csv", "graph_meta.json"),
    "communities": ("communities.csv", "communities_sweep.csv"),
    "emotions": ("emotions_by_cluster.csv", "emotions_by_month.csv"),
    "topics": ("lda_sweep.csv", "lda_topics.csv"),
    "concerns": ("concern_alignment.csv", "chi_square.json"),
    "classify": ("ablation_auc.csv",),
    "report": (
        "report/ingest_stats.csv",
        "report/emotions_by_cluster.csv",
        "report/emotions_by_month.csv",
        "report/concern_terms.csv",
        "report/concern_alignment.csv",
        "report/chi_square.json",
        "report/lda_topics.csv",
        "report/lda_sweep.csv",
        "report/ablation_auc.csv",
    ),
}

# figure/table analogs -> report files backing them
REPORT_ANALOGS: dict[str, tuple[str, ...]] = {
    "dataset_stats_table": ("report/ingest_stats.csv",),
    "emotions_by_cluster_figure": ("report/emotions_by_cluster.csv",),
    "emotions_over_time_figure": ("report/emotions_by_month.csv",),
    "concern_wordcloud_data": ("report/concern_terms.csv",),
    "concern_alignment_figure": ("report/concern_alignment.csv", "report/chi_square.json"),
    "topics_table": ("report/lda_topics.csv", "report/lda_sweep.csv"),
    "classification_table": ("report/ablation_auc.csv",),
}


class StageError(RuntimeError):
    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}': {cause}")


class Pipeline:
    def __init__(self, config: PipelineConfig, out_dir):
        self.config = config
        self.out = Path(out_dir)
        self.out.mkdir(parents=True, exist_ok=True)
        self._memo: dict[str, object] = {}

    # -- plumbing ----------------------------------------------------------

    def path(self, name: str) -> Path:
        return self.out / name

    def has_artifacts(self, stage: str) -> bool:
        return all(self.path(name).is_file() for name in STAGE_ARTIFACTS[stage])

    def drop_artifacts(self, stage: str) -> None:
        for name in STAGE_ARTIFACTS[stage]:
            self.path(name).unlink(missing_ok=True)
        self._memo.pop(stage, None)

    def run(self, upto: str = "report", force: bool = False, log=print) -> None:
        """Run stages in order through `upto` (inclusive)."""
        if upto not in STAGES:
            raise ValueError(f"unknown stage {upto!r}")
        if force:
            self.drop_artifacts(upto)
        for stage in STAGES[: STAGES.index(upto) + 1]:
            cached = self.has_artifacts(stage)
            try:
                getattr(self, stage)()
            except StageError:
                raise
            except Exception as exc:
                raise StageError(stage, exc) from exc
            if log is not None:
                log(f"stage {stage}: {'cached' if cached else 'done'}")

    def _memoized(self, stage: str, loader, builder):
        if stage in self._memo:
            return self._memo[stage]
        if self.has_artifacts(stage):
            value = loader()
        else:
            try:
                value = builder()
            except StageError:
                raise
            except Exception as exc:
                raise StageError(stage, exc) from exc
        self._memo[stage] = value
        return value

    # -- ingest ------------------------------------------------------------

    def ingest(self) -> tuple[list[RawTweet], IngestStats]:
        return self._memoized("ingest", self._load_ingest, self._build_ingest)

    def _build_ingest(self):
        tweets, stats = ingest_jsonl(self.config.input, self.config.keywords or None)
        with self.path("tweets_ingested.jsonl").open("w") as fh:
            for t in tweets:
                record = {
                    "id": t.id,
                    "author": t.author,
                    "created_at": t.created_at.isoformat(),
                    "text": t.text,
                }
                if t.retweeted_author:
                    record["retweeted_author"] = t.retweeted_author
                fh.write(json.dumps(record, sort_keys=True) + "\n")
        payload = stats.as_dict()
        if tweets:
            payload["period_start"] = min(t.created_at for t in tweets).isoformat()
            payload["period_end"] = max(t.created_at for t in tweets).isoformat()
        self.path("ingest_stats.json").write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n"
        )
        return tweets, stats

    def _load_ingest(self):
        tweets = []
        with self.path("tweets_ingested.jsonl").open() as fh:
            for line in fh:
                rec = json.loads(line)
                tweets.append(
                    RawTweet(
                        id=rec["id"],
                        author=rec["author"],
                        created_at=parse_timestamp(rec["created_at"]),
                        text=rec["text"],
                        retweeted_author=rec.get("retweeted_author"),
                    )
                )
        payload = json.loads(self.path("ingest_stats.json").read_text())
        stats = IngestStats(
            **{k: payload[k] for k in IngestStats().as_dict()}
        )
        return tweets, stats

    # -- preprocess ----------------------------------------------------------

    def preprocess(self) -> list[CleanTweet]:
        return self._memoized("preprocess", self._load_preprocess, self._build_preprocess)

    def _build_preprocess(self):
        tweets, _ = self.ingest()
        clean = preprocess_corpus(tweets, self.config.preprocess)
        with self.path("tweets_clean.jsonl").open("w") as fh:
            for t in clean:
                fh.write(
                    json.dumps(
                        {
                            "id": t.id,
                            "author": t.author,
                            "created_at": t.created_at.isoformat(),
                            "tokens": list(t.tokens),
                            "unstemmed_tokens": list(t.unstemmed_tokens),
                        },
                        sort_keys=True,
                    )
                    + "\n"
                )
        return clean

    def _load_preprocess(self):
        clean = []
        with self.path("tweets_clean.jsonl").open() as fh:
            for line in fh:
                rec = json.loads(line)
                clean.append(
                    CleanTweet(
                        id=rec["id"],
                        author=rec["author"],
                        created_at=parse_timestamp(rec["created_at"]),
                        tokens=tuple(rec["tokens"]),
                        unstemmed_tokens=tuple(rec["unstemmed_tokens"]),
                    )
                )
        return clean

    # -- graph ---------------------------------------------------------------

    def graph(self):
        return self._memoized("graph", self._load_graph, self._build_graph)

    def _build_graph(self):
        tweets, _ = self.ingest()
        graph = build_retweet_graph(tweets)
        cfg = self.config.graph
        pr = pagerank(graph, damping=cfg.damping, tol=cfg.tol, max_iter=cfg.max_iter)
        leaders = select_leaders(pr, min(cfg.leader_top_k, graph.n_nodes))
        save_edges_csv(graph, self.path("graph_edges.csv"))
        save_pagerank_csv(pr, self.path("pagerank.csv"))
        with self.path("leaders.csv").open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["rank", "handle"])
            for rank, handle in enumerate(leaders, start=1):
                writer.writerow([rank, handle])
        self.path("graph_meta.json").write_text(
            json.dumps(
                {
                    "n_nodes": graph.n_nodes,
                    "n_edges": graph.n_edges,
                    "self_retweets_dropped": graph.self_retweets_dropped,
                    "pagerank_converged": pr.converged,
                    "pagerank_iterations": pr.iterations_used,
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
        return graph, leaders

    def _load_graph(self):
        with self.path("pagerank.csv").open(newline="") as fh:
            all_handles = [row["handle"] for row in csv.DictReader(fh)]
        graph = load_edges_csv(self.path("graph_edges.csv"), isolated_handles=all_handles)
        with self.path("leaders.csv").open(newline="") as fh:
            leaders = [row["handle"] for row in csv.DictReader(fh)]
        return graph, leaders

    # -- communities -----------------------------------------------------------

    def communities(self) -> dict[str, int]:
        return self._memoized("communities", self._load_communities, self._build_communities)

    def _build_communities(self):
        graph, leaders = self.graph()
        subgraph = graph.subgraph(leaders)
        partitions = girvan_newman(subgraph, self.config.graph.max_communities)
        chosen = best_partition(partitions)
        save_partition_csv(chosen, self.path("communities.csv"))
        with self.path("communities_sweep.csv").open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n_communities", "modularity", "selected"])
            for part in partitions:
                writer.writerow(
                    [
                        part.n_communities,
                        f"{part.modularity:.12g}",
                        int(part is chosen),
                    ]
                )
        return chosen.as_dict()

    def _load_communities(self):
        return load_partition_csv(self.path("communities.csv"))

    def _leader_tweets(self) -> tuple[list[CleanTweet], list[int]]:
        """Clean tweets by community-assigned authors, with their cluster ids."""
        assignment = self.communities()
        clean = self.preprocess()
        tweets, clusters = [], []
        for t in clean:
            if t.author in assignment:
                tweets.append(t)
                clusters.append(assignment[t.author])
        return tweets, clusters

    # -- emotions ----------------------------------------------------------------

    def emotions(self) -> None:
        def build():
            tweets, clusters = self._leader_tweets()
            lexicon = EmotionLexicon.bundled()
            profiles = [score_emotions(t, lexicon) for t in tweets]
            by_cluster = aggregate_emotions(profiles, clusters)
            save_emotion_shares_csv(by_cluster, self.path("emotions_by_cluster.csv"))
            by_month = aggregate_emotions(profiles, [t.month_key() for t in tweets])
            save_emotion_shares_csv(
                by_month, self.path("emotions_by_month.csv"), group_column="month"
            )

        return self._memoized("emotions", lambda: None, build)

    # -- topics --------------------------------------------------------------------

    def topics(self) -> None:
        def build():
            tweets, _ = self._leader_tweets()
            docs = [list(t.tokens) for t in tweets]
            cfg = self.config.lda
            entries = sweep_topic_count(
                docs,
                k_range=range(cfg.k_min, cfg.k_max + 1),
                coherence_top_n=cfg.top_words,
                alpha=cfg.alpha,
                beta=cfg.beta,
                iterations=cfg.iterations,
                burn_in=cfg.burn_in,
                seed=self.config.seed,
                min_count=cfg.min_count,
            )
            save_sweep_csv(entries, self.path("lda_sweep.csv"))
            chosen_k = select_by_coherence(entries).n_topics
            model = GibbsLda(
                n_topics=chosen_k,
                alpha=cfg.alpha,
                beta=cfg.beta,
                iterations=cfg.iterations,
                burn_in=cfg.burn_in,
                seed=self.config.seed,
                min_count=cfg.min_count,
            ).fit(docs)
            save_topics_csv(model, self.path("lda_topics.csv"), n=cfg.top_words)

        return self._memoized("topics", lambda: None, build)

    # -- concerns --------------------------------------------------------------------

    def concerns(self) -> None:
        def build():
            tweets, clusters = self._leader_tweets()
            lexicon = self.config.concern_lexicon
            labels = [annotate_concerns(t, lexicon) for t in tweets]
            table = concern_alignment(labels, clusters, lexicon)
            shares = table.shares()
            with self.path("concern_alignment.csv").open("w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["cluster", "concern", "count", "share"])
                for i, cluster in enumerate(table.rows):
                    for j, concern in enumerate(table.cols):
                        writer.writerow(
                            [
                                cluster,
                                concern,
                                int(table.counts[i, j]),
                                f"{shares[i, j]:.12g}",
                            ]
                        )
            result = chi_square_independence(table, alpha=self.config.significance)
            result.to_json(self.path("chi_square.json"))

        return self._memoized("concerns", lambda: None, build)

    # -- classify ----------------------------------------------------------------------

    def classify(self) -> None:
        def build():
            tweets, clusters = self._leader_tweets()
            cfg = self.config.classify
            # communities too small to stratify (stray singletons from the
            # partition) cannot be cross-validated; drop their tweets, the
            # analog of keeping only tweets from the main leader clusters
            sizes = Counter(clusters)
            keep = [i for i, c in enumerate(clusters) if sizes[c] >= cfg.folds]
            tweets = [tweets[i] for i in keep]
            clusters = [clusters[i] for i in keep]
            if len(set(clusters)) < 2:
                raise ValueError("fewer than two viable communities to classify")
            lexicon = self.config.concern_lexicon
            emotion_lexicon = EmotionLexicon.bundled()
            docs = [list(t.tokens) for t in tweets]
            emotions = emotion_block(
                [score_emotions(t, emotion_lexicon) for t in tweets]
            )
            concerns = concern_indicator_block(
                [annotate_concerns(t, lexicon) for t in tweets],
                lexicon.merged_names,
            )
            report = cross_validate_ablation(
                docs,
                emotions,
                concerns,
                np.asarray(clusters),
                folds=cfg.folds,
                repeats=cfg.repeats,
                seed=self.config.seed,
                min_df=cfg.min_df,
                max_features=cfg.max_features,
                smote_k=cfg.smote_k,
                n_trees=cfg.n_trees,
                max_depth=cfg.max_depth,
                min_leaf=cfg.min_leaf,
            )
            report.to_csv(self.path("ablation_auc.csv"))

        return self._memoized("classify", lambda: None, build)

    # -- report ------------------------------------------------------------------------

    def report(self) -> None:
        def build():
            report_dir = self.path("report")
            report_dir.mkdir(exist_ok=True)
            stats = json.loads(self.path("ingest_stats.json").read_text())
            with (report_dir / "ingest_stats.csv").open("w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["parameter", "value"])
                if "period_start" in stats:
                    writer.writerow(
                        ["time_period", f"{stats['period_start']} to {stats['period_end']}"]
                    )
                for key in ("total", "originals", "retweets", "distinct_users", "malformed_skipped"):
                    writer.writerow([key, stats[key]])

            self._write_concern_terms(report_dir / "concern_terms.csv")

            for name in (
                "emotions_by_cluster.csv",
                "emotions_by_month.csv",
                "concern_alignment.csv",
                "chi_square.json",
                "lda_topics.csv",
                "lda_sweep.csv",
                "ablation_auc.csv",
            ):
                source = self.path(name)
                if not source.is_file():
                    raise FileNotFoundError(
                        f"missing artifact {name}; rerun the stage that writes it"
                    )
                shutil.copyfile(source, report_dir / name)

        return self._memoized("report", lambda: None, build)

    def _write_concern_terms(self, path, top_n: int = 50) -> None:
        """Term-frequency lists per concern (the wordcloud data)."""
        tweets, _ = self._leader_tweets()
        lexicon = self.config.concern_lexicon
        tallies: dict[str, Counter] = {name: Counter() for name in lexicon.merged_names}
        for t in tweets:
            labels = annotate_concerns(t, lexicon)
            merged = {merged_concern_name(name) for name in labels}
            for name in merged:
                tallies[name].update(set(t.unstemmed_tokens))
        with Path(path).open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["concern", "rank", "term", "count"])
            for name in tallies:
                ranked = sorted(tallies[name].items(), key=lambda tc: (-tc[1], tc[0]))
                for rank, (term, count) in enumerate(ranked[:top_n], start=1):
                    writer.writerow([name, rank, term, count])


def run_pipeline(config: PipelineConfig, out_dir, upto: str = "report", force: bool = False, log=print) -> Pipeline:
    pipeline = Pipeline(config, out_dir)
    pipeline.run(upto=upto, force=force, log=log)
    return pipeline
