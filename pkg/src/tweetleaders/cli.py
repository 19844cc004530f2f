"""Command-line entry points for the analysis pipeline."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .pipeline.config import load_config
from .pipeline.fixture import FixtureSpec, write_fixture
from .pipeline.runner import STAGES, Pipeline, StageError

_FIXTURE_PIPELINE_TOML = """\
input = "fixture.jsonl"
seed = 7

[preprocess]
spell_correction = false
stemming = true
min_token_length = 2

[graph]
damping = 0.85
tol = 1e-10
max_iter = 200
leader_top_k = 1000
max_communities = 8

[lda]
# sized for the desk-scale fixture
k_min = 3
k_max = 8
alpha = 0.5
beta = 0.01
iterations = 150
burn_in = 50
min_count = 2
top_words = 10

[concerns]
significance = 0.05

[classify]
folds = 5
repeats = 3
smote_k = 5
# sized for the desk-scale fixture; max_depth = 0 means unlimited
n_trees = 40
max_depth = 14
min_leaf = 1
min_df = 2
max_features = 20000
"""


def _add_pipeline_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", required=True, type=Path, help="pipeline TOML file")
    parser.add_argument("--out", required=True, type=Path, help="output directory")
    parser.add_argument("--seed", type=int, default=None, help="override the config seed")
    parser.add_argument(
        "--force", action="store_true", help="recompute this stage even if cached"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetleaders",
        description="Rank retweet-network leaders, cluster them, and analyze "
        "their emotions, concerns, topics, and tweet classifiability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fixture = sub.add_parser(
        "fixture", help="generate a synthetic corpus with planted ground truth"
    )
    fixture.add_argument("--out", required=True, type=Path, help="directory to create")
    fixture.add_argument("--n", type=int, default=1000, help="number of tweets")
    fixture.add_argument("--seed", type=int, default=7)

    for stage in STAGES:
        stage_parser = sub.add_parser(stage, help=f"run the pipeline through '{stage}'")
        _add_pipeline_args(stage_parser)

    run_all = sub.add_parser("run-all", help="run every stage and emit the reports")
    _add_pipeline_args(run_all)
    return parser


def _run_stage(args, upto: str) -> int:
    try:
        config = load_config(args.config)
    except FileNotFoundError as exc:
        # the input corpus is the ingest stage's resource
        print(f"pipeline failed at stage 'ingest': {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    if args.seed is not None:
        config.seed = args.seed
    try:
        Pipeline(config, args.out).run(upto=upto, force=args.force)
    except StageError as exc:
        print(f"pipeline failed at {exc}", file=sys.stderr)
        return 2
    return 0


def _run_fixture(args) -> int:
    out: Path = args.out
    out.mkdir(parents=True, exist_ok=True)
    spec = FixtureSpec(n_tweets=args.n, seed=args.seed)
    write_fixture(spec, out / "fixture.jsonl", out / "fixture_truth.json")
    (out / "pipeline.toml").write_text(_FIXTURE_PIPELINE_TOML)
    print(f"fixture written: {out / 'fixture.jsonl'} ({args.n} tweets, seed {args.seed})")
    print(f"ground truth:    {out / 'fixture_truth.json'}")
    print(f"config template: {out / 'pipeline.toml'}")
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "fixture":
        return _run_fixture(args)
    upto = "report" if args.command == "run-all" else args.command
    return _run_stage(args, upto)


if __name__ == "__main__":
    sys.exit(main())
