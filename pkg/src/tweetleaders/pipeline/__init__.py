"""Pipeline orchestration: config, synthetic fixtures, stage runner."""

from .config import ClassifyConfig, GraphConfig, LdaStageConfig, PipelineConfig, load_config
from .fixture import ClusterSpec, FixtureSpec, cluster_tweet_counts, generate_fixture, write_fixture
from .runner import REPORT_ANALOGS, STAGE_ARTIFACTS, STAGES, Pipeline, StageError, run_pipeline

__all__ = [
    "REPORT_ANALOGS",
    "STAGES",
    "STAGE_ARTIFACTS",
    "ClassifyConfig",
    "ClusterSpec",
    "FixtureSpec",
    "GraphConfig",
    "LdaStageConfig",
    "Pipeline",
    "PipelineConfig",
    "StageError",
    "cluster_tweet_counts",
    "generate_fixture",
    "load_config",
    "run_pipeline",
    "write_fixture",
]
