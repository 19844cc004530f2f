"""Pipeline configuration loaded from a TOML file.

Every stage knob lives in one file so a run is reproducible from the config
plus the input corpus; seeds are explicit and never taken from the clock.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from ..concerns import ConcernLexicon
from ..corpus import PreprocessConfig


@dataclass
class GraphConfig:
    damping: float = 0.85
    tol: float = 1e-10
    max_iter: int = 200
    leader_top_k: int = 1000
    max_communities: int = 8


@dataclass
class LdaStageConfig:
    k_min: int = 3
    k_max: int = 10
    alpha: float | None = None  # None -> 50/K
    beta: float = 0.01
    iterations: int = 200
    burn_in: int = 80
    min_count: int = 2
    top_words: int = 10


@dataclass
class ClassifyConfig:
    folds: int = 5
    repeats: int = 3
    smote_k: int = 5
    n_trees: int = 100
    max_depth: int | None = None
    min_leaf: int = 1
    min_df: int = 2
    max_features: int = 20000


@dataclass
class PipelineConfig:
    input: Path
    seed: int = 7
    keywords: tuple[str, ...] = ()
    preprocess: PreprocessConfig = field(default_factory=PreprocessConfig)
    graph: GraphConfig = field(default_factory=GraphConfig)
    lda: LdaStageConfig = field(default_factory=LdaStageConfig)
    concern_lexicon: ConcernLexicon = field(default_factory=ConcernLexicon)
    significance: float = 0.05
    classify: ClassifyConfig = field(default_factory=ClassifyConfig)


def _take(mapping: dict, cls, **renames):
    """Build a dataclass from the matching keys of a TOML table."""
    kwargs = {}
    for key, value in mapping.items():
        name = renames.get(key, key)
        if name not in cls.__dataclass_fields__:
            raise ValueError(f"unknown config key {key!r} for {cls.__name__}")
        kwargs[name] = value
    return cls(**kwargs)


def load_config(path) -> PipelineConfig:
    """Parse and validate a pipeline TOML file.

    The input corpus path is resolved relative to the config file and must
    exist. max_depth = 0 means unlimited (TOML has no null).
    """
    path = Path(path)
    with path.open("rb") as fh:
        raw = tomllib.load(fh)

    if "input" not in raw:
        raise ValueError(f"{path}: missing required key 'input'")
    input_path = Path(raw["input"])
    if not input_path.is_absolute():
        input_path = path.parent / input_path
    if not input_path.is_file():
        raise FileNotFoundError(f"{path}: input corpus does not exist: {input_path}")

    pre_raw = dict(raw.get("preprocess", {}))
    preprocess = PreprocessConfig(
        spell_correction=bool(pre_raw.pop("spell_correction", False)),
        stemming=bool(pre_raw.pop("stemming", True)),
        min_token_length=int(pre_raw.pop("min_token_length", 2)),
    )
    if pre_raw:
        raise ValueError(f"unknown [preprocess] keys: {sorted(pre_raw)}")

    classify_raw = dict(raw.get("classify", {}))
    if classify_raw.get("max_depth") == 0:
        classify_raw["max_depth"] = None

    concerns_raw = dict(raw.get("concerns", {}))
    significance = float(concerns_raw.pop("significance", 0.05))
    lexicon = (
        ConcernLexicon.from_mapping(concerns_raw) if concerns_raw else ConcernLexicon()
    )

    return PipelineConfig(
        input=input_path,
        seed=int(raw.get("seed", 7)),
        keywords=tuple(raw.get("keywords", ())),
        preprocess=preprocess,
        graph=_take(raw.get("graph", {}), GraphConfig),
        lda=_take(raw.get("lda", {}), LdaStageConfig),
        concern_lexicon=lexicon,
        significance=significance,
        classify=_take(classify_raw, ClassifyConfig),
    )
