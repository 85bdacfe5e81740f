"""Experiment orchestration: configuration, pipelines, sweeps, CLI."""

from .config import RunConfig, config_from_mapping, load_config
from .pipeline import (PipelineContext, make_context, run_pipeline,
                       run_character_omission_matched,
                       run_word_omission_baseline, trial_seed,
                       uniform_chooser)
from .sweep import SweepResult, aggregate_records, sweep

__all__ = [
    "RunConfig", "config_from_mapping", "load_config", "PipelineContext",
    "make_context", "run_pipeline", "run_character_omission_matched",
    "run_word_omission_baseline", "trial_seed", "uniform_chooser",
    "SweepResult", "aggregate_records", "sweep",
]
