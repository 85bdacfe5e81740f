"""Experiment sweeps over SNR x keep-ratio x filter-count grids.

Each trial transmits one corpus sentence twice: once with proposed filter
selection and once with a uniformly random control arm sharing the same
bank and noise seed. Records stream to a JSON-lines file as they complete;
aggregates (mean, standard error) per grid point land in a CSV.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..metrics import EvalRecord
from .config import RunConfig
from .pipeline import (PipelineContext, make_context, run_pipeline,
                       trial_seed, uniform_chooser)

RESULTS_SCHEMA_VERSION = 1

_WORKER_CTX: Optional[PipelineContext] = None


@dataclass(frozen=True)
class SweepResult:
    records_path: Path
    aggregate_path: Path
    n_records: int
    n_failures: int


def _run_trial(ctx: PipelineContext, keep: float, snr: Optional[float],
               m: int, trial: int) -> list[EvalRecord]:
    sentence_index = trial % len(ctx.sentences)
    sentence = ctx.sentences[sentence_index]
    ts = trial_seed(ctx.config.seed, keep, snr, m, trial)
    common = dict(keep_ratio=keep, snr_db=snr, num_filters=m, noise_seed=ts,
                  trial=trial, sentence_index=sentence_index)
    proposed = run_pipeline(ctx, sentence, arm="proposed", **common)
    control = run_pipeline(ctx, sentence, arm="random",
                           chooser=uniform_chooser(ts), **common)
    return [proposed, control]


def _init_worker(cfg: RunConfig) -> None:
    global _WORKER_CTX
    _WORKER_CTX = make_context(cfg)


def _worker_trial(args: tuple) -> list[dict]:
    keep, snr, m, trial = args
    assert _WORKER_CTX is not None
    return [r.to_dict() for r in _run_trial(_WORKER_CTX, keep, snr, m, trial)]


def _record_line(record: dict) -> str:
    payload = {"schema": RESULTS_SCHEMA_VERSION, **record}
    return json.dumps(payload, sort_keys=True)


def sweep(cfg: RunConfig) -> SweepResult:
    """Run the full grid; returns output paths and the failure count."""
    out_base = Path(cfg.output)
    out_base.parent.mkdir(parents=True, exist_ok=True)
    records_path = out_base.with_suffix(".jsonl")
    aggregate_path = out_base.with_suffix(".csv")

    grid = [(keep, snr, m)
            for keep in cfg.keep_ratio
            for snr in cfg.snr_db
            for m in cfg.num_filters]
    tasks = [(keep, snr, m, t) for keep, snr, m in grid
             for t in range(cfg.trials)]

    records: list[dict] = []
    with open(records_path, "w", encoding="utf-8") as fh:
        if cfg.workers > 1:
            with ProcessPoolExecutor(max_workers=cfg.workers,
                                     initializer=_init_worker,
                                     initargs=(cfg,)) as pool:
                for recs in pool.map(_worker_trial, tasks, chunksize=8):
                    for rec in recs:
                        fh.write(_record_line(rec) + "\n")
                        records.append(rec)
        else:
            ctx = make_context(cfg)
            for task in tasks:
                for rec in _run_trial(ctx, *task):
                    d = rec.to_dict()
                    fh.write(_record_line(d) + "\n")
                    records.append(d)

    n_failures = sum(1 for r in records if r["failed"])
    write_aggregate(records, aggregate_path)
    return SweepResult(records_path=records_path,
                       aggregate_path=aggregate_path,
                       n_records=len(records), n_failures=n_failures)


_AGG_METRICS = ("bleu", "char_accuracy", "word_accuracy",
                "symbols_per_character")


def aggregate_records(records: list[dict]) -> list[dict]:
    """Mean and standard error per (keep, snr, M, arm) grid point."""
    groups: dict[tuple, list[dict]] = {}
    for rec in records:
        key = (rec["keep_ratio"], rec["snr_db"], rec["num_filters"],
               rec["arm"], rec["backend"])
        groups.setdefault(key, []).append(rec)
    rows = []
    for key in sorted(groups, key=lambda k: tuple(str(x) for x in k)):
        recs = groups[key]
        row = {
            "keep_ratio": key[0], "snr_db": key[1], "num_filters": key[2],
            "arm": key[3], "backend": key[4], "trials": len(recs),
            "failures": sum(1 for r in recs if r["failed"]),
        }
        for metric in _AGG_METRICS:
            values = [r[metric] for r in recs]
            mean = sum(values) / len(values)
            if len(values) > 1:
                var = sum((v - mean) ** 2 for v in values) / (len(values) - 1)
                stderr = math.sqrt(var / len(values))
            else:
                stderr = 0.0
            row[f"{metric}_mean"] = f"{mean:.6f}"
            row[f"{metric}_stderr"] = f"{stderr:.6f}"
        sims = [r["similarity"] for r in recs if r["similarity"] is not None]
        row["similarity_mean"] = f"{sum(sims) / len(sims):.6f}" if sims else ""
        rows.append(row)
    return rows


def write_aggregate(records: list[dict], path: Path) -> None:
    rows = aggregate_records(records)
    if not rows:
        path.write_text("", encoding="utf-8")
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
