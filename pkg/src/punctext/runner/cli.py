"""Command-line interface.

Subcommands: `run` (experiment sweep), `score` (per-character scores for a
word), `puncture`/`indicate`/`recover` (single-text debugging), and `bench`
(lookup throughput).
"""

from __future__ import annotations

import argparse
import random
import string
import sys
import time

from ..corpus import bundled_dictionary, tokenize
from ..importance import (ImportanceScorer, ScoreParams, build_filter_bank,
                          nonword_character_score, puncture_text,
                          word_character_score)
from ..recovery import indicate, recover_deterministic
from ..spelling import WordIndex
from .config import RunConfig, config_from_mapping, load_config
from .sweep import sweep


def _add_score_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", type=float, default=3.0)
    parser.add_argument("--beta", type=float, default=2.0)
    parser.add_argument("--gamma", type=float, default=1.0)
    parser.add_argument("--delta", type=float, default=2.0)


def _cmd_run(args: argparse.Namespace) -> int:
    cfg = load_config(args.config) if args.config else RunConfig()
    overrides = {}
    for key in ("corpus", "dictionary", "seed", "trials", "backend",
                "output", "workers", "keep_ratio", "snr_db", "num_filters",
                "llm_url", "embed_url"):
        value = getattr(args, key)
        if value is not None:
            overrides[key] = value
    cfg = config_from_mapping(overrides, base=cfg)
    result = sweep(cfg)
    print(f"wrote {result.n_records} records to {result.records_path}")
    print(f"aggregates in {result.aggregate_path}")
    if result.n_failures:
        print(f"{result.n_failures} trials failed", file=sys.stderr)
        return 1
    return 0


def _cmd_score(args: argparse.Namespace) -> int:
    index = WordIndex(bundled_dictionary())
    params = ScoreParams(alpha=args.alpha, beta=args.beta, gamma=args.gamma,
                         delta=args.delta)
    word = args.word.lower()
    scores = word_character_score(word, index, params)
    for ch, s in zip(word, scores):
        print(f"  {ch}  {s: .4f}")
    trailing = nonword_character_score(word, index, params)
    print(f"  (following non-word character) {trailing: .4f}")
    return 0


def _cmd_puncture(args: argparse.Namespace) -> int:
    index = WordIndex(bundled_dictionary())
    scorer = ImportanceScorer(index, ScoreParams(
        alpha=args.alpha, beta=args.beta, gamma=args.gamma, delta=args.delta))
    bank = build_filter_bank(args.seed, args.num_filters, args.window_len,
                             args.keep_ratio)
    plan = puncture_text(tokenize(args.text), scorer, bank)
    print(plan.payload)
    print("filter indices:", ",".join(map(str, plan.filter_indices)))
    if plan.tail_unpunctured:
        print("tail window transmitted unpunctured")
    return 0


def _cmd_indicate(args: argparse.Namespace) -> int:
    bank = build_filter_bank(args.seed, args.num_filters, args.window_len,
                             args.keep_ratio)
    indices = tuple(int(i) for i in args.indices.split(","))
    m = indicate(args.payload, indices, bank, args.tail)
    print(m.text)
    return 0


def _cmd_recover(args: argparse.Namespace) -> int:
    index = WordIndex(bundled_dictionary())
    result = recover_deterministic(args.text, index)
    print(result.text)
    for res in result.resolutions:
        rep = res.replacement or "(deleted)"
        print(f"  position {res.position}: {rep!r}  "
              f"candidates={res.pool_size}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    index = WordIndex(bundled_dictionary())
    rng = random.Random(args.seed)
    patterns = []
    for _ in range(args.queries):
        length = rng.randint(3, 8)
        chars = [rng.choice(string.ascii_lowercase) for _ in range(length)]
        for pos in rng.sample(range(length), rng.randint(0, min(2, length))):
            chars[pos] = "*"
        patterns.append("".join(chars))
    for d in (1, 2):
        start = time.perf_counter()
        total = sum(index.candidates(p, d).K for p in patterns)
        elapsed = time.perf_counter() - start
        print(f"d={d}: {args.queries / elapsed:8.0f} queries/s "
              f"({total} candidates over {args.queries} queries)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="punctext",
        description="Punctured text transmission simulator")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run an experiment sweep")
    p_run.add_argument("-c", "--config", help="key = value configuration file")
    for flag in ("corpus", "dictionary", "backend", "output", "llm_url",
                 "embed_url", "keep_ratio", "snr_db", "num_filters"):
        p_run.add_argument(f"--{flag.replace('_', '-')}", dest=flag)
    for flag in ("seed", "trials", "workers"):
        p_run.add_argument(f"--{flag}", dest=flag)
    p_run.set_defaults(func=_cmd_run)

    p_score = sub.add_parser("score", help="per-character scores for a word")
    p_score.add_argument("word")
    _add_score_params(p_score)
    p_score.set_defaults(func=_cmd_score)

    p_punct = sub.add_parser("puncture", help="puncture a text")
    p_punct.add_argument("text")
    p_punct.add_argument("--keep-ratio", type=float, default=0.9)
    p_punct.add_argument("--num-filters", type=int, default=64)
    p_punct.add_argument("--window-len", type=int, default=40)
    p_punct.add_argument("--seed", type=int, default=1)
    _add_score_params(p_punct)
    p_punct.set_defaults(func=_cmd_puncture)

    p_ind = sub.add_parser("indicate", help="re-insert '*' markers")
    p_ind.add_argument("payload")
    p_ind.add_argument("--indices", required=True,
                       help="comma-separated filter indices")
    p_ind.add_argument("--tail", action="store_true",
                       help="last window is an unpunctured tail")
    p_ind.add_argument("--keep-ratio", type=float, default=0.9)
    p_ind.add_argument("--num-filters", type=int, default=64)
    p_ind.add_argument("--window-len", type=int, default=40)
    p_ind.add_argument("--seed", type=int, default=1)
    p_ind.set_defaults(func=_cmd_indicate)

    p_rec = sub.add_parser("recover", help="resolve '*' markers")
    p_rec.add_argument("text")
    p_rec.set_defaults(func=_cmd_recover)

    p_bench = sub.add_parser("bench", help="lookup throughput")
    p_bench.add_argument("--queries", type=int, default=1000)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
