"""Single-trial execution of the transmit/recover/score chain and the
word- and character-omission baselines."""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .. import phy
from ..corpus import (Dictionary, Word, bundled_corpus,
                      bundled_dictionary, load_corpus, load_dictionary,
                      tokenize)
from ..errors import BrokenFrame, EmptyInput, ProviderUnavailable
from ..importance import (FilterBank, ImportanceScorer, ScoreParams,
                          build_filter_bank, puncture_text)
from ..metrics import (EvalRecord, HttpEmbeddingProvider, bleu,
                       char_word_accuracy, sentence_similarity)
from ..recovery import (IndicatedText, LlmEndpointConfig, indicate,
                        recover_deterministic, recover_llm)
from ..spelling import WordIndex
from .config import RunConfig

Chooser = Callable[[np.ndarray, FilterBank], int]


@dataclass
class PipelineContext:
    """Shared immutable state for a run: corpus, index, scorer, code."""

    config: RunConfig
    sentences: list[str]
    dictionary: Dictionary
    index: WordIndex
    scorer: ImportanceScorer
    code: phy.LdpcCode
    llm_cfg: Optional[LlmEndpointConfig]
    embed_provider: Optional[HttpEmbeddingProvider]
    _banks: dict = None  # type: ignore[assignment]

    def bank(self, num_filters: int, keep_ratio: float) -> FilterBank:
        if self._banks is None:
            self._banks = {}
        key = (num_filters, keep_ratio)
        if key not in self._banks:
            self._banks[key] = build_filter_bank(
                self.config.seed, num_filters, self.config.window_len,
                keep_ratio)
        return self._banks[key]

    def recover(self, m: IndicatedText | str):
        if self.llm_cfg is not None:
            return recover_llm(m, self.llm_cfg, self.index)
        return recover_deterministic(m, self.index)


def make_context(cfg: RunConfig) -> PipelineContext:
    dictionary = (load_dictionary(cfg.dictionary) if cfg.dictionary
                  else bundled_dictionary())
    sentences = load_corpus(cfg.corpus) if cfg.corpus else bundled_corpus()
    if not sentences:
        raise ValueError("corpus contains no usable sentences")
    index = WordIndex(dictionary)
    params = ScoreParams(alpha=cfg.alpha, beta=cfg.beta, gamma=cfg.gamma,
                         delta=cfg.delta)
    llm_cfg = None
    if cfg.backend == "llm":
        llm_url = cfg.resolved_llm_url()
        if not llm_url:
            raise ValueError("llm backend requires llm_url "
                             "(config key or PUNCTEXT_LLM_URL)")
        llm_cfg = LlmEndpointConfig(
            url=llm_url, model=cfg.llm_model, token_env=cfg.llm_token_env,
            max_retries=cfg.max_retries, max_concurrency=cfg.max_concurrency)
    embed_url = cfg.resolved_embed_url()
    provider = HttpEmbeddingProvider(embed_url) if embed_url else None
    return PipelineContext(
        config=cfg, sentences=sentences, dictionary=dictionary, index=index,
        scorer=ImportanceScorer(index, params), code=phy.bundled_code(),
        llm_cfg=llm_cfg, embed_provider=provider)


def trial_seed(run_seed: int, keep_ratio: float, snr_db: Optional[float],
               num_filters: int, trial: int) -> int:
    """Stable per-trial seed so arms and reruns stay paired."""
    key = f"{run_seed}|{keep_ratio}|{snr_db}|{num_filters}|{trial}"
    return int.from_bytes(hashlib.sha256(key.encode()).digest()[:8], "big")


def uniform_chooser(seed: int) -> Chooser:
    """Control-arm selection: uniformly random index per window."""
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed,
                                                       spawn_key=(17,)))

    def choose(_scores: np.ndarray, bank: FilterBank) -> int:
        return int(rng.integers(0, bank.num_filters))

    return choose


def _score(ctx: PipelineContext, reference: str, candidate: str,
           **meta) -> EvalRecord:
    try:
        bleu_score = bleu(reference, candidate)
    except EmptyInput:
        bleu_score = 0.0
    char_acc, word_acc = char_word_accuracy(reference, candidate)
    similarity = None
    if ctx.embed_provider is not None:
        try:
            similarity = sentence_similarity(reference, candidate,
                                             ctx.embed_provider)
        except ProviderUnavailable:
            similarity = None
    return EvalRecord(bleu=bleu_score, char_accuracy=char_acc,
                      word_accuracy=word_acc, similarity=similarity, **meta)


def _failure(ctx: PipelineContext, **meta) -> EvalRecord:
    return EvalRecord(bleu=0.0, char_accuracy=0.0, word_accuracy=0.0,
                      similarity=None, failed=True, **meta)


def run_pipeline(ctx: PipelineContext, sentence: str, *,
                 keep_ratio: float, snr_db: Optional[float],
                 num_filters: int, noise_seed: int,
                 chooser: Optional[Chooser] = None, arm: str = "proposed",
                 symbol_budget: Optional[int] = None,
                 trial: int = 0, sentence_index: int = 0) -> EvalRecord:
    """Puncture, transmit, indicate, recover, and score one sentence."""
    cfg = ctx.config
    meta = dict(snr_db=snr_db, keep_ratio=keep_ratio, num_filters=num_filters,
                backend=cfg.backend, seed=noise_seed, arm=arm, trial=trial,
                sentence_index=sentence_index)
    tok = tokenize(sentence)
    bank = ctx.bank(num_filters, keep_ratio)
    plan = puncture_text(tok, ctx.scorer, bank, chooser=chooser)
    frame = phy.Frame(
        window_count=plan.window_count,
        keep_ratio_code=phy.keep_ratio_to_code(keep_ratio),
        m_log2=(num_filters - 1).bit_length(),
        tail_unpunctured=plan.tail_unpunctured,
        filter_indices=plan.filter_indices,
        payload=plan.payload,
    )
    tx_bits = phy.serialize(frame)
    link = phy.transmit_frame_bits(
        tx_bits, ctx.code,
        phy.ChannelConfig(snr_db=snr_db, noise_seed=noise_seed),
        symbol_budget=symbol_budget)
    spc = link.symbol_count / max(len(sentence), 1)
    meta["symbols_per_character"] = spc
    try:
        rx_frame = phy.deserialize(link.bits, num_filters=num_filters,
                                   keep_ratio=keep_ratio,
                                   window_len=cfg.window_len)
        m = indicate(rx_frame.payload, rx_frame.filter_indices, bank,
                     rx_frame.tail_unpunctured)
    except BrokenFrame:
        return _failure(ctx, **meta)
    recovered = ctx.recover(m)
    return _score(ctx, sentence, recovered.text, **meta)


def run_word_omission_baseline(ctx: PipelineContext, sentence: str,
                               remaining_word_ratio: float, seed: int, *,
                               trial: int = 0, sentence_index: int = 0
                               ) -> tuple[EvalRecord, int]:
    """Randomly star out whole words (noiseless) and recover; returns the
    record plus the omitted-character budget for matched comparisons."""
    if not 0 < remaining_word_ratio <= 1:
        raise ValueError("remaining_word_ratio must be in (0, 1]")
    tok = tokenize(sentence)
    words = [t for t in tok.tokens if isinstance(t, Word)]
    # floor((1 - ratio) * L), robust to binary-fraction fuzz (0.1 * 20 == 2)
    n_omit = math.floor(round((1 - remaining_word_ratio) * len(words), 9))
    rng = np.random.default_rng(np.random.SeedSequence(entropy=seed,
                                                       spawn_key=(29,)))
    chosen = sorted(rng.choice(len(words), size=n_omit, replace=False)) \
        if n_omit else []
    omitted_chars = sum(words[i].length for i in chosen)
    chars = list(sentence)
    for i in reversed(chosen):
        w = words[i]
        chars[w.start:w.start + w.length] = ["*"]
    m = "".join(chars)
    recovered = ctx.recover(m)
    record = _score(
        ctx, sentence, recovered.text, snr_db=None,
        keep_ratio=remaining_word_ratio, num_filters=1, backend=ctx.config.backend,
        seed=seed, arm="word-omission", trial=trial,
        sentence_index=sentence_index, symbols_per_character=0.0)
    return record, omitted_chars


def run_character_omission_matched(ctx: PipelineContext, sentence: str,
                                   omit_count: int, *, trial: int = 0,
                                   sentence_index: int = 0) -> EvalRecord:
    """Star out exactly `omit_count` characters chosen by importance score
    (most negative first, ties to the lowest index), then recover."""
    tok = tokenize(sentence)
    scores = ctx.scorer.score_text(tok)
    omit_count = min(omit_count, len(sentence))
    order = sorted(range(len(sentence)), key=lambda i: (scores[i], i))
    chosen = set(order[:omit_count])
    m = "".join("*" if i in chosen else ch for i, ch in enumerate(sentence))
    recovered = ctx.recover(m)
    return _score(
        ctx, sentence, recovered.text, snr_db=None, keep_ratio=1.0,
        num_filters=1, backend=ctx.config.backend, seed=0,
        arm="char-omission", trial=trial, sentence_index=sentence_index,
        symbols_per_character=0.0)
