"""Receiver-side reconstruction: star indication and recovery backends.

The indicator re-inserts '*' at the punctured positions using the shared
filter bank and the received filter indices. Recovery is pluggable: a
deterministic dictionary backend (highest-frequency candidate, word-pair
splits allowed) and an HTTP chat-completion backend that falls back to the
deterministic one when the endpoint misbehaves.
"""

from __future__ import annotations

import logging
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import requests

from .errors import BrokenFrame, EndpointUnavailable, MalformedReply
from .importance import FilterBank
from .spelling import WILDCARD, WordIndex

logger = logging.getLogger(__name__)

_STAR_TOKEN = re.compile(r"[A-Za-z*]+")
_SENTENCE_END = re.compile(r"[.!?]\s*\Z")

PROMPT_V1 = (
    "You restore text. Replace every '*' with the missing character or "
    "characters (a '*' may also hide a space splitting two words). "
    "Return only the restored text, nothing else."
)
PROMPTS = {"v1": PROMPT_V1}


@dataclass(frozen=True)
class IndicatedText:
    """Received characters with '*' marking every punctured position."""

    text: str
    star_positions: tuple[int, ...]
    window_indices: tuple[int, ...]
    tail_unpunctured: bool

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class StarResolution:
    position: int
    replacement: str  # '' when the star was deleted, else letter(s) or space
    backend: str
    pool_size: int


@dataclass(frozen=True)
class RecoveredText:
    text: str
    resolutions: tuple[StarResolution, ...]
    backend: str
    fallback: bool = False


def indicate(payload: str, indices: tuple[int, ...], bank: FilterBank,
             tail_unpunctured: bool) -> IndicatedText:
    """Insert '*' at each filter-zero position, restoring window alignment.

    Raises BrokenFrame when the payload length is inconsistent with the
    popcounts of the indexed filters (e.g. an undetected decode error).
    """
    full_windows = len(indices) - (1 if tail_unpunctured else 0)
    if full_windows < 0:
        raise BrokenFrame(0, len(indices))
    expected = full_windows * bank.ones
    if len(payload) < expected:
        raise BrokenFrame(expected, len(payload))
    tail = payload[expected:]
    if tail_unpunctured:
        if not 1 <= len(tail) < bank.window_len:
            raise BrokenFrame(f"tail in [1, {bank.window_len})", len(tail))
    elif tail:
        raise BrokenFrame(expected, len(payload))

    chars: list[str] = []
    stars: list[int] = []
    pos = 0
    offset = 0
    for w in range(full_windows):
        filt = bank.filters[indices[w] % bank.num_filters]
        for bit in filt:
            if bit:
                chars.append(payload[pos])
                pos += 1
            else:
                chars.append(WILDCARD)
                stars.append(offset)
            offset += 1
    chars.append(tail)
    return IndicatedText(
        text="".join(chars),
        star_positions=tuple(stars),
        window_indices=tuple(indices),
        tail_unpunctured=tail_unpunctured,
    )


def _match_fills(token_lower: str, resolved: str) -> list[str] | None:
    """Per-star replacement strings aligning `resolved` to the token."""
    pattern = "".join("(.?)" if ch == WILDCARD else re.escape(ch)
                      for ch in token_lower)
    m = re.fullmatch(pattern, resolved)
    if m is None:
        return None
    return list(m.groups())


def _title_case_start(text: str, token_start: int) -> bool:
    if token_start == 0:
        return True
    return bool(_SENTENCE_END.search(text[:token_start]))


def _resolve_token(token: str, text: str, start: int, index: WordIndex,
                   backend: str) -> tuple[str, list[StarResolution]]:
    low = token.lower()
    k = low.count(WILDCARD)
    pool: list[tuple[int, str]] = []
    for w in index.candidates(low, k):
        pool.append((index.dictionary.freq(w), w))
    for u, v in index.split_pairs(low):
        pool.append((min(index.dictionary.freq(u), index.dictionary.freq(v)),
                     f"{u} {v}"))
    star_positions = [i for i, ch in enumerate(token) if ch == WILDCARD]

    fills: list[str] | None = None
    if pool:
        pool.sort(key=lambda fw: (-fw[0], fw[1]))
        fills = _match_fills(low, pool[0][1])
    if fills is None:
        fills = [""] * k  # empty pool (or alignment failure): delete the stars

    out = []
    fill_iter = iter(fills)
    resolutions = []
    for i, ch in enumerate(token):
        if ch != WILDCARD:
            out.append(ch)
            continue
        fill = next(fill_iter)
        if fill.isalpha() and i == 0 and _title_case_start(text, start) \
                and token[1:].islower():
            fill = fill.upper()
        out.append(fill)
        resolutions.append(StarResolution(
            position=start + i, replacement=fill, backend=backend,
            pool_size=len(pool)))
    return "".join(out), resolutions


def recover_deterministic(m: IndicatedText | str,
                          index: WordIndex) -> RecoveredText:
    """Resolve every '*' from the dictionary: per star-bearing token, the
    highest-frequency candidate among whole-word completions and word-pair
    splits wins (split pairs score as the rarer word); an empty pool deletes
    the stars."""
    text = m.text if isinstance(m, IndicatedText) else m
    pieces: list[str] = []
    resolutions: list[StarResolution] = []
    pos = 0
    for match in _STAR_TOKEN.finditer(text):
        pieces.append(text[pos:match.start()])
        token = match.group()
        if WILDCARD in token:
            resolved, res = _resolve_token(token, text, match.start(), index,
                                           "deterministic")
            pieces.append(resolved)
            resolutions.extend(res)
        else:
            pieces.append(token)
        pos = match.end()
    pieces.append(text[pos:])
    return RecoveredText(text="".join(pieces),
                         resolutions=tuple(resolutions),
                         backend="deterministic")


@dataclass(frozen=True)
class LlmEndpointConfig:
    url: str
    model: str
    token_env: str = "PUNCTEXT_LLM_TOKEN"
    timeout: float = 30.0
    max_retries: int = 2
    max_concurrency: int = 4
    prompt_version: str = "v1"


def _llm_request(text: str, cfg: LlmEndpointConfig) -> str:
    headers = {"Content-Type": "application/json"}
    token = os.environ.get(cfg.token_env)
    if token:
        headers["Authorization"] = f"Bearer {token}"
    body = {
        "model": cfg.model,
        "temperature": 0,
        "messages": [
            {"role": "system", "content": PROMPTS[cfg.prompt_version]},
            {"role": "user", "content": text},
        ],
    }
    try:
        resp = requests.post(cfg.url, json=body, headers=headers,
                             timeout=cfg.timeout)
    except requests.RequestException as exc:
        raise EndpointUnavailable(str(exc)) from exc
    if resp.status_code != 200:
        raise EndpointUnavailable(f"status {resp.status_code}")
    try:
        return resp.json()["choices"][0]["message"]["content"]
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise MalformedReply(f"unparseable reply: {exc}") from exc


def _validate_reply(indicated: str, reply: str) -> str:
    reply = reply.strip()
    if WILDCARD in reply:
        raise MalformedReply("reply still contains '*'")
    if WILDCARD not in indicated:
        if reply != indicated:
            raise MalformedReply("star-free input must be echoed verbatim")
        return reply
    if abs(len(reply) - len(indicated)) > 0.1 * len(indicated):
        raise MalformedReply("reply length outside +-10% of the input")
    return reply


def _llm_resolutions(indicated: str, reply: str) -> tuple[StarResolution, ...]:
    fills = _match_fills(indicated.lower(), reply.lower())
    out = []
    stars = [i for i, ch in enumerate(indicated) if ch == WILDCARD]
    for n, pos in enumerate(stars):
        rep = fills[n] if fills is not None else ""
        out.append(StarResolution(position=pos, replacement=rep,
                                  backend="llm", pool_size=0))
    return tuple(out)


def recover_llm(m: IndicatedText | str, cfg: LlmEndpointConfig,
                index: WordIndex) -> RecoveredText:
    """Ask the configured chat-completion endpoint to restore the text;
    retries on malformed replies and falls back to the deterministic
    backend when the endpoint stays unusable."""
    text = m.text if isinstance(m, IndicatedText) else m
    delay = 0.5
    for attempt in range(cfg.max_retries + 1):
        try:
            reply = _validate_reply(text, _llm_request(text, cfg))
            return RecoveredText(text=reply,
                                 resolutions=_llm_resolutions(text, reply),
                                 backend="llm")
        except (EndpointUnavailable, MalformedReply) as exc:
            logger.warning("recovery endpoint attempt %d failed: %s",
                           attempt + 1, exc)
            if attempt < cfg.max_retries:
                time.sleep(delay)
                delay *= 2
    fallback = recover_deterministic(m, index)
    return RecoveredText(text=fallback.text, resolutions=fallback.resolutions,
                         backend="deterministic", fallback=True)


def recover_llm_batch(texts: list[IndicatedText | str],
                      cfg: LlmEndpointConfig,
                      index: WordIndex) -> list[RecoveredText]:
    """Bounded-concurrency batch recovery; results joined in input order."""
    with ThreadPoolExecutor(max_workers=cfg.max_concurrency) as pool:
        return list(pool.map(lambda t: recover_llm(t, cfg, index), texts))
