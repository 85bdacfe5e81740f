"""HTTP model service: sentence embeddings and LLM-backed star restoration.

Endpoints:
  POST /embed   {texts: [...]}                -> {vectors, dim, model_id}
  POST /recover {indicated, prompt_version}   -> {restored, model_id}
  GET  /healthz

The service is stateless across requests. Configuration comes from the
environment: SIDECAR_EMBED_MODEL ("hashed" or a sentence-transformers name),
SIDECAR_EMBED_DIM, SIDECAR_MAX_BATCH, SIDECAR_LLM_URL, SIDECAR_LLM_MODEL,
SIDECAR_LLM_TOKEN, SIDECAR_UPSTREAM_TIMEOUT, SIDECAR_PORT.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field

import numpy as np
import requests
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .embeddings import load_backend

PROMPT_V1 = (
    "You restore text. Replace every '*' with the missing character or "
    "characters (a '*' may also hide a space splitting two words). "
    "Return only the restored text, nothing else."
)
PROMPTS = {"v1": PROMPT_V1}

_FENCE = re.compile(r"^```[a-z]*\n(.*?)\n?```$", re.DOTALL)


@dataclass(frozen=True)
class SidecarConfig:
    embed_model: str = "hashed"
    embed_dim: int = 256
    max_batch: int = 64
    llm_url: str = ""
    llm_model: str = "gpt-3.5-turbo"
    llm_token: str = field(default="", repr=False)
    upstream_timeout: float = 30.0

    @classmethod
    def from_env(cls) -> "SidecarConfig":
        env = os.environ
        return cls(
            embed_model=env.get("SIDECAR_EMBED_MODEL", "hashed"),
            embed_dim=int(env.get("SIDECAR_EMBED_DIM", "256")),
            max_batch=int(env.get("SIDECAR_MAX_BATCH", "64")),
            llm_url=env.get("SIDECAR_LLM_URL", ""),
            llm_model=env.get("SIDECAR_LLM_MODEL", "gpt-3.5-turbo"),
            llm_token=env.get("SIDECAR_LLM_TOKEN", ""),
            upstream_timeout=float(env.get("SIDECAR_UPSTREAM_TIMEOUT", "30")),
        )


class EmbedRequest(BaseModel):
    texts: list[str]


class EmbedResponse(BaseModel):
    vectors: list[list[float]]
    dim: int
    model_id: str


class RecoverRequest(BaseModel):
    indicated: str
    prompt_version: str = "v1"


class RecoverResponse(BaseModel):
    restored: str
    model_id: str


def strip_markup(reply: str) -> str:
    """Remove code fences and symmetric quoting an LLM may wrap around text."""
    reply = reply.strip()
    fenced = _FENCE.match(reply)
    if fenced:
        reply = fenced.group(1).strip()
    if len(reply) >= 2 and reply[0] == reply[-1] and reply[0] in "\"'`":
        reply = reply[1:-1]
    return reply


def create_app(config: SidecarConfig | None = None) -> FastAPI:
    cfg = config or SidecarConfig.from_env()
    app = FastAPI(title="punctext sidecar")
    backend = load_backend(cfg.embed_model, cfg.embed_dim)

    @app.get("/healthz")
    def healthz():
        return {
            "status": "ok",
            "embed_model": backend.model_id if backend else None,
            "recover_upstream": bool(cfg.llm_url),
        }

    @app.post("/embed", response_model=EmbedResponse)
    def embed(request: EmbedRequest):
        if not request.texts:
            raise HTTPException(status_code=400, detail="texts is empty")
        if backend is None:
            raise HTTPException(status_code=503,
                                detail="embedding model is not loaded")
        chunks = [
            backend.encode(request.texts[i:i + cfg.max_batch])
            for i in range(0, len(request.texts), cfg.max_batch)
        ]
        vectors = np.concatenate(chunks, axis=0)
        return EmbedResponse(vectors=vectors.tolist(),
                             dim=int(vectors.shape[1]),
                             model_id=backend.model_id)

    @app.post("/recover", response_model=RecoverResponse)
    def recover(request: RecoverRequest):
        if request.prompt_version not in PROMPTS:
            raise HTTPException(
                status_code=400,
                detail=f"unsupported prompt_version {request.prompt_version!r}")
        if "*" not in request.indicated:
            return RecoverResponse(restored=request.indicated,
                                   model_id="echo")
        if not cfg.llm_url:
            raise HTTPException(status_code=502,
                                detail="no upstream model configured")
        headers = {"Content-Type": "application/json"}
        if cfg.llm_token:
            headers["Authorization"] = f"Bearer {cfg.llm_token}"
        body = {
            "model": cfg.llm_model,
            "temperature": 0,
            "messages": [
                {"role": "system",
                 "content": PROMPTS[request.prompt_version]},
                {"role": "user", "content": request.indicated},
            ],
        }
        try:
            resp = requests.post(cfg.llm_url, json=body, headers=headers,
                                 timeout=cfg.upstream_timeout)
            resp.raise_for_status()
            reply = resp.json()["choices"][0]["message"]["content"]
        except (requests.RequestException, KeyError, IndexError,
                TypeError, ValueError) as exc:
            raise HTTPException(status_code=502,
                                detail=f"upstream failure: {exc}") from exc
        restored = strip_markup(reply)
        if "*" in restored:
            raise HTTPException(status_code=502,
                                detail="upstream left '*' unresolved")
        return RecoverResponse(restored=restored, model_id=cfg.llm_model)

    return app


def main() -> None:
    import uvicorn

    port = int(os.environ.get("SIDECAR_PORT", "8600"))
    uvicorn.run(create_app(), host="0.0.0.0", port=port)


if __name__ == "__main__":
    main()
