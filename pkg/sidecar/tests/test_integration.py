"""Live-service contract checks: a real uvicorn process serves the sidecar
and the primary package's HTTP clients talk to it (the secondary acceptance
criterion)."""

import os
import signal
import subprocess
import sys
import time

import numpy as np
import pytest
import requests


@pytest.fixture(scope="module")
def live_sidecar():
    port = 8641
    env = dict(os.environ, SIDECAR_PORT=str(port), SIDECAR_EMBED_MODEL="hashed")
    proc = subprocess.Popen(
        [sys.executable, "-m", "punctext_sidecar.server"],
        env=env, stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
    base = f"http://127.0.0.1:{port}"
    try:
        for _ in range(100):
            try:
                if requests.get(f"{base}/healthz", timeout=1).ok:
                    break
            except requests.RequestException:
                time.sleep(0.1)
        else:
            raise RuntimeError("sidecar did not become healthy")
        yield base
    finally:
        proc.send_signal(signal.SIGTERM)
        proc.wait(timeout=10)


def test_live_embed_unit_norm_and_self_cosine(live_sidecar):
    body = requests.post(f"{live_sidecar}/embed",
                         json={"texts": ["a", "a"]}, timeout=10).json()
    a, b = (np.array(v) for v in body["vectors"])
    assert abs(np.linalg.norm(a) - 1.0) <= 1e-6
    assert abs(float(a @ b) - 1.0) <= 1e-6
    print("[PASS] live /embed returns unit-norm vectors with cosine(a,a)=1")


def test_live_recover_echoes_star_free_input(live_sidecar):
    text = "already complete sentence."
    body = requests.post(f"{live_sidecar}/recover",
                         json={"indicated": text}, timeout=10).json()
    assert body["restored"] == text
    print("[PASS] live /recover echoes star-free input verbatim")


def test_primary_similarity_through_live_sidecar(live_sidecar):
    from punctext.metrics import HttpEmbeddingProvider, sentence_similarity

    provider = HttpEmbeddingProvider(f"{live_sidecar}/embed")
    text = "the council approved the tariff within four weeks."
    value = sentence_similarity(text, text, provider)
    assert value == pytest.approx(1.0, abs=1e-6)
    print("[PASS] primary similarity through live sidecar equals 1.0")
