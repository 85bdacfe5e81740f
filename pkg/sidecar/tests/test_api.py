import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import numpy as np
import pytest
from fastapi.testclient import TestClient

from punctext_sidecar.server import SidecarConfig, create_app, strip_markup


@pytest.fixture()
def client():
    return TestClient(create_app(SidecarConfig()))


def test_healthz(client):
    body = client.get("/healthz").json()
    assert body["status"] == "ok"
    assert body["embed_model"].startswith("hashed-ngram")


def test_embed_identical_texts_identical_vectors(client):
    resp = client.post("/embed", json={"texts": ["a", "a"]})
    assert resp.status_code == 200
    body = resp.json()
    assert body["vectors"][0] == body["vectors"][1]
    assert len(body["vectors"]) == 2
    assert body["dim"] == len(body["vectors"][0])


def test_embed_vectors_are_unit_norm(client):
    body = client.post("/embed", json={
        "texts": ["the harbor was quiet", "another sentence entirely"],
    }).json()
    for vec in body["vectors"]:
        assert abs(np.linalg.norm(vec) - 1.0) <= 1e-6


def test_embed_self_cosine_is_one(client):
    body = client.post("/embed", json={"texts": ["same text", "same text"]}).json()
    a, b = (np.array(v) for v in body["vectors"])
    assert abs(float(a @ b) - 1.0) <= 1e-6


def test_embed_empty_input_rejected(client):
    assert client.post("/embed", json={"texts": []}).status_code == 400


def test_embed_batches_above_cap_are_chunked():
    app = create_app(SidecarConfig(max_batch=4))
    client = TestClient(app)
    texts = [f"text {i}" for i in range(11)]
    body = client.post("/embed", json={"texts": texts}).json()
    assert len(body["vectors"]) == 11


def test_embed_unloadable_model_gives_503():
    app = create_app(SidecarConfig(embed_model="no/such-model-anywhere"))
    client = TestClient(app)
    resp = client.post("/embed", json={"texts": ["x"]})
    assert resp.status_code == 503


def test_recover_star_free_echoes_verbatim(client):
    text = "nothing to restore here."
    resp = client.post("/recover", json={"indicated": text})
    assert resp.status_code == 200
    assert resp.json()["restored"] == text


def test_recover_unsupported_prompt_version(client):
    resp = client.post("/recover", json={"indicated": "a*b",
                                         "prompt_version": "v99"})
    assert resp.status_code == 400


def test_recover_without_upstream_is_502(client):
    resp = client.post("/recover", json={"indicated": "c*ramel"})
    assert resp.status_code == 502


class _UpstreamHandler(BaseHTTPRequestHandler):
    behavior = "restore"

    def do_POST(self):
        length = int(self.headers["Content-Length"])
        body = json.loads(self.rfile.read(length))
        text = body["messages"][-1]["content"]
        if type(self).behavior == "down":
            self.send_response(500)
            self.end_headers()
            return
        if type(self).behavior == "restore":
            reply = text.replace("c*ramel", "caramel")
        elif type(self).behavior == "fenced":
            reply = "```text\n" + text.replace("c*ramel", "caramel") + "\n```"
        elif type(self).behavior == "starry":
            reply = text
        data = json.dumps(
            {"choices": [{"message": {"content": reply}}]}).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, *args):
        pass


@pytest.fixture()
def upstream():
    server = HTTPServer(("127.0.0.1", 0), _UpstreamHandler)
    threading.Thread(target=server.serve_forever, daemon=True).start()
    yield f"http://127.0.0.1:{server.server_port}/v1/chat/completions"
    server.shutdown()


def _client_with_upstream(url):
    return TestClient(create_app(SidecarConfig(llm_url=url,
                                               upstream_timeout=5.0)))


def test_recover_via_upstream(upstream):
    _UpstreamHandler.behavior = "restore"
    client = _client_with_upstream(upstream)
    resp = client.post("/recover", json={"indicated": "c*ramel"})
    assert resp.status_code == 200
    assert resp.json()["restored"] == "caramel"


def test_recover_strips_markup(upstream):
    _UpstreamHandler.behavior = "fenced"
    client = _client_with_upstream(upstream)
    resp = client.post("/recover", json={"indicated": "c*ramel"})
    assert resp.json()["restored"] == "caramel"


def test_recover_unresolved_stars_is_502(upstream):
    _UpstreamHandler.behavior = "starry"
    client = _client_with_upstream(upstream)
    assert client.post("/recover",
                       json={"indicated": "c*ramel"}).status_code == 502


def test_recover_upstream_error_is_502(upstream):
    _UpstreamHandler.behavior = "down"
    client = _client_with_upstream(upstream)
    assert client.post("/recover",
                       json={"indicated": "c*ramel"}).status_code == 502


def test_strip_markup_variants():
    assert strip_markup("plain") == "plain"
    assert strip_markup("\"quoted\"") == "quoted"
    assert strip_markup("```\nfenced text\n```") == "fenced text"
    assert strip_markup("```text\nfenced\n```") == "fenced"
