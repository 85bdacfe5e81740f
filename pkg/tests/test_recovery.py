import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer

import numpy as np
import pytest

from punctext.errors import BrokenFrame
from punctext.importance import FilterBank, build_filter_bank, puncture
from punctext.recovery import (IndicatedText, LlmEndpointConfig, indicate,
                               recover_deterministic, recover_llm,
                               recover_llm_batch)


def single_filter_bank(mask, keep_ratio=None):
    filters = np.array([mask], dtype=np.uint8)
    keep = keep_ratio if keep_ratio is not None else float(np.mean(mask))
    return FilterBank(filters=filters, seed=0, keep_ratio=keep)


def test_indicate_reinserts_star():
    bank = single_filter_bank([1, 0, 1, 1, 1, 1, 1])
    m = indicate("cramel", (0,), bank, tail_unpunctured=False)
    assert m.text == "c*ramel"
    assert m.star_positions == (1,)


def test_indicate_all_ones_identity():
    bank = single_filter_bank([1, 1, 1, 1])
    m = indicate("abcd", (0,), bank, tail_unpunctured=False)
    assert m.text == "abcd" and m.star_positions == ()


def test_indicate_inverts_puncture():
    rng = np.random.default_rng(4)
    bank = build_filter_bank(seed=8, num_filters=16, window_len=12,
                             keep_ratio=0.75)
    window = "abcdefghijkl"
    for idx in range(bank.num_filters):
        kept = puncture(window, bank.filters[idx])
        m = indicate(kept, (idx,), bank, tail_unpunctured=False)
        zeros = tuple(int(i) for i in np.flatnonzero(bank.filters[idx] == 0))
        assert m.star_positions == zeros
        assert m.text.replace("*", "") == kept


def test_indicate_with_unpunctured_tail():
    bank = single_filter_bank([1, 0, 1, 0], keep_ratio=0.5)
    m = indicate("ac" + "xyz", (0, 0), bank, tail_unpunctured=True)
    assert m.text == "a*c*xyz"
    assert m.tail_unpunctured


def test_indicate_count_mismatch_raises():
    bank = single_filter_bank([1, 0, 1, 1])
    with pytest.raises(BrokenFrame):
        indicate("ab", (0,), bank, tail_unpunctured=False)   # too short
    with pytest.raises(BrokenFrame):
        indicate("abcd", (0,), bank, tail_unpunctured=False)  # leftover
    with pytest.raises(BrokenFrame):
        indicate("abc", (0, 0), bank, tail_unpunctured=True)  # empty tail


def test_recover_caramel(index):
    m = IndicatedText(text="c*ramel", star_positions=(1,), window_indices=(0,),
                      tail_unpunctured=False)
    out = recover_deterministic(m, index)
    assert out.text == "caramel"
    assert out.resolutions[0].replacement == "a"
    assert out.resolutions[0].pool_size >= 1


def test_recover_without_stars_is_identity(index):
    out = recover_deterministic("plain text stays.", index)
    assert out.text == "plain text stays."
    assert out.resolutions == ()


def test_recover_space_split(index):
    out = recover_deterministic("the*cat", index)
    assert out.text == "the cat"
    assert out.resolutions[0].replacement == " "


def test_recover_empty_pool_deletes_stars(index):
    out = recover_deterministic("qz*qk", index)
    assert out.text == "qzqk"
    assert out.resolutions[0].replacement == ""
    assert out.resolutions[0].pool_size == 0


def test_recover_prefers_frequency(tiny_dictionary):
    from punctext.spelling import WordIndex
    idx = WordIndex(tiny_dictionary)
    out = recover_deterministic("c*t", idx)
    assert out.text == "cat"  # highest frequency among cat/cut/cot


def test_recover_star_conservation(index):
    text = "th* c*uncil app*oved the*tariff within f*ur wee*s."
    out = recover_deterministic(text, index)
    stars = [i for i, ch in enumerate(text) if ch == "*"]
    assert sorted(r.position for r in out.resolutions) == stars
    assert "*" not in out.text


def test_recover_title_case_at_sentence_start(index):
    out = recover_deterministic("*he council met. *he vote passed.", index)
    assert out.text.startswith("The")
    assert ". The vote" in out.text


def test_recover_preserves_non_star_characters(index):
    text = "The c*uncil MET at Dawn."
    out = recover_deterministic(text, index)
    rebuilt = list(out.text)
    assert out.text == "The council MET at Dawn."
    for i, ch in enumerate(text):
        if ch != "*":
            assert ch in out.text  # original casing retained
    assert rebuilt[5] == "o"


def test_recover_null_channel_identity(index, scorer, corpus):
    # keep ratio 1: puncture then indicate is the identity, recovery is exact
    bank = build_filter_bank(seed=2, num_filters=1, window_len=40,
                             keep_ratio=1.0)
    sentence = corpus[3]
    from punctext.corpus import tokenize
    from punctext.importance import puncture_text
    plan = puncture_text(tokenize(sentence), scorer, bank)
    full = plan.window_count - (1 if plan.tail_unpunctured else 0)
    m = indicate(plan.payload, plan.filter_indices, bank,
                 plan.tail_unpunctured)
    assert m.text == sentence
    out = recover_deterministic(m, index)
    assert out.text == sentence


def test_recover_unique_candidate_restores_exactly(index, scorer):
    # tokens with a single candidate must be restored verbatim
    word = "summer"
    m = "summ*r"
    out = recover_deterministic(m, index)
    assert out.text == word
    assert out.resolutions[0].pool_size == 1


# --- LLM backend -------------------------------------------------------------


class _StubHandler(BaseHTTPRequestHandler):
    behavior = "echo"
    calls = 0

    def do_POST(self):
        type(self).calls += 1
        length = int(self.headers["Content-Length"])
        body = json.loads(self.rfile.read(length))
        user_text = body["messages"][-1]["content"]
        behavior = type(self).behavior
        if behavior == "down":
            self.send_response(503)
            self.end_headers()
            return
        if behavior == "echo":
            reply = user_text
        elif behavior == "caramel":
            reply = user_text.replace("c*ramel", "caramel").replace(
                "c*ke", "cake")
        elif behavior == "starry":
            reply = user_text  # leaves '*' in place: malformed
        elif behavior == "wrong-echo":
            reply = user_text + " extra"
        payload = {"choices": [{"message": {"content": reply}}]}
        data = json.dumps(payload).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    server = HTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    _StubHandler.calls = 0
    yield f"http://127.0.0.1:{server.server_port}/v1/chat/completions"
    server.shutdown()


def _cfg(url, retries=1):
    return LlmEndpointConfig(url=url, model="test-model", max_retries=retries,
                             timeout=5.0)


def test_llm_recovers_stars(stub_server, index):
    _StubHandler.behavior = "caramel"
    out = recover_llm("c*ramel c*ke", _cfg(stub_server), index)
    assert out.text == "caramel cake"
    assert out.backend == "llm" and not out.fallback
    assert [r.replacement for r in out.resolutions] == ["a", "a"]


def test_llm_star_free_input_echoed(stub_server, index):
    _StubHandler.behavior = "echo"
    out = recover_llm("no stars here.", _cfg(stub_server), index)
    assert out.text == "no stars here."
    assert out.backend == "llm"


def test_llm_bad_echo_falls_back(stub_server, index):
    _StubHandler.behavior = "wrong-echo"
    out = recover_llm("no stars here.", _cfg(stub_server, retries=1), index)
    assert out.fallback and out.backend == "deterministic"
    assert out.text == "no stars here."
    assert _StubHandler.calls == 2  # initial try plus one retry


def test_llm_reply_with_stars_retries_then_falls_back(stub_server, index):
    _StubHandler.behavior = "starry"
    out = recover_llm("c*ramel", _cfg(stub_server, retries=2), index)
    assert out.fallback
    assert out.text == "caramel"  # deterministic fallback result
    assert _StubHandler.calls == 3


def test_llm_endpoint_down_falls_back(stub_server, index):
    _StubHandler.behavior = "down"
    out = recover_llm("th* cat", _cfg(stub_server, retries=0), index)
    assert out.fallback and out.text == "the cat"


def test_llm_unreachable_falls_back(index):
    cfg = LlmEndpointConfig(url="http://127.0.0.1:1/nope", model="m",
                            max_retries=0, timeout=0.2)
    out = recover_llm("c*ramel", cfg, index)
    assert out.fallback and out.text == "caramel"


def test_llm_batch_preserves_order(stub_server, index):
    _StubHandler.behavior = "echo"
    texts = [f"sentence number {i}." for i in range(8)]
    outs = recover_llm_batch(texts, _cfg(stub_server), index)
    assert [o.text for o in outs] == texts
