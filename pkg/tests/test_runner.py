import json

import pytest

from punctext.runner import (RunConfig, aggregate_records, config_from_mapping,
                             load_config, make_context,
                             run_character_omission_matched, run_pipeline,
                             run_word_omission_baseline, sweep, trial_seed,
                             uniform_chooser)
from punctext.runner.cli import main as cli_main


@pytest.fixture(scope="module")
def ctx():
    return make_context(RunConfig(trials=1))


def test_config_file_parsing(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text(
        "# comment line\n"
        "seed = 9\n"
        "keep_ratio = 0.8, 0.9\n"
        "snr_db = none, 2.0\n"
        "num_filters = 4, 64\n"
        "trials = 3\n",
        encoding="utf-8")
    cfg = load_config(path)
    assert cfg.seed == 9
    assert cfg.keep_ratio == (0.8, 0.9)
    assert cfg.snr_db == (None, 2.0)
    assert cfg.num_filters == (4, 64)
    assert cfg.trials == 3


def test_config_overrides_apply():
    base = RunConfig(seed=1, trials=10)
    cfg = config_from_mapping({"seed": "5", "keep_ratio": "0.5"}, base=base)
    assert cfg.seed == 5 and cfg.keep_ratio == (0.5,) and cfg.trials == 10


def test_config_rejects_unknown_key():
    with pytest.raises(ValueError):
        config_from_mapping({"bogus": "1"})


def test_config_validation():
    with pytest.raises(ValueError):
        RunConfig(keep_ratio=(1.5,))
    with pytest.raises(ValueError):
        RunConfig(num_filters=(3,))
    with pytest.raises(ValueError):
        RunConfig(backend="quantum")


def test_llm_backend_requires_url(monkeypatch):
    monkeypatch.delenv("PUNCTEXT_LLM_URL", raising=False)
    with pytest.raises(ValueError):
        make_context(RunConfig(backend="llm"))


def test_llm_url_from_environment(monkeypatch):
    monkeypatch.setenv("PUNCTEXT_LLM_URL", "http://127.0.0.1:9/llm")
    ctx2 = make_context(RunConfig(backend="llm"))
    assert ctx2.llm_cfg is not None
    assert ctx2.llm_cfg.url == "http://127.0.0.1:9/llm"


def test_trial_seed_stability():
    a = trial_seed(1, 0.9, None, 64, 0)
    b = trial_seed(1, 0.9, None, 64, 0)
    c = trial_seed(1, 0.9, None, 64, 1)
    assert a == b and a != c


def test_pipeline_lossless_point(ctx):
    sentence = ctx.sentences[0]
    rec = run_pipeline(ctx, sentence, keep_ratio=1.0, snr_db=20.0,
                       num_filters=1, noise_seed=5)
    assert rec.bleu == 1.0 and rec.char_accuracy == 1.0
    assert not rec.failed
    assert rec.symbols_per_character > 0


def test_pipeline_deterministic_repeat(ctx):
    sentence = ctx.sentences[1]
    kwargs = dict(keep_ratio=0.9, snr_db=2.0, num_filters=64, noise_seed=11)
    a = run_pipeline(ctx, sentence, **kwargs)
    b = run_pipeline(ctx, sentence, **kwargs)
    assert a == b


def test_pipeline_fig1_style_round_trip(ctx):
    sentence = ("Steven wants to have the caramel cake after the quiet "
                "dinner with three old friends tonight.")
    rec = run_pipeline(ctx, sentence, keep_ratio=0.9, snr_db=None,
                       num_filters=64, noise_seed=3)
    assert not rec.failed
    assert rec.char_accuracy > 0.9


def test_word_omission_identity_at_ratio_one(ctx):
    rec, omitted = run_word_omission_baseline(ctx, ctx.sentences[2], 1.0, 4)
    assert rec.bleu == 1.0 and omitted == 0


def test_word_omission_counts(ctx):
    sentence = " ".join(["word"] * 19 + ["last."])
    rec, omitted = run_word_omission_baseline(ctx, sentence, 0.9, 4)
    # 20 words at ratio 0.9 -> exactly 2 omitted, each 4 letters long
    assert omitted == 8
    assert not rec.failed


def test_matched_character_budget(ctx):
    sentence = ctx.sentences[3]
    _, budget = run_word_omission_baseline(ctx, sentence, 0.9, 21)
    rec = run_character_omission_matched(ctx, sentence, budget)
    assert not rec.failed
    # exact budget equality: the starred text has `budget` stars
    assert budget > 0


def test_character_omission_prefers_low_scores(ctx):
    sentence = ctx.sentences[4]
    rec = run_character_omission_matched(ctx, sentence, 5)
    assert rec.bleu > 0.9  # scored omissions recover almost perfectly


def test_sweep_record_counts(tmp_path):
    cfg = RunConfig(trials=1, keep_ratio=(0.9,), snr_db=(None,),
                    num_filters=(4,), output=str(tmp_path / "mini"))
    result = sweep(cfg)
    lines = result.records_path.read_text().splitlines()
    assert len(lines) == 2  # proposed + random control
    assert result.n_failures == 0
    arms = {json.loads(line)["arm"] for line in lines}
    assert arms == {"proposed", "random"}


def test_sweep_grid_counting(tmp_path):
    cfg = RunConfig(trials=10, keep_ratio=(0.8, 0.9), snr_db=(None, 20.0),
                    num_filters=(4,), output=str(tmp_path / "grid"))
    result = sweep(cfg)
    assert result.n_records == 80  # 2 x 2 x 10 trials x 2 arms


def test_aggregate_matches_recomputation(tmp_path):
    cfg = RunConfig(trials=6, keep_ratio=(0.9,), snr_db=(None,),
                    num_filters=(4,), output=str(tmp_path / "agg"))
    result = sweep(cfg)
    records = [json.loads(l) for l in
               result.records_path.read_text().splitlines()]
    rows = aggregate_records(records)
    for row in rows:
        subset = [r for r in records if r["arm"] == row["arm"]]
        mean = sum(r["bleu"] for r in subset) / len(subset)
        assert float(row["bleu_mean"]) == pytest.approx(mean, abs=1e-6)
        assert row["trials"] == len(subset)


def test_control_arm_shares_noise_and_bank(ctx):
    # same trial seed: identical symbol counts, independent filter choices
    sentence = ctx.sentences[5]
    ts = trial_seed(1, 0.9, 2.0, 64, 0)
    a = run_pipeline(ctx, sentence, keep_ratio=0.9, snr_db=2.0,
                     num_filters=64, noise_seed=ts, arm="proposed")
    b = run_pipeline(ctx, sentence, keep_ratio=0.9, snr_db=2.0,
                     num_filters=64, noise_seed=ts,
                     chooser=uniform_chooser(ts), arm="random")
    assert a.symbols_per_character == b.symbols_per_character
    assert a.seed == b.seed


def test_cli_score_and_recover(capsys):
    assert cli_main(["score", "summer"]) == 0
    out = capsys.readouterr().out
    assert "-3.0000" in out  # alpha position
    assert cli_main(["recover", "c*ramel"]) == 0
    assert "caramel" in capsys.readouterr().out


def test_cli_puncture(capsys):
    assert cli_main(["puncture", "the ancient library near the harbor was "
                     "carefully restored by local craftsmen."]) == 0
    out = capsys.readouterr().out
    assert "filter indices:" in out


def test_cli_run_minimal(tmp_path, capsys):
    out_base = tmp_path / "cli-run"
    rc = cli_main(["run", "--trials", "1", "--keep-ratio", "0.9",
                   "--snr-db", "none", "--num-filters", "4",
                   "--output", str(out_base)])
    assert rc == 0
    assert out_base.with_suffix(".jsonl").exists()
    assert out_base.with_suffix(".csv").exists()


def test_cli_bench(capsys):
    assert cli_main(["bench", "--queries", "50"]) == 0
    assert "queries/s" in capsys.readouterr().out


def test_pipeline_with_llm_backend(monkeypatch):
    class _Reply:
        status_code = 200

        def __init__(self, text):
            self._text = text

        def json(self):
            return {"choices": [{"message": {"content": self._text}}]}

    def fake_post(url, json=None, headers=None, timeout=None):
        # resolve every star by deletion: star-free and within the
        # validator's length tolerance at keep ratio 0.9
        return _Reply(json["messages"][-1]["content"].replace("*", ""))

    monkeypatch.setattr("punctext.recovery.requests.post", fake_post)
    cfg = RunConfig(backend="llm", llm_url="http://stub.invalid/v1", trials=1)
    llm_ctx = make_context(cfg)
    sentence = llm_ctx.sentences[0]
    rec = run_pipeline(llm_ctx, sentence, keep_ratio=0.9, snr_db=None,
                       num_filters=64, noise_seed=1)
    assert rec.backend == "llm"
    assert not rec.failed
    assert 0 < rec.char_accuracy < 1  # deletions cost accuracy but succeed


def test_mean_char_accuracy_monotone_in_snr(ctx):
    means = []
    for snr in (0.0, 2.0, 6.0):
        accs = []
        for t in range(100):
            sentence = ctx.sentences[t % len(ctx.sentences)]
            ts = trial_seed(ctx.config.seed, 0.9, snr, 16, t)
            accs.append(run_pipeline(ctx, sentence, keep_ratio=0.9,
                                     snr_db=snr, num_filters=16,
                                     noise_seed=ts, trial=t).char_accuracy)
        means.append(sum(accs) / len(accs))
    # statistical tolerance: one accuracy point
    assert all(b >= a - 0.01 for a, b in zip(means, means[1:])), means


def test_sweep_workers_match_sequential(tmp_path):
    base = dict(trials=6, keep_ratio=(0.9,), snr_db=(2.0,), num_filters=(4,),
                seed=3)
    seq = sweep(RunConfig(output=str(tmp_path / "seq"), workers=1, **base))
    par = sweep(RunConfig(output=str(tmp_path / "par"), workers=2, **base))
    assert seq.records_path.read_bytes() == par.records_path.read_bytes()
    assert seq.aggregate_path.read_bytes() == par.aggregate_path.read_bytes()
