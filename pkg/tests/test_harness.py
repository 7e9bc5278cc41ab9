import json
from pathlib import Path

import pytest

from largecycles.graph6 import graph6_encode
from largecycles.graph import complete_graph, cycle_graph
from largecycles.harness import HuntJob, format_records, hunt, replay


def read(path):
    return [json.loads(line) for line in Path(path).read_text().splitlines()]


def test_theorem_hunt_small(tmp_path):
    out = tmp_path / "a.jsonl"
    s = hunt(HuntJob(("Thm-A",), n_max=7, out=str(out)))
    assert s.graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853
    assert s.counterexamples == 0 and s.inconclusive == 0
    assert out.read_text() == ""
    assert not (tmp_path / "a.jsonl.ckpt").exists()


def test_single_vertex_job_is_trivial():
    s = hunt(HuntJob(("Thm-B",), n_min=1, n_max=1, lam=1))
    assert s.graphs == 1
    assert sum(s.counts["Thm-B"].values()) == 0  # delta = 0: no valid lambda


def test_counterexamples_are_recorded_sorted_and_replayable(tmp_path):
    out = tmp_path / "c.jsonl"
    s = hunt(HuntJob(("Conj-3", "Conj-2"), n_max=6, out=str(out)))
    rows = read(out)
    assert s.counterexamples == len(rows) > 0
    keys = [(r["graph6"], r["stmt"], r["lambda"]) for r in rows]
    assert keys == sorted(keys)
    for r in rows:
        assert replay(r) == r["verdict"] == "COUNTEREXAMPLE"


def test_parallel_output_identical(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    common = dict(statements=("Conj-2", "Thm-B"), n_max=6, record_verdicts=("COUNTEREXAMPLE", "HOLDS"))
    hunt(HuntJob(**common, jobs=1, out=str(a)))
    hunt(HuntJob(**common, jobs=3, out=str(b)))
    assert a.read_bytes() == b.read_bytes() and a.stat().st_size > 0


def test_source_file(tmp_path):
    src = tmp_path / "g.g6"
    src.write_text(">>graph6<<\n" + "\n".join(graph6_encode(g) for g in
                                             [complete_graph(4), cycle_graph(5), cycle_graph(12)]) + "\n")
    s = hunt(HuntJob(("Thm-A",), n_max=10, source=str(src)))
    assert s.graphs == 2


def test_resume_from_checkpoint(tmp_path):
    out = tmp_path / "r.jsonl"
    job = HuntJob(("Conj-2",), n_max=6, out=str(out), checkpoint_every=10)
    full = hunt(job)
    expected = out.read_bytes()
    out.unlink()

    # simulate a crash after the first checkpoint: rerun with a failing writer
    import largecycles.harness as h
    real = h._atomic_write
    calls = {"n": 0}

    def flaky(path, text):
        calls["n"] += 1
        if path == out:
            raise OSError("disk full")
        real(path, text)

    h._atomic_write = flaky
    try:
        with pytest.raises(OSError):
            hunt(job)
    finally:
        h._atomic_write = real
    ckpt = tmp_path / "r.jsonl.ckpt"
    assert ckpt.exists()
    resumed = hunt(job)
    assert resumed.resumed_from > 0
    assert out.read_bytes() == expected
    assert resumed.counts == full.counts
    assert not ckpt.exists()


def test_job_validation():
    with pytest.raises(KeyError):
        HuntJob(("Nope",), n_max=5)
    with pytest.raises(ValueError):
        HuntJob(("Thm-A",), n_max=40)
    with pytest.raises(ValueError):
        HuntJob(("Thm-A",), n_min=5, n_max=4)
    with pytest.raises(ValueError):
        HuntJob(("Thm-A",), n_max=5, mode="sometimes")
    with pytest.raises(ValueError, match="--source"):
        HuntJob(("Thm-A",), n_max=10)
    HuntJob(("Thm-A",), n_max=10, source="graphs.g6")


def test_format_records_sorts():
    rows = [{"graph6": "B", "stmt": "X", "lambda": 1}, {"graph6": "A", "stmt": "Y", "lambda": 2}]
    assert format_records(rows).splitlines()[0].startswith('{"graph6": "A"')
