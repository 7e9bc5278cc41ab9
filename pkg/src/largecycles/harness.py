"""Counterexample hunts over graph spaces and the sharpness sweep."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .enumerate import BUILTIN_MAX_N, enumerate_connected_graphs
from .graph import MAX_N
from .graph6 import graph6_decode, graph6_encode
from .registry import DEFAULT_LIMIT, MODES, Verdict, analyze, evaluate, lookup, resolve
from .sharpness import CLAIMS, SharpnessVerdict, Status, verify_sharpness

RECORDED = ("COUNTEREXAMPLE", "INCONCLUSIVE")


@dataclass(frozen=True)
class HuntJob:
    statements: tuple[str, ...]
    n_max: int
    n_min: int = 1
    lam: int | None = None  # None: every valid lambda
    mode: str = "forall"
    source: str | None = None  # graph6 file; None uses the built-in enumerator
    jobs: int = 1
    out: str | None = None
    limit: int | None = DEFAULT_LIMIT
    record_verdicts: tuple[str, ...] = RECORDED
    checkpoint_every: int = 2000

    def __post_init__(self) -> None:
        ids = tuple(s.id for s in resolve(self.statements))
        object.__setattr__(self, "statements", ids)
        if not 1 <= self.n_min <= self.n_max:
            raise ValueError(f"need 1 <= n_min <= n_max, got {self.n_min}..{self.n_max}")
        if self.n_max > MAX_N:
            raise ValueError(f"n_max={self.n_max} exceeds solver capacity {MAX_N}")
        if self.source is None and self.n_max > BUILTIN_MAX_N:
            raise ValueError(
                f"built-in enumeration covers n <= {BUILTIN_MAX_N}; for n_max={self.n_max} "
                "supply a graph6 file from an external generator (hunt --source FILE)"
            )
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        bad = set(self.record_verdicts) - {v.value for v in Verdict}
        if bad:
            raise ValueError(f"unknown verdicts {sorted(bad)}")

    def fingerprint(self) -> str:
        # everything that shapes the output; jobs and out do not
        key = [self.statements, self.n_min, self.n_max, self.lam, self.mode,
               self.source, self.limit, self.record_verdicts]
        return hashlib.sha256(json.dumps(key).encode()).hexdigest()[:16]


@dataclass
class HuntSummary:
    job: HuntJob
    graphs: int = 0
    counts: dict[str, Counter] = field(default_factory=dict)
    records: list[dict] = field(default_factory=list)
    resumed_from: int = 0

    @property
    def counterexamples(self) -> int:
        return sum(c[Verdict.COUNTEREXAMPLE.value] for c in self.counts.values())

    @property
    def inconclusive(self) -> int:
        return sum(c[Verdict.INCONCLUSIVE.value] for c in self.counts.values())

    def table(self) -> str:
        cols = [v.value for v in Verdict]
        lines = [f"{'stmt':<8}" + "".join(f"{c:>16}" for c in cols)]
        for sid in self.job.statements:
            c = self.counts.get(sid, Counter())
            lines.append(f"{sid:<8}" + "".join(f"{c[v]:>16}" for v in cols))
        lines.append(f"graphs checked: {self.graphs}")
        return "\n".join(lines)


def graph_source(job: HuntJob) -> Iterator[str]:
    """graph6 strings for the job, in a fixed order."""
    if job.source is None:
        for n in range(job.n_min, job.n_max + 1):
            for g in enumerate_connected_graphs(n):
                yield graph6_encode(g)
        return
    with open(job.source, encoding="ascii") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line == ">>graph6<<":
                continue
            g = graph6_decode(line)
            if job.n_min <= g.n <= job.n_max:
                yield line.removeprefix(">>graph6<<")


def valid_lambdas(delta: int, fixed: int | None) -> list[int]:
    if fixed is None:
        return list(range(1, delta + 1))
    return [fixed] if 1 <= fixed <= delta else []


def _check_graph(args) -> tuple[dict[str, dict[str, int]], list[dict]]:
    text, ids, lam, mode, limit, keep = args
    a = analyze(graph6_decode(text), limit)
    counts: dict[str, dict[str, int]] = {}
    records = []
    for sid in ids:
        s = lookup(sid)
        c = counts.setdefault(sid, {})
        for l in valid_lambdas(a.params.delta, lam):
            r = evaluate(a, s, l, mode)
            c[r.verdict.value] = c.get(r.verdict.value, 0) + 1
            if r.verdict.value in keep:
                records.append(r.to_json())
    return counts, records


def _sort_key(rec: dict):
    return rec["graph6"], rec["stmt"], rec["lambda"]


def _atomic_write(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def format_records(records: Iterable[dict]) -> str:
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in sorted(records, key=_sort_key))


def _checkpoint_path(out: Path) -> Path:
    return out.with_name(out.name + ".ckpt")


def _load_checkpoint(job: HuntJob, path: Path) -> tuple[int, dict, list] | None:
    try:
        state = json.loads(path.read_text("utf-8"))
    except (OSError, ValueError):
        return None
    if state.get("fingerprint") != job.fingerprint():
        return None
    return state["done"], state["counts"], state["records"]


def _save_checkpoint(job: HuntJob, path: Path, done: int, counts: dict, records: list) -> None:
    state = {"fingerprint": job.fingerprint(), "job": asdict(job), "done": done,
             "counts": {k: dict(v) for k, v in counts.items()}, "records": records}
    _atomic_write(path, json.dumps(state))


def hunt(job: HuntJob) -> HuntSummary:
    """Check every (graph, statement, valid lambda) and persist the recorded verdicts.

    Work is split by graph.  Results arrive in source order, so a checkpoint
    (written atomically beside the output) knows how many graphs are done and
    a rerun of the same job resumes from it.  The output is sorted by
    (graph6, statement, lambda) before the single final write.
    """
    out = Path(job.out) if job.out else None
    ckpt = _checkpoint_path(out) if out else None
    summary = HuntSummary(job, counts={sid: Counter() for sid in job.statements})
    done = 0
    if ckpt is not None and ckpt.exists():
        state = _load_checkpoint(job, ckpt)
        if state is not None:
            done, counts, records = state
            for sid, c in counts.items():
                summary.counts[sid].update(c)
            summary.records.extend(records)
            summary.resumed_from = done

    start = done

    def tasks() -> Iterator[tuple]:
        for i, text in enumerate(graph_source(job)):
            if i >= start:
                yield (text, job.statements, job.lam, job.mode, job.limit, job.record_verdicts)

    def consume(results) -> None:
        nonlocal done
        for counts, records in results:
            for sid, c in counts.items():
                summary.counts[sid].update(c)
            summary.records.extend(records)
            done += 1
            if ckpt is not None and done % job.checkpoint_every == 0:
                _save_checkpoint(job, ckpt, done, summary.counts, summary.records)

    if job.jobs == 1:
        consume(map(_check_graph, tasks()))
    else:
        with ProcessPoolExecutor(max_workers=job.jobs) as pool:
            consume(pool.map(_check_graph, tasks(), chunksize=64))
    summary.graphs = done
    summary.records.sort(key=_sort_key)
    if out is not None:
        _atomic_write(out, format_records(summary.records))
        if ckpt.exists():
            ckpt.unlink()
    return summary


def replay(record: dict, limit: int | None = DEFAULT_LIMIT) -> str:
    """Re-run the check a persisted record describes and return the verdict."""
    g = graph6_decode(record["graph6"])
    a = analyze(g, limit)
    return evaluate(a, lookup(record["stmt"]), record["lambda"], record["mode"]).verdict.value


# -- sharpness sweep -----------------------------------------------------------

@dataclass
class SweepReport:
    delta_max: int
    rows: list[SharpnessVerdict]

    @property
    def counts(self) -> Counter:
        return Counter(r.status.value for r in self.rows)

    @property
    def refuted(self) -> list[SharpnessVerdict]:
        return [r for r in self.rows if r.status is Status.REFUTED]

    def table(self) -> str:
        return "\n".join(r.row() for r in self.rows)


def sharpness_sweep(delta_max: int, props: Sequence[int] | None = None) -> SweepReport:
    """Verify every in-range (proposition, axis, delta, lambda) cell for delta <= delta_max.

    Each witness is built and its closed-form parameters cross-checked
    against the exact solvers before its checks run.
    """
    if delta_max < 2:
        raise ValueError("delta_max must be at least 2")
    wanted = None if props is None else set(props)
    rows = []
    for claim in CLAIMS:
        if wanted is not None and claim.prop not in wanted:
            continue
        for delta in range(1, delta_max + 1):
            for lam in range(1, delta + 1):
                if claim.in_range(lam, delta):
                    rows.append(verify_sharpness(claim, lam, delta))
    return SweepReport(delta_max, rows)
