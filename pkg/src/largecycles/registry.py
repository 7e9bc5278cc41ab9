"""Machine-readable theorems and conjectures, and their evaluation on graphs."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from enum import Enum
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .cycles import CycleReport, cycle_reports
from .expr import EQ1, SIGMA_HYP, Env, Expr, eq1_holds
from .graph import Graph
from .graph6 import graph6_encode
from .params import GraphParams, graph_params

DEFAULT_LIMIT = 10_000
MODES = ("forall", "exists", "witness")

# (stronger, weaker): on every graph and lambda the stronger statement's
# hypotheses are implied by the weaker one's and its conclusion implies the
# weaker conclusion.
IMPLICATIONS: tuple[tuple[str, str], ...] = (
    ("Thm-E", "Thm-C"), ("Thm-C", "Thm-A"),
    ("Thm-E", "Thm-D"), ("Thm-D", "Thm-A"),
    ("Thm-E", "Thm-4"), ("Thm-4", "Thm-2"), ("Thm-4", "Thm-3"),
    ("Thm-E", "Thm-5"), ("Thm-5", "Thm-1"), ("Thm-5", "Thm-3"),
    ("Thm-H", "Thm-F"), ("Thm-F", "Thm-B"),
    ("Thm-H", "Thm-G"), ("Thm-G", "Thm-B"),
    ("Thm-H", "Thm-9"), ("Thm-9", "Thm-7"), ("Thm-9", "Thm-8"),
    ("Thm-H", "Thm-10"), ("Thm-10", "Thm-6"), ("Thm-10", "Thm-8"),
)


class Verdict(str, Enum):
    HOLDS = "HOLDS"
    VACUOUS = "VACUOUS"
    COUNTEREXAMPLE = "COUNTEREXAMPLE"
    INCONCLUSIVE = "INCONCLUSIVE"


class RegistryError(ValueError):
    pass


@dataclass(frozen=True)
class Statement:
    id: str
    kind: str  # "forward" | "reverse"
    metric: str  # "cbar" | "pbar"
    kappa: Expr
    degree: str  # "eq1" | "sigma" | "-"
    remainder: Expr | None
    bound: Expr
    status: str  # "proven" | "conjectural"
    generated: bool = False

    def __post_init__(self) -> None:
        if self.kind not in ("forward", "reverse"):
            raise RegistryError(f"{self.id}: unknown kind {self.kind!r}")
        if self.metric not in ("cbar", "pbar"):
            raise RegistryError(f"{self.id}: unknown metric {self.metric!r}")
        if self.degree not in ("eq1", "sigma", "-"):
            raise RegistryError(f"{self.id}: unknown degree form {self.degree!r}")
        if (self.kind == "reverse") != (self.remainder is not None):
            raise RegistryError(f"{self.id}: reverse statements (only) carry a remainder hypothesis")

    def degree_holds(self, env: Env) -> bool:
        if self.degree == "eq1":
            return eq1_holds(env.n, env.delta, env.lam)
        if self.degree == "sigma":
            return bool(SIGMA_HYP.evaluate(env))
        return True

    def to_line(self) -> str:
        rem = "-" if self.remainder is None else str(self.remainder)
        return " | ".join([self.id, self.kind, self.metric, str(self.kappa), self.degree,
                           rem, str(self.bound), self.status])


def parse_statement_table(text: str) -> list[Statement]:
    out: list[Statement] = []
    version = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("format "):
            version = int(line.split()[1])
            if version != 1:
                raise RegistryError(f"unsupported statement table format {version}")
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) != 8:
            raise RegistryError(f"line {lineno}: expected 8 fields, got {len(fields)}")
        sid, kind, metric, kappa, degree, rem, bound, status = fields
        out.append(Statement(
            id=sid, kind=kind, metric=metric, kappa=Expr.parse(kappa), degree=degree,
            remainder=None if rem == "-" else Expr.parse(rem), bound=Expr.parse(bound),
            status=status,
        ))
    if version is None:
        raise RegistryError("statement table lacks a format line")
    return out


def _pbar_twins(base: Iterable[Statement]) -> list[Statement]:
    twins = []
    for s in base:
        if re.fullmatch(r"Conj-\d+", s.id) and s.metric == "cbar":
            twins.append(replace(s, id=s.id + "p", metric="pbar", generated=True))
    return twins


@lru_cache(maxsize=1)
def registry() -> tuple[Statement, ...]:
    text = resources.files("largecycles").joinpath("data/statements.txt").read_text("utf-8")
    base = parse_statement_table(text)
    return tuple(base + _pbar_twins(base))


def lookup(statement_id: str) -> Statement:
    for s in registry():
        if s.id == statement_id:
            return s
    raise KeyError(f"unknown statement id {statement_id!r}")


def resolve(ids: str | Sequence[str]) -> list[Statement]:
    """Resolve ids; the groups ``theorems``, ``conjectures`` and ``all`` are accepted."""
    names = ids.split(",") if isinstance(ids, str) else list(ids)
    out: list[Statement] = []
    for name in (x.strip() for x in names):
        if name == "all":
            out.extend(registry())
        elif name == "theorems":
            out.extend(s for s in registry() if s.status == "proven")
        elif name == "conjectures":
            out.extend(s for s in registry() if s.status == "conjectural")
        else:
            out.append(lookup(name))
    seen: set[str] = set()
    return [s for s in out if not (s.id in seen or seen.add(s.id))]


# -- evaluation ---------------------------------------------------------------

@dataclass(frozen=True)
class GraphAnalysis:
    """Everything statement evaluation needs, computed once per graph."""

    graph6: str
    params: GraphParams
    c: int
    reports: tuple[CycleReport, ...]
    exhausted: bool


def analyze(g: Graph, limit: int | None = DEFAULT_LIMIT) -> GraphAnalysis:
    reports, exhausted = cycle_reports(g, limit)
    c = reports[0].c if reports else 0
    return GraphAnalysis(graph6_encode(g), graph_params(g), c, tuple(reports), exhausted)


@dataclass(frozen=True)
class CycleRecord:
    cycle: tuple[int, ...]  # sorted vertex set
    metric: int
    hypothesis: bool
    conclusion: bool

    @property
    def failing(self) -> bool:
        return self.hypothesis and not self.conclusion


@dataclass(frozen=True)
class CheckResult:
    graph6: str
    statement_id: str
    lam: int
    mode: str
    params: GraphParams
    c: int
    verdict: Verdict
    records: tuple[CycleRecord, ...] = ()
    required: object = None
    observed: object = None
    cycle: tuple[int, ...] = ()
    c_bar: int | None = None
    p_bar: int | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6, "stmt": self.statement_id, "lambda": self.lam,
            "mode": self.mode, "verdict": self.verdict.value, "n": self.params.n,
            "delta": self.params.delta, "kappa": self.params.kappa, "c": self.c,
            "c_bar": self.c_bar, "p_bar": self.p_bar, "cycle": list(self.cycle),
            "required": _json_value(self.required), "observed": _json_value(self.observed),
        }


def _json_value(x):
    if x is None or isinstance(x, (bool, int)):
        return x
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return str(x)


def env_for(params: GraphParams, lam: int) -> Env:
    return Env(lam=lam, delta=params.delta, n=params.n, kappa=params.kappa, sigma=params.sigma_at)


def evaluate(a: GraphAnalysis, s: Statement, lam: int, mode: str = "forall") -> CheckResult:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    p = a.params
    base = dict(graph6=a.graph6, statement_id=s.id, lam=lam, mode=mode, params=p, c=a.c)
    if not 1 <= lam <= p.delta:
        return CheckResult(**base, verdict=Verdict.VACUOUS, reason="lambda outside 1..delta")
    env = env_for(p, lam)
    need_kappa = s.kappa.evaluate(env)
    if p.kappa < need_kappa:
        return CheckResult(**base, verdict=Verdict.VACUOUS, required=need_kappa,
                           observed=p.kappa, reason="connectivity hypothesis fails")
    if not s.degree_holds(env):
        return CheckResult(**base, verdict=Verdict.VACUOUS, reason="degree hypothesis fails")

    bound = s.bound.evaluate(env)
    floor = s.remainder.evaluate(env) if s.remainder is not None else None
    reports = a.reports[:1] if mode == "witness" else a.reports
    exhausted = True if mode == "witness" else a.exhausted
    records = []
    for r in reports:
        metric = r.c_bar if s.metric == "cbar" else r.p_bar
        if s.kind == "forward":
            rec = CycleRecord(tuple(sorted(r.vertices)), metric, True, metric <= bound)
        else:
            rec = CycleRecord(tuple(sorted(r.vertices)), metric, metric >= floor, a.c >= bound)
        records.append(rec)

    failing = [i for i, rec in enumerate(records) if rec.failing]
    fine = [i for i, rec in enumerate(records) if not rec.failing]
    any_hyp = any(rec.hypothesis for rec in records)
    if mode in ("forall", "witness"):
        if failing:
            verdict, pick = Verdict.COUNTEREXAMPLE, failing[0]
        elif not exhausted:
            verdict, pick = Verdict.INCONCLUSIVE, None
        elif not any_hyp:
            verdict, pick = Verdict.VACUOUS, 0
        else:
            verdict, pick = Verdict.HOLDS, _representative(records, s)
    else:
        if fine and any_hyp:
            verdict, pick = Verdict.HOLDS, fine[0]
        elif fine:
            verdict, pick = (Verdict.VACUOUS, 0) if exhausted else (Verdict.INCONCLUSIVE, None)
        elif not exhausted:
            verdict, pick = Verdict.INCONCLUSIVE, None
        else:
            verdict, pick = Verdict.COUNTEREXAMPLE, 0

    extra = {}
    if pick is not None and records:
        r = reports[pick]
        extra = dict(cycle=records[pick].cycle, c_bar=r.c_bar, p_bar=r.p_bar,
                     observed=records[pick].metric if s.kind == "forward" else a.c)
    else:
        extra = dict(observed=None)
    return CheckResult(**base, verdict=verdict, records=tuple(records), required=bound, **extra)


def _representative(records: list[CycleRecord], s: Statement) -> int:
    """Index of the record closest to violating the statement."""
    if s.kind == "forward":
        return max(range(len(records)), key=lambda i: (records[i].metric, -i))
    return next(i for i, r in enumerate(records) if r.hypothesis)


def check_statement(g: Graph | GraphAnalysis, s: Statement | str, lam: int,
                    mode: str = "forall", limit: int | None = DEFAULT_LIMIT) -> CheckResult:
    """Evaluate one statement at one lambda on a graph.

    ``forall`` demands the conclusion for every longest cycle, ``exists`` for
    at least one, ``witness`` for the solver's single witness cycle.
    """
    a = g if isinstance(g, GraphAnalysis) else analyze(g, limit)
    if isinstance(s, str):
        s = lookup(s)
    return evaluate(a, s, lam, mode)


def implication_consistency(g: Graph | GraphAnalysis, lam: int, mode: str = "forall",
                            statements: Sequence[Statement] | None = None,
                            edges: Sequence[tuple[str, str]] = IMPLICATIONS) -> list[tuple[str, str]]:
    """Implication edges whose stronger side HOLDS while the weaker side is a COUNTEREXAMPLE."""
    a = g if isinstance(g, GraphAnalysis) else analyze(g)
    table = {s.id: s for s in (statements if statements is not None else registry())}
    verdicts = {}
    for sid in {x for e in edges for x in e}:
        verdicts[sid] = evaluate(a, table[sid], lam, mode).verdict
    return [(hi, lo) for hi, lo in edges
            if verdicts[hi] is Verdict.HOLDS and verdicts[lo] is Verdict.COUNTEREXAMPLE]
