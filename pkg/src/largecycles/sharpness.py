"""Sharpness claims for the eighteen propositions and their mechanical verification.

A claim says that one bound of a statement cannot be moved by one unit.
The witness is a family graph (t+1)K_m + K_t whose (m, t) are linear in
(lambda, delta).  Verification builds the witness, computes its parameters
with the exact solvers, and tests:

* ``c`` (reverse) / ``cbar`` (forward): every hypothesis holds and the
  conclusion is attained with equality;
* ``kappa``: the connectivity bound lowered by one holds, the conclusion fails;
* ``cbar`` (reverse): the remainder bound lowered by one holds, the
  conclusion fails;
* ``delta`` (forward): delta sits on the boundary (n+1)/(lam+1) + lam - 2,
  connectivity holds, the conclusion fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable

from .expr import Env, eq1_holds, on_eq2_boundary
from .families import DegenerateFamilyError, FamilyParams, FamilySpec, check_prediction
from .registry import Statement, lookup


class RangeError(ValueError):
    """lambda lies outside the range a claim is stated for."""


class Status(str, Enum):
    CONFIRMED = "CONFIRMED"
    REFUTED = "REFUTED"
    DEGENERATE = "DEGENERATE"


# witness families: name -> ((lam, delta) -> (m, t), printable form)
FAMILIES: dict[str, tuple[Callable[[int, int], tuple[int, int]], str]] = {
    "F1": (lambda l, d: (l - 1, d - l + 2), "(d-l+3)K_{l-1} + K_{d-l+2}"),
    "F2": (lambda l, d: (d - l + 2, l - 1), "l K_{d-l+2} + K_{l-1}"),
    "F3": (lambda l, d: (l, d - l + 1), "(d-l+2)K_l + K_{d-l+1}"),
    "F4": (lambda l, d: (d - l, l + 1), "(l+2)K_{d-l} + K_{l+1}"),
    "F5": (lambda l, d: (l + 1, d - l), "(d-l+1)K_{l+1} + K_{d-l}"),
    "F6": (lambda l, d: (d - l + 1, l), "(l+1)K_{d-l+1} + K_l"),
    "F7": (lambda l, d: (l - 2, d - l + 3), "(d-l+4)K_{l-2} + K_{d-l+3}"),
}

RANGES: dict[str, Callable[[int, int], bool]] = {
    "all": lambda l, d: True,
    "le1": lambda l, d: 2 * l <= d + 1,
    "ge1": lambda l, d: 2 * l >= d + 1,
    "le2": lambda l, d: 2 * l <= d + 2,
    "ge2": lambda l, d: 2 * l >= d + 2,
}

RANGE_TEXT = {"all": "1<=lam<=delta", "le1": "lam<=(delta+1)/2", "ge1": "lam>=(delta+1)/2",
              "le2": "lam<=(delta+2)/2", "ge2": "lam>=(delta+2)/2"}


@dataclass(frozen=True)
class SharpnessClaim:
    prop: int
    statement_id: str
    axis: str  # "c" | "cbar" | "kappa" | "delta"
    lambda_range: str
    pieces: tuple[tuple[str, str], ...]  # (sub-range, family) pairs

    @property
    def expected_mode(self) -> str:
        forward = self.statement.kind == "forward"
        if self.axis == "c" or (forward and self.axis == "cbar"):
            return "equality-of-conclusion"
        return "hypothesis-weakening-fails"

    @property
    def statement(self) -> Statement:
        return lookup(self.statement_id)

    def in_range(self, lam: int, delta: int) -> bool:
        return 1 <= lam <= delta and RANGES[self.lambda_range](lam, delta)

    def witnesses(self, lam: int, delta: int) -> list[tuple[str, int, int]]:
        """Applicable ``(family, m, t)`` triples, including degenerate ones."""
        if not self.in_range(lam, delta):
            raise RangeError(
                f"Prop {self.prop} {self.axis}: lam={lam} outside {RANGE_TEXT[self.lambda_range]} "
                f"at delta={delta}"
            )
        out = []
        for sub, fam in self.pieces:
            if RANGES[sub](lam, delta):
                m, t = FAMILIES[fam][0](lam, delta)
                out.append((fam, m, t))
        return out


def _c(prop, sid, axis, rng, *pieces) -> SharpnessClaim:
    return SharpnessClaim(prop, sid, axis, rng, tuple(pieces))


CLAIMS: tuple[SharpnessClaim, ...] = (
    _c(1, "Thm-A", "cbar", "le1", ("le1", "F1")),
    _c(1, "Thm-A", "kappa", "le1", ("le1", "F2")),
    _c(1, "Thm-A", "delta", "le1", ("le1", "F3")),
    _c(2, "Thm-3", "cbar", "ge1", ("ge1", "F4")),
    _c(2, "Thm-3", "kappa", "ge1", ("ge1", "F5")),
    _c(2, "Thm-3", "delta", "ge1", ("ge1", "F3")),
    _c(3, "Thm-1", "cbar", "ge1", ("ge1", "F4")),
    _c(3, "Thm-1", "kappa", "le1", ("le1", "F2")),
    _c(3, "Thm-1", "delta", "all", ("all", "F6")),
    _c(4, "Thm-2", "cbar", "le1", ("le1", "F1")),
    _c(4, "Thm-2", "kappa", "ge1", ("ge1", "F5")),
    _c(4, "Thm-2", "delta", "all", ("all", "F3")),
    _c(5, "Thm-C", "cbar", "all", ("le1", "F1"), ("ge1", "F4")),
    _c(5, "Thm-C", "kappa", "le1", ("le1", "F2")),
    _c(5, "Thm-C", "delta", "all", ("le1", "F3"), ("ge1", "F6")),
    _c(6, "Thm-D", "cbar", "le1", ("le1", "F1")),
    _c(6, "Thm-D", "kappa", "all", ("le1", "F2"), ("ge1", "F5")),
    _c(6, "Thm-D", "delta", "all", ("le1", "F3"), ("ge1", "F3")),
    _c(7, "Thm-5", "cbar", "ge1", ("ge1", "F4")),
    _c(7, "Thm-5", "kappa", "all", ("le1", "F2"), ("ge1", "F5")),
    _c(7, "Thm-5", "delta", "all", ("le1", "F6"), ("ge1", "F3")),
    _c(8, "Thm-4", "cbar", "all", ("le1", "F1"), ("ge1", "F4")),
    _c(8, "Thm-4", "kappa", "ge1", ("ge1", "F5")),
    _c(8, "Thm-4", "delta", "all", ("le1", "F3"), ("ge1", "F3")),
    _c(9, "Thm-E", "cbar", "all", ("le1", "F1"), ("ge1", "F4")),
    _c(9, "Thm-E", "kappa", "all", ("le1", "F2"), ("ge1", "F5")),
    _c(9, "Thm-E", "delta", "all", ("le1", "F3"), ("ge1", "F3")),
    _c(10, "Thm-B", "c", "le2", ("le2", "F1")),
    _c(10, "Thm-B", "kappa", "le2", ("le2", "F2")),
    _c(10, "Thm-B", "cbar", "le2", ("le2", "F7")),
    _c(11, "Thm-8", "c", "ge2", ("ge2", "F1")),
    _c(11, "Thm-8", "kappa", "ge2", ("ge2", "F3")),
    _c(11, "Thm-8", "cbar", "ge2", ("ge2", "F4")),
    _c(12, "Thm-6", "c", "all", ("all", "F6")),
    _c(12, "Thm-6", "kappa", "le2", ("le2", "F2")),
    _c(12, "Thm-6", "cbar", "ge2", ("ge2", "F4")),
    _c(13, "Thm-7", "c", "all", ("all", "F1")),
    _c(13, "Thm-7", "kappa", "ge2", ("ge2", "F3")),
    _c(13, "Thm-7", "cbar", "le2", ("le2", "F7")),
    _c(14, "Thm-F", "c", "all", ("le2", "F1"), ("ge2", "F6")),
    _c(14, "Thm-F", "kappa", "le2", ("le2", "F2")),
    _c(14, "Thm-F", "cbar", "all", ("le2", "F7"), ("ge2", "F4")),
    _c(15, "Thm-G", "c", "all", ("le2", "F1"), ("ge2", "F1")),
    _c(15, "Thm-G", "kappa", "all", ("le2", "F2"), ("ge2", "F3")),
    _c(15, "Thm-G", "cbar", "le2", ("le2", "F7")),
    _c(16, "Thm-10", "c", "all", ("le2", "F6"), ("ge2", "F1")),
    _c(16, "Thm-10", "kappa", "all", ("le2", "F2"), ("ge2", "F3")),
    _c(16, "Thm-10", "cbar", "ge2", ("ge2", "F4")),
    _c(17, "Thm-9", "c", "all", ("le2", "F1"), ("ge2", "F1")),
    _c(17, "Thm-9", "kappa", "ge2", ("ge2", "F3")),
    _c(17, "Thm-9", "cbar", "all", ("le2", "F7"), ("ge2", "F4")),
    _c(18, "Thm-H", "c", "all", ("le2", "F1"), ("ge2", "F1")),
    _c(18, "Thm-H", "kappa", "all", ("le2", "F2"), ("ge2", "F3")),
    _c(18, "Thm-H", "cbar", "all", ("le2", "F7"), ("ge2", "F4")),
)


def claims_for(prop: int | None = None) -> list[SharpnessClaim]:
    return [c for c in CLAIMS if prop is None or c.prop == prop]


def find_claim(statement_id: str, axis: str) -> SharpnessClaim:
    for c in CLAIMS:
        if c.statement_id == statement_id and c.axis == axis:
            return c
    raise KeyError(f"no sharpness claim for {statement_id} on axis {axis!r}")


def proposition_witness(statement_id: str, axis: str, lam: int, delta: int) -> FamilySpec:
    """First applicable non-degenerate witness for a claim cell."""
    claim = find_claim(statement_id, axis)
    cands = claim.witnesses(lam, delta)
    for _, m, t in cands:
        if m >= 1 and t >= 1:
            return FamilySpec(m, t)
    fam, m, t = cands[0]
    raise DegenerateFamilyError(
        f"Prop {claim.prop} {axis} at lam={lam}, delta={delta}: witness {fam} has m={m}, t={t}; "
        "proposition vacuous here"
    )


@lru_cache(maxsize=None)
def witness_params(m: int, t: int) -> FamilyParams:
    """Exact parameters of a family graph, cross-checked against the closed forms."""
    return check_prediction(FamilySpec(m, t))


@dataclass(frozen=True)
class WitnessCheck:
    family: str
    m: int
    t: int
    status: Status
    params: FamilyParams | None = None
    checks: dict = field(default_factory=dict)


@dataclass(frozen=True)
class SharpnessVerdict:
    prop: int
    statement_id: str
    axis: str
    lam: int
    delta: int
    status: Status
    witnesses: tuple[WitnessCheck, ...]

    def row(self) -> str:
        parts = []
        for w in self.witnesses:
            tag = f"{w.t + 1}K_{w.m}+K_{w.t}" if w.m >= 1 and w.t >= 1 else f"{w.family}(m={w.m},t={w.t})"
            if w.params is not None:
                p = w.params
                tag += f" n={p.n} kappa={p.kappa} c={p.c} cbar={p.c_bar}"
            parts.append(f"{tag} [{w.status.value}]")
        return (f"Prop {self.prop:>2} {self.statement_id:<6} {self.axis:<5} delta={self.delta} "
                f"lam={self.lam}  {self.status.value:<10} " + "; ".join(parts))


def _check_witness(s: Statement, axis: str, lam: int, delta: int, p: FamilyParams) -> dict:
    env = Env(lam=lam, delta=p.delta, n=p.n, kappa=p.kappa)
    need_kappa = s.kappa.evaluate(env)
    bound = s.bound.evaluate(env)
    checks = {"delta matches": p.delta == delta}
    if s.kind == "forward":
        if s.degree != "eq1":
            raise ValueError(f"{s.id}: sharpness is only defined for eq1-form forward statements")
        if axis == "cbar":
            checks["kappa hypothesis"] = p.kappa >= need_kappa
            checks["degree hypothesis"] = eq1_holds(p.n, p.delta, lam)
            checks["cbar attains bound"] = p.c_bar == bound
        elif axis == "kappa":
            checks["kappa hypothesis minus one"] = p.kappa >= need_kappa - 1
            checks["degree hypothesis"] = eq1_holds(p.n, p.delta, lam)
            checks["conclusion fails"] = p.c_bar > bound
        elif axis == "delta":
            checks["kappa hypothesis"] = p.kappa >= need_kappa
            checks["delta on boundary (n+1)/(lam+1)+lam-2"] = on_eq2_boundary(p.n, p.delta, lam)
            checks["conclusion fails"] = p.c_bar > bound
        else:
            raise ValueError(f"axis {axis!r} does not apply to forward statements")
    else:
        floor = s.remainder.evaluate(env)
        if axis == "c":
            checks["kappa hypothesis"] = p.kappa >= need_kappa
            checks["remainder hypothesis"] = p.c_bar >= floor
            checks["c attains bound"] = p.c == bound
        elif axis == "kappa":
            checks["kappa hypothesis minus one"] = p.kappa >= need_kappa - 1
            checks["remainder hypothesis"] = p.c_bar >= floor
            checks["conclusion fails"] = p.c < bound
        elif axis == "cbar":
            checks["kappa hypothesis"] = p.kappa >= need_kappa
            checks["remainder hypothesis minus one"] = p.c_bar >= floor - 1
            checks["conclusion fails"] = p.c < bound
        else:
            raise ValueError(f"axis {axis!r} does not apply to reverse statements")
    return checks


def verify_sharpness(claim: SharpnessClaim, lam: int, delta: int) -> SharpnessVerdict:
    """Verify one (claim, lambda, delta) cell against every applicable witness.

    The cell is CONFIRMED when all non-degenerate witnesses confirm,
    DEGENERATE when none is buildable, REFUTED otherwise.
    """
    s = claim.statement
    results = []
    for fam, m, t in claim.witnesses(lam, delta):
        if m < 1 or t < 1:
            results.append(WitnessCheck(fam, m, t, Status.DEGENERATE))
            continue
        p = witness_params(m, t)
        checks = _check_witness(s, claim.axis, lam, delta, p)
        ok = all(checks.values())
        results.append(WitnessCheck(fam, m, t, Status.CONFIRMED if ok else Status.REFUTED, p, checks))
    live = [w for w in results if w.status is not Status.DEGENERATE]
    if not live:
        status = Status.DEGENERATE
    elif all(w.status is Status.CONFIRMED for w in live):
        status = Status.CONFIRMED
    else:
        status = Status.REFUTED
    return SharpnessVerdict(claim.prop, claim.statement_id, claim.axis, lam, delta, status, tuple(results))
