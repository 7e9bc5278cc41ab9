"""The witness family (t+1)K_m + K_t and its closed-form parameters.

``build_family(m, t)`` places t+1 disjoint cliques K_m (block-major labels
``0..(t+1)m-1``) and joins every block vertex to a hub clique K_t labelled
last.  Closed forms used by :func:`predict_params`:

    n = (t+1)m + t,  delta = m+t-1,  kappa = t,  c = t(m+1),  c_bar = p_bar = m

Only delta and the per-instance values are quoted in the literature; the
other formulas are checked against the exact solvers by
:func:`validate_closed_forms` before predictions are relied upon.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import cycle_reports
from .graph import MAX_N, CapacityError, Graph, complete_graph, disjoint_union, join
from .params import min_degree, vertex_connectivity


class DegenerateFamilyError(ValueError):
    """A family parameter evaluated below 1."""


class ClosedFormMismatch(AssertionError):
    """Exact solvers disagree with the closed-form prediction."""


@dataclass(frozen=True)
class FamilySpec:
    m: int
    t: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.t < 1:
            raise DegenerateFamilyError(f"degenerate family m={self.m}, t={self.t}")

    @property
    def n(self) -> int:
        return (self.t + 1) * self.m + self.t

    def label(self) -> str:
        return f"{self.t + 1}K_{self.m}+K_{self.t}"


@dataclass(frozen=True)
class FamilyParams:
    n: int
    delta: int
    kappa: int
    c: int
    c_bar: int
    p_bar: int


def build_family(spec: FamilySpec) -> Graph:
    if spec.n > MAX_N:
        raise CapacityError(f"{spec.label()} has {spec.n} vertices; supported maximum is {MAX_N}")
    blocks = disjoint_union([complete_graph(spec.m)] * (spec.t + 1))
    return join(blocks, complete_graph(spec.t))


def predict_params(spec: FamilySpec) -> FamilyParams:
    m, t = spec.m, spec.t
    return FamilyParams(n=spec.n, delta=m + t - 1, kappa=t, c=t * (m + 1), c_bar=m, p_bar=m)


def exact_params(spec: FamilySpec) -> FamilyParams:
    """Solver-computed parameters; c_bar/p_bar must agree over every longest cycle."""
    g = build_family(spec)
    reports, exhausted = cycle_reports(g)
    assert exhausted
    c_bars = {r.c_bar for r in reports}
    p_bars = {r.p_bar for r in reports}
    if len(c_bars) != 1 or len(p_bars) != 1:
        raise ClosedFormMismatch(
            f"{spec.label()}: remainder parameters vary across longest cycles "
            f"(c_bar {sorted(c_bars)}, p_bar {sorted(p_bars)})"
        )
    return FamilyParams(
        n=g.n,
        delta=min_degree(g),
        kappa=vertex_connectivity(g),
        c=reports[0].c,
        c_bar=c_bars.pop(),
        p_bar=p_bars.pop(),
    )


def check_prediction(spec: FamilySpec) -> FamilyParams:
    exact = exact_params(spec)
    predicted = predict_params(spec)
    if exact != predicted:
        raise ClosedFormMismatch(f"{spec.label()}: predicted {predicted}, exact {exact}")
    return exact


def validate_closed_forms(n_max: int = 15) -> list[FamilySpec]:
    """Confirm the closed forms on every family with at most ``n_max`` vertices.

    Raises :class:`ClosedFormMismatch` on the first disagreement.
    """
    checked = []
    for t in range(1, n_max + 1):
        for m in range(1, n_max + 1):
            spec = FamilySpec(m, t)
            if spec.n > n_max:
                break
            check_prediction(spec)
            checked.append(spec)
    return checked
