import json

import pytest
from hypothesis import given, strategies as st

from largecycles.families import FamilySpec, build_family
from largecycles.graph import Graph, complete_graph, cycle_graph, path_graph, petersen_graph
from largecycles.registry import (
    IMPLICATIONS, RegistryError, Verdict, analyze, check_statement, evaluate,
    implication_consistency, lookup, parse_statement_table, registry, resolve,
)

from conftest import connected_graphs

F14 = build_family(FamilySpec(1, 4))


def test_registry_contents():
    ids = [s.id for s in registry()]
    assert len(ids) == len(set(ids)) == 44
    for sid in ["Conj-A", "Conj-F", "Thm-A", "Thm-H", "Thm-1", "Thm-10", "Conj-1", "Conj-10", "Conj-10p"]:
        assert sid in ids
    assert all(s.status == "proven" for s in registry() if s.id.startswith("Thm-"))
    assert all(s.status == "conjectural" for s in registry() if s.id.startswith("Conj-"))
    assert {s.id for s in registry() if s.generated} == {f"Conj-{i}p" for i in range(1, 11)}


def test_lookup_examples():
    s = lookup("Thm-2")
    assert (s.kind, s.metric, s.degree) == ("forward", "cbar", "eq1")
    assert str(s.kappa) == "(+ (- delta lam) 1)" and str(s.bound) == "(- lam 1)"
    s = lookup("Conj-9")
    assert (s.kind, s.status) == ("reverse", "conjectural")
    assert str(s.kappa) == "(+ (- delta lam) 2)"
    assert str(s.remainder) == "(min (- lam 1) (+ (- delta lam) 1))"
    assert str(s.bound) == "(- (sigma lam) (* lam (- lam 2)))"
    # the proven reverse minimum-degree statement: c_bar >= lam-1 gives c >= lam(delta-lam+2)
    s = lookup("Thm-B")
    assert (s.kind, s.metric, s.status) == ("reverse", "cbar", "proven")
    assert str(s.bound) == "(* lam (+ (- delta lam) 2))"
    # its sigma / p_bar counterpart is the open conjecture
    s = lookup("Conj-B")
    assert (s.kind, s.metric, s.status) == ("reverse", "pbar", "conjectural")
    with pytest.raises(KeyError):
        lookup("Thm-Z")


def test_pbar_twin_mirrors_original():
    a, b = lookup("Conj-6"), lookup("Conj-6p")
    assert b.metric == "pbar" and a.metric == "cbar"
    assert (str(a.kappa), str(a.remainder), str(a.bound)) == (str(b.kappa), str(b.remainder), str(b.bound))


def test_resolve_groups():
    assert len(resolve("theorems")) == 18
    assert len(resolve("conjectures")) == 26
    assert [s.id for s in resolve("Thm-A,Thm-A,Conj-E")] == ["Thm-A", "Conj-E"]


def test_table_parser_rejects_bad_rows():
    good = "format 1\nX | forward | cbar | lam | eq1 | - | (- lam 1) | proven\n"
    assert parse_statement_table(good)[0].id == "X"
    with pytest.raises(RegistryError):
        parse_statement_table("X | forward | cbar | lam | eq1 | - | (- lam 1) | proven\n")
    with pytest.raises(RegistryError):
        parse_statement_table("format 1\nX | sideways | cbar | lam | eq1 | - | (- lam 1) | proven\n")
    with pytest.raises(RegistryError):
        parse_statement_table("format 1\nX | forward | cbar | lam | eq1 | (- lam 1) | (- lam 1) | proven\n")
    with pytest.raises(RegistryError):
        parse_statement_table("format 2\n")


def test_check_examples():
    r = check_statement(F14, "Thm-A", 2)
    assert r.verdict is Verdict.HOLDS
    assert len(r.records) == 5 and all(rec.metric == 1 for rec in r.records)
    r = check_statement(F14, "Thm-B", 2)
    assert r.verdict is Verdict.HOLDS and (r.required, r.observed) == (8, 8)
    r = check_statement(complete_graph(4), "Thm-A", 1)
    assert r.verdict is Verdict.HOLDS and r.c_bar == 0
    assert check_statement(cycle_graph(6), "Thm-A", 2).verdict is Verdict.VACUOUS


def test_vacuous_outside_lambda_range():
    assert check_statement(cycle_graph(5), "Thm-A", 3).verdict is Verdict.VACUOUS
    assert check_statement(Graph(1, (0,)), "Thm-B", 1).verdict is Verdict.VACUOUS


def test_counterexample_record_shape():
    # two blocks K_5 - e and K_3 sharing a cut vertex
    g = Graph.from_edges(8, [(0, 2), (0, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 7), (3, 7),
                             (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)])
    r = check_statement(g, "Conj-2", 2)
    assert r.verdict is Verdict.COUNTEREXAMPLE
    row = r.to_json()
    assert list(row) == ["graph6", "stmt", "lambda", "mode", "verdict", "n", "delta", "kappa",
                         "c", "c_bar", "p_bar", "cycle", "required", "observed"]
    assert (row["c"], row["c_bar"], row["required"], row["observed"]) == (5, 3, 1, 3)
    json.dumps(row)


def test_infinite_sigma_serialises():
    # K_4: alpha = 1, so sigma_2 is infinite and Conj-B's bound is infinite
    r = check_statement(complete_graph(4), "Conj-B", 2)
    assert r.to_json()["required"] == "inf"


def test_modes_differ_when_cycles_disagree():
    # in P_4 the longest generalized cycles are its edges; an end edge leaves c_bar = 2,
    # the middle edge leaves c_bar = 1
    g = path_graph(4)
    a = analyze(g)
    assert sorted(r.c_bar for r in a.reports) == [1, 2, 2]
    s = parse_statement_table("format 1\nX | forward | cbar | 1 | - | - | 1 | proven\n")[0]
    assert evaluate(a, s, 1, "forall").verdict is Verdict.COUNTEREXAMPLE
    assert evaluate(a, s, 1, "exists").verdict is Verdict.HOLDS
    w = evaluate(a, s, 1, "witness")
    assert len(w.records) == 1 and w.verdict is Verdict.COUNTEREXAMPLE


def test_limit_gives_inconclusive():
    a = analyze(F14, limit=2)
    assert not a.exhausted
    assert evaluate(a, lookup("Thm-A"), 2).verdict is Verdict.INCONCLUSIVE
    assert evaluate(a, lookup("Thm-A"), 2, "witness").verdict is Verdict.HOLDS


@pytest.mark.parametrize("g, lam", [(F14, 2), (petersen_graph(), 3), (complete_graph(5), 1)])
def test_implication_examples(g, lam):
    assert implication_consistency(g, lam) == []


def test_implication_edges_are_registered():
    ids = {s.id for s in registry()}
    assert all(a in ids and b in ids for a, b in IMPLICATIONS)


@given(connected_graphs(min_n=2, max_n=8), st.integers(1, 6))
def test_implications_hold_on_random_graphs(g, lam):
    assert implication_consistency(g, lam) == []


@given(connected_graphs(min_n=2, max_n=8), st.integers(1, 5), st.sampled_from([s.id for s in registry()]))
def test_mode_monotonicity(g, lam, sid):
    a = analyze(g)
    s = lookup(sid)
    forall, exists = evaluate(a, s, lam, "forall").verdict, evaluate(a, s, lam, "exists").verdict
    if forall is Verdict.HOLDS:
        assert exists is Verdict.HOLDS
    if exists is Verdict.COUNTEREXAMPLE:
        assert forall is Verdict.COUNTEREXAMPLE


@given(connected_graphs(min_n=3, max_n=8), st.randoms(use_true_random=False))
def test_verdicts_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    a, b = analyze(g), analyze(h)
    for s in registry():
        for lam in range(1, a.params.delta + 1):
            assert evaluate(a, s, lam).verdict is evaluate(b, s, lam).verdict
