"""Exact large-cycle parameters, statement checking and counterexample search for small graphs."""

from .cycles import (
    ContractViolation, all_longest_cycles, cycle_reports, is_CD_lambda, is_D_lambda,
    is_PD_lambda, iter_longest_cycles, longest_cycle, longest_path, remainder_params,
)
from .enumerate import canonical_graph6, enumerate_connected_graphs, enumerate_graphs
from .families import FamilySpec, build_family, exact_params, predict_params, validate_closed_forms
from .graph import INFINITY, MAX_N, CapacityError, EmptyGraphError, Graph
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .harness import HuntJob, hunt, replay, sharpness_sweep
from .params import graph_params, independence_number, min_degree, sigma_k, vertex_connectivity
from .registry import Verdict, check_statement, implication_consistency, lookup, registry
from .sharpness import CLAIMS, Status, find_claim, proposition_witness, verify_sharpness

__all__ = [
    "CLAIMS", "CapacityError", "ContractViolation", "EmptyGraphError", "FamilySpec", "Graph",
    "Graph6Error", "HuntJob", "INFINITY", "MAX_N", "Status", "Verdict", "all_longest_cycles",
    "build_family", "canonical_graph6", "check_statement", "cycle_reports",
    "enumerate_connected_graphs", "enumerate_graphs", "exact_params", "find_claim",
    "graph6_decode", "graph6_encode", "graph_params", "hunt", "implication_consistency",
    "independence_number", "is_CD_lambda", "is_D_lambda", "is_PD_lambda", "iter_longest_cycles",
    "longest_cycle", "longest_path", "lookup", "min_degree", "predict_params", "proposition_witness",
    "registry", "remainder_params", "replay", "sharpness_sweep", "sigma_k", "validate_closed_forms",
    "verify_sharpness", "vertex_connectivity",
]
