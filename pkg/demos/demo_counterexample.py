"""
A small counterexample to a conjectured forward bound
=====================================================

The exhaustive hunt over connected graphs on at most 8 vertices turns up
graphs where the sigma-form forward conjectures fail.  The first kind is
vacuous on the degree side: when alpha <= lambda there is no independent
set of size lambda+1 and the degree-sum hypothesis holds trivially.  The
graph below is the more interesting kind, with a finite degree sum.
"""

from largecycles import graph6_decode, graph_params, lookup, remainder_params
from largecycles.registry import check_statement

g = graph6_decode("GTPIX{")  # K_5 - e and a triangle sharing one cut vertex
p = graph_params(g)
print(f"n={p.n} delta={p.delta} kappa={p.kappa} alpha={p.alpha} sigma={p.sigma}")

s = lookup("Conj-2")
print(s.id, s.kind, "kappa >=", s.kappa, "degree:", s.degree)

for lam in range(1, p.delta + 1):
    r = check_statement(g, s, lam)
    print(f"  lambda={lam}: {r.verdict.value}")

###############################################################################
# Every longest cycle leaves a triangle behind, so cbar = 3 while the
# conjectured bound is lambda - 1 = 1.

from largecycles import all_longest_cycles

for q in all_longest_cycles(g).sets:
    print(sorted(q), "-> (cbar, pbar) =", remainder_params(g, q))
