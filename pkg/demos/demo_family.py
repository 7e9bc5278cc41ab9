"""
The join family (t+1)K_m + K_t
==============================

Every sharpness witness is a member of one family: t+1 disjoint cliques
on m vertices, all joined to a hub clique on t vertices.  Its parameters
have closed forms, and the solvers reproduce them exactly.
"""

from largecycles import FamilySpec, build_family, exact_params, predict_params

# 5K_1 + K_4: five independent vertices hanging off a K_4
spec = FamilySpec(m=1, t=4)
g = build_family(spec)
print(spec.label(), "has", g.n, "vertices and", g.num_edges(), "edges")

# a longest cycle alternates hub and block vertices, so it uses t blocks
pred, exact = predict_params(spec), exact_params(spec)
for name in ("n", "delta", "kappa", "c", "c_bar", "p_bar"):
    print(f"  {name:<6} predicted {getattr(pred, name):>3}   computed {getattr(exact, name):>3}")

###############################################################################
# Sweep a small grid.  Any disagreement would raise inside ``check_prediction``.

from largecycles.families import check_prediction

rows = []
for m in range(1, 5):
    for t in range(1, 5):
        if (t + 1) * m + t <= 16:
            p = check_prediction(FamilySpec(m, t))
            rows.append((m, t, p.n, p.c, p.c_bar))
print("\n  m  t   n   c  cbar")
for r in rows:
    print("".join(f"{x:>4}" for x in r))
