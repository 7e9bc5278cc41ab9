"""
Sharpness on witness graphs
===========================

A bound is sharp along an axis when a witness graph either meets it with
equality or shows that weakening one hypothesis by a unit breaks the
conclusion.  Here we look at the reverse statement Thm-B along all three
of its axes, then run the whole sweep for small minimum degree.
"""

from largecycles import find_claim, sharpness_sweep, verify_sharpness

lam, delta = 3, 4
for axis in ("c", "kappa", "cbar"):
    claim = find_claim("Thm-B", axis)
    v = verify_sharpness(claim, lam, delta)
    print(v.row())
    for w in v.witnesses:
        for what, ok in w.checks.items():
            print(f"    {what:<34} {ok}")

###############################################################################
# Every proposition, every in-range cell up to delta = 5.  Cells where the
# witness would need an empty block are reported DEGENERATE.

report = sharpness_sweep(5)
print()
print(dict(report.counts))
print("refuted cells:", len(report.refuted))
