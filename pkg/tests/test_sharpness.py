import pytest

from largecycles.families import FamilySpec
from largecycles.harness import sharpness_sweep
from largecycles.registry import lookup
from largecycles.sharpness import (
    CLAIMS, FAMILIES, RangeError, Status, claims_for, find_claim, verify_sharpness,
)


def test_every_proposition_has_claims():
    assert sorted({c.prop for c in CLAIMS}) == list(range(1, 19))
    for c in CLAIMS:
        s = c.statement
        assert s.status == "proven"
        allowed = {"cbar", "kappa", "delta"} if s.kind == "forward" else {"c", "kappa", "cbar"}
        assert c.axis in allowed
        assert all(fam in FAMILIES for _, fam in c.pieces)


def test_expected_modes():
    assert find_claim("Thm-B", "c").expected_mode == "equality-of-conclusion"
    assert find_claim("Thm-A", "cbar").expected_mode == "equality-of-conclusion"
    assert find_claim("Thm-B", "kappa").expected_mode == "hypothesis-weakening-fails"


def test_c_axis_example():
    v = verify_sharpness(find_claim("Thm-B", "c"), 2, 4)
    assert v.status is Status.CONFIRMED
    w = v.witnesses[0]
    assert (w.m, w.t) == (1, 4) and w.params.c == 8


def test_delta_axis_example():
    v = verify_sharpness(find_claim("Thm-A", "delta"), 2, 4)
    assert v.status is Status.CONFIRMED
    p = v.witnesses[0].params
    assert (p.n, p.delta, p.c_bar) == (11, 4, 2)


def test_kappa_axis_example():
    v = verify_sharpness(find_claim("Thm-B", "kappa"), 2, 4)
    assert v.status is Status.CONFIRMED
    w = v.witnesses[0]
    assert (w.m, w.t) == (4, 1)  # 2K_4 + K_1
    assert (w.params.kappa, w.params.c, w.params.c_bar) == (1, 5, 4)


def test_out_of_range_cell():
    claim = find_claim("Thm-7", "kappa")  # Prop 13, kappa-sharp for lam >= (delta+2)/2
    assert not claim.in_range(1, 2)
    with pytest.raises(RangeError):
        verify_sharpness(claim, 1, 2)


def test_degenerate_cell():
    v = verify_sharpness(find_claim("Thm-A", "cbar"), 1, 3)
    assert v.status is Status.DEGENERATE


def test_wrong_witness_is_refuted():
    # a claim whose witness cannot work must come back REFUTED
    from largecycles.sharpness import SharpnessClaim
    bogus = SharpnessClaim(99, "Thm-A", "cbar", "all", (("all", "F6"),))
    assert verify_sharpness(bogus, 2, 4).status is Status.REFUTED


def test_sweep_examples():
    r = sharpness_sweep(4, props=[10])
    c_rows = [row for row in r.rows if row.axis == "c"]
    assert c_rows and all(row.status is not Status.REFUTED for row in c_rows)
    assert next(r for r in c_rows if (r.lam, r.delta) == (2, 4)).status is Status.CONFIRMED
    assert all(2 * row.lam <= row.delta + 2 for row in c_rows)
    r = sharpness_sweep(4, props=[3])
    d_rows = [row for row in r.rows if row.axis == "delta"]
    assert {(row.delta, row.lam) for row in d_rows} == {(d, l) for d in range(1, 5) for l in range(1, d + 1)}
    assert all(row.status is Status.CONFIRMED for row in d_rows if row.witnesses[0].m >= 1)
    assert not r.refuted


def test_sweep_requires_delta_two():
    with pytest.raises(ValueError):
        sharpness_sweep(1)


def test_claims_for_filter():
    assert {c.statement_id for c in claims_for(10)} == {"Thm-B"}
    assert len(claims_for()) == len(CLAIMS)
