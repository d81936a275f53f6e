import json

import pytest

from awdaha import operators as op
from awdaha.coeff import parse_params
from awdaha.verify import (
    SUITES, VerifyConfig, aw3_grid, daha_grid, independence_rank, normalform_check, run_suite,
    trial_packs,
)


def test_symmetric_rank_oracle(P):
    # Rank 9 computed independently in sympy (scripts/derive_oracles.py).
    ops = [op.compose(*([op.Dsym] * n + [op.Zsym] * m)) for n in range(3) for m in range(3)]
    assert independence_rank(ops, P, 12, "symmetric") == 9


def test_trivial_ranks(P):
    assert independence_rank([op.I], P, 4) == 1
    assert independence_rank([op.I, op.Zsym], P, 4) == 2
    assert independence_rank([op.I, op.Scale(3, op.I)], P, 4) == 1


def test_grids_have_expected_size():
    assert len(aw3_grid(3)) == 16 + 9
    assert len(daha_grid(2)) == 50


def test_trial_packs_are_seeded():
    a = [p.describe() for p in trial_packs(7, 3, 12, False)]
    b = [p.describe() for p in trial_packs(7, 3, 12, False)]
    assert a == b and len(set(a)) == 3


def test_normalform_check_small(P):
    count, failure = normalform_check("AW3Q0", P, 8, 3)
    assert count == 2 + 4 + 8 + 1 and failure is None


def test_report_shape(P):
    cfg = VerifyConfig(family_max=3)
    report = run_suite("qdiff_equation", P, N=8, seed=1, trials=1, cfg=cfg)
    assert report.passed
    obj = json.loads(report.to_json())
    assert set(obj) == {"suite", "pack", "N", "seed", "trials", "checks", "elapsed_ms"}
    assert obj["elapsed_ms"] == 0
    assert obj["pack"]["q"] == "1/4"
    assert all(c["name"].startswith(("main/", "trial1/")) for c in obj["checks"])


def test_failures_are_reported_with_context():
    # The unextended relations do not hold for the full D on a generic pack.
    from awdaha.ncalg import defining_relations
    from awdaha.verify import AW3_FULL, _Recorder, rep

    P = parse_params("1/2,2,3,5,7")
    r = _Recorder("main", P, 4)
    rel = defining_relations("AW3Q0", P)[0]
    r.op_zero(rel.name, rep(rel.poly, AW3_FULL))
    (check,) = r.checks
    assert check.status == "fail"
    assert check.detail["pack"] == "1/2,2,3,5,7"
    assert "input" in check.detail


def test_unknown_suite(P):
    with pytest.raises(ValueError):
        run_suite("nope", P)
    assert "normalform_consistency" in SUITES
