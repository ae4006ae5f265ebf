"""Claim registry behaviour: membership, oracle agreement, determinism."""

import json

import pytest

from cosetforge import verify
from cosetforge.errors import GridTooLarge, UnknownClaim

ALL_IDS = [
    "CLM-QM1", "CLM-LIFT", "CLM-D1P", "CLM-SZP", "CLM-T1", "CLM-FAM", "CLM-2ND4",
    "CLM-IDP", "CLM-IDM", "CLM-B1002", "CLM-LB1002", "CLM-T2", "CLM-T3",
    "CLM-RUP", "CLM-THETA", "CLM-SZM", "CLM-T5",
]


def test_registry_contents():
    claims = verify.list_claims()
    assert len(claims) == 17
    ids = [c.id for c in claims]
    assert ids == ALL_IDS
    assert "CLM-D1P" in ids and "CLM-T5" in ids
    for c in claims:
        assert c.statement and c.default_pairs


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        verify.verify_claim("CLM-NOPE")


def test_grid_too_large():
    with pytest.raises(GridTooLarge):
        verify.verify_claim("CLM-D1P", grid={"q": [3], "m": [18]})


def test_d1p_small_grid():
    rep = verify.verify_claim("CLM-D1P", grid={"q": [3, 5], "m": [4]})
    assert rep.ok()
    by_q = {p["params"]["q"]: p for p in rep.points}
    assert by_q[5]["expected"] == 79 and by_q[5]["observed"] == 79
    assert by_q[3]["expected"] == 11


def test_theta_small_grid():
    rep = verify.verify_claim("CLM-THETA", grid={"q": [3], "m": [4]})
    assert rep.ok()
    assert rep.points[0]["expected"] == 25 and rep.points[0]["observed"] == 25


def test_t3_sweep_intervals():
    rep = verify.verify_claim("CLM-T3", grid={"q": [3], "m": [4]})
    assert rep.ok()
    point = rep.points[0]
    assert point["expected"] == [[2, 2], [11, 20]]
    assert point["observed"] == [[2, 2], [11, 20]]


def test_t2_and_t5_small():
    assert verify.verify_claim("CLM-T2", grid={"q": [2], "m": [6]}).ok()
    rep = verify.verify_claim("CLM-T5", grid={"q": [3], "m": [4]})
    assert rep.ok()
    assert rep.points[0]["observed"] == [[26, 40]]


def test_2nd4_flags_even_q():
    rep = verify.verify_claim("CLM-2ND4", grid={"q": [2, 3, 4]})
    statuses = {p["params"]["q"]: p["status"] for p in rep.points}
    assert statuses == {2: "flag", 3: "pass", 4: "flag"}
    assert rep.ok()  # flagged points never fail a claim


def test_rup_points():
    rep = verify.verify_claim("CLM-RUP", grid={"q": [4], "m": [4]})
    assert rep.ok()
    digits = [p for p in rep.points if p["params"].get("check") == "digits"][0]
    assert digits["expected"] == [1, 1, 1, 0]


def test_idm_claim_small():
    rep = verify.verify_claim("CLM-IDM", grid={"q": [3], "m": [4]})
    assert rep.ok()
    brackets = {p["params"]["bracket"]: p["expected"] for p in rep.points}
    assert brackets == {"1": 13, "2": 4, "top": 1}


def test_b1002_points_record_both_sides():
    rep = verify.verify_claim("CLM-B1002", grid={"q": [3], "m": [4]})
    assert rep.ok()
    executed = [p for p in rep.points if p["status"] == "pass"]
    assert executed and all(p["bound"] <= p["true_dual_d"] for p in executed)
    d2 = [p for p in executed if p["params"]["delta"] == 2][0]
    assert d2["bound"] == 11 and d2["true_dual_d"] == 12


def test_t1_points():
    rep = verify.verify_claim("CLM-T1", grid={"q": [3], "m": [4]})
    assert rep.ok()
    dim = [p for p in rep.points if p["params"]["check"] == "dimension"][0]
    assert dim["expected"] == 5 and dim["observed"] == 5


def test_report_determinism():
    a = verify.verify_claim("CLM-FAM", grid={"q": [3], "m": [4, 6]}).to_dict()
    b = verify.verify_claim("CLM-FAM", grid={"q": [3], "m": [4, 6]}).to_dict()
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_verify_all_threads_match_serial():
    grid = {"q": [3], "m": [4]}
    serial = [r.to_dict() for r in verify.verify_all(grid=grid, threads=1)]
    threaded = [r.to_dict() for r in verify.verify_all(grid=grid, threads=4)]
    for x in serial + threaded:
        x.pop("wall_time_ms")
    assert serial == threaded


def test_points_are_json_serializable():
    for cid in ("CLM-QM1", "CLM-LIFT", "CLM-IDP", "CLM-SZM"):
        rep = verify.verify_claim(cid, grid={"q": [3], "m": [4]})
        json.dumps(rep.to_dict())
        assert rep.ok()
