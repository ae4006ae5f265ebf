"""Registry of machine-checked claims, each paired with a brute-force oracle.

Every claim compares a closed form or an iff-characterization ("expected")
against a value produced by brute force over the actual coset/defining-set
structures ("observed"); the observed side never calls the closed form it
is checking.  Reports are deterministic: identical grids give identical
point lists, and the only varying field is the wall time.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import bch, cosets, distance, gf
from .errors import GridTooLarge, UnknownClaim

# default parameter grids (pairs (q, m)); larger m only where sieves stay cheap
PLUS_PAIRS = ((2, 4), (2, 6), (2, 8), (3, 4), (3, 6), (3, 8), (4, 4), (4, 6), (5, 4), (5, 6), (7, 4), (7, 6))
MINUS_PAIRS = ((3, 4), (3, 5), (3, 6), (4, 4), (4, 5), (4, 6), (5, 4), (5, 5), (7, 4), (7, 5), (8, 4), (8, 5), (9, 4), (9, 5))
QM1_PAIRS = tuple(sorted(set(PLUS_PAIRS) | set(MINUS_PAIRS)))

_POINT_GUARD = 2**26


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    kind: str  # plus | minus | qm1 | q-only
    default_pairs: tuple
    checker: Callable


@dataclass
class ClaimReport:
    claim_id: str
    statement: str
    points: list[dict]
    summary: dict[str, int]
    wall_time_ms: int

    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {
            "claim": self.claim_id,
            "statement": self.statement,
            "points": self.points,
            "summary": self.summary,
            "wall_time_ms": self.wall_time_ms,
        }


def _point(params: dict, expected, observed, **extra) -> dict:
    status = "pass" if expected == observed else "fail"
    out = {"params": params, "expected": expected, "observed": observed, "status": status}
    out.update(extra)
    return out


def _skip(params: dict, note: str) -> dict:
    return {"params": params, "status": "skip", "note": note}


def _pair_ok(q: int, m: int, kind: str) -> bool:
    try:
        gf.prime_power(q)
    except Exception:
        return False
    if kind == "plus":
        return m >= 4 and m % 2 == 0
    if kind == "minus":
        return q >= 3 and m >= 4
    return m >= 2  # qm1


def _pairs_for(claim: Claim, grid: dict | None) -> tuple:
    if not grid:
        return claim.default_pairs
    qs = grid.get("q")
    ms = grid.get("m")
    base = claim.default_pairs
    if qs is None:
        qs = tuple(sorted({q for q, _ in base}))
    if ms is None:
        ms = tuple(sorted({m for _, m in base}))
    pairs = tuple((q, m) for q in qs for m in ms if _pair_ok(q, m, claim.kind))
    for q, m in pairs:
        if q**m > _POINT_GUARD:
            raise GridTooLarge(f"q^m = {q}^{m} exceeds the desk-scale guard")
    return pairs


def _intervals(flags, first_delta: int) -> list[list[int]]:
    """Compress a boolean vector indexed from first_delta into [lo, hi] runs."""
    out: list[list[int]] = []
    for j, v in enumerate(flags):
        if not v:
            continue
        d = first_delta + j
        if out and out[-1][1] == d - 1:
            out[-1][1] = d
        else:
            out.append([d, d])
    return out


def _enumerable(q: int, n: int, dim: int, budget: int) -> str | None:
    """Which route can compute the true distance of an [n, dim] code, if any."""
    if q**dim <= budget:
        return "direct"
    if q ** (n - dim) <= budget and n <= 256:  # transform cost grows with n^3
        return "transform"
    return None


def _true_distance(q: int, m: int, code, budget: int) -> int:
    t = gf.tower_for(q, m)
    res = distance.min_distance_enumerate(t, code, budget=budget, allow_bound_only=False)
    assert res.d is not None
    return res.d


# --------------------------------------------------------------------------
# checkers
# --------------------------------------------------------------------------


def _chk_qm1(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        expected = list(cosets.largest_leaders_qm1(q, m))
        observed = cosets.top_k_leaders(q, q**m - 1, 3)
        pts.append(_point({"q": q, "m": m}, expected, observed))
    return pts


def _chk_lift(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        step = max(1, n // 128)
        samples = sorted(set(range(0, n, step)) | {n - 1})
        bad = [j for j in samples if not cosets.lift_correspondence_check(q, m, (q + 1) * j, q + 1)]
        pts.append(_point({"q": q, "m": m, "samples": len(samples), "stride": step}, True, not bad, failed_h=[(q + 1) * j for j in bad]))
    return pts


def _chk_d1p(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        pts.append(_point({"q": q, "m": m, "n": n}, cosets.delta1_closed_form(q, m, cosets.PLUS), cosets.top_k_leaders(q, n, 1)[0]))
    return pts


def _chk_szp(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        d1 = cosets.top_k_leaders(q, n, 1)[0]
        pts.append(_point({"q": q, "m": m}, cosets.delta1_coset_size_closed_form(q, m, cosets.PLUS), cosets.cyclotomic_coset(q, n, d1).size))
    return pts


def _chk_t1(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        d1 = cosets.top_k_leaders(q, n, 1)[0]
        expected_dim = m + 1 if m % 4 == 0 else m // 2 + 1
        if d1 < 2:  # degenerate point: empty defining set, full code
            pts.append(_point({"q": q, "m": m, "check": "dimension", "delta1": d1}, expected_dim, n))
            pts.append(_point({"q": q, "m": m, "check": "distance", "delta1": d1}, True, 1 >= d1, note="full code, d = 1"))
            continue
        ds = bch.defining_set(q, n, d1, 1)
        pts.append(_point({"q": q, "m": m, "check": "dimension", "delta1": d1}, expected_dim, n - ds.size))
        k = n - ds.size
        if q**k > budget:
            pts.append(_skip({"q": q, "m": m, "check": "distance", "delta1": d1}, f"q^k = {q}^{k} over budget"))
            continue
        t = gf.tower_for(q, m)
        code = bch.bch_code(t, n, d1, family=cosets.PLUS, m=m)
        d = _true_distance(q, m, code, budget)
        pts.append(_point({"q": q, "m": m, "check": "distance", "delta1": d1}, True, d >= d1, true_d=d))
    return pts


def _chk_fam(pairs, budget) -> list[dict]:
    # exponent ranges follow the lemma's use sites: l odd up to m/2, t even up
    # to m-2 (larger l fail by brute force, e.g. l = 3 at q = 3, m = 4); the
    # geometric-sum values are residues mod n (they equal n exactly when q = 2)
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        values: list[tuple[str, int, int]] = []
        for l in range(1, m // 2 + 1, 2):
            values.append(("(q^l+1)/(q+1)", l, (q**l + 1) // (q + 1)))
        for t in range(2, m - 1, 2):
            values.append(("(q^t-1)/(q+1)", t, (q**t - 1) // (q + 1)))
        geom = (q**m - 1) // (q - 1)
        values.append(("sum(q^i)/(q+1)", 0, geom // (q + 1) % n))
        values.append(("(q-2)sum(q^i)/(q+1)", 0, (q - 2) * geom // (q + 1) % n))
        values.append(("(q^m-q^(m-1)-q^(m-2)-1)/(q+1)", 0, (q**m - q ** (m - 1) - q ** (m - 2) - 1) // (q + 1)))
        for form, par, v in values:
            pts.append(_point({"q": q, "m": m, "form": form, "exponent": par, "value": v}, True, cosets.is_coset_leader(q, n, v)))
    return pts


def _chk_2nd4(pairs, budget) -> list[dict]:
    pts = []
    for q, _m in pairs:
        n = (q**4 - 1) // (q + 1)
        observed = cosets.top_k_leaders(q, n, 2)[1]
        if q % 2 == 1:
            pts.append(_point({"q": q, "m": 4}, cosets.second_largest_m4_plus(q), observed))
        else:
            formula = ((q - 1) * q**3 - q**2 - q - 2) // (q + 1)
            pts.append(
                {
                    "params": {"q": q, "m": 4},
                    "expected": formula,
                    "observed": observed,
                    "status": "flag",
                    "note": "informational: formula asserted for odd q only",
                }
            )
    return pts


def _chk_idp(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        for t in range(2, m - 1, 2):
            lo = (q**t - 1) // (q + 1) + 1
            hi = min((q ** (t + 1) + 2 * q**t - 1) // (q + 1), n - 1)
            deltas = np.arange(max(2, lo), hi + 1)
            if deltas.size == 0:
                continue
            expected = (q ** (m - t) - 1) // (q + 1)
            vals = bch.i_of_delta_sweep(q, n, deltas)
            mism = deltas[vals != expected]
            params = {"q": q, "m": m, "t": t, "delta_lo": int(deltas[0]), "delta_hi": int(deltas[-1]), "count": int(deltas.size)}
            if mism.size == 0:
                pts.append(_point(params, expected, expected))
            else:
                d0 = int(mism[0])
                pts.append(_point(params, expected, int(vals[deltas == d0][0]), first_mismatch_delta=d0))
    return pts


def _chk_idm(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.MINUS)
        endpoints = {(q**j - 1) // (q - 1) for j in range(2, m)}
        brackets = []
        for t in range(1, m - 1):
            lo = (q**t - 1) // (q - 1) + 1
            hi = (q ** (t + 1) - 1) // (q - 1)
            brackets.append((t, lo, hi, (q ** (m - t) - 1) // (q - 1)))
        brackets.append(("top", (q ** (m - 1) - 1) // (q - 1) + 1, n - 1, 1))
        for t, lo, hi, expected in brackets:
            deltas = np.arange(max(2, lo), min(hi, n - 1) + 1)
            if deltas.size == 0:
                continue
            vals = bch.i_of_delta_sweep(q, n, deltas)
            mism = deltas[vals != expected]
            hard = [int(d) for d in mism if int(d) not in endpoints]
            soft = [int(d) for d in mism if int(d) in endpoints]
            params = {"q": q, "m": m, "t": t if t != "top" else 0, "bracket": str(t), "delta_lo": int(deltas[0]), "delta_hi": int(deltas[-1]), "count": int(deltas.size)}
            if hard:
                d0 = hard[0]
                pts.append(_point(params, expected, int(vals[deltas == d0][0]), first_mismatch_delta=d0))
            elif soft:
                pts.append({"params": params, "expected": expected, "observed": int(vals[deltas == soft[0]][0]), "status": "flag", "note": f"mismatch only at bracket endpoints {soft}"})
            else:
                pts.append(_point(params, expected, expected))
    return pts


def _dual_distance_sweep_points(pairs, budget, delta_range, bound_fn, claim_tag) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.PLUS)
        lead = np.asarray(cosets.leader_map(q, n))
        orbit = np.bincount(lead, minlength=n)
        pref = np.cumsum(orbit)  # pref[v] = |{x : leader(x) <= v}| (includes 0)
        skipped = 0
        t = None
        cache: dict[int, tuple[int, str]] = {}  # |T| -> (dual d, method); T(delta) nests, so equal size means equal set
        for delta in delta_range(q, n):
            size_t = int(pref[delta - 1] - 1)
            route = _enumerable(q, n, size_t, budget)
            if route is None:
                skipped += 1
                continue
            if size_t not in cache:
                if t is None:
                    t = gf.tower_for(q, m)
                code = bch.bch_code(t, n, delta, family=cosets.PLUS, m=m)
                dual = bch.dual_code(t, code)
                res = distance.min_distance_enumerate(t, dual, budget=budget, allow_bound_only=False)
                cache[size_t] = (res.d, res.method)
            d, meth = cache[size_t]
            bound = bound_fn(q, m, delta)
            pts.append(_point({"q": q, "m": m, "delta": delta}, True, bound <= d, bound=bound, true_dual_d=d, method=meth))
        if skipped:
            pts.append(_skip({"q": q, "m": m}, f"{skipped} deltas over budget for {claim_tag}"))
    return pts


def _chk_b1002(pairs, budget) -> list[dict]:
    return _dual_distance_sweep_points(
        pairs, budget, lambda q, n: range(2, n + 1), lambda q, m, d: distance.dual_bound_closed_form(q, m, d), "CLM-B1002"
    )


def _chk_lb1002(pairs, budget) -> list[dict]:
    def deltas(q, n):
        return range(2, q)  # 2 <= delta <= q-1 (empty for q = 2)

    def bound(q, m, d):
        return (q ** (m - 1) + 2 * q ** (m - 2) - 1) // (q + 1)

    return _dual_distance_sweep_points(pairs, budget, deltas, bound, "CLM-LB1002")


def _sweep_claim(pairs, family: str, predicate) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, family)
        d1 = cosets.top_k_leaders(q, n, 1)[0]
        observed = _intervals(bch.dually_bch_sweep(q, n), 2)
        expected = _intervals([predicate(d, d1, n, m) for d in range(2, n + 1)], 2)
        pts.append(_point({"q": q, "m": m, "n": n, "delta1": d1}, expected, observed))
    return pts


def _chk_t2(pairs, budget) -> list[dict]:
    return _sweep_claim([p for p in pairs if p[0] == 2], cosets.PLUS, lambda d, d1, n, m: d >= d1 + 1)


def _chk_t3(pairs, budget) -> list[dict]:
    def predicate(d, d1, n, m):
        if m == 4:
            return d == 2 or d >= d1
        return d >= d1 + 1

    return _sweep_claim([p for p in pairs if p[0] > 2], cosets.PLUS, predicate)


def _chk_t5(pairs, budget) -> list[dict]:
    return _sweep_claim(pairs, cosets.MINUS, lambda d, d1, n, m: d >= d1 + 1)


def _direct_theta_expansion(q: int, m: int) -> list[int]:
    total = 0
    for t in range(1, q):
        total += q ** math.ceil(Fraction(m * t, q - 1) - 1)
    digits = []
    for _ in range(m):
        digits.append(total % q)
        total //= q
    assert total == 0
    return list(reversed(digits))


def _chk_rup(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        td = cosets.theta_digits(q, m)
        expansion = _direct_theta_expansion(q, m)
        pts.append(_point({"q": q, "m": m, "t1": td.t1, "t2": td.t2, "check": "digits"}, list(td.digits), expansion))
        pts.append(_point({"q": q, "m": m, "check": "digit-sum"}, q - 1, sum(expansion)))
    return pts


def _chk_theta(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.MINUS)
        pts.append(_point({"q": q, "m": m, "n": n}, cosets.delta1_closed_form(q, m, cosets.MINUS), cosets.top_k_leaders(q, n, 1)[0]))
    return pts


def _chk_szm(pairs, budget) -> list[dict]:
    pts = []
    for q, m in pairs:
        n = cosets.family_length(q, m, cosets.MINUS)
        d1 = cosets.top_k_leaders(q, n, 1)[0]
        pts.append(_point({"q": q, "m": m}, cosets.delta1_coset_size_closed_form(q, m, cosets.MINUS), cosets.cyclotomic_coset(q, n, d1).size))
    return pts


# --------------------------------------------------------------------------
# registry
# --------------------------------------------------------------------------

_CLAIMS = (
    Claim("CLM-QM1", "the three largest coset leaders modulo q^m-1 are (q-1)q^(m-1)-1, minus q^floor((m-1)/2), minus q^floor((m+1)/2)", "qm1", QM1_PAIRS, _chk_qm1),
    Claim("CLM-LIFT", "h multiple of q+1 is a leader modulo q^m-1 iff h/(q+1) is a leader modulo (q^m-1)/(q+1)", "plus", PLUS_PAIRS, _chk_lift),
    Claim("CLM-D1P", "largest leader modulo (q^m-1)/(q+1) is ((q-1)q^(m-1)-q^(m/2 or (m-2)/2)-1)/(q+1) by m mod 4", "plus", PLUS_PAIRS, _chk_d1p),
    Claim("CLM-SZP", "the largest leader's coset modulo (q^m-1)/(q+1) has size m (m=0 mod 4) or m/2 (m=2 mod 4)", "plus", PLUS_PAIRS, _chk_szp),
    Claim("CLM-T1", "the code at designed distance delta1 has dimension m+1 (m=0 mod 4) or m/2+1, and distance >= delta1", "plus", PLUS_PAIRS, _chk_t1),
    Claim("CLM-FAM", "five closed-form families of values (l odd <= m/2, t even <= m-2, two geometric sums, one corner value) are coset leaders modulo (q^m-1)/(q+1)", "plus", PLUS_PAIRS, _chk_fam),
    Claim("CLM-2ND4", "second largest leader modulo (q^4-1)/(q+1) is ((q-1)q^3-q^2-q-2)/(q+1) for odd q", "q-only", ((2, 4), (3, 4), (4, 4), (5, 4), (7, 4)), _chk_2nd4),
    Claim("CLM-IDP", "I(delta) = (q^(m-t)-1)/(q+1) on the bracket (q^t-1)/(q+1) < delta <= (q^(t+1)+2q^t-1)/(q+1), t even", "plus", PLUS_PAIRS, _chk_idp),
    Claim("CLM-IDM", "I(delta) = (q^(m-t)-1)/(q-1) on (q^t-1)/(q-1) < delta <= (q^(t+1)-1)/(q-1), and 1 on the top bracket", "minus", MINUS_PAIRS, _chk_idm),
    Claim("CLM-B1002", "the piecewise closed-form dual bound is <= the true dual distance", "plus", ((2, 6), (3, 4)), _chk_b1002),
    Claim("CLM-LB1002", "for 2 <= delta <= q-1 the dual distance is >= (q^(m-1)+2q^(m-2)-1)/(q+1)", "plus", PLUS_PAIRS, _chk_lb1002),
    Claim("CLM-T2", "for q = 2 the code is dually-BCH iff delta1+1 <= delta <= n", "plus", PLUS_PAIRS, _chk_t2),
    Claim("CLM-T3", "for q > 2 the code is dually-BCH iff delta >= delta1+1, plus delta = 2 and delta = delta1 when m = 4", "plus", PLUS_PAIRS, _chk_t3),
    Claim("CLM-RUP", "digit structure of sum(q^ceil(mt/(q-1)-1)): value ceil((q-1)/m) exactly on Upsilon, floor elsewhere, digit sum q-1", "minus", MINUS_PAIRS, _chk_rup),
    Claim("CLM-THETA", "largest leader modulo (q^m-1)/(q-1) is (q^m - sum(q^ceil(mt/(q-1)-1)) - 1)/(q-1)", "minus", MINUS_PAIRS, _chk_theta),
    Claim("CLM-SZM", "the largest leader's coset modulo (q^m-1)/(q-1) has size m/gcd(m, q-1)", "minus", MINUS_PAIRS, _chk_szm),
    Claim("CLM-T5", "for q >= 3 the minus-family code is dually-BCH iff delta1+1 <= delta <= n", "minus", MINUS_PAIRS, _chk_t5),
)

_BY_ID = {c.id: c for c in _CLAIMS}


def list_claims() -> tuple[Claim, ...]:
    return _CLAIMS


def verify_claim(claim_id: str, grid: dict | None = None, budget: int | None = None) -> ClaimReport:
    if claim_id not in _BY_ID:
        raise UnknownClaim(claim_id)
    claim = _BY_ID[claim_id]
    pairs = _pairs_for(claim, grid)
    b = distance.effective_budget(budget)
    start = time.monotonic()
    points = claim.checker(pairs, b)
    elapsed = int((time.monotonic() - start) * 1000)
    summary = {"pass": 0, "fail": 0, "skip": 0, "flag": 0}
    for p in points:
        summary[p["status"]] += 1
    summary["total"] = len(points)
    return ClaimReport(claim_id=claim.id, statement=claim.statement, points=points, summary=summary, wall_time_ms=elapsed)


def verify_all(grid: dict | None = None, budget: int | None = None, threads: int = 1) -> list[ClaimReport]:
    """Run every claim; report order always follows the registry."""
    ids = [c.id for c in _CLAIMS]
    if threads <= 1:
        return [verify_claim(i, grid, budget) for i in ids]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda i: verify_claim(i, grid, budget), ids))
