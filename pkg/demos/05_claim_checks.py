#!/usr/bin/env python3
"""Running the claim registry: closed forms against brute-force oracles.

Each claim pits a formula (expected) against a sieve/enumeration oracle
(observed) over a parameter grid.  This demo runs a light grid; the CLI
command `cosetforge verify --all` runs the full default grids.
"""

from cosetforge import verify

print("registered claims:")
for claim in verify.list_claims():
    print(f"  {claim.id:<11} {claim.statement}")

grid = {"q": [2, 3, 4], "m": [4, 6]}
print(f"\nrunning every claim on the light grid {grid}:")
for claim in verify.list_claims():
    rep = verify.verify_claim(claim.id, grid=grid)
    s = rep.summary
    print(f"  {claim.id:<11} pass={s['pass']:<3} fail={s['fail']:<2} skip={s['skip']:<2} flag={s['flag']:<2} ({rep.wall_time_ms} ms)")

rep = verify.verify_claim("CLM-D1P", grid={"q": [5], "m": [4]})
point = rep.points[0]
print(f"\none point in detail ({rep.claim_id}): params={point['params']}")
print(f"  closed form predicts {point['expected']}, sieve finds {point['observed']}: {point['status']}")
