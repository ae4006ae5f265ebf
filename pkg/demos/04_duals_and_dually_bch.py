#!/usr/bin/env python3
"""Dual defining sets, the dually-BCH property, and dual distance bounds.

A code is dually-BCH when its dual's defining set is again a coset closure
of a consecutive window.  The sweep below reproduces the characterization:
for the ternary [20, .] family the verdict is true exactly at delta = 2 and
delta in [11, 20]; the closed-form dual bound is compared against the run
bound and the true dual distance.
"""

from cosetforge import bch, cosets, distance, gf

q, m, family = 3, 4, "plus"
n = cosets.family_length(q, m, family)

print(f"== dually-BCH sweep, q={q}, m={m}, n={n} ==")
for delta in range(2, n + 1):
    res = bch.is_dually_bch(q, m, family, delta)
    mark = "dually-BCH" if res.verdict else "-"
    extra = f" witness b={res.witness[0]}, delta'={res.witness[1]}" if res.witness else ""
    print(f"  delta={delta:>2}: {mark}{extra}")

print("\n== dual distance bounds vs the truth, delta = 2 ==")
t = gf.tower_for(q, m)
code = bch.bch_code(t, n, 2)
dual = bch.dual_code(t, code)
closed = distance.dual_bound_closed_form(q, m, 2)
run = bch.bch_bound(dual.defining)
true_d = distance.min_distance_enumerate(t, dual).d
print(f"  closed form {closed} <= run bound {run} <= true distance {true_d}")

print("\n== the dual defining set behind that ==")
tperp = bch.dual_defining_set(code.defining)
print(f"  T      = {sorted(code.defining.exponents)}")
print(f"  T_perp = {sorted(tperp.exponents)}")
rec = bch.recognize_bch(tperp)
print(f"  recognized as coset closure of a window? {rec.is_bch}, witness {rec.witness}")
