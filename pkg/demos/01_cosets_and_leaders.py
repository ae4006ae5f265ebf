#!/usr/bin/env python3
"""Cyclotomic cosets and the closed forms for the largest leaders.

Walks through coset structure modulo n for both special lengths
n = (q^m-1)/(q+1) and n = (q^m-1)/(q-1), and shows that the closed-form
largest-leader values agree with a plain sieve.
"""

from cosetforge import cosets

print("== cosets modulo 21 with q = 2 ==")
for lead in cosets.coset_leaders(2, 21):
    c = cosets.cyclotomic_coset(2, 21, lead)
    print(f"  C_{lead:<2} size {c.size}:  {c.elements}")
print("  three largest leaders:", cosets.top_k_leaders(2, 21, 3))

print("\n== closed form vs sieve, plus family n = (q^m-1)/(q+1) ==")
for q, m in [(2, 6), (3, 4), (4, 4), (5, 4), (3, 6)]:
    n = cosets.family_length(q, m, "plus")
    closed = cosets.delta1_closed_form(q, m, "plus")
    brute = cosets.top_k_leaders(q, n, 1)[0]
    size = cosets.delta1_coset_size_closed_form(q, m, "plus")
    print(f"  q={q} m={m} n={n:>5}: delta1 = {closed} (sieve {brute}), |C_delta1| = {size}")

print("\n== closed form vs sieve, minus family n = (q^m-1)/(q-1) ==")
for q, m in [(3, 4), (4, 4), (5, 4), (9, 5)]:
    n = cosets.family_length(q, m, "minus")
    td = cosets.theta_digits(q, m)
    closed = cosets.delta1_closed_form(q, m, "minus")
    brute = cosets.top_k_leaders(q, n, 1)[0]
    print(f"  q={q} m={m} n={n:>5}: theta = {closed} (sieve {brute}), digit pattern {td.digits}, Upsilon = {sorted(td.upsilon)}")

print("\n== second largest leader for m = 4 (odd q) ==")
for q in (3, 5, 7):
    n = (q**4 - 1) // (q + 1)
    print(f"  q={q}: formula {cosets.second_largest_m4_plus(q)}, sieve {cosets.top_k_leaders(q, n, 2)[1]}")

print("\n== leader status lifts through division by q+1 ==")
for h in (27, 33, 45):
    ok = cosets.lift_correspondence_check(2, 6, h, 3)
    print(f"  h={h}: leader mod 63 <=> h/3 leader mod 21?  {ok}")
