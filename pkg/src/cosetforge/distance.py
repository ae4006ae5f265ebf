"""True minimum distances by exhaustive enumeration, plus closed-form bounds.

Codewords are message-polynomial multiples of the generator.  Enumeration
expands GF(q) = GF(p^e) linearly over GF(p): the k generator shifts are
scaled by the subfield basis powers, every element is split into its e
base-p digits, and whole chunks of messages are evaluated with one integer
matrix product mod p.  Chunks follow lexicographic message order, so the
visit order is deterministic and independent of chunk size.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import bch, gf
from .errors import BudgetExceeded, DeltaOutOfRange, FamilyConstraint, NonIntegerTransform, OutOfRange

DEFAULT_BUDGET = 10**7
BUDGET_ENV_VAR = "COSETFORGE_BUDGET"

_CHUNK_ENTRIES = 1 << 24  # cap on rows x columns per matmul chunk


def effective_budget(budget: int | None = None) -> int:
    """Explicit budget, else the COSETFORGE_BUDGET env var, else the default."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class WeightEnumerator:
    """Counts A_0..A_n of codewords by Hamming weight."""

    n: int
    counts: tuple[int, ...]

    def min_positive_weight(self) -> int | None:
        for w, c in enumerate(self.counts):
            if w >= 1 and c > 0:
                return w
        return None


@dataclass(frozen=True)
class DistanceResult:
    d: int | None
    method: str  # direct-enum | dual-macwilliams | bound-only
    enumerated: int


def _expanded_generator(t: gf.FieldTower, code) -> np.ndarray:
    """GF(p)-basis of the code as digit rows, shape (e*k, e*n)."""
    q, p, e = t.q, t.p, t.e
    n, k = code.n, code.dimension
    gcoeffs = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(code.genpoly.coeffs):
        gcoeffs[i] = c
    qmul = np.asarray(t.q_mul)
    rows = np.zeros((e * k, e * n), dtype=np.float32)
    for j in range(k):
        shifted = np.roll(gcoeffs, j)
        for d in range(e):
            scaled = qmul[p**d, shifted]  # index p**d encodes omega**d
            for d2 in range(e):
                rows[j * e + d, d2::e] = (scaled // p**d2) % p
    return rows


def _enumerate(t: gf.FieldTower, code, budget: int, want_counts: bool):
    """Visit all q^k codewords; returns (counts | None, min_weight, visited)."""
    q, p, e = t.q, t.p, t.e
    n, k = code.n, code.dimension
    total = q**k
    if total > budget:
        raise BudgetExceeded(f"q^k = {total} exceeds budget {budget}")
    counts = [0] * (n + 1) if want_counts else None
    if k == 0:
        if counts is not None:
            counts[0] = 1
        return counts, None, 1
    rows = _expanded_generator(t, code)
    nk = e * k
    divisors = (float(p) ** np.arange(nk - 1, -1, -1)).reshape(1, nk)
    chunk = max(1, _CHUNK_ENTRIES // (e * n))
    min_w: int | None = None
    lo = 0
    while lo < total:
        hi = min(lo + chunk, total)
        idx = np.arange(lo, hi, dtype=np.float64).reshape(-1, 1)
        digits = np.floor(idx / divisors) % p
        cw = (np.asarray(digits, dtype=np.float32) @ rows).astype(np.int16)
        cw %= p  # entries are small exact sums, so int16 is safe
        nz = cw.reshape(hi - lo, n, e).any(axis=2)
        weights = nz.sum(axis=1)
        if counts is not None:
            binned = np.bincount(weights, minlength=n + 1)
            for w in np.nonzero(binned)[0]:
                counts[int(w)] += int(binned[w])
        nonzero_w = weights[1:] if lo == 0 else weights
        if nonzero_w.size:
            w = int(nonzero_w.min())
            if min_w is None or w < min_w:
                min_w = w
        lo = hi
    return counts, min_w, total


def weight_enumerator(t: gf.FieldTower, code, budget: int | None = None) -> WeightEnumerator:
    """Full A_0..A_n by exhaustive enumeration (BudgetExceeded if too big)."""
    counts, _, _ = _enumerate(t, code, effective_budget(budget), want_counts=True)
    return WeightEnumerator(n=code.n, counts=tuple(counts))


def min_distance_enumerate(
    t: gf.FieldTower,
    code,
    budget: int | None = None,
    method: str = "auto",
    allow_bound_only: bool = True,
) -> DistanceResult:
    """Exact minimum distance when some enumeration route fits the budget.

    Tries direct enumeration of the code, then enumeration of its dual
    followed by a MacWilliams transform; otherwise falls back to a
    bound-only result (d = None) unless that is disallowed.
    """
    b = effective_budget(budget)
    q, n, k = code.q, code.n, code.dimension
    if method not in ("auto", "direct", "dual-macwilliams", "bound-only"):
        raise OutOfRange(f"unknown method {method!r}")
    if method in ("auto", "direct") and q**k <= b:
        _, min_w, visited = _enumerate(t, code, b, want_counts=False)
        return DistanceResult(d=min_w, method="direct-enum", enumerated=visited)
    if method in ("auto", "dual-macwilliams") and q ** (n - k) <= b:
        dual = bch.dual_code(t, code)
        wd = weight_enumerator(t, dual, b)
        wc = macwilliams_transform(wd, q, k_dual=k)
        return DistanceResult(d=wc.min_positive_weight(), method="dual-macwilliams", enumerated=q ** (n - k))
    if method == "bound-only" or (method == "auto" and allow_bound_only):
        return DistanceResult(d=None, method="bound-only", enumerated=0)
    raise BudgetExceeded(f"neither q^{k} nor q^{n - k} fits budget {b}")


def macwilliams_transform(w: WeightEnumerator, q: int, k_dual: int) -> WeightEnumerator:
    """Exact weight enumerator of the dual of a code with enumerator w.

    B_j = q^(-k) * sum_i A_i * K_j(i), with the Krawtchouk kernel
    K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(n-i, j-s).  Non-integer or
    negative counts indicate a broken input enumerator.
    """
    n = w.n
    total = sum(w.counts)
    if len(w.counts) != n + 1 or w.counts[0] != 1:
        raise NonIntegerTransform("input is not a weight enumerator (A_0 must be 1)")
    if total * q**k_dual != q**n:
        raise NonIntegerTransform(f"sum A_i = {total} inconsistent with an [n={n}, k={n - k_dual}] code over GF({q})")
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a in enumerate(w.counts):
            if a == 0:
                continue
            kern = 0
            for s in range(j + 1):
                term = (q - 1) ** (j - s) * math.comb(i, s) * math.comb(n - i, j - s)
                kern += -term if s & 1 else term
            acc += a * kern
        b, rem = divmod(acc, total)
        if rem or b < 0:
            raise NonIntegerTransform(f"B_{j} = {acc}/{total} is not a nonnegative integer")
        out.append(b)
    return WeightEnumerator(n=n, counts=tuple(out))


def dual_bound_closed_form(q: int, m: int, delta: int, family: str = "plus") -> int:
    """Piecewise lower bound on the dual distance of the plus-family code.

    Where two brackets touch, the larger applicable bound is returned.
    """
    if family != "plus":
        raise FamilyConstraint(f"closed-form dual bound is for the plus family, got {family!r}")
    if m < 4 or m % 2 != 0:
        raise FamilyConstraint(f"closed-form dual bound needs m >= 4 even, got m={m}")
    n = (q**m - 1) // (q + 1)
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {n}]")
    bounds = []
    if q == 2:
        for t in range(0, m - 1, 2):
            if (2**t - 1) // 3 < delta <= (2 ** (t + 2) - 1) // 3:
                bounds.append((2 ** (m - t) - 1) // 3 + 1)
    else:
        if delta <= q - 1:
            bounds.append((q ** (m - 1) + 2 * q ** (m - 2) - 1) // (q + 1))
        for t in range(2, m - 1, 2):
            if (q**t - 1) // (q + 1) < delta <= (q ** (t + 1) + 2 * q**t - 1) // (q + 1):
                bounds.append((q ** (m - t) - 1) // (q + 1) + 1)
            if t != m - 2 and (q ** (t + 1) + 2 * q**t - 1) // (q + 1) < delta <= (q ** (t + 2) - 1) // (q + 1):
                bounds.append((q ** (m - t - 2) - 1) // (q + 1) + 1)
        if delta > (q ** (m - 1) + 2 * q ** (m - 2) - 1) // (q + 1):
            bounds.append(2)
    assert bounds, "brackets tile the whole delta range"
    return max(bounds)
