"""Defining sets, generator polynomials, duals and the dually-BCH decision.

A narrow-sense code with designed distance delta has defining set
T = C_1 | ... | C_{delta-1} (exponents of the generator's roots in the
fixed primitive n-th root of unity beta).  The dual's defining set is
T_perp = Z_n \\ T^{-1} with T^{-1} = {n - i mod n : i in T}.  A set is
recognized as BCH when it equals the coset closure of a consecutive
window {b, ..., b + delta - 2}; the scan anchors b at coset leaders
(and 0), which keeps witnesses canonical and deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import cosets, gf
from .errors import DeltaOutOfRange, FamilyConstraint, NotCoprime, TowerMismatch


@dataclass(frozen=True)
class DefiningSet:
    """A coset-closed set of exponents modulo n."""

    q: int
    n: int
    exponents: frozenset[int]
    source_cosets: tuple[int, ...]  # leaders of the cosets composing the set

    @property
    def size(self) -> int:
        return len(self.exponents)

    def sorted_exponents(self) -> list[int]:
        return sorted(self.exponents)


@dataclass(frozen=True)
class Recognition:
    """Outcome of the BCH-shape test for an exponent set.

    ``witness`` is the canonical (b, delta) with delta maximal and then b
    minimal over the scanned anchors; ``c0_anchored`` records whether a
    witness starting at b = 0 exists.  ``empty`` marks the empty-set case,
    which carries no witness at all.
    """

    is_bch: bool
    witness: tuple[int, int] | None
    empty: bool = False
    c0_anchored: bool = False


@dataclass(frozen=True)
class DuallyBchResult:
    verdict: bool
    witness: tuple[int, int] | None
    tperp: DefiningSet
    empty_dual: bool = False


@dataclass(frozen=True)
class CyclicCode:
    """A cyclic code described by its generator polynomial and root exponents."""

    q: int
    n: int
    genpoly: gf.Polynomial
    defining: DefiningSet
    dimension: int


@dataclass(frozen=True)
class BchCode:
    q: int
    m: int
    family: str
    n: int
    b: int
    delta: int
    defining: DefiningSet
    genpoly: gf.Polynomial
    dimension: int
    bch_bound: int


def _leader_of(q: int, n: int, s: int) -> int:
    lead = s
    x = s * q % n
    while x != s:
        if x < lead:
            lead = x
        x = x * q % n
    return lead


def _make_defining_set(q: int, n: int, exps: set[int]) -> DefiningSet:
    sources = set()
    seen: set[int] = set()
    for x in exps:
        if x in seen:
            continue
        lead = x
        orbit = [x]
        y = x * q % n
        while y != x:
            orbit.append(y)
            if y < lead:
                lead = y
            y = y * q % n
        seen.update(orbit)
        sources.add(lead)
    return DefiningSet(q=q, n=n, exponents=frozenset(exps), source_cosets=tuple(sorted(sources)))


def defining_set(q: int, n: int, delta: int, b: int = 1) -> DefiningSet:
    """Union of the cosets C_b, ..., C_{b+delta-2} (indices mod n)."""
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")
    if not 2 <= delta <= n:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {n}]")
    exps: set[int] = set()
    for j in range(delta - 1):
        s = (b + j) % n
        if s in exps:
            continue
        x = s
        while x not in exps:
            exps.add(x)
            x = x * q % n
    return _make_defining_set(q, n, exps)


def dual_defining_set(ds: DefiningSet) -> DefiningSet:
    """T_perp = Z_n \\ T^{-1}; coset-closed because T is."""
    n = ds.n
    inv = {(n - i) % n for i in ds.exponents}
    return _make_defining_set(ds.q, n, set(range(n)) - inv)


def bch_bound(ds: DefiningSet) -> int:
    """Longest cyclically-consecutive run inside the set, plus one."""
    if not ds.exponents:
        return 1
    n = ds.n
    if len(ds.exponents) == n:
        return n + 1
    members = ds.sorted_exponents()
    runs = []
    start = prev = members[0]
    for x in members[1:]:
        if x == prev + 1:
            prev = x
        else:
            runs.append((start, prev - start + 1))
            start = prev = x
    runs.append((start, prev - start + 1))
    # merge the wrap-around run n-1 -> 0
    if len(runs) > 1 and runs[0][0] == 0 and runs[-1][0] + runs[-1][1] == n:
        first = runs.pop(0)
        last = runs.pop()
        runs.append((last[0], last[1] + first[1]))
    return max(length for _, length in runs) + 1


def recognize_bch(ds: DefiningSet) -> Recognition:
    """Decide whether the set is a coset closure of a consecutive window.

    Anchors b range over the set's coset leaders plus 0; among valid
    witnesses, delta is maximized and then b minimized.
    """
    exps = ds.exponents
    n = ds.n
    if not exps:
        return Recognition(is_bch=False, witness=None, empty=True)
    if len(exps) == n:
        # window of n-1 residues misses exactly one; any missed residue whose
        # coset is larger than itself keeps the closure equal to Z_n
        candidates = []
        for x in range(n):
            if x * ds.q % n != x:
                candidates.append((x + 1) % n)
        if not candidates:
            return Recognition(is_bch=False, witness=None)
        b = min(candidates)
        return Recognition(is_bch=True, witness=(b, n), c0_anchored=(n - 1) * ds.q % n != n - 1)

    leader_of = {}
    for lead in ds.source_cosets:
        x = lead
        while True:
            leader_of[x] = lead
            x = x * ds.q % n
            if x == lead:
                break
    total = len(ds.source_cosets)

    anchors = sorted(set(ds.source_cosets) | ({0} if 0 in exps else set()))
    best: tuple[int, int] | None = None
    c0 = False
    for b in anchors:
        length = 0
        while length < n and (b + length) % n in exps:
            length += 1
        covered = {leader_of[(b + j) % n] for j in range(length)}
        if len(covered) == total:
            if b == 0:
                c0 = True
            if best is None or length + 1 > best[1] or (length + 1 == best[1] and b < best[0]):
                best = (b, length + 1)
    if best is None:
        return Recognition(is_bch=False, witness=None)
    return Recognition(is_bch=True, witness=best, c0_anchored=c0)


def is_dually_bch(q: int, m: int, family: str, delta: int) -> DuallyBchResult:
    """Whether the narrow-sense code of the family is dually-BCH at delta."""
    if m < 4:
        raise FamilyConstraint(f"need m >= 4, got m={m}")
    n = cosets.family_length(q, m, family)
    tperp = dual_defining_set(defining_set(q, n, delta, 1))
    if not tperp.exponents:
        return DuallyBchResult(verdict=True, witness=None, tperp=tperp, empty_dual=True)
    rec = recognize_bch(tperp)
    return DuallyBchResult(verdict=rec.is_bch, witness=rec.witness, tperp=tperp)


def i_of_delta(q: int, n: int, delta: int) -> int:
    """Smallest i not in T_perp for the narrow-sense code (always >= 1)."""
    if not 2 <= delta < n:
        raise DeltaOutOfRange(f"delta={delta} outside [2, {n})")
    tperp = dual_defining_set(defining_set(q, n, delta, 1))
    i = 0
    while i in tperp.exponents:
        i += 1
    return i


@lru_cache(maxsize=None)
def _i_of_delta_table(q: int, n: int) -> np.ndarray:
    """IT with IT[delta] = I(delta) for 2 <= delta <= n (index 0,1 unused).

    I(delta) = min{ i >= 1 : leader((n - i) mod n) in [1, delta-1] }, or n when
    no such i exists.  Built in O(n) from the leader map.
    """
    lead = cosets.leader_map(q, n)
    lrev = lead[(n - np.arange(n)) % n]
    first = np.full(n + 1, n, dtype=np.int64)  # first[v] = min index i with lrev[i] = v
    idx = np.arange(n)
    mask = lrev >= 1
    np.minimum.at(first, lrev[mask], idx[mask])
    first[0] = n
    pref = np.minimum.accumulate(first)
    table = np.full(n + 1, n, dtype=np.int64)
    deltas = np.arange(2, n + 1)
    table[deltas] = pref[deltas - 1]
    return table


def i_of_delta_sweep(q: int, n: int, deltas) -> np.ndarray:
    """Vectorized I(delta) for many deltas (same definition as i_of_delta)."""
    table = _i_of_delta_table(q, n)
    deltas = np.asarray(deltas, dtype=np.int64)
    if deltas.size and (deltas.min() < 2 or deltas.max() >= n):
        raise DeltaOutOfRange("every delta must lie in [2, n)")
    return table[deltas]


def dually_bch_sweep(q: int, n: int) -> np.ndarray:
    """Verdicts of the dually-BCH decision for every delta in [2, n].

    For narrow-sense codes the dual defining set always contains 0 and never
    n-1, so any BCH witness is forced to start at b = 0; the verdict reduces
    to: the coset closure of {0, ..., I(delta)-1} equals T_perp.
    """
    lead = np.asarray(cosets.leader_map(q, n))
    lrev = lead[(n - np.arange(n)) % n]
    table = _i_of_delta_table(q, n)
    out = np.empty(n - 1, dtype=bool)
    for j, delta in enumerate(range(2, n + 1)):
        in_closure = lead < table[delta]
        in_tperp = (lrev == 0) | (lrev >= delta)
        out[j] = bool(np.array_equal(in_closure, in_tperp))
    return out


# --------------------------------------------------------------------------
# polynomial-level constructions (need a field tower)
# --------------------------------------------------------------------------


def _check_tower(t: gf.FieldTower, q: int, n: int) -> None:
    if t.q != q:
        raise TowerMismatch(f"tower subfield GF({t.q}) but code over GF({q})")
    if (t.order - 1) % n != 0:
        raise TowerMismatch(f"n={n} does not divide q^m-1={t.order - 1}")


def _minpoly_product(t: gf.FieldTower, n: int, leaders) -> gf.Polynomial:
    out = gf.Polynomial(gf.Level.GFQ, (1,))
    for lead in leaders:
        out = gf.poly_mul(t, out, gf.minimal_polynomial(t, n, lead))
    return out


def _complement_sources(ds: DefiningSet) -> tuple[int, ...]:
    comp = set(range(ds.n)) - set(ds.exponents)
    return _make_defining_set(ds.q, ds.n, comp).source_cosets


def generator_polynomial(t: gf.FieldTower, ds: DefiningSet) -> gf.Polynomial:
    """Monic divisor of x^n - 1 whose root exponents are exactly the set.

    Computed as the product of the minimal polynomials of the source cosets,
    or as (x^n - 1) divided by the complement's product when that side is
    smaller (both give the same monic polynomial).
    """
    _check_tower(t, ds.q, ds.n)
    n = ds.n
    k = n - ds.size
    if ds.size <= k:
        g = _minpoly_product(t, n, ds.source_cosets)
    else:
        h = _minpoly_product(t, n, _complement_sources(ds))
        g, rem = gf.poly_divmod(t, gf.xn_minus_one(t, n), h)
        assert rem.is_zero()
    assert g.degree == ds.size or (ds.size == 0 and g.degree == 0)
    return g


def dual_generator(t: gf.FieldTower, code) -> gf.Polynomial:
    """Monic reciprocal of the check polynomial h = (x^n - 1)/g.

    Its root exponents are Z_n \\ T^{-1}, i.e. the dual's defining set, and
    its degree equals the primal dimension.
    """
    ds = code.defining
    _check_tower(t, code.q, code.n)
    n = code.n
    k = code.dimension
    if ds.size <= k:
        h, rem = gf.poly_divmod(t, gf.xn_minus_one(t, n), code.genpoly)
        assert rem.is_zero()
    else:
        h = _minpoly_product(t, n, _complement_sources(ds))
    rec = gf.Polynomial(gf.Level.GFQ, tuple(reversed(h.coeffs)))
    return gf._monic(t, rec)


def dual_code(t: gf.FieldTower, code) -> CyclicCode:
    """The dual as a cyclic code (generator = reciprocal check polynomial)."""
    g = dual_generator(t, code)
    dual_ds = dual_defining_set(code.defining)
    assert g.degree == dual_ds.size
    return CyclicCode(q=code.q, n=code.n, genpoly=g, defining=dual_ds, dimension=code.n - code.dimension)


def bch_code(t: gf.FieldTower, n: int, delta: int, b: int = 1, family: str = "raw", m: int | None = None) -> BchCode:
    """Construct the BCH code of length n with designed distance delta."""
    _check_tower(t, t.q, n)
    ds = defining_set(t.q, n, delta, b)
    g = generator_polynomial(t, ds)
    return BchCode(
        q=t.q,
        m=m if m is not None else t.m,
        family=family,
        n=n,
        b=b,
        delta=delta,
        defining=ds,
        genpoly=g,
        dimension=n - ds.size,
        bch_bound=bch_bound(ds),
    )


def build_family_code(q: int, m: int, family: str, delta: int, b: int = 1, n: int | None = None):
    """Build tower and code for a family point; returns (tower, code).

    family "raw" takes an explicit n (must divide q^m - 1).
    """
    if family in cosets.FAMILIES:
        n = cosets.family_length(q, m, family)
    elif family == "raw":
        if n is None:
            raise FamilyConstraint("family 'raw' needs an explicit n")
    else:
        raise FamilyConstraint(f"unknown family {family!r}")
    t = gf.tower_for(q, m)
    return t, bch_code(t, n, delta, b=b, family=family, m=m)
