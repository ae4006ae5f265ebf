"""Distance enumeration, MacWilliams transform, and closed-form dual bounds.

The naive oracle below multiplies message polynomials by the generator with
plain table arithmetic and never touches the vectorized enumeration path.
"""

import itertools

import pytest

from cosetforge import bch, distance, gf
from cosetforge.errors import BudgetExceeded, DeltaOutOfRange, FamilyConstraint, NonIntegerTransform


def naive_weights(t, code):
    """Weight of every codeword via plain polynomial multiplication."""
    F = t.arith(gf.Level.GFQ)
    n, k = code.n, code.dimension
    g = list(code.genpoly.coeffs)
    counts = [0] * (n + 1)
    for msg in itertools.product(range(t.q), repeat=k):
        word = [0] * n
        for i, mc in enumerate(msg):
            if mc == 0:
                continue
            for j, c in enumerate(g):
                if c:
                    word[(i + j) % n] = F.add(word[(i + j) % n], F.mul(mc, c))
        counts[sum(1 for x in word if x)] += 1
    return counts


def test_repetition_style_code_distance():
    t = gf.tower_for(2, 6)
    ds = bch._make_defining_set(2, 21, set(range(1, 21)))  # roots at all nonzero exponents
    g = bch.generator_polynomial(t, ds)
    code = bch.CyclicCode(q=2, n=21, genpoly=g, defining=ds, dimension=1)
    res = distance.min_distance_enumerate(t, code)
    assert res.d == 21 and res.enumerated == 2
    we = distance.weight_enumerator(t, code)
    assert we.counts[0] == 1 and we.counts[21] == 1 and sum(we.counts) == 2


def test_known_dual_distances():
    t20 = gf.tower_for(3, 4)
    dual = bch.dual_code(t20, bch.bch_code(t20, 20, 2))
    res = distance.min_distance_enumerate(t20, dual)
    assert res.d == 12 and res.method == "direct-enum" and res.enumerated == 81

    t21 = gf.tower_for(2, 6)
    dual2 = bch.dual_code(t21, bch.bch_code(t21, 21, 2))
    assert distance.min_distance_enumerate(t21, dual2).d == 8


def test_zero_code_enumerator():
    t = gf.tower_for(2, 6)
    full = bch._make_defining_set(2, 21, set(range(21)))
    code = bch.CyclicCode(q=2, n=21, genpoly=bch.generator_polynomial(t, full), defining=full, dimension=0)
    we = distance.weight_enumerator(t, code)
    assert we.counts[0] == 1 and sum(we.counts) == 1
    assert distance.min_distance_enumerate(t, code, method="direct").d is None


@pytest.mark.parametrize("q,m,n,delta", [(3, 4, 20, 11), (2, 6, 21, 9), (4, 4, 51, 35)])
def test_enumerator_matches_naive_oracle(q, m, n, delta):
    t = gf.tower_for(q, m)
    code = bch.bch_code(t, n, delta)
    we = distance.weight_enumerator(t, code)
    assert list(we.counts) == naive_weights(t, code)
    assert sum(we.counts) == q**code.dimension
    res = distance.min_distance_enumerate(t, code, method="direct")
    assert res.d == we.min_positive_weight()


def test_macwilliams_classic_pair():
    w = distance.WeightEnumerator(3, (1, 0, 0, 1))  # GF(2) repetition, n = 3
    tw = distance.macwilliams_transform(w, 2, k_dual=2)
    assert tw.counts == (1, 0, 3, 0)  # even-weight code
    back = distance.macwilliams_transform(tw, 2, k_dual=1)
    assert back.counts == w.counts  # involution


def test_macwilliams_involution_on_real_codes():
    for q, m, n, delta in [(2, 6, 21, 9), (3, 4, 20, 11), (5, 4, 104, 79)]:
        t = gf.tower_for(q, m)
        code = bch.bch_code(t, n, delta)
        w = distance.weight_enumerator(t, code)
        dual_w = distance.macwilliams_transform(w, q, k_dual=n - code.dimension)
        back = distance.macwilliams_transform(dual_w, q, k_dual=code.dimension)
        assert back.counts == w.counts


def test_macwilliams_matches_direct_dual_enumeration():
    for q, m, n, delta in [(2, 6, 21, 9), (3, 4, 20, 5)]:
        t = gf.tower_for(q, m)
        code = bch.bch_code(t, n, delta)
        dual = bch.dual_code(t, code)
        w_direct = distance.weight_enumerator(t, dual, budget=2 * 10**6)
        w_transform = distance.macwilliams_transform(distance.weight_enumerator(t, code), q, k_dual=dual.dimension)
        assert w_direct.counts == w_transform.counts


def test_macwilliams_rejects_garbage():
    with pytest.raises(NonIntegerTransform):
        distance.macwilliams_transform(distance.WeightEnumerator(3, (1, 1, 0, 1)), 2, k_dual=2)
    with pytest.raises(NonIntegerTransform):
        distance.macwilliams_transform(distance.WeightEnumerator(3, (0, 0, 0, 2)), 2, k_dual=2)


def test_budget_and_fallbacks():
    t = gf.tower_for(3, 4)
    code = bch.bch_code(t, 20, 2)  # k = 16, dual dimension 4
    with pytest.raises(BudgetExceeded):
        distance.weight_enumerator(t, code, budget=100)
    res = distance.min_distance_enumerate(t, code, budget=50)  # under 3^4, both routes blocked
    assert res.method == "bound-only" and res.d is None and res.enumerated == 0
    with pytest.raises(BudgetExceeded):
        distance.min_distance_enumerate(t, code, budget=50, allow_bound_only=False)
    # dual route: 3^16 over budget but 3^4 fits
    res2 = distance.min_distance_enumerate(t, code, budget=10**4)
    assert res2.method == "dual-macwilliams" and res2.d == 2
    # the two routes agree on a code where both are cheap
    t21 = gf.tower_for(2, 6)
    code21 = bch.bch_code(t21, 21, 9)
    direct = distance.min_distance_enumerate(t21, code21, method="direct")
    viadual = distance.min_distance_enumerate(t21, code21, method="dual-macwilliams")
    assert direct.d == viadual.d == 9


def test_effective_budget(monkeypatch):
    monkeypatch.delenv(distance.BUDGET_ENV_VAR, raising=False)
    assert distance.effective_budget() == distance.DEFAULT_BUDGET
    assert distance.effective_budget(123) == 123
    monkeypatch.setenv(distance.BUDGET_ENV_VAR, "5000")
    assert distance.effective_budget() == 5000
    assert distance.effective_budget(7) == 7


def test_dual_bound_closed_form_examples():
    assert distance.dual_bound_closed_form(3, 4, 2) == 11
    assert distance.dual_bound_closed_form(2, 6, 2) == 6
    assert distance.dual_bound_closed_form(3, 4, 12) == 2
    assert distance.dual_bound_closed_form(3, 4, 11) == 3  # bracket t=2 end: (q^2-1)/4+1
    assert distance.dual_bound_closed_form(2, 6, 21) == 2
    with pytest.raises(DeltaOutOfRange):
        distance.dual_bound_closed_form(3, 4, 1)
    with pytest.raises(FamilyConstraint):
        distance.dual_bound_closed_form(3, 4, 2, family="minus")
    with pytest.raises(FamilyConstraint):
        distance.dual_bound_closed_form(3, 5, 2)


def test_dual_bound_soundness_small_sweeps():
    # T(delta) nests, so equal |T| means an identical dual; cache by size
    for q, m in [(2, 6), (3, 4)]:
        n = (q**m - 1) // (q + 1)
        t = gf.tower_for(q, m)
        cache = {}
        for delta in range(2, n + 1):
            code = bch.bch_code(t, n, delta)
            dual = bch.dual_code(t, code)
            key = dual.defining.size
            if key not in cache:
                cache[key] = (distance.min_distance_enumerate(t, dual).d, bch.bch_bound(dual.defining))
            d, run_bound = cache[key]
            bound = distance.dual_bound_closed_form(q, m, delta)
            assert bound <= run_bound <= d, (q, m, delta, bound, run_bound, d)
