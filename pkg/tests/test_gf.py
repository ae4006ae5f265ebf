"""Field-tower and polynomial arithmetic tests.

Expected values are either unique by construction (the single primitive
quadratic over GF(2)), verified by independent loops (repeated
multiplication, closure checks), or checked structurally (divisibility,
degrees, Frobenius stability).
"""

import pytest

from cosetforge import cosets, gf
from cosetforge.errors import (
    CoefficientEscape,
    LevelMismatch,
    ModByZero,
    NotADivisor,
    NotPrime,
    OrderTooLarge,
    OutOfRange,
)


def test_build_tower_gf4_modulus_unique():
    t = gf.build_tower(2, 1, 2)
    assert t.modulus == (1, 1, 1)  # x^2 + x + 1, the only primitive quadratic
    assert t.order == 4


def test_build_tower_gf81_alpha_order():
    t = gf.build_tower(3, 1, 4)
    assert t.order == 81
    # oracle: multiply alpha by itself until it cycles back to 1
    x = t.alpha
    order = 1
    while x != 1:
        x = t.mul(x, t.alpha)
        order += 1
    assert order == 80
    assert t.element_order(t.alpha) == 80


def test_build_tower_gf4_in_gf256_subfield_closure():
    t = gf.build_tower(2, 2, 4)
    assert t.subfield_gen_exp == 255 // 3 == 85
    sub = {0} | {t.pow(t.alpha, 85 * j) for j in range(3)}
    assert len(sub) == 4
    for a in sub:
        for b in sub:
            assert t.add(a, b) in sub
            assert t.mul(a, b) in sub
    assert set(t.subfield_to_tower) == sub


def test_build_tower_rejects_bad_args():
    with pytest.raises(NotPrime):
        gf.build_tower(4, 1, 2)
    with pytest.raises(NotPrime):
        gf.build_tower(6, 1, 2)
    with pytest.raises(OrderTooLarge):
        gf.build_tower(2, 1, 27)
    with pytest.raises(OutOfRange):
        gf.build_tower(2, 0, 3)


def test_prime_power():
    assert gf.prime_power(8) == (2, 3)
    assert gf.prime_power(9) == (3, 2)
    assert gf.prime_power(7) == (7, 1)
    with pytest.raises(NotPrime):
        gf.prime_power(6)
    with pytest.raises(NotPrime):
        gf.prime_power(1)


def test_field_arithmetic_examples():
    t4 = gf.build_tower(2, 2, 1)
    a = t4.alpha
    assert t4.mul(a, t4.pow(a, 2)) == 1  # alpha has order 3 in GF(4)

    t9 = gf.build_tower(3, 1, 2)
    assert t9.inv(t9.alpha) == t9.pow(t9.alpha, 7)  # order-8 group

    t81 = gf.build_tower(3, 1, 4)
    x = t81.pow(t81.alpha, 40)
    assert t81.mul(x, x) == 1  # alpha^80 = 1, by the repeated-multiplication oracle above


def test_addition_characteristic():
    t = gf.build_tower(3, 1, 2)
    for a in range(t.order):
        assert t.add(t.add(a, a), a) == 0  # char 3
        assert t.sub(a, a) == 0
    t2 = gf.build_tower(2, 1, 4)
    for a in range(t2.order):
        assert t2.add(a, a) == 0


def test_inverse_of_zero_raises():
    t = gf.build_tower(2, 1, 3)
    with pytest.raises(ZeroDivisionError):
        t.inv(0)


def test_poly_examples():
    t2 = gf.build_tower(2, 1, 2)
    x_plus_1 = gf.Polynomial(gf.Level.GFQ, (1, 1))
    assert gf.poly_lcm(t2, x_plus_1, x_plus_1).coeffs == (1, 1)
    x2_plus_1 = gf.Polynomial(gf.Level.GFQ, (1, 0, 1))
    assert gf.poly_gcd(t2, x2_plus_1, x_plus_1).coeffs == (1, 1)

    t3 = gf.build_tower(3, 1, 2)
    prod = gf.poly_mul(t3, gf.Polynomial(gf.Level.GFQ, (1, 1)), gf.Polynomial(gf.Level.GFQ, (2, 1)))
    assert prod.coeffs == (2, 0, 1)  # (x+1)(x+2) = x^2 + 2 over GF(3)


def test_poly_errors():
    t = gf.build_tower(2, 1, 2)
    f = gf.Polynomial(gf.Level.GFQ, (1, 1))
    g = gf.Polynomial(gf.Level.GFP, (1, 1))
    with pytest.raises(LevelMismatch):
        gf.poly_mul(t, f, g)
    with pytest.raises(ModByZero):
        gf.poly_divmod(t, f, gf.Polynomial(gf.Level.GFQ, ()))


def test_poly_eval_and_degree():
    t = gf.build_tower(3, 1, 2)
    f = gf.Polynomial(gf.Level.GFQ, (2, 0, 1))  # x^2 + 2
    assert gf.poly_eval(t, f, 1) == 0
    assert gf.poly_eval(t, f, 0) == 2
    assert f.degree == 2
    assert gf.Polynomial(gf.Level.GFQ, ()).degree == gf.NEG_INF
    assert gf.Polynomial(gf.Level.GFQ, (0, 0)).is_zero()


def test_minimal_polynomial_examples():
    t21 = gf.build_tower(2, 1, 6)
    mp0 = gf.minimal_polynomial(t21, 21, 0)
    assert mp0.coeffs == (1, 1)  # x - 1 = x + 1 over GF(2)

    mp1 = gf.minimal_polynomial(t21, 21, 1)
    assert mp1.degree == cosets.cyclotomic_coset(2, 21, 1).size == 6

    t20 = gf.build_tower(3, 1, 4)
    mp = gf.minimal_polynomial(t20, 20, 1)
    assert mp.degree == 4
    _, rem = gf.poly_divmod(t20, gf.xn_minus_one(t20, 20), mp)
    assert rem.is_zero()


def test_minimal_polynomial_rejects_bad_n():
    t = gf.build_tower(2, 1, 6)
    with pytest.raises(NotADivisor):
        gf.minimal_polynomial(t, 10, 1)  # 10 does not divide 63


def test_project_subfield_escape():
    t = gf.build_tower(2, 2, 2)  # GF(4) inside GF(16)
    outside = t.alpha  # alpha generates GF(16)*, not in GF(4)
    with pytest.raises(CoefficientEscape):
        t.project_subfield(outside)


TOWERS = [(2, 1, 6, 21), (3, 1, 4, 20), (2, 2, 4, 85), (2, 2, 4, 51)]


@pytest.mark.parametrize("p,e,m,n", TOWERS)
def test_minimal_polynomial_invariants(p, e, m, n):
    t = gf.build_tower(p, e, m)
    xn1 = gf.xn_minus_one(t, n)
    product = gf.Polynomial(gf.Level.GFQ, (1,))
    for lead in cosets.coset_leaders(t.q, n):
        mp = gf.minimal_polynomial(t, n, lead)
        assert mp.degree == cosets.cyclotomic_coset(t.q, n, lead).size
        assert mp.coeffs[-1] == 1  # monic
        _, rem = gf.poly_divmod(t, xn1, mp)
        assert rem.is_zero()
        # Frobenius stability: coefficient-wise c -> c^q fixes the polynomial
        frob = tuple(t.q_pow(c, t.q) for c in mp.coeffs)
        assert frob == mp.coeffs
        product = gf.poly_mul(t, product, mp)
    assert product.coeffs == xn1.coeffs


@pytest.mark.parametrize("p,e,m,n", TOWERS)
def test_minimal_polynomial_roots(p, e, m, n):
    t = gf.build_tower(p, e, m)
    beta_exp = (t.order - 1) // n
    for i in (0, 1, min(5, n - 1)):
        mp = gf.lift_to_tower(t, gf.minimal_polynomial(t, n, i))
        coset = cosets.cyclotomic_coset(t.q, n, i)
        for s in coset.elements:
            root = t.pow(t.alpha, beta_exp * s)
            assert gf.poly_eval(t, mp, root) == 0


def test_tower_determinism():
    a = gf.build_tower.__wrapped__(2, 1, 4)
    b = gf.build_tower.__wrapped__(2, 1, 4)
    assert a.modulus == b.modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
