"""Exact arithmetic in the tower GF(p) < GF(q) < GF(q^m), q = p^e.

Elements of the top field are integers in [0, p^(e*m)) whose base-p digits
are the coordinates with respect to the power basis of alpha, the residue
of x modulo the tower modulus.  The modulus is the first primitive
polynomial of its degree in the deterministic search order (coefficient
vector read as a base-p integer, constant term least significant), so
towers are reproducible across runs.

Multiplication, inversion and powering go through discrete-log tables
keyed by alpha; addition is digit-wise mod p.  The subfield GF(q) is the
span of omega = alpha^g with g = (p^(e*m)-1)/(q-1); its elements are
re-expressed as integers in [0, q) over the power basis of omega, which
makes prime-field coefficients look like ordinary integers mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

import numpy as np

from . import cosets
from .errors import (
    CoefficientEscape,
    LevelMismatch,
    ModByZero,
    NotADivisor,
    NotPrime,
    OrderTooLarge,
    OutOfRange,
)

ORDER_GUARD = 2**26


class Level(Enum):
    """Which field of the tower a polynomial's coefficients live in."""

    GFP = "gf(p)"
    GFQ = "gf(q)"
    GFQM = "gf(q^m)"


# --------------------------------------------------------------------------
# small helpers over GF(p)
# --------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n: int) -> tuple[int, ...]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def prime_power(q: int) -> tuple[int, int]:
    """Decompose q = p^e with p prime; raises NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if not _is_prime(p):
            continue
        if q % p == 0:
            e = 0
            x = q
            while x % p == 0:
                x //= p
                e += 1
            if x != 1:
                raise NotPrime(f"{q} is not a prime power")
            return p, e
    raise NotPrime(f"{q} is not a prime power")


def _poly_mulmod_gfp(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    # dense schoolbook product reduced by the monic modulus, coefficients mod p
    d = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for i in range(len(prod) - 1, d - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(d):
                prod[i - d + j] = (prod[i - d + j] - c * mod[j]) % p
    return [c % p for c in prod[:d]] + [0] * max(0, d - len(prod))


def _poly_powmod_gfp(base: list[int], exp: int, mod: tuple[int, ...], p: int) -> list[int]:
    d = len(mod) - 1
    result = [1] + [0] * (d - 1)
    cur = list(base) + [0] * (d - len(base))
    while exp:
        if exp & 1:
            result = _poly_mulmod_gfp(result, cur, mod, p)
        cur = _poly_mulmod_gfp(cur, cur, mod, p)
        exp >>= 1
    return result


def _x_is_primitive(mod: tuple[int, ...], p: int, group: int, primes: tuple[int, ...]) -> bool:
    one = [1] + [0] * (len(mod) - 2)
    x = [0, 1]
    if _poly_powmod_gfp(x, group, mod, p) != one:
        return False
    for r in primes:
        if _poly_powmod_gfp(x, group // r, mod, p) == one:
            return False
    return True


def _smallest_primitive_modulus(p: int, d: int) -> tuple[int, ...]:
    group = p**d - 1
    primes = _prime_factors(group)
    for low in range(1, p**d):
        if low % p == 0:
            continue  # constant term 0 means x divides the candidate
        digits = []
        x = low
        for _ in range(d):
            digits.append(x % p)
            x //= p
        mod = tuple(digits) + (1,)
        if _x_is_primitive(mod, p, group, primes):
            return mod
    raise AssertionError("primitive polynomials exist for every degree")


# --------------------------------------------------------------------------
# the tower
# --------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FieldTower:
    """GF(p) < GF(q = p^e) < GF(q^m), immutable after construction.

    Attributes
    ----------
    modulus : tuple[int, ...]
        Primitive polynomial of degree e*m over GF(p), ascending coefficients.
    order : int
        p**(e*m), the size of the top field.
    subfield_gen_exp : int
        g with alpha^g a generator of GF(q)*, g = (order-1)/(q-1).
    antilog, log : numpy arrays
        antilog[j] = alpha^j for 0 <= j < order-1; log is its inverse
        (log[0] is a -1 sentinel).
    """

    p: int
    e: int
    m: int
    modulus: tuple[int, ...]
    order: int
    q: int
    subfield_gen_exp: int
    antilog: np.ndarray = field(repr=False)
    log: np.ndarray = field(repr=False)
    subfield_to_tower: tuple[int, ...] = field(repr=False)
    tower_to_subfield: dict = field(repr=False)
    q_add: np.ndarray = field(repr=False)
    q_mul: np.ndarray = field(repr=False)
    q_inv: np.ndarray = field(repr=False)

    # -- top-field element ops (integers in [0, order)) --------------------

    @property
    def alpha(self) -> int:
        return int(self.antilog[1])

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        while a:
            out += (-a % p) % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        g = self.order - 1
        return int(self.antilog[(int(self.log[a]) + int(self.log[b])) % g])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        g = self.order - 1
        return int(self.antilog[(g - int(self.log[a])) % g])

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 0
        g = self.order - 1
        return int(self.antilog[int(self.log[a]) * k % g])

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        g = self.order - 1
        return g // math.gcd(g, int(self.log[a]))

    # -- subfield helpers (indices in [0, q)) -------------------------------

    def embed_subfield(self, idx: int) -> int:
        """GF(q) index -> top-field element."""
        return self.subfield_to_tower[idx]

    def project_subfield(self, value: int) -> int:
        """Top-field element -> GF(q) index; CoefficientEscape if outside GF(q)."""
        try:
            return self.tower_to_subfield[value]
        except KeyError:
            raise CoefficientEscape(f"element {value} lies outside the GF({self.q}) subfield") from None

    def q_pow(self, idx: int, k: int) -> int:
        return self.project_subfield(self.pow(self.embed_subfield(idx), k))

    def arith(self, level: Level) -> "_Arith":
        if level is Level.GFP:
            return _PrimeArith(self.p)
        if level is Level.GFQ:
            return _SubfieldArith(self)
        return _TowerArith(self)


class _PrimeArith:
    def __init__(self, p: int):
        self.size = p
        self._p = p

    def add(self, a, b):
        return (a + b) % self._p

    def sub(self, a, b):
        return (a - b) % self._p

    def mul(self, a, b):
        return a * b % self._p

    def inv(self, a):
        if a % self._p == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return pow(a, -1, self._p)


class _SubfieldArith:
    def __init__(self, t: FieldTower):
        self.size = t.q
        self._t = t

    def add(self, a, b):
        return int(self._t.q_add[a, b])

    def sub(self, a, b):
        t = self._t
        return int(t.q_add[a, t.project_subfield(t.neg(t.embed_subfield(b)))])

    def mul(self, a, b):
        return int(self._t.q_mul[a, b])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self._t.q_inv[a])


class _TowerArith:
    def __init__(self, t: FieldTower):
        self.size = t.order
        self._t = t

    def add(self, a, b):
        return self._t.add(a, b)

    def sub(self, a, b):
        return self._t.sub(a, b)

    def mul(self, a, b):
        return self._t.mul(a, b)

    def inv(self, a):
        return self._t.inv(a)


def _scale_digits(value: int, c: int, p: int) -> int:
    # multiply every base-p digit by the prime-field scalar c
    out = 0
    mult = 1
    while value:
        out += value % p * c % p * mult
        value //= p
        mult *= p
    return out


@lru_cache(maxsize=None)
def build_tower(p: int, e: int, m: int) -> FieldTower:
    """Construct the tower GF(p) < GF(p^e) < GF(p^(e*m)) with full tables."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1 or m < 1:
        raise OutOfRange(f"need e >= 1 and m >= 1, got e={e}, m={m}")
    d = e * m
    order = p**d
    if order > ORDER_GUARD:
        raise OrderTooLarge(f"p^(e*m) = {order} exceeds the guard {ORDER_GUARD}")
    q = p**e
    modulus = _smallest_primitive_modulus(p, d)

    antilog = np.zeros(order - 1, dtype=np.int64)
    log = np.full(order, -1, dtype=np.int64)
    digits = [0] * d
    digits[0] = 1
    powers = [p**i for i in range(d)]
    for j in range(order - 1):
        val = 0
        for i in range(d):
            if digits[i]:
                val += digits[i] * powers[i]
        antilog[j] = val
        log[val] = j
        # multiply by x and reduce by the monic modulus
        carry = digits[d - 1]
        for i in range(d - 1, 0, -1):
            digits[i] = digits[i - 1]
        digits[0] = 0
        if carry:
            for i in range(d):
                digits[i] = (digits[i] - carry * modulus[i]) % p

    g = (order - 1) // (q - 1)
    omega_pows = [int(antilog[g * i % (order - 1)]) for i in range(e)]
    sub_to_tower = []
    for idx in range(q):
        val = 0
        x = idx
        for i in range(e):
            c = x % p
            x //= p
            if c:
                acc = _scale_digits(omega_pows[i], c, p)
                val = acc if val == 0 else _tower_add_raw(val, acc, p)
        sub_to_tower.append(val)
    tower_to_sub = {v: i for i, v in enumerate(sub_to_tower)}

    q_add = np.zeros((q, q), dtype=np.int64)
    q_mul = np.zeros((q, q), dtype=np.int64)
    q_inv = np.zeros(q, dtype=np.int64)
    tower = FieldTower(
        p=p,
        e=e,
        m=m,
        modulus=modulus,
        order=order,
        q=q,
        subfield_gen_exp=g,
        antilog=antilog,
        log=log,
        subfield_to_tower=tuple(sub_to_tower),
        tower_to_subfield=tower_to_sub,
        q_add=q_add,
        q_mul=q_mul,
        q_inv=q_inv,
    )
    for a in range(q):
        va = sub_to_tower[a]
        for b in range(q):
            vb = sub_to_tower[b]
            q_add[a, b] = tower_to_sub[tower.add(va, vb)]
            q_mul[a, b] = tower_to_sub[tower.mul(va, vb)]
        if a:
            q_inv[a] = tower_to_sub[tower.inv(va)]
    return tower


def _tower_add_raw(a: int, b: int, p: int) -> int:
    if p == 2:
        return a ^ b
    out = 0
    mult = 1
    while a or b:
        out += (a % p + b % p) % p * mult
        a //= p
        b //= p
        mult *= p
    return out


@lru_cache(maxsize=None)
def tower_for(q: int, m: int) -> FieldTower:
    """Tower whose subfield is GF(q) and whose top field is GF(q^m)."""
    p, e = prime_power(q)
    return build_tower(p, e, m)


# --------------------------------------------------------------------------
# polynomials
# --------------------------------------------------------------------------

NEG_INF = float("-inf")


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over one field level; ascending coefficient tuple.

    Trailing zero coefficients are stripped on construction, so the leading
    coefficient is nonzero unless the polynomial is zero (empty tuple).
    """

    level: Level
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = "x" if i == 1 else f"x^{i}"
                terms.append(base if c == 1 else f"{c}*{base}")
        return " + ".join(reversed(terms))


def _check_levels(f: Polynomial, g: Polynomial) -> Level:
    if f.level is not g.level:
        raise LevelMismatch(f"{f.level} vs {g.level}")
    return f.level


def poly_mul(t: FieldTower, f: Polynomial, g: Polynomial) -> Polynomial:
    lvl = _check_levels(f, g)
    if f.is_zero() or g.is_zero():
        return Polynomial(lvl, ())
    F = t.arith(lvl)
    out = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            if b:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return Polynomial(lvl, tuple(out))


def poly_divmod(t: FieldTower, f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    lvl = _check_levels(f, g)
    if g.is_zero():
        raise ModByZero("division by the zero polynomial")
    F = t.arith(lvl)
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lead_inv = F.inv(g.coeffs[-1])
    if len(rem) <= dg:
        return Polynomial(lvl, ()), Polynomial(lvl, tuple(rem))
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        factor = F.mul(c, lead_inv)
        quot[i - dg] = factor
        for j in range(dg + 1):
            rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(factor, g.coeffs[j]))
    return Polynomial(lvl, tuple(quot)), Polynomial(lvl, tuple(rem))


def poly_mod(t: FieldTower, f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_divmod(t, f, g)[1]


def _monic(t: FieldTower, f: Polynomial) -> Polynomial:
    if f.is_zero() or f.coeffs[-1] == 1:
        return f
    F = t.arith(f.level)
    inv = F.inv(f.coeffs[-1])
    return Polynomial(f.level, tuple(F.mul(c, inv) for c in f.coeffs))


def poly_gcd(t: FieldTower, f: Polynomial, g: Polynomial) -> Polynomial:
    _check_levels(f, g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, poly_mod(t, a, b)
    return _monic(t, a)


def poly_lcm(t: FieldTower, f: Polynomial, g: Polynomial) -> Polynomial:
    _check_levels(f, g)
    if f.is_zero() or g.is_zero():
        return Polynomial(f.level, ())
    d = poly_gcd(t, f, g)
    quot, rem = poly_divmod(t, poly_mul(t, f, g), d)
    assert rem.is_zero()
    return _monic(t, quot)


def poly_eval(t: FieldTower, f: Polynomial, x: int):
    """Evaluate f at a point of its own level (Horner)."""
    F = t.arith(f.level)
    acc = 0
    for c in reversed(f.coeffs):
        acc = F.add(F.mul(acc, x), c)
    return acc


def lift_to_tower(t: FieldTower, f: Polynomial) -> Polynomial:
    """Re-express a GF(q)-level polynomial with top-field coefficients."""
    if f.level is Level.GFQM:
        return f
    if f.level is Level.GFP:
        f = Polynomial(Level.GFQ, f.coeffs)  # prime indices coincide
    return Polynomial(Level.GFQM, tuple(t.embed_subfield(c) for c in f.coeffs))


def xn_minus_one(t: FieldTower, n: int, level: Level = Level.GFQ) -> Polynomial:
    F = t.arith(level)
    coeffs = [F.sub(0, 1)] + [0] * (n - 1) + [1]
    return Polynomial(level, tuple(coeffs))


def minimal_polynomial(t: FieldTower, n: int, i: int) -> Polynomial:
    """Minimal polynomial over GF(q) of beta^i, beta = alpha^((q^m-1)/n).

    Expands prod(x - beta^s) over the coset C_i of i modulo n and re-expresses
    every coefficient at the GF(q) level; a coefficient outside the subfield
    raises CoefficientEscape (an internal bug, since the product is Frobenius
    stable by construction).
    """
    group = t.order - 1
    if n < 1 or group % n != 0:
        raise NotADivisor(f"n={n} does not divide q^m-1={group}")
    if not 0 <= i < n:
        raise OutOfRange(f"i={i} outside [0, {n})")
    beta_exp = group // n
    coset = cosets.cyclotomic_coset(t.q, n, i)
    poly = [1]
    for s in coset.elements:
        root = int(t.antilog[beta_exp * s % group])
        # multiply poly by (x - root)
        nxt = [0] * (len(poly) + 1)
        for k, c in enumerate(poly):
            if c == 0:
                continue
            nxt[k + 1] = t.add(nxt[k + 1], c)
            nxt[k] = t.sub(nxt[k], t.mul(c, root))
        poly = nxt
    return Polynomial(Level.GFQ, tuple(t.project_subfield(c) for c in poly))
