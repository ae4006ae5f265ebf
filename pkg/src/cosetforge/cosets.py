"""q-cyclotomic cosets modulo n, coset leaders, and closed-form leader values.

Everything in this module is exact integer arithmetic; no field tables are
needed.  Brute-force operations (sieves, orbit walks) accept any modulus n
coprime to q, while the closed-form operations enforce the constraints of
the code family they belong to ("plus" for n = (q^m-1)/(q+1) with m even,
"minus" for n = (q^m-1)/(q-1) with q >= 3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import FamilyConstraint, NotCoprime, NotDivisible, OutOfRange

PLUS = "plus"
MINUS = "minus"
FAMILIES = (PLUS, MINUS)


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of s under multiplication by q modulo n."""

    n: int
    q: int
    leader: int
    elements: tuple[int, ...]
    size: int


@dataclass(frozen=True)
class QAdic:
    """Base-q digit expansion of ``value`` padded to m digits, most significant first."""

    value: int
    q: int
    m: int
    digits: tuple[int, ...]


@dataclass(frozen=True)
class ThetaDigits:
    """Digit structure of sum(q^ceil(m*t/(q-1) - 1) for t = 1..q-1) in base q.

    ``digits`` is most-significant first.  ``upsilon`` holds the positions
    carrying the larger digit ceil((q-1)/m) when t2 != 0; when t2 == 0 every
    digit equals (q-1)/m and ``upsilon`` is empty.
    """

    q: int
    m: int
    digits: tuple[int, ...]
    upsilon: frozenset[int]
    t1: int
    t2: int


def _check_coprime(q: int, n: int) -> None:
    if n < 1 or q < 2:
        raise OutOfRange(f"need n >= 1 and q >= 2, got n={n}, q={q}")
    if math.gcd(q, n) != 1:
        raise NotCoprime(f"gcd({q}, {n}) != 1")


def cyclotomic_coset(q: int, n: int, s: int) -> CyclotomicCoset:
    """Return the q-cyclotomic coset of s modulo n."""
    _check_coprime(q, n)
    if not 0 <= s < n:
        raise OutOfRange(f"s={s} outside [0, {n})")
    orbit = [s]
    x = s * q % n
    while x != s:
        orbit.append(x)
        x = x * q % n
    return CyclotomicCoset(n=n, q=q, leader=min(orbit), elements=tuple(sorted(orbit)), size=len(orbit))


@lru_cache(maxsize=None)
def coset_leaders(q: int, n: int) -> tuple[int, ...]:
    """All coset leaders modulo n, ascending (one representative per orbit)."""
    _check_coprime(q, n)
    seen = bytearray(n)
    leaders = []
    for s in range(n):
        if seen[s]:
            continue
        leaders.append(s)
        x = s
        while not seen[x]:
            seen[x] = 1
            x = x * q % n
    return tuple(leaders)


@lru_cache(maxsize=None)
def leader_map(q: int, n: int) -> np.ndarray:
    """Array L with L[x] = coset leader of x modulo n, for all residues x."""
    _check_coprime(q, n)
    out = np.full(n, -1, dtype=np.int64)
    for s in range(n):
        if out[s] >= 0:
            continue
        # s is unvisited, hence the smallest member of its orbit
        x = s
        while out[x] < 0:
            out[x] = s
            x = x * q % n
    return out


def is_coset_leader(q: int, n: int, s: int) -> bool:
    """True iff s * q^l mod n >= s for every l (s is minimal in its orbit)."""
    _check_coprime(q, n)
    if not 0 <= s < n:
        raise OutOfRange(f"s={s} outside [0, {n})")
    x = s * q % n
    while x != s:
        if x < s:
            return False
        x = x * q % n
    return True


def top_k_leaders(q: int, n: int, k: int) -> list[int]:
    """The k largest coset leaders modulo n, descending (fewer if fewer exist)."""
    if k < 1:
        raise OutOfRange(f"k={k} must be >= 1")
    leaders = coset_leaders(q, n)
    return list(leaders[-1 : -k - 1 : -1])


def q_adic(a: int, q: int, m: int) -> QAdic:
    """Base-q expansion of a with exactly m digits, most significant first."""
    if q < 2 or m < 1:
        raise OutOfRange(f"need q >= 2 and m >= 1, got q={q}, m={m}")
    if not 0 <= a < q**m:
        raise OutOfRange(f"a={a} outside [0, {q}^{m})")
    digits = []
    x = a
    for _ in range(m):
        digits.append(x % q)
        x //= q
    return QAdic(value=a, q=q, m=m, digits=tuple(reversed(digits)))


def q_adic_gt(a: QAdic, b: QAdic) -> bool:
    """Lexicographic comparison of two expansions (agrees with integer >)."""
    if a.q != b.q or a.m != b.m:
        raise OutOfRange("expansions must share base and digit count")
    return a.digits > b.digits


def family_length(q: int, m: int, family: str) -> int:
    """Code length n for the family: (q^m-1)/(q+1) for plus, (q^m-1)/(q-1) for minus."""
    if family == PLUS:
        if m % 2 != 0:
            raise FamilyConstraint(f"plus family needs m even, got m={m}")
        return (q**m - 1) // (q + 1)
    if family == MINUS:
        if q < 3:
            raise FamilyConstraint(f"minus family needs q >= 3, got q={q}")
        return (q**m - 1) // (q - 1)
    raise FamilyConstraint(f"unknown family {family!r}")


def largest_leaders_qm1(q: int, m: int) -> tuple[int, int, int]:
    """Closed forms for the three largest coset leaders modulo q^m - 1."""
    if q < 2 or m < 2:
        raise OutOfRange(f"need q >= 2 and m >= 2, got q={q}, m={m}")
    top = (q - 1) * q ** (m - 1) - 1
    return (top, top - q ** ((m - 1) // 2), top - q ** ((m + 1) // 2))


def _theta_exponent_sum(q: int, m: int) -> int:
    """sum(q^ceil(m*t/(q-1) - 1)) over t = 1..q-1, computed digit-free."""
    return sum(q ** (-(-(m * t - (q - 1)) // (q - 1))) for t in range(1, q))


def delta1_closed_form(q: int, m: int, family: str) -> int:
    """Closed form for the largest coset leader modulo the family length n."""
    if family == PLUS:
        if m < 4 or m % 2 != 0:
            raise FamilyConstraint(f"plus closed form needs m >= 4 even, got m={m}")
        half = (m - 2) // 2 if m % 4 == 2 else m // 2
        num = (q - 1) * q ** (m - 1) - q**half - 1
        assert num % (q + 1) == 0
        return num // (q + 1)
    if family == MINUS:
        if q < 3 or m < 4:
            raise FamilyConstraint(f"minus closed form needs q >= 3 and m >= 4, got q={q}, m={m}")
        num = q**m - _theta_exponent_sum(q, m) - 1
        assert num % (q - 1) == 0
        return num // (q - 1)
    raise FamilyConstraint(f"unknown family {family!r}")


def delta1_coset_size_closed_form(q: int, m: int, family: str) -> int:
    """Closed form for |C_{delta1}| on the family grid."""
    if family == PLUS:
        if m < 4 or m % 2 != 0:
            raise FamilyConstraint(f"plus closed form needs m >= 4 even, got m={m}")
        return m if m % 4 == 0 else m // 2
    if family == MINUS:
        if q < 3 or m < 4:
            raise FamilyConstraint(f"minus closed form needs q >= 3 and m >= 4, got q={q}, m={m}")
        return m // math.gcd(m, q - 1)
    raise FamilyConstraint(f"unknown family {family!r}")


def second_largest_m4_plus(q: int) -> int:
    """Second largest coset leader modulo (q^4-1)/(q+1), odd prime powers only."""
    if q < 3 or q % 2 == 0:
        raise FamilyConstraint(f"formula stated for odd q >= 3, got q={q}")
    num = (q - 1) * q**3 - q**2 - q - 2
    assert num % (q + 1) == 0
    return num // (q + 1)


def theta_digits(q: int, m: int) -> ThetaDigits:
    """Digit vector of sum(q^ceil(m*t/(q-1)-1)) predicted from (t1, t2, Upsilon).

    Writes q-1 = m*t1 + t2 with 0 <= t2 < m.  The digits are derived from the
    Upsilon rule only; callers cross-check them against the direct base-q
    expansion of the sum.
    """
    if q < 3 or m < 4:
        raise FamilyConstraint(f"need q >= 3 and m >= 4, got q={q}, m={m}")
    t1, t2 = divmod(q - 1, m)
    if t2 == 0:
        digits = [(q - 1) // m] * m
        upsilon: frozenset[int] = frozenset()
    else:
        hi = -(-(q - 1) // m)
        lo = (q - 1) // m
        upsilon = frozenset(-(-(m * g - t2) // t2) for g in range(1, t2 + 1))
        digits = [hi if i in upsilon else lo for i in range(m)]
    return ThetaDigits(q=q, m=m, digits=tuple(reversed(digits)), upsilon=upsilon, t1=t1, t2=t2)


def lift_correspondence_check(q: int, m: int, h: int, divisor: int) -> bool:
    """Whether leader status of h mod q^m-1 matches that of h/divisor mod n.

    divisor must be q+1 (with m even) or q-1; the result is a verified
    identity, so the check should always come back True.
    """
    if divisor not in (q + 1, q - 1):
        raise OutOfRange(f"divisor must be q+1 or q-1, got {divisor}")
    big = q**m - 1
    if big % divisor != 0:
        raise NotDivisible(f"{divisor} does not divide q^m-1 = {big}")
    if h % divisor != 0:
        raise NotDivisible(f"{divisor} does not divide h = {h}")
    if not 0 <= h < big:
        raise OutOfRange(f"h={h} outside [0, {big})")
    n = big // divisor
    return is_coset_leader(q, big, h) == is_coset_leader(q, n, h // divisor)
