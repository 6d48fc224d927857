"""Exact modular arithmetic: factorization, totient, multiplicative order,
primitive/semi-primitive root predicates, and real even Dirichlet characters.

Everything here is integer-exact and stateless.  Factorization is trial
division backed by a deterministic Miller-Rabin primality test, which is
more than enough for desk-scale moduli (q well below 10**6).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import ValidationError

# Deterministic Miller-Rabin witness set, valid for n < 3.3 * 10**24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization as (prime, exponent) pairs, primes increasing."""
    if n < 1:
        raise ValidationError(f"can only factor positive integers, got {n}")
    factors: list[tuple[int, int]] = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factors.append((p, e))
            if is_prime(rest):  # bail out of trial division early
                break
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
        factors.sort()
    return factors


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(factorize(n)) == 1


def euler_phi(n: int) -> int:
    """Euler totient from the factorization."""
    if n < 1:
        raise ValidationError(f"totient undefined for {n}")
    phi = 1
    for p, e in factorize(n):
        phi *= (p - 1) * p ** (e - 1)
    return phi


def mult_order(a: int, m: int) -> int:
    """Least k >= 1 with a**k == 1 mod m.

    Starts from phi(m) and strips prime factors while the power stays 1.
    """
    if m < 2:
        raise ValidationError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise ValidationError(f"{a} is not a unit mod {m}")
    order = euler_phi(m)
    for p, _ in factorize(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


class RootType(enum.Enum):
    PRIMITIVE = "Primitive"
    SEMI_PRIMITIVE = "SemiPrimitive"
    NEITHER = "Neither"


def root_type(g: int, m: int) -> RootType:
    """Classify g mod m: order phi(m) -> primitive, phi(m)/2 -> semi-primitive."""
    if m < 3:
        raise ValidationError(f"root classification needs modulus >= 3, got {m}")
    order = mult_order(g, m)
    phi = euler_phi(m)
    if order == phi:
        return RootType.PRIMITIVE
    if phi % 2 == 0 and order == phi // 2:
        return RootType.SEMI_PRIMITIVE
    return RootType.NEITHER


# ---------------------------------------------------------------------------
# Real even Dirichlet characters

@dataclass(frozen=True)
class Character:
    """Real character of conductor p1 viewed at a modulus q divisible by p1.

    ``values[r]`` is the character at residue r mod p1 (so values[0] = 0).
    Evaluation at n first checks gcd(n, modulus): the lift to modulus q
    vanishes on all non-units of q, not just on multiples of p1.
    """

    conductor: int
    modulus: int
    values: tuple[int, ...]

    def __post_init__(self):
        p = self.conductor
        if not is_prime(p) or p % 2 == 0:
            raise ValidationError(f"conductor must be an odd prime, got {p}")
        if self.modulus % p != 0:
            raise ValidationError(f"modulus {self.modulus} is not a multiple of the conductor {p}")
        if len(self.values) != p:
            raise ValidationError("value table must have one entry per residue mod the conductor")
        if self.values[0] != 0 or any(v not in (-1, 0, 1) for v in self.values):
            raise ValidationError("character values must be in {-1, 0, +1} with 0 exactly at 0")
        if all(self.values[a] != -1 for a in range(1, p)):
            raise ValidationError("character is principal (never takes the value -1)")
        for a in range(1, p):
            for b in range(a, p):
                if self.values[a * b % p] != self.values[a] * self.values[b]:
                    raise ValidationError("character table is not completely multiplicative")

    def __call__(self, n: int) -> int:
        if gcd(n, self.modulus) != 1:
            return 0
        return self.values[n % self.conductor]

    @property
    def is_even(self) -> bool:
        return self.values[self.conductor - 1] == 1


def quadratic_character(p: int) -> Character:
    """Legendre-symbol character mod p, restricted to p == 1 (mod 4).

    The congruence makes chi(-1) = +1, i.e. the character is even; for
    p == 3 (mod 4) the quadratic character is odd and is rejected.
    """
    if not is_prime(p) or p == 2:
        raise ValidationError(f"conductor must be an odd prime, got {p}")
    if p % 4 != 1:
        raise ValidationError(
            f"quadratic character mod {p} is odd (p = 3 mod 4); an even character is required"
        )
    values = [0] * p
    for a in range(1, p):
        values[a] = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
    return Character(conductor=p, modulus=p, values=tuple(values))


def lift_character(chi: Character, q: int) -> Character:
    """View chi at modulus q: chi(s mod p1) on units of q, 0 elsewhere.

    Evenness is preserved, so the lift is constant on the residue pairs
    {a, q - a} and descends to the group of units folded by a <-> q - a.
    """
    if q % chi.conductor != 0:
        raise ValidationError(f"conductor {chi.conductor} does not divide {q}")
    return Character(conductor=chi.conductor, modulus=q, values=chi.values)


def character_half_sum(chi: Character) -> int:
    """Exact sum of chi(b) over 2 <= b <= q/2 with gcd(b, q) = 1."""
    q = chi.modulus
    if q < 5:
        raise ValidationError(f"half sum needs modulus >= 5, got {q}")
    if not chi.is_even:
        raise ValidationError("half sum is only meaningful for even characters")
    return sum(chi(b) for b in range(2, q // 2 + 1))
