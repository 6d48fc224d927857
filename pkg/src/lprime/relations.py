"""Log-sine bases, the sine product identity, integer-relation detection,
and explicit vanishing witnesses.

The basis for a modulus q is the family log(2 sin(a pi/q)) over the
half-range coprime residues, optionally extended by pi and log 2.  Two
residues are excluded because their value is a rational power of 2 and
can never take part in an independence statement: a/q = 1/6 (value
log 1 = 0) and a/q = 1/4 (value (1/2) log 2).  In lowest terms those
only occur at q = 6 and q = 4 respectively.

``find_integer_relation`` hunts for integer vectors c with
sum c_a * log(2 sin(a pi/q)) = 0 via PSLQ at the requested precision and
accepts a candidate only after re-evaluating the combination from
scratch at doubled precision.  A returned relation is therefore a
two-precision numerical certificate, not a single lucky cancellation.

Note on non-uniqueness: for composite q the relation lattice can have
rank greater than one (distribution relations contribute coset-sum
relations besides any character-derived witness), and the finder
returns the first verified relation PSLQ produces, which is typically
among the shortest -- not necessarily the witness vector.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from mpmath import mp, mpf, nstr, pslq

from .arith import Character, character_half_sum, factorize, lift_character, quadratic_character
from .errors import HalfSumMismatchError, NotAdmissibleError, PrecisionError, ValidationError
from .lseries import l_deriv0_even
from .numkernel import log2_const, pi_const, require_digits, two_sin_pi, working_prec
from .periodic import PeriodicFunction, from_character


@dataclass(frozen=True)
class LogSineBasis:
    q: int
    digits: int
    entries: list[tuple[int, mpf]]
    excluded: list[int]
    extended: list[tuple[str, mpf]] | None = None

    def all_values(self) -> list[mpf]:
        vals = [v for _, v in self.entries]
        if self.extended:
            vals += [v for _, v in self.extended]
        return vals

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "digits": self.digits,
            "entries": [{"a": a, "value": nstr(v, self.digits)} for a, v in self.entries],
            "excluded": self.excluded,
            "extended": None
            if self.extended is None
            else [{"name": n, "value": nstr(v, self.digits)} for n, v in self.extended],
        }


@dataclass(frozen=True)
class Relation:
    """Integer relation among basis values, certified at two precisions."""

    q: int
    digits: int
    coefficients: dict[int, int]
    pi_coefficient: int
    log2_coefficient: int
    residual_at_d: mpf
    residual_at_2d: mpf
    verified_at_2d: bool

    def vector(self, basis: LogSineBasis) -> list[int]:
        out = [self.coefficients.get(a, 0) for a, _ in basis.entries]
        if basis.extended:
            out += [self.pi_coefficient, self.log2_coefficient]
        return out

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "digits": self.digits,
            "coefficients": {str(a): c for a, c in sorted(self.coefficients.items())},
            "pi": self.pi_coefficient,
            "log2": self.log2_coefficient,
            "residual_at_d": nstr(self.residual_at_d, 8),
            "residual_at_2d": nstr(self.residual_at_2d, 8),
            "verified_at_2d": self.verified_at_2d,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict())


def log_sine_basis(q: int, digits: int, extended: bool = False) -> LogSineBasis:
    """Basis entries (a, log(2 sin(a pi/q))) for coprime a <= q/2.

    Residues with 6a = q or 4a = q are excluded (rational powers of 2;
    in lowest terms this only fires for q = 6 and q = 4).  When
    ``extended`` is set, pi and log 2 are appended.
    """
    if q < 3:
        raise ValidationError(f"basis needs q >= 3, got {q}")
    require_digits(digits)
    entries = []
    excluded = []
    with working_prec(digits):
        for a in range(1, q // 2 + 1):
            if gcd(a, q) != 1:
                continue
            if 6 * a == q or 4 * a == q:
                excluded.append(a)
                continue
            entries.append((a, mp.log(two_sin_pi(a, q, digits))))
    ext = None
    if extended:
        ext = [("pi", pi_const(digits)), ("log2", log2_const(digits))]
    return LogSineBasis(q=q, digits=digits, entries=entries, excluded=excluded, extended=ext)


def sine_identity_residual(q: int, digits: int) -> mpf:
    """sum over coprime 1 <= k <= q-1 of log(2 sin(k pi/q)).

    Equals 0 when q has at least two distinct prime factors and log p
    when q = p^n: the product of the 2 sin values is the cyclotomic
    polynomial evaluated at 1.
    """
    if q < 3:
        raise ValidationError(f"identity needs q >= 3, got {q}")
    with working_prec(digits):
        total = mpf(0)
        for k in range(1, q):
            if gcd(k, q) == 1:
                total += mp.log(two_sin_pi(k, q, digits))
        return total


MIN_DETECTION_DIGITS = 5


def pslq_relation(values: list[mpf], max_coeff: int, digits: int) -> list[int] | None:
    """Detection only: PSLQ at d digits with tolerance 10**-(d-10).

    Returns an integer vector c with |sum c_i values_i| below the
    tolerance and max|c_i| <= max_coeff, or None.  Deterministic for
    fixed inputs; callers wanting a certificate must re-verify the
    combination at higher precision themselves (``find_integer_relation``
    does exactly that for log-sine bases).
    """
    require_digits(digits)
    if max_coeff < 1:
        raise ValidationError(f"max_coeff must be >= 1, got {max_coeff}")
    if len(values) < 2:
        raise ValidationError("relation detection needs at least two values")
    if digits - 10 < MIN_DETECTION_DIGITS:
        raise PrecisionError(
            f"detection scale 10^{digits - 10} underflows; need digits >= "
            f"{MIN_DETECTION_DIGITS + 10}"
        )
    with working_prec(digits):
        candidate = pslq(
            values,
            tol=mpf(10) ** (-(digits - 10)),
            maxcoeff=max_coeff,
            maxsteps=500_000,
        )
    if candidate is None or max(abs(c) for c in candidate) > max_coeff:
        return None
    vec = [int(c) for c in candidate]
    lead = next((c for c in vec if c), 0)
    if lead < 0:  # canonical sign: first non-zero coefficient positive
        vec = [-c for c in vec]
    return vec


def find_integer_relation(
    basis: LogSineBasis, max_coeff: int, digits: int
) -> Relation | None:
    """PSLQ over the basis values, accepted only after 2d re-verification.

    Detection runs at ``digits``; a candidate c is kept only if
    max|c| <= max_coeff and the combination recomputed from freshly
    evaluated basis values at 2*digits stays below 10**(-2*digits+10).
    Deterministic for fixed inputs.
    """
    if basis.digits < digits:
        raise PrecisionError(
            f"basis carries {basis.digits} digits but detection wants {digits}"
        )
    values = basis.all_values()
    candidate = pslq_relation(values, max_coeff, digits)
    if candidate is None:
        return None

    n_resid = len(basis.entries)
    coeffs = {a: c for (a, _), c in zip(basis.entries, candidate[:n_resid]) if c}
    pi_c = log2_c = 0
    if basis.extended:
        pi_c, log2_c = candidate[n_resid], candidate[n_resid + 1]

    with working_prec(digits):
        residual_d = abs(mp.fsum(c * v for c, v in zip(candidate, values)))

    check = log_sine_basis(basis.q, 2 * digits, extended=basis.extended is not None)
    with working_prec(2 * digits):
        residual_2d = abs(mp.fsum(c * v for c, v in zip(candidate, check.all_values())))
        verified = residual_2d < mpf(10) ** (-(2 * digits) + 10)
    if not verified:
        return None
    return Relation(
        q=basis.q,
        digits=digits,
        coefficients=coeffs,
        pi_coefficient=pi_c,
        log2_coefficient=log2_c,
        residual_at_d=residual_d,
        residual_at_2d=residual_2d,
        verified_at_2d=verified,
    )


def find_relation_for_modulus(
    q: int, max_coeff: int, digits: int, extended: bool = False
) -> Relation | None:
    """Convenience wrapper: build the basis for q, then search."""
    return find_integer_relation(log_sine_basis(q, digits, extended), max_coeff, digits)


# ---------------------------------------------------------------------------
# Witness construction

def ramachandra_admissible(q: int) -> tuple[int, int] | None:
    """Smallest pair (p1, p2) of odd prime divisors of q with p2 = 1 mod p1,
    restricted to p1 = 1 (mod 4) so the quadratic character mod p1 is even.
    """
    if q < 3:
        raise ValidationError(f"admissibility needs q >= 3, got {q}")
    odd_primes = [p for p, _ in factorize(q) if p != 2]
    for p1 in odd_primes:
        if p1 % 4 != 1:
            continue
        for p2 in odd_primes:
            if p2 != p1 and p2 % p1 == 1:
                return (p1, p2)
    return None


@dataclass(frozen=True)
class WitnessResult:
    q: int
    p1: int
    p2: int
    chi: Character
    f: PeriodicFunction
    residual: mpf
    digits: int

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "p1": self.p1,
            "p2": self.p2,
            "half_sum": character_half_sum(self.chi),
            "f": self.f.to_json_dict(),
            "residual": nstr(self.residual, 8),
            "digits": self.digits,
        }


def build_witness(q: int, c: Fraction | int, digits: int) -> WitnessResult:
    """Non-constant even Dirichlet-type f with numerically vanishing L'(0, f).

    Takes the quadratic character mod p1, lifts it to q, and sets
    f = chi - 1 + c on the units.  Before returning, the construction
    asserts the exact half-range character sum equals -1 (the value the
    vanishing derivation relies on) and evaluates |L'(0, f)| at the
    requested precision; the caller decides what residual to accept.
    """
    pair = ramachandra_admissible(q)
    if pair is None:
        raise NotAdmissibleError(
            f"q = {q} has no odd prime pair (p1, p2) with p1 = 1 (mod 4) and p2 = 1 (mod p1)"
        )
    p1, p2 = pair
    chi = lift_character(quadratic_character(p1), q)
    half = character_half_sum(chi)
    if half != -1:
        raise HalfSumMismatchError(
            f"half-range sum of the lifted character mod {q} is {half}, expected -1; "
            "the witness construction does not apply"
        )
    f = from_character(chi, Fraction(c))
    residual = abs(l_deriv0_even(f, digits))
    return WitnessResult(q=q, p1=p1, p2=p2, chi=chi, f=f, residual=residual, digits=digits)
