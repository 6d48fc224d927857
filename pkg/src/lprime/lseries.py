"""Evaluation of L(s, f) = sum f(n)/n^s and of L'(0, f).

Three independent routes to the derivative at 0 are kept deliberately
separate so they can cross-check each other:

* ``l_deriv`` differentiates the Hurwitz-zeta decomposition term-wise,
* ``l_deriv0_closed`` uses the closed form through log Gamma values,
* ``l_deriv0_even`` uses the half-support log-sine sum available for
  even Dirichlet-type functions.

Sign convention: L'(0, f) = -sum_{a<=q/2, (a,q)=1} f(a) log(2 sin(a pi/q)).
The shifted variant sum (f(a)-f(1)) log(2 sin(a pi/q)) that circulates in
the literature appears with either sign; differentiating L(s, f) fixes
the minus sign used here, and vanishing statements do not depend on it.

``family_rank`` is exact: linear independence of even Dirichlet-type
functions over a prime-power period is decided by rational row reduction
over the half-support columns, never by floating point.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from mpmath import mp, mpf

from .errors import PoleError, ValidationError
from .numkernel import (
    RealLike,
    hurwitz_zeta,
    hurwitz_zeta_ds,
    log_gamma_frac,
    to_mpf,
    two_sin_pi,
    working_prec,
)
from .periodic import PeriodicFunction, half_support, require_even_dirichlet


class Method(enum.Enum):
    HURWITZ_SUM = "HurwitzSum"
    CLOSED_FORM_0 = "ClosedForm0"
    EVEN_REDUCED_0 = "EvenReduced0"


@dataclass(frozen=True)
class LValue:
    """An evaluated L-value or L'-value, tagged with how it was obtained."""

    value: mpf
    s: mpf
    f_digest: str
    method: Method

    def __post_init__(self):
        if self.method in (Method.CLOSED_FORM_0, Method.EVEN_REDUCED_0) and self.s != 0:
            raise ValidationError(f"method {self.method.value} only applies at s = 0")


def _reject_pole(s: RealLike) -> None:
    if s == 1:
        raise PoleError(
            "s = 1 is not evaluated: L(s, f) has a pole there unless the mean of f "
            "vanishes, and the s = 1 theory is out of scope either way"
        )


def l_value(s: RealLike, f: PeriodicFunction, digits: int) -> mpf:
    """L(s, f) = q^(-s) sum_{a=1}^{q} f(a) zeta(s, a/q) at d digits, s != 1."""
    _reject_pole(s)
    with working_prec(digits):
        sm = to_mpf(s)
        total = mpf(0)
        for a, v in f.values.items():
            total += to_mpf(v) * hurwitz_zeta(sm, Fraction(a, f.q), digits)
        return mp.power(f.q, -sm) * total


def l_deriv(s: RealLike, f: PeriodicFunction, digits: int) -> mpf:
    """L'(s, f) by term-wise differentiation of the Hurwitz decomposition.

    L'(s,f) = -log(q) q^(-s) sum f(a) zeta(s, a/q) + q^(-s) sum f(a) zeta'(s, a/q).
    """
    _reject_pole(s)
    with working_prec(digits):
        sm = to_mpf(s)
        zsum = mpf(0)
        dsum = mpf(0)
        for a, v in f.values.items():
            x = Fraction(a, f.q)
            vm = to_mpf(v)
            zsum += vm * hurwitz_zeta(sm, x, digits)
            dsum += vm * hurwitz_zeta_ds(sm, x, digits)
        qs = mp.power(f.q, -sm)
        return -mp.log(f.q) * qs * zsum + qs * dsum


def l_deriv0_closed(f: PeriodicFunction, digits: int) -> mpf:
    """L'(0, f) by the log-Gamma closed form, for any periodic f.

    L'(0,f) = -log(q) sum f(a)(1/2 - a/q) + sum f(a) log Gamma(a/q)
              - (1/2) log(2 pi) sum f(a).

    The first coefficient sum is exact rational arithmetic; for even
    Dirichlet-type f it cancels identically under the pairing a <-> q-a.
    """
    offset = Fraction(0)   # sum f(a) (1/2 - a/q)
    mean = Fraction(0)     # sum f(a)
    for a, v in f.values.items():
        offset += v * (Fraction(1, 2) - Fraction(a, f.q))
        mean += v
    with working_prec(digits):
        total = mpf(0)
        for a, v in f.values.items():
            total += to_mpf(v) * log_gamma_frac(a, f.q, digits)
        if offset:
            total -= mp.log(f.q) * to_mpf(offset)
        if mean:
            total -= mp.log(2 * mp.pi) / 2 * to_mpf(mean)
        return total


def l_deriv0_even(f: PeriodicFunction, digits: int) -> mpf:
    """L'(0, f) = -sum over the half support of f(a) log(2 sin(a pi/q)).

    Requires f even and Dirichlet type with period >= 3: the reduction
    pairs a with q - a, and for q <= 2 the pairing degenerates (a = q/2
    is its own partner), so those periods are rejected rather than
    silently mis-weighted.
    """
    if f.q < 3:
        raise ValidationError(
            f"half-support reduction needs period >= 3, got {f.q}; "
            "use the closed form for tiny periods"
        )
    pairs = half_support(f)
    with working_prec(digits):
        total = mpf(0)
        for a, v in pairs:
            if v:
                total -= to_mpf(v) * mp.log(two_sin_pi(a, f.q, digits))
        return total


# ---------------------------------------------------------------------------
# Exact rank criterion

@dataclass(frozen=True)
class RankResult:
    rank: int
    independent: bool
    certificate: list[int] | None

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "independent": self.independent,
            "certificate": self.certificate,
        }


def family_rank(fs: list[PeriodicFunction]) -> RankResult:
    """Exact linear (in)dependence of even Dirichlet-type functions.

    All functions must share one prime-power period q.  Over such q the
    derivative values L'(0, f_i) are independent exactly when the f_i
    are, so the verdict comes from rational row reduction of the matrix
    [f_i(a)] over the half-support columns.  When dependent, one exact
    integer kernel vector c (primitive, first non-zero entry positive)
    certifies sum_i c_i L'(0, f_i) = 0.
    """
    from .arith import is_prime_power  # local import to keep module deps one-way

    if not fs:
        raise ValidationError("need at least one function")
    q = fs[0].q
    if any(f.q != q for f in fs):
        raise ValidationError("all functions must share the same period")
    if not is_prime_power(q):
        raise ValidationError(
            f"rank criterion requires a prime-power period, got q = {q}"
        )
    for f in fs:
        require_even_dirichlet(f)

    columns = [a for a in range(1, q // 2 + 1) if gcd(a, q) == 1]
    rows = [[f(a) for a in columns] for f in fs]
    n = len(fs)

    # Row-reduce the transpose augmented with an identity to track the
    # combination: kernel vectors of the row matrix are exactly the
    # left-null combinations sum c_i f_i = 0.
    m = len(columns)
    aug = [[rows[i][j] for i in range(n)] for j in range(m)]  # m x n transpose
    pivots: list[int] = []
    rank = 0
    for col in range(n):
        pivot_row = None
        for r in range(rank, m):
            if aug[r][col] != 0:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        aug[rank], aug[pivot_row] = aug[pivot_row], aug[rank]
        pv = aug[rank][col]
        aug[rank] = [x / pv for x in aug[rank]]
        for r in range(m):
            if r != rank and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1

    independent = rank == n
    certificate = None
    if not independent:
        free = next(c for c in range(n) if c not in pivots)
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -aug[r][free]
        certificate = _primitive_integers(vec)
    return RankResult(rank=rank, independent=independent, certificate=certificate)


def _primitive_integers(vec: list[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers, first non-zero positive."""
    denom = 1
    for v in vec:
        denom = denom * v.denominator // gcd(denom, v.denominator)
    ints = [int(v * denom) for v in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints
