"""Rational-valued periodic arithmetic functions mod q.

A function is a period q plus a sparse map residue -> Fraction on 1..q;
residues without an entry take the value 0, and zero values are never
stored.  The two structural predicates that drive every later formula:

* even: f(a) = f(q - a) for all a,
* Dirichlet type: f(a) = 0 whenever gcd(a, q) > 1.

The JSON form is ``{"q": <int>, "values": {"<residue>": "<num>/<den>"}}``
with the denominator omitted when it is 1.  Serialization is canonical
(residues ascending), so parse -> serialize round-trips byte-exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Mapping

from .arith import Character
from .errors import ValidationError

RationalLike = Fraction | int


@dataclass(frozen=True)
class PeriodicFunction:
    q: int
    values: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 1:
            raise ValidationError(f"period must be a positive integer, got {self.q!r}")
        clean: dict[int, Fraction] = {}
        for a, v in self.values.items():
            if not isinstance(a, int) or not 1 <= a <= self.q:
                raise ValidationError(f"residue {a!r} outside 1..{self.q}")
            frac = Fraction(v)
            if frac != 0:
                clean[a] = frac
        object.__setattr__(self, "values", MappingProxyType(dict(sorted(clean.items()))))

    def __call__(self, n: int) -> Fraction:
        """Value at any positive integer, by periodicity."""
        if n < 1:
            raise ValidationError(f"argument must be a positive integer, got {n}")
        r = n % self.q
        return self.values.get(r if r else self.q, Fraction(0))

    def is_zero(self) -> bool:
        return not self.values

    # -- serialization ------------------------------------------------------

    def to_json_dict(self) -> dict:
        vals = {}
        for a in sorted(self.values):
            v = self.values[a]
            vals[str(a)] = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return {"q": self.q, "values": vals}

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "PeriodicFunction":
        if not isinstance(data, dict):
            raise ValidationError("periodic function JSON must be an object")
        unknown = set(data) - {"q", "values"}
        if unknown:
            raise ValidationError(f"unknown keys in periodic function JSON: {sorted(unknown)}")
        if "q" not in data or not isinstance(data["q"], int):
            raise ValidationError('periodic function JSON needs an integer "q"')
        raw = data.get("values", {})
        if not isinstance(raw, dict):
            raise ValidationError('"values" must be an object mapping residues to rationals')
        values: dict[int, Fraction] = {}
        for key, val in raw.items():
            try:
                a = int(key)
            except (TypeError, ValueError):
                raise ValidationError(f"residue key {key!r} is not an integer") from None
            if not isinstance(val, str):
                raise ValidationError(f"value for residue {key!r} must be a string rational")
            try:
                values[a] = Fraction(val)
            except (ValueError, ZeroDivisionError):
                raise ValidationError(f"malformed rational {val!r} at residue {key!r}") from None
        return cls(q=data["q"], values=values)

    @classmethod
    def loads(cls, text: str) -> "PeriodicFunction":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid JSON: {exc}") from None
        return cls.from_json_dict(data)

    def digest(self) -> str:
        """Stable content hash (canonical JSON, SHA-256, first 16 hex chars)."""
        return hashlib.sha256(self.dumps().encode()).hexdigest()[:16]


def validate(f: PeriodicFunction) -> tuple[bool, bool]:
    """(even, dirichlet_type) for a structurally valid function."""
    even = all(f(a) == f(f.q - a) for a in range(1, f.q))
    dirichlet = all(gcd(a, f.q) == 1 for a in f.values)
    return even, dirichlet


def require_even_dirichlet(f: PeriodicFunction) -> None:
    even, dirichlet = validate(f)
    if not even:
        raise ValidationError(f"function mod {f.q} is not even (f(a) != f(q-a) somewhere)")
    if not dirichlet:
        raise ValidationError(f"function mod {f.q} is not Dirichlet type (non-zero off the units)")


def from_character(chi: Character, c: RationalLike) -> PeriodicFunction:
    """f(s) = chi(s) - 1 + c on units of chi.modulus, 0 elsewhere.

    Gives an even Dirichlet-type function with f(1) = c; it is constant
    on the units exactly when chi is principal, which ``Character``
    already rules out.
    """
    if not chi.is_even:
        raise ValidationError("character is odd; only even characters give even functions")
    q = chi.modulus
    c = Fraction(c)
    values = {}
    for s in range(1, q + 1):
        if gcd(s, q) == 1:
            values[s] = chi(s) - 1 + c
    return PeriodicFunction(q=q, values=values)


def constant_on_units(q: int, c: RationalLike) -> PeriodicFunction:
    """f = c on residues coprime to q, 0 elsewhere; even Dirichlet type."""
    if q < 2:
        raise ValidationError(f"period must be >= 2, got {q}")
    c = Fraction(c)
    return PeriodicFunction(q=q, values={a: c for a in range(1, q + 1) if gcd(a, q) == 1})


def half_support(f: PeriodicFunction) -> list[tuple[int, Fraction]]:
    """Pairs (a, f(a)) for 1 <= a <= q/2 with gcd(a, q) = 1, ascending a.

    Zero values are included: the enumeration is the fixed column order
    used by the log-sine formulas and the rank criterion.
    """
    require_even_dirichlet(f)
    return [(a, f(a)) for a in range(1, f.q // 2 + 1) if gcd(a, f.q) == 1]
