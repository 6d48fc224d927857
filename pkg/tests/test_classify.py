"""Classifier ladder and vanishing-verdict tests."""

import json

import pytest
from mpmath import mpf

from lprime.arith import RootType, mult_order, root_type
from lprime.classify import (
    Case,
    COVERED_COMPOSITE_CRITERION,
    PRIME_POWER_CRITERION,
    Q6_DEGENERACY,
    VerdictKind,
    classify_modulus,
    vanishing_verdict,
)
from lprime.errors import ValidationError
from lprime.lseries import l_deriv0_even
from lprime.periodic import PeriodicFunction, constant_on_units, from_character
from lprime.arith import lift_character, quadratic_character
from tests.conftest import random_even_dirichlet


@pytest.mark.parametrize(
    "q,label",
    [
        (9, "PrimePower"),
        (2, "PrimePower"),
        (32, "PrimePower"),
        (6, "QSix"),
        (12, "PeiFeng(I,1)"),
        (20, "PeiFeng(I,1)"),
        (28, "PeiFeng(I,2)"),
        (24, "PeiFeng(II,1)"),
        (45, "PeiFeng(III,2)"),
        (15, "PeiFeng(III,2)"),
        (21, "PeiFeng(III,1)"),
        (90, "TwoTimesPeiFeng(III)"),
        (10, "TwoPNPower"),
        (18, "TwoPNPower"),
        (155, "Uncovered"),
        (105, "Uncovered"),
        (65, "Uncovered"),
    ],
)
def test_classifier_table(q, label):
    assert classify_modulus(q).label() == label


def test_hand_derived_facts_behind_table():
    # the conditions the table rows rely on, recomputed from the primitives
    assert mult_order(2, 3) == 2  # 12 -> (I,1)
    assert root_type(2, 7) is RootType.SEMI_PRIMITIVE and 7 % 4 == 3  # 28 -> (I,2)
    assert mult_order(3, 8) == 2  # 24: order of p1 mod 2^3 is 2^(3-2)
    assert (2 ** 0 * 3) % 8 != 7
    assert root_type(3, 5) is RootType.PRIMITIVE  # 45 -> (III,2)
    assert root_type(5, 9) is RootType.PRIMITIVE
    assert root_type(3, 7) is RootType.PRIMITIVE  # 21 -> (III,1), mixed pattern
    assert root_type(7, 3) is RootType.SEMI_PRIMITIVE
    assert mult_order(5, 31) == 3  # 155: 5 is not a primitive root mod 31
    assert root_type(5, 31) is not RootType.PRIMITIVE


def test_trace_entries_match_verdicts():
    cls = classify_modulus(12)
    trace = dict(cls.trace)
    assert trace["q is a prime power"] is False
    assert trace["2 is a primitive root mod 3"] is True
    cls155 = classify_modulus(155)
    trace155 = dict(cls155.trace)
    assert trace155["5 primitive root mod 31 and 31 primitive root mod 5"] is False


def test_independence_flags():
    assert classify_modulus(9).independence_25 is True
    assert classify_modulus(6).independence_25 is True
    assert classify_modulus(12).independence_25 is False
    assert classify_modulus(12).independence_24 is True
    assert classify_modulus(10).independence_24 is True
    assert classify_modulus(155).independence_24 is False
    assert classify_modulus(155).independence_25 is False


def test_classify_rejects_small():
    with pytest.raises(ValidationError):
        classify_modulus(1)
    with pytest.raises(ValidationError):
        classify_modulus(0)


def test_classification_json_stable():
    cls = classify_modulus(45)
    blob = cls.dumps()
    data = json.loads(blob)
    assert data["case"] == "PeiFeng" and data["subcase"] == "III,2"
    assert json.dumps(data) == blob  # byte-identical re-serialization
    assert all(set(e) == {"check", "result"} for e in data["trace"])


# ---------------------------------------------------------------------------
# Vanishing verdicts

def test_verdict_prime_power():
    v = vanishing_verdict(9, PeriodicFunction(q=9, values={}), 50)
    assert v.kind is VerdictKind.ZERO_IFF_ZERO_FUNCTION
    assert v.applied_theorem == PRIME_POWER_CRITERION
    assert v.numeric_residual is None


def test_verdict_covered_composite():
    v = vanishing_verdict(12, constant_on_units(12, 3), 50)
    assert v.kind is VerdictKind.ZERO_IFF_CONSTANT_ON_UNITS
    assert v.applied_theorem == COVERED_COMPOSITE_CRITERION


def test_verdict_q6():
    v = vanishing_verdict(6, constant_on_units(6, 2), 50)
    assert v.kind is VerdictKind.ALWAYS_ZERO
    assert v.applied_theorem == Q6_DEGENERACY


def test_verdict_witness_unknown():
    chi = lift_character(quadratic_character(5), 155)
    f = from_character(chi, 0)
    v = vanishing_verdict(155, f, 50)
    assert v.kind is VerdictKind.UNKNOWN
    assert v.applied_theorem is None
    assert v.numeric_residual is not None and v.numeric_residual < mpf(10) ** -40


def test_verdict_two_pn_unknown(rng):
    f = random_even_dirichlet(10, rng)
    v = vanishing_verdict(10, f, 50)
    assert v.kind is VerdictKind.UNKNOWN
    assert v.numeric_residual is not None


def test_verdict_json_dict(rng):
    v = vanishing_verdict(9, PeriodicFunction(q=9, values={}), 50)
    data = v.to_json_dict()
    assert data == {
        "kind": "ZeroIffZeroFunction",
        "applied_theorem": PRIME_POWER_CRITERION,
        "numeric_residual": None,
    }
    u = vanishing_verdict(10, random_even_dirichlet(10, rng), 50)
    assert isinstance(u.to_json_dict()["numeric_residual"], str)


def test_verdict_rejects_mismatch(rng):
    with pytest.raises(ValidationError):
        vanishing_verdict(10, random_even_dirichlet(9, rng), 50)
    with pytest.raises(ValidationError):
        vanishing_verdict(5, PeriodicFunction(q=5, values={1: 1}), 50)


def test_verdict_soundness_against_numerics(rng):
    # predicted-zero cases sit far below 1e-50 at 60 digits; predicted
    # non-zero cases sit far above
    thresh = mpf(10) ** -50
    # prime powers: zero iff zero function
    for q in (9, 25, 27):
        f = random_even_dirichlet(q, rng, allow_zero=False)
        assert abs(l_deriv0_even(f, 60)) > thresh
        assert abs(l_deriv0_even(PeriodicFunction(q=q, values={}), 60)) < thresh
    # covered composites: zero iff constant on units
    for q, c in ((12, 3), (45, 2), (15, 1)):
        assert abs(l_deriv0_even(constant_on_units(q, c), 60)) < thresh
        f = random_even_dirichlet(q, rng, allow_zero=False)
        if dict(f.values) != {a: f(1) for a in f.values}:  # non-constant draw
            assert abs(l_deriv0_even(f, 60)) > thresh
    # q = 6: always zero
    for c in (1, 7):
        assert abs(l_deriv0_even(constant_on_units(6, c), 60)) < thresh


def test_trace_order_insensitivity():
    # the verdict is a pure function of q; repeated calls agree entirely
    for q in (9, 12, 90, 155):
        a, b = classify_modulus(q), classify_modulus(q)
        assert a == b
