"""Construct a vanishing witness for q = 55 and rediscover it blind.

The modulus 55 = 5 * 11 has 11 = 1 (mod 5), so the quadratic character
mod 5 lifts to an even character chi mod 55 whose half-range sum is -1.
The function f = chi - 1 on the units is non-constant, yet L'(0, f)
vanishes: the coefficients chi(s) - 1 pick out a multiplicative
dependence among the cyclotomic values 2 sin(s pi / 55).

The second half runs the integer-relation detector on the raw log-sine
basis with no knowledge of the character, and compares what it finds
against the witness coefficients.
"""

from mpmath import nstr

from lprime import build_witness, find_relation_for_modulus, half_support

DIGITS = 100

wit = build_witness(55, 0, DIGITS)
print(f"q = {wit.q}, primes (p1, p2) = ({wit.p1}, {wit.p2})")
print(f"f on residues 1..10: {[str(wit.f(a)) for a in range(1, 11)]}")
print(f"|L'(0, f)| at {DIGITS} digits: {nstr(wit.residual, 8)}\n")

rel = find_relation_for_modulus(55, max_coeff=4, digits=120)
print("blind detection over the 20 half-support log-sine values:")
print(f"  support of the found relation: {sorted(rel.coefficients)}")
print(f"  residual re-checked at 240 digits: {nstr(rel.residual_at_2d, 8)}")

witness_support = sorted(a for a, v in half_support(wit.f) if v)
print(f"  witness support (chi(s) = -1):  {witness_support}")
print(f"  rediscovered the witness: {sorted(rel.coefficients) == witness_support}")
