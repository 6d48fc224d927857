"""Classify a range of moduli and tabulate which vanishing regime applies.

PrimePower         L'(0, f) = 0  iff  f is the zero function
QSix               L'(0, f) = 0  always (the only half-support log-sine is log 1)
PeiFeng(...)       L'(0, f) = 0  iff  f is constant on the units
TwoPNPower /
TwoTimesPeiFeng    extended log-sine family independent, but no vanishing
                   criterion for L'(0, f) follows
Uncovered          dependence possible: witnesses may exist (see the
                   witness_rediscovery demo)
"""

from collections import Counter

from lprime import classify_modulus

counts = Counter()
print(f"{'q':>4}  {'case':<22} indep(a>=2 basis)  indep(full basis)")
for q in range(2, 200):
    cls = classify_modulus(q)
    counts[cls.case.value] += 1
    if q <= 60 or cls.label() in ("QSix", "PeiFeng(IV,2)", "Uncovered") and q < 110:
        print(f"{q:>4}  {cls.label():<22} {str(cls.independence_24):<18} {cls.independence_25}")

print("\ncase populations for q < 200:")
for label, count in counts.most_common():
    print(f"  {label:<18} {count}")

print("\nfull condition trace for q = 155:")
for check, result in classify_modulus(155).trace:
    print(f"  [{'x' if result else ' '}] {check}")
