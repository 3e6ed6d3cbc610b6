"""Does more alert volume mean less useful work?

Under a fixed false-positive fraction the answer is no: once the alert
rate passes the investigation capacity, useful throughput plateaus at
(1 - fraction) * capacity.  Genuine decline needs precision that degrades
with rate.
"""

from fractions import Fraction

from pipecalc import (
    ConstantPrecision,
    FixedFractionModel,
    RationalDecayPrecision,
    decline_check,
    plateau_check,
    repaired_useful,
    simple_useful,
)

model = FixedFractionModel(
    false_positive_fraction=Fraction(1, 2), investigation_capacity=10
)
rates = [5, 10, 20, 100, 1000]
print("fixed fraction 1/2, capacity 10:")
for lam in rates:
    print(f"  rate {lam:>5}: useful {simple_useful(lam, model)}")
verdict = plateau_check(model, [20, 100, 1000])
print(f"plateau above capacity: {verdict.common_value} (pass={verdict.passed})")

# precision that decays with rate: p = 1 / (1 + rate/10)
decay = RationalDecayPrecision(Fraction(1, 10))
print("\nrate-dependent precision 1/(1 + rate/10):")
for lam in (20, 40, 80, 160):
    print(f"  rate {lam:>4}: useful {repaired_useful(lam, decay, 10)}")
print("strict decline:", decline_check(decay, 10, [20, 40, 80, 160]).passed)

# and a constant precision collapses back to a plateau
const = ConstantPrecision(Fraction(1, 2))
print("constant precision mode:",
      decline_check(const, 10, [20, 40, 80]).mode)
