"""Throughput, bottlenecks, and what improvements actually change.

A three-stage pipeline with capacities 3, 1, 4: stage b is the bottleneck,
and the system moves at 1 regardless of how fast a and c are.
"""

from fractions import Fraction

from pipecalc import (
    Multiplier,
    Pipeline,
    bottleneck_report,
    classify,
    migration_decomposition,
    perturbed_throughput,
)

pipeline = Pipeline(("a", "b", "c"), {"a": 3, "b": 1, "c": 4})

rep = bottleneck_report(pipeline)
print(f"throughput {rep.throughput}, bottlenecks {rep.bottlenecks}")

# speeding up the non-bottlenecks, even by 10x, does nothing
wasted = Multiplier({"a": 10, "b": 1, "c": 10})
print("10x on a and c:", perturbed_throughput(pipeline, wasted))

# speeding up the bottleneck helps -- until it stops being the bottleneck
for factor in (Fraction(3, 2), 2, 3, 5):
    boost = Multiplier({"a": 1, "b": factor, "c": 1})
    cls = classify(pipeline, boost)
    moved = migration_decomposition(pipeline, boost)
    print(
        f"b x{factor}: throughput {cls.new_throughput} ({cls.outcome.value})",
        f"migration departed={list(moved.departed)} entered={list(moved.entered)}",
    )
