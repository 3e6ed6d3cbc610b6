"""Serial pipeline data model and the foundational throughput operations.

A pipeline is an ordered sequence of named stages, each with a strictly
positive capacity.  System throughput is the minimum stage capacity; the
bottleneck set is the set of stages attaining it.  An improvement multiplier
assigns each stage a factor >= 1, and perturbation multiplies capacities
stagewise.

All quantities are exact rationals (`fractions.Fraction`).  Floats are
rejected at the boundary: the equality and tie structure the analysis relies
on would not survive binary rounding.

Model assumptions enforced by validation (numbered for report output):
  1. the stage set is finite and nonempty;
  2. every stage capacity is strictly positive.
Structural requirements (unique stage ids, capacity domain equal to the
stage set) are reported alongside by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

RationalInput = Union[Fraction, int, str]


class PipelineValidationError(ValueError):
    """Raised when a pipeline description violates a model assumption."""

    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(report.violations))
        self.report = report


class AdmissibilityError(ValueError):
    """Raised when a multiplier is not admissible for the target pipeline."""


def as_fraction(value: RationalInput) -> Fraction:
    """Convert an exact input (int, Fraction, or text like "3", "3.25",
    "13/4") to a Fraction.  Floats are refused to keep arithmetic exact."""
    if isinstance(value, bool):
        raise TypeError("booleans are not capacities")
    if isinstance(value, float):
        raise TypeError(
            "floats are not accepted; pass an int, Fraction, or exact text "
            'such as "3.25" or "13/4"'
        )
    return Fraction(value)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validating a raw pipeline description.

    `violations` lists every failed check, not just the first, so an input
    file can be repaired in one pass.
    """

    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_description(
    stages: Sequence[str], capacity: Mapping[str, Fraction]
) -> list[str]:
    violations = []
    if len(stages) == 0:
        violations.append("assumption 1 violated: stage set is empty")
    seen = set()
    for s in stages:
        if not isinstance(s, str) or not s:
            violations.append(f"stage id {s!r} is not nonempty text")
        elif s in seen:
            violations.append(f"duplicate stage id {s!r}: stage ids form a set")
        seen.add(s)
    for s in stages:
        if s not in capacity:
            violations.append(f"stage {s!r} has no capacity")
    for s in capacity:
        if s not in seen:
            violations.append(f"capacity given for unknown stage {s!r}")
    for s, c in capacity.items():
        if s in seen and c <= 0:
            violations.append(
                f"assumption 2 violated: capacity of stage {s!r} is {c} (must be > 0)"
            )
    return violations


@dataclass(frozen=True)
class Pipeline:
    """Ordered stages with exact positive capacities.

    The stage order models the serial structure and is preserved through
    serialization and report output, but no computation consults it: every
    result depends only on the stage set and the capacity function.
    Immutable after construction.
    """

    stages: tuple[str, ...]
    capacity: Mapping[str, Fraction]

    def __init__(
        self,
        stages: Iterable[str],
        capacity: Mapping[str, RationalInput],
    ):
        stage_tuple = tuple(stages)
        cap = {s: as_fraction(c) for s, c in capacity.items()}
        violations = _check_description(stage_tuple, cap)
        if violations:
            raise PipelineValidationError(ValidationReport(tuple(violations)))
        object.__setattr__(self, "stages", stage_tuple)
        object.__setattr__(self, "capacity", cap)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Pipeline):
            return NotImplemented
        return self.stages == other.stages and self.capacity == other.capacity

    def __hash__(self) -> int:
        return hash((self.stages, tuple(sorted(self.capacity.items()))))


def validate_pipeline(
    stages: Iterable[str], capacity: Mapping[str, RationalInput]
) -> Pipeline | ValidationReport:
    """Build a Pipeline, or return a report listing every violated check."""
    stage_tuple = tuple(stages)
    try:
        cap = {s: as_fraction(c) for s, c in capacity.items()}
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        return ValidationReport((f"capacity not an exact rational: {exc}",))
    violations = _check_description(stage_tuple, cap)
    if violations:
        return ValidationReport(tuple(violations))
    return Pipeline(stage_tuple, cap)


@dataclass(frozen=True)
class Multiplier:
    """Per-stage improvement factors, each >= 1.  Factor 1 means unimproved."""

    factor: Mapping[str, Fraction]

    def __init__(self, factor: Mapping[str, RationalInput]):
        f = {s: as_fraction(v) for s, v in factor.items()}
        bad = {s: v for s, v in f.items() if v < 1}
        if bad:
            raise AdmissibilityError(
                f"factors below 1 are inadmissible: {sorted(bad)}"
            )
        object.__setattr__(self, "factor", f)

    @classmethod
    def identity(cls, p: Pipeline) -> "Multiplier":
        return cls({s: Fraction(1) for s in p.stages})

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multiplier):
            return NotImplemented
        return self.factor == other.factor

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.factor.items())))


def check_admissible(p: Pipeline, a: Multiplier) -> None:
    """Raise AdmissibilityError unless a's domain is exactly p's stage set.

    Factor lower bounds are already enforced by the Multiplier constructor.
    """
    stage_set = set(p.stages)
    domain = set(a.factor)
    if domain != stage_set:
        missing = sorted(stage_set - domain)
        extra = sorted(domain - stage_set)
        parts = []
        if missing:
            parts.append(f"missing factors for stages {missing}")
        if extra:
            parts.append(f"factors for unknown stages {extra}")
        raise AdmissibilityError("; ".join(parts))


@dataclass(frozen=True)
class BottleneckReport:
    """Throughput plus the partition of stages into bottlenecks and the rest.

    Bottlenecks are listed in stage-sequence order for deterministic output;
    comparisons between reports use set semantics.
    """

    throughput: Fraction
    bottlenecks: tuple[str, ...]
    non_bottlenecks: tuple[str, ...]

    @property
    def bottleneck_set(self) -> frozenset[str]:
        return frozenset(self.bottlenecks)


def throughput(p: Pipeline) -> Fraction:
    """Minimum stage capacity.  Always exists and is > 0."""
    return min(p.capacity[s] for s in p.stages)


def bottleneck_set(p: Pipeline) -> frozenset[str]:
    t = throughput(p)
    return frozenset(s for s in p.stages if p.capacity[s] == t)


def bottleneck_report(p: Pipeline) -> BottleneckReport:
    t = throughput(p)
    bottle = tuple(s for s in p.stages if p.capacity[s] == t)
    rest = tuple(s for s in p.stages if p.capacity[s] != t)
    return BottleneckReport(throughput=t, bottlenecks=bottle, non_bottlenecks=rest)


def perturb(p: Pipeline, a: Multiplier) -> Pipeline:
    """Apply a stagewise: capacity of each stage becomes factor * capacity.

    The result is again a valid pipeline (positive capacities, same stage
    order).
    """
    check_admissible(p, a)
    return Pipeline(p.stages, {s: a.factor[s] * p.capacity[s] for s in p.stages})


def perturbed_throughput(p: Pipeline, a: Multiplier) -> Fraction:
    """Throughput after perturbation, computed directly as
    min over stages of factor * capacity."""
    check_admissible(p, a)
    return min(a.factor[s] * p.capacity[s] for s in p.stages)


def migration_occurred(p: Pipeline, a: Multiplier) -> bool:
    """True iff perturbation changes the bottleneck set (as a set)."""
    return bottleneck_set(perturb(p, a)) != bottleneck_set(p)
