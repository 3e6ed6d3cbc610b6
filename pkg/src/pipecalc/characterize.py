"""Exact characterisations of what a perturbation does to a pipeline.

Three facts hold for every admissible multiplier, and each is checkable from
both sides:

  * throughput is unchanged iff some original bottleneck keeps factor 1;
  * throughput strictly increases iff every original bottleneck has factor
    strictly above 1;
  * the bottleneck set is preserved iff all bottlenecks share one common
    factor and every perturbed bottleneck value stays strictly below every
    perturbed non-bottleneck value.

`verify_characterizations` recomputes both sides of each equivalence from
first principles and reports any disagreement as an internal defect with all
intermediate values attached.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .model import (
    Multiplier,
    Pipeline,
    bottleneck_set,
    check_admissible,
    perturb,
    perturbed_throughput,
    throughput,
)


class Outcome(enum.Enum):
    UNCHANGED = "unchanged"
    STRICT_INCREASE = "strict_increase"


@dataclass(frozen=True)
class PerturbationClassification:
    """Outcome of a perturbation together with the predicates that explain it.

    `unchanged_predicate` is "some original bottleneck has factor exactly 1";
    `strict_predicate` is "every original bottleneck has factor > 1".
    Admissibility forces exactly one of the two to hold, and the outcome
    matches the holding predicate.  When unchanged, `witness` names the
    earliest bottleneck (in stage order) whose factor is 1.
    """

    outcome: Outcome
    unchanged_predicate: bool
    strict_predicate: bool
    witness: Optional[str]
    base_throughput: Fraction
    new_throughput: Fraction


@dataclass(frozen=True)
class PreservationReport:
    """Whether the bottleneck set survives perturbation, and why.

    condition_i: all original bottlenecks share one factor.
    condition_ii: every perturbed bottleneck value is strictly below every
    perturbed non-bottleneck value (vacuously true when every stage is a
    bottleneck).  Preservation holds iff both conditions do.
    """

    preserved: bool
    condition_i: bool
    condition_ii: bool
    common_factor: Optional[Fraction]


@dataclass(frozen=True)
class MigrationDecomposition:
    """Stages that left or joined the bottleneck set, in stage order."""

    departed: tuple[str, ...]
    entered: tuple[str, ...]

    @property
    def empty(self) -> bool:
        return not self.departed and not self.entered


def classify(p: Pipeline, a: Multiplier) -> PerturbationClassification:
    check_admissible(p, a)
    base = throughput(p)
    new = perturbed_throughput(p, a)
    bottlenecks = [s for s in p.stages if p.capacity[s] == base]
    unchanged_pred = any(a.factor[s] == 1 for s in bottlenecks)
    strict_pred = all(a.factor[s] > 1 for s in bottlenecks)
    outcome = Outcome.UNCHANGED if new == base else Outcome.STRICT_INCREASE
    witness = None
    if outcome is Outcome.UNCHANGED:
        witness = next(s for s in bottlenecks if a.factor[s] == 1)
    return PerturbationClassification(
        outcome=outcome,
        unchanged_predicate=unchanged_pred,
        strict_predicate=strict_pred,
        witness=witness,
        base_throughput=base,
        new_throughput=new,
    )


def preservation_report(p: Pipeline, a: Multiplier) -> PreservationReport:
    check_admissible(p, a)
    before = bottleneck_set(p)
    after = bottleneck_set(perturb(p, a))
    preserved = before == after

    factors = {a.factor[s] for s in before}
    condition_i = len(factors) == 1
    common = next(iter(factors)) if condition_i else None

    rest = [s for s in p.stages if s not in before]
    if rest:
        worst_bottleneck = max(a.factor[s] * p.capacity[s] for s in before)
        best_rest = min(a.factor[s] * p.capacity[s] for s in rest)
        condition_ii = worst_bottleneck < best_rest
    else:
        condition_ii = True

    return PreservationReport(
        preserved=preserved,
        condition_i=condition_i,
        condition_ii=condition_ii,
        common_factor=common,
    )


def migration_decomposition(p: Pipeline, a: Multiplier) -> MigrationDecomposition:
    check_admissible(p, a)
    before = bottleneck_set(p)
    after = bottleneck_set(perturb(p, a))
    departed = tuple(s for s in p.stages if s in before and s not in after)
    entered = tuple(s for s in p.stages if s in after and s not in before)
    return MigrationDecomposition(departed=departed, entered=entered)


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Result of cross-checking every equivalence on one (pipeline,
    multiplier) instance.  A failure means the implementation disagrees with
    a brute-force recomputation; it is an internal bug, never a refutation
    of the characterisations themselves."""

    passed: bool
    failures: tuple[str, ...]
    detail: dict


def _scan_min(values) -> Fraction:
    # explicit linear scan, kept separate from throughput() on purpose
    it = iter(values)
    best = next(it)
    for v in it:
        if v < best:
            best = v
    return best


def verify_characterizations(p: Pipeline, a: Multiplier) -> CharacterizationVerdict:
    check_admissible(p, a)
    caps = [p.capacity[s] for s in p.stages]
    base = _scan_min(caps)
    new = _scan_min([a.factor[s] * p.capacity[s] for s in p.stages])
    before = frozenset(s for s in p.stages if p.capacity[s] == base)
    after = frozenset(
        s for s in p.stages if a.factor[s] * p.capacity[s] == new
    )

    failures = []

    # non-decrease, and the resulting dichotomy
    if new < base:
        failures.append("throughput decreased under an admissible multiplier")

    # unchanged iff some bottleneck keeps factor 1
    exists_one = any(a.factor[s] == 1 for s in before)
    if (new == base) != exists_one:
        failures.append("unchanged-throughput equivalence violated")

    # strict increase iff all bottlenecks have factor > 1
    all_above = all(a.factor[s] > 1 for s in before)
    if (new > base) != all_above:
        failures.append("strict-increase equivalence violated")

    # classification consistency against the predicate route
    cls = classify(p, a)
    if cls.unchanged_predicate != exists_one or cls.strict_predicate != all_above:
        failures.append("classification predicates disagree with brute force")
    if (cls.outcome is Outcome.UNCHANGED) != (new == base):
        failures.append("classification outcome disagrees with brute force")
    if cls.witness is not None and (
        cls.witness not in before or a.factor[cls.witness] != 1
    ):
        failures.append("classification witness is not a factor-1 bottleneck")

    # preservation iff (i) and (ii)
    rep = preservation_report(p, a)
    cond_i = len({a.factor[s] for s in before}) == 1
    cond_ii = all(
        a.factor[u] * p.capacity[u] < a.factor[w] * p.capacity[w]
        for u in before
        for w in p.stages
        if w not in before
    )
    if (before == after) != (cond_i and cond_ii):
        failures.append("preservation equivalence violated")
    if rep.preserved != (before == after) or rep.condition_i != cond_i or rep.condition_ii != cond_ii:
        failures.append("preservation report disagrees with brute force")

    # migration iff the decomposition is nonempty
    decomp = migration_decomposition(p, a)
    if decomp.empty != (before == after):
        failures.append("migration decomposition disagrees with set equality")
    if set(decomp.departed) != before - after or set(decomp.entered) != after - before:
        failures.append("migration decomposition sets are wrong")

    detail = {
        "base_throughput": base,
        "new_throughput": new,
        "bottlenecks_before": sorted(before),
        "bottlenecks_after": sorted(after),
        "factors": {s: a.factor[s] for s in p.stages},
        "capacities": {s: p.capacity[s] for s in p.stages},
    }
    return CharacterizationVerdict(
        passed=not failures, failures=tuple(failures), detail=detail
    )
