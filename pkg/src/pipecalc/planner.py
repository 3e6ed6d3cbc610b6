"""Budgeted improvement allocation.

Given a per-stage cost per unit of (factor - 1) and a total budget, decide
how much to improve each stage.  Two allocators:

  * `trivial_allocation`: the textbook answer for a unique bottleneck —
    spend everything on it, capped where the next stage would take over as
    the minimum.  Refuses tied bottlenecks, since raising all but one of a
    tie changes nothing.
  * `maxmin_allocation`: exact max-min water filling.  For a target
    throughput t, the cheapest multiplier is factor(v) = max(1, t / c(v));
    its cost is continuous and nondecreasing in t, so the best affordable
    target is found by rational bisection.

Cost linear in (factor - 1) is a modelling choice; nothing here depends on
it beyond the cost function itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .model import (
    Multiplier,
    Pipeline,
    RationalInput,
    as_fraction,
    bottleneck_report,
    perturbed_throughput,
    throughput,
)


class TiedBottleneckError(ValueError):
    """trivial_allocation requires a unique bottleneck."""


class CostModelError(ValueError):
    """A cost model violates its invariants or does not match the pipeline."""


@dataclass(frozen=True)
class CostModel:
    """Positive per-stage unit costs (per unit of factor above 1) and a
    nonnegative total budget."""

    unit_cost: Mapping[str, Fraction]
    budget: Fraction

    def __init__(self, unit_cost: Mapping[str, RationalInput],
                 budget: RationalInput):
        costs = {s: as_fraction(c) for s, c in unit_cost.items()}
        bad = sorted(s for s, c in costs.items() if c <= 0)
        if bad:
            raise CostModelError(f"unit costs must be > 0; offending: {bad}")
        b = as_fraction(budget)
        if b < 0:
            raise CostModelError(f"budget {b} must be >= 0")
        object.__setattr__(self, "unit_cost", costs)
        object.__setattr__(self, "budget", b)

    @classmethod
    def uniform(cls, p: Pipeline, budget: RationalInput,
                unit_cost: RationalInput = 1) -> "CostModel":
        return cls({s: unit_cost for s in p.stages}, budget)


@dataclass(frozen=True)
class AllocationResult:
    multiplier: Multiplier
    achieved_throughput: Fraction
    spent: Fraction


def _check_domain(p: Pipeline, c: CostModel) -> None:
    if set(c.unit_cost) != set(p.stages):
        raise CostModelError("cost model domain must equal the stage set")


def trivial_allocation(p: Pipeline, c: CostModel) -> AllocationResult:
    """Spend the whole budget on the unique bottleneck, capped at the point
    where it would pass the second-smallest capacity.  Budget past the cap
    is left unspent; spending beyond migration is the max-min allocator's
    job."""
    _check_domain(p, c)
    rep = bottleneck_report(p)
    if len(rep.bottlenecks) != 1:
        raise TiedBottleneckError(
            f"bottlenecks {sorted(rep.bottlenecks)} are tied; improving all "
            "but one of them changes nothing — use maxmin_allocation"
        )
    b = rep.bottlenecks[0]
    cap_b = p.capacity[b]
    uncapped = 1 + c.budget / c.unit_cost[b]
    if rep.non_bottlenecks:
        second = min(p.capacity[s] for s in rep.non_bottlenecks)
        factor_b = min(uncapped, second / cap_b)
    else:
        factor_b = uncapped
    spent = c.unit_cost[b] * (factor_b - 1)
    mult = Multiplier(
        {s: factor_b if s == b else Fraction(1) for s in p.stages}
    )
    return AllocationResult(
        multiplier=mult,
        achieved_throughput=perturbed_throughput(p, mult),
        spent=spent,
    )


def _required_cost(p: Pipeline, c: CostModel, target: Fraction) -> Fraction:
    """Cost of the cheapest multiplier reaching throughput >= target."""
    total = Fraction(0)
    for s in p.stages:
        shortfall = target / p.capacity[s] - 1
        if shortfall > 0:
            total += c.unit_cost[s] * shortfall
    return total


def _multiplier_for_target(p: Pipeline, target: Fraction) -> Multiplier:
    return Multiplier(
        {s: max(Fraction(1), target / p.capacity[s]) for s in p.stages}
    )


def maxmin_allocation(
    p: Pipeline, c: CostModel, tolerance: RationalInput
) -> AllocationResult:
    """Maximise the post-improvement throughput under the budget.

    Bisects on the target throughput between the current throughput and the
    hard upper bound min over v of c(v) * (1 + budget / unit_cost(v)) — no
    stage's factor can cost more than the whole budget, so no target above
    that bound is affordable.  Terminates when the bracket is narrower than
    `tolerance` and returns the exact cheapest multiplier for the bracket's
    feasible lower endpoint, so the result is always within budget.
    """
    _check_domain(p, c)
    tolerance = as_fraction(tolerance)
    if tolerance <= 0:
        raise ValueError(f"tolerance {tolerance} must be > 0")

    lo = throughput(p)
    hi = min(
        p.capacity[s] * (1 + c.budget / c.unit_cost[s]) for s in p.stages
    )
    if _required_cost(p, c, hi) <= c.budget:
        lo = hi
    else:
        # invariant: cost(lo) <= budget < cost(hi)
        while hi - lo > tolerance:
            mid = (lo + hi) / 2
            if _required_cost(p, c, mid) <= c.budget:
                lo = mid
            else:
                hi = mid

    mult = _multiplier_for_target(p, lo)
    return AllocationResult(
        multiplier=mult,
        achieved_throughput=perturbed_throughput(p, mult),
        spent=_required_cost(p, c, lo),
    )
