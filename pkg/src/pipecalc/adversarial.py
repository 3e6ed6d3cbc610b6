"""Attacker/defender throughput comparison.

Two independent pipelines are compared through their throughput ratio.  The
ratio moves in the attacker's favour exactly when the attacker's relative
throughput gain exceeds the defender's; `ratio_report` computes both sides
of that equivalence independently and refuses to return a report in which
they disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    AdmissibilityError,
    Multiplier,
    Pipeline,
    check_admissible,
    perturbed_throughput,
    throughput,
)


class InternalCheckError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class PipePair:
    """Independent attacker and defender pipelines.  Their stage sets are
    unrelated; no coupling between the two is modelled."""

    attacker: Pipeline
    defender: Pipeline


@dataclass(frozen=True)
class RatioReport:
    """Baseline and perturbed attacker/defender ratios plus per-side
    relative gains.  All four quantities are exact and strictly positive."""

    baseline_ratio: Fraction
    perturbed_ratio: Fraction
    attacker_gain: Fraction
    defender_gain: Fraction
    favours_attacker: bool


def _check_side(p: Pipeline, a: Multiplier, side: str) -> None:
    try:
        check_admissible(p, a)
    except AdmissibilityError as exc:
        raise AdmissibilityError(f"{side} multiplier: {exc}") from None


def ratio_report(pair: PipePair, aA: Multiplier, aD: Multiplier) -> RatioReport:
    _check_side(pair.attacker, aA, "attacker")
    _check_side(pair.defender, aD, "defender")

    ta = throughput(pair.attacker)
    td = throughput(pair.defender)
    ta_new = perturbed_throughput(pair.attacker, aA)
    td_new = perturbed_throughput(pair.defender, aD)

    baseline = ta / td
    perturbed = ta_new / td_new
    gain_a = ta_new / ta
    gain_d = td_new / td

    # both formulations of "favours the attacker" must agree exactly
    by_ratio = perturbed > baseline
    by_gain = gain_a > gain_d
    if by_ratio != by_gain:
        raise InternalCheckError(
            f"ratio comparison {perturbed} > {baseline} is {by_ratio} but "
            f"gain comparison {gain_a} > {gain_d} is {by_gain}"
        )

    return RatioReport(
        baseline_ratio=baseline,
        perturbed_ratio=perturbed,
        attacker_gain=gain_a,
        defender_gain=gain_d,
        favours_attacker=by_ratio,
    )


def defender_misses_bottleneck(
    pair: PipePair, aA: Multiplier, aD: Multiplier
) -> bool:
    """True iff the attacker improves every one of its bottlenecks while the
    defender leaves some bottleneck of its own at factor 1.  In that case
    the ratio necessarily moves in the attacker's favour."""
    _check_side(pair.attacker, aA, "attacker")
    _check_side(pair.defender, aD, "defender")

    ta = throughput(pair.attacker)
    td = throughput(pair.defender)
    attacker_all = all(
        aA.factor[s] > 1
        for s in pair.attacker.stages
        if pair.attacker.capacity[s] == ta
    )
    defender_some = any(
        aD.factor[s] == 1
        for s in pair.defender.stages
        if pair.defender.capacity[s] == td
    )
    return attacker_all and defender_some
