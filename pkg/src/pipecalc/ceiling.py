"""Throughput ceilings imposed by stages that cannot be accelerated.

If a nonempty set of stages H is pinned to factor 1 (human-authority
stages), no admissible perturbation can push throughput past the smallest
capacity in H.  The bound is tight: `tightness_witness` builds an explicit
multiplier achieving it exactly, by raising every non-pinned stage far
enough that none of them can be the minimum.

The assist-bound variant (each pinned stage allowed a factor up to a given
bound) yields the analogous bound min over H of bound * capacity; it is
reported as an upper bound only, with no tightness construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .model import (
    Multiplier,
    Pipeline,
    RationalInput,
    as_fraction,
    check_admissible,
)


class UndefinedCeilingError(ValueError):
    """The ceiling requires a nonempty pinned stage set."""


class ConfigurationError(ValueError):
    """An authority spec lacks data required by the requested operation."""


@dataclass(frozen=True)
class AuthoritySpec:
    """A set of pinned stages, optionally with per-stage assist bounds.

    When `assist_bound` is present its domain must equal `human_stages` and
    every bound must be >= 1.
    """

    human_stages: frozenset[str]
    assist_bound: Optional[Mapping[str, Fraction]] = None

    def __init__(
        self,
        human_stages,
        assist_bound: Optional[Mapping[str, RationalInput]] = None,
    ):
        stages = frozenset(human_stages)
        bounds = None
        if assist_bound is not None:
            bounds = {s: as_fraction(b) for s, b in assist_bound.items()}
            if set(bounds) != stages:
                raise ConfigurationError(
                    "assist bounds must cover exactly the pinned stages"
                )
            low = sorted(s for s, b in bounds.items() if b < 1)
            if low:
                raise ConfigurationError(f"assist bounds below 1: {low}")
        object.__setattr__(self, "human_stages", stages)
        object.__setattr__(self, "assist_bound", bounds)


def _require_nonempty(p: Pipeline, h: AuthoritySpec) -> None:
    if not h.human_stages:
        raise UndefinedCeilingError("pinned stage set is empty")
    unknown = sorted(h.human_stages - set(p.stages))
    if unknown:
        raise ConfigurationError(f"pinned stages not in pipeline: {unknown}")


def ceiling(p: Pipeline, h: AuthoritySpec) -> Fraction:
    """Smallest capacity among the pinned stages.  Upper-bounds the
    throughput of every perturbation that leaves the pinned stages at
    factor 1."""
    _require_nonempty(p, h)
    return min(p.capacity[s] for s in h.human_stages)


def is_h_admissible(a: Multiplier, h: AuthoritySpec) -> bool:
    """True iff every pinned stage keeps factor exactly 1."""
    return all(a.factor.get(s) == 1 for s in h.human_stages)


def tightness_witness(p: Pipeline, h: AuthoritySpec) -> Multiplier:
    """Multiplier that pins H at 1 and achieves the ceiling exactly.

    Non-pinned stages all get the integer factor
    N = ceil(ceiling / min non-pinned capacity) + 1, which pushes each of
    their perturbed capacities strictly above the ceiling; the minimum is
    then attained on H.  If every stage is pinned, the identity is the only
    choice and already attains the ceiling.
    """
    _require_nonempty(p, h)
    machine = [s for s in p.stages if s not in h.human_stages]
    if not machine:
        return Multiplier.identity(p)
    cap_h = ceiling(p, h)
    machine_min = min(p.capacity[s] for s in machine)
    n = math.ceil(cap_h / machine_min) + 1
    factor = {
        s: Fraction(n) if s in set(machine) else Fraction(1) for s in p.stages
    }
    witness = Multiplier(factor)
    check_admissible(p, witness)
    return witness


def generalized_ceiling(p: Pipeline, h: AuthoritySpec) -> Fraction:
    """Bound under assist limits: min over pinned stages of bound * capacity.

    This is an upper bound only; no witness construction is provided, so
    reports should label it "bound only".  With all bounds equal to 1 it
    coincides with `ceiling`.
    """
    _require_nonempty(p, h)
    if h.assist_bound is None:
        raise ConfigurationError("generalized ceiling requires assist bounds")
    return min(h.assist_bound[s] * p.capacity[s] for s in h.human_stages)
