"""Scalar useful-throughput models for alert triage.

Two models of the rate of usefully processed alerts as a function of the
incoming alert rate:

  * fixed fraction: a constant share of alerts is noise, and investigation
    saturates at a fixed capacity.  Above saturation the useful rate is a
    plateau, exactly (1 - fraction) * capacity: it never declines.
  * rate-dependent precision: the share of true positives is a function of
    the rate.  When that precision function is strictly decreasing above
    the investigation capacity, the useful rate genuinely declines there;
    a constant precision collapses back to the plateau.

These models are deliberately decoupled from the pipeline types; linking
an alert rate to a pipeline stage is an interpretation made by callers,
never by this module.

All families except exponential decay evaluate exactly in rational
arithmetic.  Exponential decay is evaluated at 34 significant decimal
digits (decimal128 precision); its strict-decline checks avoid rounding
entirely by comparing exponents, which is exact.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

from .model import RationalInput, as_fraction

# evaluation context for the one non-rational family
_DEC = decimal.Context(prec=34)


class DomainError(ValueError):
    """A model was queried outside its domain."""


class ModelValidationError(ValueError):
    """A model's parameters violate its invariants."""


def _to_decimal(x: Fraction) -> Decimal:
    return _DEC.divide(Decimal(x.numerator), Decimal(x.denominator))


@dataclass(frozen=True)
class FixedFractionModel:
    """Constant false-positive fraction in [0, 1) and a positive
    investigation capacity."""

    false_positive_fraction: Fraction
    investigation_capacity: Fraction

    def __init__(self, false_positive_fraction: RationalInput,
                 investigation_capacity: RationalInput):
        f = as_fraction(false_positive_fraction)
        c = as_fraction(investigation_capacity)
        if not 0 <= f < 1:
            raise ModelValidationError(f"fraction {f} outside [0, 1)")
        if c <= 0:
            raise ModelValidationError(f"investigation capacity {c} must be > 0")
        object.__setattr__(self, "false_positive_fraction", f)
        object.__setattr__(self, "investigation_capacity", c)


def simple_useful(lam: RationalInput, m: FixedFractionModel) -> Fraction:
    """(1 - fraction) * min(rate, capacity), exactly."""
    lam = as_fraction(lam)
    if lam <= 0:
        raise DomainError(f"rate {lam} must be > 0")
    return (1 - m.false_positive_fraction) * min(lam, m.investigation_capacity)


@dataclass(frozen=True)
class PlateauVerdict:
    passed: bool
    common_value: Fraction
    samples_checked: int


def plateau_check(m: FixedFractionModel, lambdas) -> PlateauVerdict:
    """Assert the post-saturation plateau: every sample rate strictly above
    the investigation capacity must map to exactly
    (1 - fraction) * capacity.  A failure is an implementation bug."""
    samples = [as_fraction(x) for x in lambdas]
    low = [x for x in samples if x <= m.investigation_capacity]
    if low:
        raise DomainError(
            f"samples must exceed the investigation capacity; got {low[:3]}"
        )
    expected = (1 - m.false_positive_fraction) * m.investigation_capacity
    ok = all(simple_useful(x, m) == expected for x in samples)
    return PlateauVerdict(passed=ok, common_value=expected,
                          samples_checked=len(samples))


# --- precision-function families -------------------------------------------


@dataclass(frozen=True)
class ConstantPrecision:
    """p(rate) = level for all rates; level in [0, 1]."""

    level: Fraction

    def __init__(self, level: RationalInput):
        f = as_fraction(level)
        if not 0 <= f <= 1:
            raise ModelValidationError(f"precision level {f} outside [0, 1]")
        object.__setattr__(self, "level", f)

    def value(self, lam: Fraction) -> Fraction:
        return self.level

    def strictly_decreasing_above(self, c_inv: Fraction) -> bool:
        return False


@dataclass(frozen=True)
class RationalDecayPrecision:
    """p(rate) = 1 / (1 + k * rate) with k > 0; exact and strictly
    decreasing everywhere on the positive axis."""

    rate_coefficient: Fraction

    def __init__(self, rate_coefficient: RationalInput):
        k = as_fraction(rate_coefficient)
        if k <= 0:
            raise ModelValidationError(f"decay coefficient {k} must be > 0")
        object.__setattr__(self, "rate_coefficient", k)

    def value(self, lam: Fraction) -> Fraction:
        return Fraction(1) / (1 + self.rate_coefficient * lam)

    def strictly_decreasing_above(self, c_inv: Fraction) -> bool:
        return True


@dataclass(frozen=True)
class ExponentialDecayPrecision:
    """p(rate) = exp(-k * rate) with k > 0.

    Values are computed at decimal128 precision.  Order comparisons between
    two evaluations are done on the exponents -k * rate, which is exact:
    exp is strictly increasing, so exp(a) > exp(b) iff a > b.
    """

    rate_coefficient: Fraction

    def __init__(self, rate_coefficient: RationalInput):
        k = as_fraction(rate_coefficient)
        if k <= 0:
            raise ModelValidationError(f"decay coefficient {k} must be > 0")
        object.__setattr__(self, "rate_coefficient", k)

    def value(self, lam: Fraction) -> Decimal:
        return _DEC.exp(_to_decimal(-self.rate_coefficient * lam))

    def compare(self, lam1: Fraction, lam2: Fraction) -> int:
        """Sign of p(lam1) - p(lam2), computed exactly via the exponents."""
        e1 = -self.rate_coefficient * lam1
        e2 = -self.rate_coefficient * lam2
        return (e1 > e2) - (e1 < e2)

    def strictly_decreasing_above(self, c_inv: Fraction) -> bool:
        return True


@dataclass(frozen=True)
class TablePrecision:
    """Empirical precision curve: sorted (rate, precision) breakpoints with
    exact linear interpolation between them.  Queries outside the breakpoint
    span are a domain error."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __init__(self, points):
        pts = tuple(
            (as_fraction(lam), as_fraction(p)) for lam, p in points
        )
        if len(pts) < 2:
            raise ModelValidationError("table needs at least two breakpoints")
        for (l1, _), (l2, _) in zip(pts, pts[1:]):
            if l2 <= l1:
                raise ModelValidationError(
                    "table breakpoints must be strictly increasing in rate"
                )
        bad = [p for _, p in pts if not 0 <= p <= 1]
        if bad:
            raise ModelValidationError(f"table precisions outside [0, 1]: {bad}")
        object.__setattr__(self, "points", pts)

    @property
    def span(self) -> tuple[Fraction, Fraction]:
        return self.points[0][0], self.points[-1][0]

    def value(self, lam: Fraction) -> Fraction:
        lo, hi = self.span
        if not lo <= lam <= hi:
            raise DomainError(f"rate {lam} outside table span [{lo}, {hi}]")
        for (l1, p1), (l2, p2) in zip(self.points, self.points[1:]):
            if l1 <= lam <= l2:
                return p1 + (p2 - p1) * (lam - l1) / (l2 - l1)
        raise AssertionError("unreachable: span check passed")

    def strictly_decreasing_above(self, c_inv: Fraction) -> bool:
        """Consecutive breakpoint values must strictly decrease on the part
        of the span above c_inv."""
        relevant = [(l, p) for l, p in self.points if l > c_inv]
        return all(p1 > p2 for (_, p1), (_, p2) in zip(relevant, relevant[1:]))


PrecisionFunction = Union[
    ConstantPrecision,
    RationalDecayPrecision,
    ExponentialDecayPrecision,
    TablePrecision,
]


def repaired_useful(
    lam: RationalInput, p: PrecisionFunction, c_inv: RationalInput
):
    """p(rate) * min(rate, capacity).  Exact (a Fraction) for every family
    except exponential decay, which returns a decimal128 value."""
    lam = as_fraction(lam)
    c_inv = as_fraction(c_inv)
    if lam <= 0:
        raise DomainError(f"rate {lam} must be > 0")
    if c_inv <= 0:
        raise DomainError(f"investigation capacity {c_inv} must be > 0")
    effective = min(lam, c_inv)
    val = p.value(lam)
    if isinstance(val, Decimal):
        return _DEC.multiply(val, _to_decimal(effective))
    return val * effective


@dataclass(frozen=True)
class DeclineVerdict:
    passed: bool
    mode: str  # "strict_decline" or "constant"
    values: tuple


def decline_check(
    p: PrecisionFunction, c_inv: RationalInput, lambdas
) -> DeclineVerdict:
    """Assert strict decline of the repaired model across increasing sample
    rates above the investigation capacity; for the constant family, assert
    exact constancy instead.  A failure is an implementation bug."""
    c_inv = as_fraction(c_inv)
    samples = [as_fraction(x) for x in lambdas]
    if any(x2 <= x1 for x1, x2 in zip(samples, samples[1:])):
        raise DomainError("samples must be strictly increasing")
    low = [x for x in samples if x <= c_inv]
    if low:
        raise DomainError(
            f"samples must exceed the investigation capacity; got {low[:3]}"
        )

    if isinstance(p, ConstantPrecision):
        values = tuple(repaired_useful(x, p, c_inv) for x in samples)
        ok = all(v == values[0] for v in values)
        return DeclineVerdict(passed=ok, mode="constant", values=values)

    if not p.strictly_decreasing_above(c_inv):
        raise ModelValidationError(
            "precision function is not strictly decreasing above the "
            "investigation capacity"
        )

    if isinstance(p, ExponentialDecayPrecision):
        # exact route: above saturation the useful value is p(rate) * c_inv,
        # so ordering reduces to the exponent comparison
        ok = all(
            p.compare(x1, x2) > 0 for x1, x2 in zip(samples, samples[1:])
        )
        values = tuple(repaired_useful(x, p, c_inv) for x in samples)
        return DeclineVerdict(passed=ok, mode="strict_decline", values=values)

    values = tuple(repaired_useful(x, p, c_inv) for x in samples)
    ok = all(v1 > v2 for v1, v2 in zip(values, values[1:]))
    return DeclineVerdict(passed=ok, mode="strict_decline", values=values)
