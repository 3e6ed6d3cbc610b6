"""Seeded random instance generation and the randomized verification driver.

Every generated object is a pure function of (seed, index): the generator
is CPython's Mersenne Twister (`random.Random`) seeded with the text
"{seed}:{index}" (plus a label for auxiliary draws), which the `random`
module documents as a stable, platform-independent seeding rule.  Replaying
a (seed, index) pair therefore reproduces an instance exactly, and
independent instances could be generated by parallel workers with no shared
state.

`verify_all` drives every equivalence and bound check in the library across
the generated instances and tallies results per check.  A counterexample —
which would indicate an implementation bug, since the underlying facts are
proved — carries its (seed, index) for exact replay.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .adversarial import PipePair, defender_misses_bottleneck, ratio_report
from .ceiling import (
    AuthoritySpec,
    ceiling,
    generalized_ceiling,
    is_h_admissible,
    tightness_witness,
)
from .characterize import verify_characterizations
from .falsepos import (
    ConstantPrecision,
    FixedFractionModel,
    RationalDecayPrecision,
    decline_check,
    plateau_check,
)
from .model import (
    Multiplier,
    Pipeline,
    perturbed_throughput,
    throughput,
)

DEFAULT_CAPACITY_GRID = tuple(Fraction(i) for i in range(1, 11))
# factor 1 listed twice: ties kept at factor 1 are the interesting case
DEFAULT_FACTOR_GRID = (
    Fraction(1),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(5),
)


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    instance_count: int = 10_000
    max_stages: int = 8
    capacity_grid: tuple[Fraction, ...] = DEFAULT_CAPACITY_GRID
    factor_grid: tuple[Fraction, ...] = DEFAULT_FACTOR_GRID

    def __post_init__(self):
        if self.instance_count < 0:
            raise ValueError("instance_count must be >= 0")
        if self.max_stages < 1:
            raise ValueError("max_stages must be >= 1")
        if not self.capacity_grid or not self.factor_grid:
            raise ValueError("grids must be nonempty")
        if any(c <= 0 for c in self.capacity_grid):
            raise ValueError("capacity grid values must be > 0")
        if Fraction(1) not in self.factor_grid:
            raise ValueError(
                "factor grid must contain 1 so invariance cases are generated"
            )
        if any(f < 1 for f in self.factor_grid):
            raise ValueError("factor grid values must be >= 1")


def _rng(cfg: GeneratorConfig, index: int, label: str = "") -> random.Random:
    return random.Random(f"{cfg.seed}:{index}:{label}")


def _random_pipeline(rng: random.Random, cfg: GeneratorConfig) -> Pipeline:
    n = rng.randint(1, cfg.max_stages)
    stages = tuple(f"s{i + 1}" for i in range(n))
    return Pipeline(stages, {s: rng.choice(cfg.capacity_grid) for s in stages})


def _random_multiplier(rng: random.Random, cfg: GeneratorConfig,
                       p: Pipeline) -> Multiplier:
    return Multiplier({s: rng.choice(cfg.factor_grid) for s in p.stages})


def generate_instance(cfg: GeneratorConfig, index: int) -> tuple[Pipeline, Multiplier]:
    """Deterministic instance number `index` under `cfg`."""
    rng = _rng(cfg, index)
    p = _random_pipeline(rng, cfg)
    return p, _random_multiplier(rng, cfg, p)


def generate_dominating(cfg: GeneratorConfig, index: int,
                        a: Multiplier) -> Multiplier:
    """A multiplier that dominates `a` stagewise (each factor scaled by a
    further grid draw)."""
    rng = _rng(cfg, index, "dominate")
    return Multiplier(
        {s: f * rng.choice(cfg.factor_grid) for s, f in a.factor.items()}
    )


def generate_authority(cfg: GeneratorConfig, index: int,
                       p: Pipeline) -> AuthoritySpec:
    """Random nonempty pinned subset of p's stages (sometimes all of them)."""
    rng = _rng(cfg, index, "authority")
    k = rng.randint(1, len(p.stages))
    return AuthoritySpec(rng.sample(list(p.stages), k))


def pin_to_authority(a: Multiplier, h: AuthoritySpec) -> Multiplier:
    """Force factor 1 on the pinned stages, leaving the rest of `a` alone."""
    return Multiplier(
        {s: Fraction(1) if s in h.human_stages else f
         for s, f in a.factor.items()}
    )


def generate_pair(
    cfg: GeneratorConfig, index: int
) -> tuple[PipePair, Multiplier, Multiplier]:
    """Attacker instance `index` paired with an independent defender drawn
    from an auxiliary stream of the same (seed, index)."""
    attacker, a_mult = generate_instance(cfg, index)
    rng = _rng(cfg, index, "defender")
    defender = _random_pipeline(rng, cfg)
    d_mult = _random_multiplier(rng, cfg, defender)
    return PipePair(attacker, defender), a_mult, d_mult


def generate_fp_model(
    cfg: GeneratorConfig, index: int
) -> tuple[FixedFractionModel, list[Fraction]]:
    """Random fixed-fraction model plus sample rates above its capacity."""
    rng = _rng(cfg, index, "falsepos")
    model = FixedFractionModel(
        Fraction(rng.randint(0, 9), 10), rng.choice(cfg.capacity_grid)
    )
    c_inv = model.investigation_capacity
    samples = sorted(
        c_inv + Fraction(rng.randint(1, 1000), rng.randint(1, 10))
        for _ in range(5)
    )
    return model, samples


@dataclass(frozen=True)
class Counterexample:
    check: str
    seed: int
    index: int
    message: str


@dataclass(frozen=True)
class HarnessVerdict:
    seed: int
    count: int
    checks: dict  # check name -> number of instances it ran on
    counterexamples: tuple[Counterexample, ...]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _check_ceiling(p: Pipeline, a: Multiplier,
                   h: AuthoritySpec) -> list[str]:
    failures = []
    pinned = pin_to_authority(a, h)
    if not is_h_admissible(pinned, h):
        failures.append("pinned multiplier not recognised as authority-admissible")
    cap = ceiling(p, h)
    if perturbed_throughput(p, pinned) > cap:
        failures.append(
            f"pinned throughput {perturbed_throughput(p, pinned)} exceeds "
            f"ceiling {cap}"
        )
    witness = tightness_witness(p, h)
    if not is_h_admissible(witness, h):
        failures.append("tightness witness is not authority-admissible")
    achieved = perturbed_throughput(p, witness)
    if achieved != cap:
        failures.append(f"witness achieves {achieved}, ceiling is {cap}")
    machine = [s for s in p.stages if s not in h.human_stages]
    if machine and any(
        witness.factor[s] * p.capacity[s] <= cap for s in machine
    ):
        failures.append("witness leaves a non-pinned stage at or below the ceiling")
    # with all-ones assist bounds the generalised bound reduces to the ceiling
    ones = AuthoritySpec(
        h.human_stages, {s: Fraction(1) for s in h.human_stages}
    )
    if generalized_ceiling(p, ones) != cap:
        failures.append("all-ones assist bounds do not reduce to the ceiling")
    return failures


def _check_adversarial(pair: PipePair, aA: Multiplier,
                       aD: Multiplier) -> list[str]:
    failures = []
    rep = ratio_report(pair, aA, aD)  # raises if the two sides disagree
    # independent recomputation of both sides of the equivalence
    ta, td = throughput(pair.attacker), throughput(pair.defender)
    ta_new = perturbed_throughput(pair.attacker, aA)
    td_new = perturbed_throughput(pair.defender, aD)
    lhs = (ta_new / td_new) > (ta / td)  # ratio side
    rhs = (ta_new / ta) > (td_new / td)  # gain side
    if rep.favours_attacker != lhs or lhs != rhs:
        failures.append("ratio/gain equivalence violated on recomputation")
    if rep.baseline_ratio <= 0 or rep.perturbed_ratio <= 0:
        failures.append("ratios must be strictly positive")
    if defender_misses_bottleneck(pair, aA, aD) and not rep.favours_attacker:
        failures.append(
            "defender missed its bottleneck yet the ratio did not move "
            "in the attacker's favour"
        )
    return failures


def _check_falsepos(model: FixedFractionModel,
                    samples: list[Fraction]) -> list[str]:
    failures = []
    if not plateau_check(model, samples).passed:
        failures.append("fixed-fraction plateau violated")
    distinct = sorted(set(samples))
    if len(distinct) >= 2:
        decay = RationalDecayPrecision(Fraction(1, 10))
        if not decline_check(
            decay, model.investigation_capacity, distinct
        ).passed:
            failures.append("rational-decay decline violated")
        const = ConstantPrecision(1 - model.false_positive_fraction)
        verdict = decline_check(const, model.investigation_capacity, distinct)
        if not verdict.passed or verdict.mode != "constant":
            failures.append("constant precision did not stay constant")
    return failures


def verify_instance(cfg: GeneratorConfig, index: int) -> dict[str, list[str]]:
    """All checks for one instance; maps check name to its failures."""
    p, a = generate_instance(cfg, index)
    results: dict[str, list[str]] = {}

    verdict = verify_characterizations(p, a)
    results["characterizations"] = list(verdict.failures)

    failures = []
    dominating = generate_dominating(cfg, index, a)
    t_a = perturbed_throughput(p, a)
    if t_a > perturbed_throughput(p, dominating):
        failures.append("throughput not monotone under stagewise domination")
    if t_a < throughput(p):
        failures.append("throughput decreased under an admissible multiplier")
    results["monotonicity"] = failures

    results["ceiling"] = _check_ceiling(p, a, generate_authority(cfg, index, p))

    pair, aA, aD = generate_pair(cfg, index)
    results["adversarial"] = _check_adversarial(pair, aA, aD)

    model, samples = generate_fp_model(cfg, index)
    results["falsepos"] = _check_falsepos(model, samples)

    return results


def verify_all(cfg: GeneratorConfig) -> HarnessVerdict:
    checks: dict[str, int] = {}
    counterexamples: list[Counterexample] = []
    for index in range(cfg.instance_count):
        for name, failures in verify_instance(cfg, index).items():
            checks[name] = checks.get(name, 0) + 1
            for message in failures:
                counterexamples.append(
                    Counterexample(
                        check=name, seed=cfg.seed, index=index, message=message
                    )
                )
    return HarnessVerdict(
        seed=cfg.seed,
        count=cfg.instance_count,
        checks=checks,
        counterexamples=tuple(counterexamples),
    )


def structured_report(verdict: HarnessVerdict) -> str:
    """Canonical machine-readable form; identical configs give identical
    bytes."""
    payload = {
        "seed": verdict.seed,
        "count": verdict.count,
        "passed": verdict.passed,
        "checks": dict(sorted(verdict.checks.items())),
        "counterexamples": [
            {
                "check": ce.check,
                "seed": ce.seed,
                "index": ce.index,
                "message": ce.message,
            }
            for ce in verdict.counterexamples
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def text_report(verdict: HarnessVerdict) -> str:
    lines = [
        f"verified {verdict.count} instances (seed {verdict.seed})",
    ]
    for name, n in sorted(verdict.checks.items()):
        lines.append(f"  {name}: {n} instances checked")
    if verdict.passed:
        lines.append("all checks passed")
    else:
        lines.append(f"{len(verdict.counterexamples)} counterexample(s):")
        for ce in verdict.counterexamples[:20]:
            lines.append(
                f"  [{ce.check}] seed={ce.seed} index={ce.index}: {ce.message}"
            )
    return "\n".join(lines) + "\n"
