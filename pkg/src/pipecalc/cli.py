"""Command-line surface.

Subcommands:
  analyze   throughput and bottleneck report for a pipeline document
  perturb   classification, preservation, and migration for a scenario
  ceiling   authority ceiling, tightness witness, and assist-bound variant
  compare   attacker/defender ratio report for a document pair
  fp        plateau and decline checks for a configured scalar model
  plan      budgeted allocation (trivial and max-min)
  verify    randomized verification harness over seeded instances

Exit status: 0 success, 1 validation or usage error, 2 internal
verification counterexample.  Structured output renders every rational as
exact "num/den" (or integer) text, never as a decimal approximation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import harness
from .adversarial import InternalCheckError, PipePair, ratio_report
from .ceiling import (
    ceiling as ceiling_value,
    generalized_ceiling,
    tightness_witness,
)
from .characterize import (
    classify,
    migration_decomposition,
    preservation_report,
)
from .documents import DocumentError, load_document
from .falsepos import (
    ConstantPrecision,
    ExponentialDecayPrecision,
    FixedFractionModel,
    RationalDecayPrecision,
    TablePrecision,
    decline_check,
    plateau_check,
    repaired_useful,
    simple_useful,
)
from .model import (
    AdmissibilityError,
    PipelineValidationError,
    bottleneck_report,
    perturbed_throughput,
    throughput,
)
from .planner import CostModel, TiedBottleneckError, maxmin_allocation, trivial_allocation


def _frac(x) -> str:
    return str(x)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_analyze(args) -> int:
    doc = load_document(args.file)
    rep = bottleneck_report(doc.pipeline)
    payload = {
        "pipeline": doc.name,
        "throughput": _frac(rep.throughput),
        "bottlenecks": list(rep.bottlenecks),
        "non_bottlenecks": list(rep.non_bottlenecks),
    }
    _emit(args, payload, [
        f"pipeline: {doc.name or args.file}",
        f"throughput: {rep.throughput}",
        f"bottlenecks: {', '.join(rep.bottlenecks)}",
        f"non-bottlenecks: {', '.join(rep.non_bottlenecks) or '(none)'}",
    ])
    return 0


def _cmd_perturb(args) -> int:
    doc = load_document(args.file)
    mult = doc.scenario(args.scenario)
    cls = classify(doc.pipeline, mult)
    pres = preservation_report(doc.pipeline, mult)
    migr = migration_decomposition(doc.pipeline, mult)
    payload = {
        "scenario": args.scenario or "(identity)",
        "outcome": cls.outcome.value,
        "base_throughput": _frac(cls.base_throughput),
        "new_throughput": _frac(cls.new_throughput),
        "witness": cls.witness,
        "preserved": pres.preserved,
        "condition_i": pres.condition_i,
        "condition_ii": pres.condition_ii,
        "common_factor": None if pres.common_factor is None else _frac(pres.common_factor),
        "departed": list(migr.departed),
        "entered": list(migr.entered),
    }
    lines = [
        f"scenario: {args.scenario or '(identity)'}",
        f"outcome: {cls.outcome.value}",
        f"throughput: {cls.base_throughput} -> {cls.new_throughput}",
    ]
    if cls.witness is not None:
        lines.append(f"unchanged because bottleneck {cls.witness!r} kept factor 1")
    lines.append(
        f"bottleneck set preserved: {pres.preserved} "
        f"(common factor on bottlenecks: {pres.condition_i}, "
        f"separation below others: {pres.condition_ii})"
    )
    if migr.departed or migr.entered:
        lines.append(
            f"migration: departed {list(migr.departed)}, entered {list(migr.entered)}"
        )
    else:
        lines.append("migration: none")
    _emit(args, payload, lines)
    return 0


def _cmd_ceiling(args) -> int:
    doc = load_document(args.file)
    if doc.authority is None:
        raise DocumentError("document has no authority section")
    h = doc.authority
    cap = ceiling_value(doc.pipeline, h)
    witness = tightness_witness(doc.pipeline, h)
    achieved = perturbed_throughput(doc.pipeline, witness)
    payload = {
        "ceiling": _frac(cap),
        "witness": {s: _frac(f) for s, f in sorted(witness.factor.items())},
        "witness_throughput": _frac(achieved),
    }
    lines = [
        f"pinned stages: {', '.join(sorted(h.human_stages))}",
        f"ceiling: {cap}",
        "witness factors: "
        + ", ".join(f"{s}={f}" for s, f in sorted(witness.factor.items())),
        f"witness throughput: {achieved} (achieves the ceiling exactly)",
    ]
    if h.assist_bound is not None:
        gen = generalized_ceiling(doc.pipeline, h)
        payload["generalized_ceiling"] = _frac(gen)
        lines.append(f"assist-bound ceiling (bound only): {gen}")
    _emit(args, payload, lines)
    return 0


def _cmd_compare(args) -> int:
    atk = load_document(args.attacker)
    dfn = load_document(args.defender)
    pair = PipePair(atk.pipeline, dfn.pipeline)
    rep = ratio_report(
        pair, atk.scenario(args.scenario), dfn.scenario(args.scenario)
    )
    payload = {
        "baseline_ratio": _frac(rep.baseline_ratio),
        "perturbed_ratio": _frac(rep.perturbed_ratio),
        "attacker_gain": _frac(rep.attacker_gain),
        "defender_gain": _frac(rep.defender_gain),
        "favours_attacker": rep.favours_attacker,
    }
    _emit(args, payload, [
        f"baseline ratio:  {rep.baseline_ratio}",
        f"perturbed ratio: {rep.perturbed_ratio}",
        f"attacker gain:   {rep.attacker_gain}",
        f"defender gain:   {rep.defender_gain}",
        f"favours attacker: {rep.favours_attacker}",
    ])
    return 0


_PRECISION_FAMILIES = {
    "constant": lambda cfg: ConstantPrecision(cfg["level"]),
    "rational_decay": lambda cfg: RationalDecayPrecision(cfg["coefficient"]),
    "exponential_decay": lambda cfg: ExponentialDecayPrecision(cfg["coefficient"]),
    "table": lambda cfg: TablePrecision(cfg["points"]),
}


def _cmd_fp(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read model file: {exc}") from None

    payload: dict = {}
    lines: list[str] = []
    status = 0

    if "fixed_fraction" in cfg:
        ff = cfg["fixed_fraction"]
        model = FixedFractionModel(
            ff["false_positive_fraction"], ff["investigation_capacity"]
        )
        samples = [Fraction(s) for s in cfg.get("samples", [])]
        above = [s for s in samples if s > model.investigation_capacity]
        verdict = plateau_check(model, above)
        payload["plateau"] = {
            "passed": verdict.passed,
            "common_value": _frac(verdict.common_value),
            "samples_checked": verdict.samples_checked,
        }
        lines.append(
            f"fixed-fraction plateau: {'pass' if verdict.passed else 'FAIL'} "
            f"(common value {verdict.common_value} over "
            f"{verdict.samples_checked} samples)"
        )
        if not verdict.passed:
            status = 2
        for lam in samples:
            lines.append(f"  U({lam}) = {simple_useful(lam, model)}")

    if "precision" in cfg:
        pc = cfg["precision"]
        family = pc.get("family")
        if family not in _PRECISION_FAMILIES:
            raise DocumentError(
                f"unknown precision family {family!r}; "
                f"have {sorted(_PRECISION_FAMILIES)}"
            )
        p = _PRECISION_FAMILIES[family](pc)
        c_inv = Fraction(pc["investigation_capacity"])
        samples = sorted(
            {Fraction(s) for s in cfg.get("samples", []) if Fraction(s) > c_inv}
        )
        verdict = decline_check(p, c_inv, samples)
        payload["decline"] = {
            "passed": verdict.passed,
            "mode": verdict.mode,
            "values": [_frac(v) for v in verdict.values],
        }
        lines.append(
            f"precision-model {verdict.mode}: "
            f"{'pass' if verdict.passed else 'FAIL'}"
        )
        for lam, val in zip(samples, verdict.values):
            lines.append(f"  U_p({lam}) = {val}")
        if not verdict.passed:
            status = 2

    _emit(args, payload, lines)
    return status


def _cmd_plan(args) -> int:
    doc = load_document(args.file)
    cost = CostModel.uniform(doc.pipeline, Fraction(args.budget),
                             Fraction(args.unit_cost))
    payload: dict = {"budget": _frac(cost.budget)}
    lines = [f"budget: {cost.budget} (unit cost {args.unit_cost} per stage)"]

    try:
        triv = trivial_allocation(doc.pipeline, cost)
        payload["trivial"] = {
            "factors": {s: _frac(f) for s, f in sorted(triv.multiplier.factor.items())},
            "throughput": _frac(triv.achieved_throughput),
            "spent": _frac(triv.spent),
        }
        lines.append(
            f"trivial (single-bottleneck) allocation: throughput "
            f"{triv.achieved_throughput}, spent {triv.spent}"
        )
    except TiedBottleneckError as exc:
        payload["trivial"] = {"refused": str(exc)}
        lines.append(f"trivial allocation refused: {exc}")

    result = maxmin_allocation(doc.pipeline, cost, Fraction(args.tolerance))
    payload["maxmin"] = {
        "factors": {s: _frac(f) for s, f in sorted(result.multiplier.factor.items())},
        "throughput": _frac(result.achieved_throughput),
        "spent": _frac(result.spent),
    }
    lines.append(
        f"max-min allocation: throughput {result.achieved_throughput}, "
        f"spent {result.spent}"
    )
    lines.append(
        "  factors: "
        + ", ".join(f"{s}={f}" for s, f in sorted(result.multiplier.factor.items()))
    )
    _emit(args, payload, lines)
    return 0


def _cmd_verify(args) -> int:
    cfg = harness.GeneratorConfig(
        seed=args.seed, instance_count=args.count, max_stages=args.max_stages
    )
    verdict = harness.verify_all(cfg)
    if args.format == "structured":
        sys.stdout.write(harness.structured_report(verdict))
    else:
        sys.stdout.write(harness.text_report(verdict))
    return 0 if verdict.passed else 2


class _Parser(argparse.ArgumentParser):
    # usage problems are validation errors (exit 1); exit 2 is reserved for
    # verification counterexamples
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pipecalc",
        description="Exact bottleneck-throughput analysis for serial pipelines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument(
            "--format", choices=["text", "structured"], default="text"
        )
        return sp

    sp = add("analyze", _cmd_analyze, "throughput and bottleneck report")
    sp.add_argument("file")

    sp = add("perturb", _cmd_perturb, "apply a named scenario and classify it")
    sp.add_argument("file")
    sp.add_argument("--scenario", default=None)

    sp = add("ceiling", _cmd_ceiling, "authority ceiling and tightness witness")
    sp.add_argument("file")

    sp = add("compare", _cmd_compare, "attacker/defender ratio report")
    sp.add_argument("attacker")
    sp.add_argument("defender")
    sp.add_argument("--scenario", default=None)

    sp = add("fp", _cmd_fp, "plateau and decline checks for a scalar model")
    sp.add_argument("file")

    sp = add("plan", _cmd_plan, "budgeted improvement allocation")
    sp.add_argument("file")
    sp.add_argument("--budget", required=True)
    sp.add_argument("--unit-cost", default="1")
    sp.add_argument("--tolerance", default="1/1024")

    sp = add("verify", _cmd_verify, "randomized verification harness")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10_000)
    sp.add_argument("--max-stages", type=int, default=8)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except (
        DocumentError,
        PipelineValidationError,
        AdmissibilityError,
        TiedBottleneckError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalCheckError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
