from fractions import Fraction

import pytest
from hypothesis import given

from conftest import pipeline_with_multiplier, pipelines
from pipecalc import (
    Multiplier,
    Outcome,
    Pipeline,
    bottleneck_set,
    classify,
    migration_decomposition,
    perturb,
    perturbed_throughput,
    preservation_report,
    throughput,
    verify_characterizations,
)


class TestClassify:
    def test_kept_bottleneck_pins_throughput(self, example_pipeline):
        a = Multiplier({"a": 10, "b": 1, "c": 10})
        cls = classify(example_pipeline, a)
        assert cls.outcome is Outcome.UNCHANGED
        assert cls.witness == "b"
        assert cls.new_throughput == 1

    def test_strict_increase(self, example_pipeline):
        a = Multiplier({"a": 1, "b": 2, "c": 1})
        cls = classify(example_pipeline, a)
        assert cls.outcome is Outcome.STRICT_INCREASE
        assert cls.witness is None
        assert cls.new_throughput == 2

    def test_tied_bottleneck_keeps_factor_one(self):
        p = Pipeline(("u", "v", "w"), {"u": 2, "v": 2, "w": 5})
        a = Multiplier({"u": 3, "v": 1, "w": 1})
        cls = classify(p, a)
        assert cls.outcome is Outcome.UNCHANGED
        assert cls.new_throughput == 2
        assert cls.witness == "v"

    def test_predicates_are_exclusive(self, example_pipeline):
        for factors in ({"a": 1, "b": 1, "c": 1}, {"a": 1, "b": 3, "c": 1}):
            cls = classify(example_pipeline, Multiplier(factors))
            assert cls.unchanged_predicate != cls.strict_predicate
            assert (cls.outcome is Outcome.UNCHANGED) == cls.unchanged_predicate


class TestPreservation:
    def test_preserved_singleton(self, example_pipeline):
        a = Multiplier({"a": 1, "b": 2, "c": 1})
        rep = preservation_report(example_pipeline, a)
        assert rep.preserved and rep.condition_i and rep.condition_ii
        assert rep.common_factor == 2

    def test_broken_by_overshoot(self, example_pipeline):
        a = Multiplier({"a": 1, "b": 5, "c": 1})
        rep = preservation_report(example_pipeline, a)
        assert not rep.preserved
        assert not rep.condition_ii

    def test_vacuous_when_all_bottlenecks(self):
        p = Pipeline(("x", "y"), {"x": 3, "y": 3})
        a = Multiplier({"x": 2, "y": 2})
        rep = preservation_report(p, a)
        assert rep.preserved and rep.condition_i and rep.condition_ii
        assert rep.common_factor == 2


class TestMigrationDecomposition:
    def test_bottleneck_moves(self, example_pipeline):
        d = migration_decomposition(
            example_pipeline, Multiplier({"a": 1, "b": 5, "c": 1})
        )
        assert d.departed == ("b",)
        assert d.entered == ("a",)

    def test_identity(self, example_pipeline):
        d = migration_decomposition(
            example_pipeline, Multiplier.identity(example_pipeline)
        )
        assert d.empty

    def test_departure_without_entry(self):
        p = Pipeline(("u", "v", "w"), {"u": 2, "v": 2, "w": 5})
        d = migration_decomposition(p, Multiplier({"u": 1, "v": 3, "w": 1}))
        assert d.departed == ("v",)
        assert d.entered == ()


class TestVerifyCharacterizations:
    def test_example_passes(self, example_pipeline):
        a = Multiplier({"a": 2, "b": 1, "c": 5})
        assert verify_characterizations(example_pipeline, a).passed

    def test_single_stage_identity(self):
        p = Pipeline(("solo",), {"solo": 7})
        v = verify_characterizations(p, Multiplier({"solo": 1}))
        assert v.passed
        assert v.detail["new_throughput"] == 7

    def test_counterexample_carries_detail(self, example_pipeline, monkeypatch):
        import pipecalc.characterize as ch

        monkeypatch.setattr(ch, "_scan_min", lambda vals: max(vals))
        v = verify_characterizations(
            example_pipeline, Multiplier({"a": 1, "b": 1, "c": 1})
        )
        assert not v.passed
        assert v.failures
        assert "capacities" in v.detail


# -- properties --------------------------------------------------------------


@given(pipeline_with_multiplier())
def test_unchanged_iff_kept_bottleneck(pm):
    p, a = pm
    unchanged = perturbed_throughput(p, a) == throughput(p)
    kept = any(a.factor[s] == 1 for s in bottleneck_set(p))
    assert unchanged == kept


@given(pipeline_with_multiplier())
def test_strict_increase_iff_all_bottlenecks_improved(pm):
    p, a = pm
    increased = perturbed_throughput(p, a) > throughput(p)
    all_improved = all(a.factor[s] > 1 for s in bottleneck_set(p))
    assert increased == all_improved


@given(pipeline_with_multiplier())
def test_improving_only_non_bottlenecks_changes_nothing(pm):
    p, a = pm
    b = bottleneck_set(p)
    pinned = Multiplier(
        {s: Fraction(1) if s in b else f for s, f in a.factor.items()}
    )
    assert perturbed_throughput(p, pinned) == throughput(p)


@given(pipeline_with_multiplier())
def test_preservation_iff_conditions(pm):
    p, a = pm
    rep = preservation_report(p, a)
    assert rep.preserved == (rep.condition_i and rep.condition_ii)
    assert (rep.common_factor is not None) == rep.condition_i


@given(pipeline_with_multiplier())
def test_migration_iff_nonempty_decomposition(pm):
    p, a = pm
    d = migration_decomposition(p, a)
    moved = bottleneck_set(perturb(p, a)) != bottleneck_set(p)
    assert moved == (not d.empty)


@given(pipelines())
def test_tied_bottleneck_sharpness(p):
    # improving every bottleneck but one leaves throughput exactly unchanged
    b = sorted(bottleneck_set(p))
    if len(b) < 2:
        return
    spared = b[0]
    a = Multiplier(
        {s: Fraction(1) if s == spared or s not in b else Fraction(7)
         for s in p.stages}
    )
    assert perturbed_throughput(p, a) == throughput(p)


@given(pipeline_with_multiplier())
def test_verify_passes_on_generated_instances(pm):
    p, a = pm
    assert verify_characterizations(p, a).passed
