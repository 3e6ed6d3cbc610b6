from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import fractions, pipeline_with_multiplier, pipelines
from pipecalc import (
    AdmissibilityError,
    Multiplier,
    Pipeline,
    PipelineValidationError,
    ValidationReport,
    bottleneck_report,
    bottleneck_set,
    migration_occurred,
    perturb,
    perturbed_throughput,
    throughput,
    validate_pipeline,
)


def scan_min(values):
    # independent oracle: plain linear scan
    best = values[0]
    for v in values[1:]:
        if v < best:
            best = v
    return best


class TestThroughput:
    def test_example(self, example_pipeline):
        assert throughput(example_pipeline) == 1

    def test_singleton(self):
        assert throughput(Pipeline(("only",), {"only": 7})) == 7

    def test_random_against_scan(self):
        import random

        rng = random.Random(7)
        stages = tuple(f"s{i}" for i in range(6))
        caps = {s: Fraction(rng.randint(1, 10)) for s in stages}
        p = Pipeline(stages, caps)
        assert throughput(p) == scan_min([caps[s] for s in stages])


class TestBottleneckReport:
    def test_example(self, example_pipeline):
        rep = bottleneck_report(example_pipeline)
        assert rep.bottlenecks == ("b",)
        assert set(rep.non_bottlenecks) == {"a", "c"}

    def test_all_equal(self):
        p = Pipeline(("x", "y", "z"), {"x": 2, "y": 2, "z": 2})
        rep = bottleneck_report(p)
        assert rep.bottlenecks == ("x", "y", "z")
        assert rep.non_bottlenecks == ()

    def test_tied_pair(self):
        p = Pipeline(("u", "v", "w"), {"u": 2, "v": 2, "w": 5})
        rep = bottleneck_report(p)
        assert rep.bottlenecks == ("u", "v")

    def test_partition(self, example_pipeline):
        rep = bottleneck_report(example_pipeline)
        assert set(rep.bottlenecks) | set(rep.non_bottlenecks) == set(
            example_pipeline.stages
        )
        assert set(rep.bottlenecks) & set(rep.non_bottlenecks) == set()


class TestPerturb:
    def test_identity(self, example_pipeline):
        q = perturb(example_pipeline, Multiplier.identity(example_pipeline))
        assert q == example_pipeline

    def test_single_stage_boost(self, example_pipeline):
        a = Multiplier({"a": 1, "b": 2, "c": 1})
        q = perturb(example_pipeline, a)
        assert q.capacity == {"a": 3, "b": 2, "c": 4}

    def test_elementwise_oracle(self):
        import random

        rng = random.Random(11)
        stages = tuple(f"s{i}" for i in range(5))
        p = Pipeline(stages, {s: Fraction(rng.randint(1, 10)) for s in stages})
        a = Multiplier({s: Fraction(rng.randint(1, 4)) for s in stages})
        q = perturb(p, a)
        for s in stages:
            assert q.capacity[s] == a.factor[s] * p.capacity[s]

    def test_domain_mismatch(self, example_pipeline):
        with pytest.raises(AdmissibilityError):
            perturb(example_pipeline, Multiplier({"a": 1, "b": 1}))

    def test_factor_below_one(self):
        with pytest.raises(AdmissibilityError):
            Multiplier({"a": Fraction(1, 2)})


class TestPerturbedThroughput:
    def test_bottleneck_doubled(self, example_pipeline):
        a = Multiplier({"a": 1, "b": 2, "c": 1})
        assert perturbed_throughput(example_pipeline, a) == 2

    def test_identity(self, example_pipeline):
        a = Multiplier.identity(example_pipeline)
        assert perturbed_throughput(example_pipeline, a) == throughput(
            example_pipeline
        )

    def test_bottleneck_migrates(self, example_pipeline):
        a = Multiplier({"a": 1, "b": 5, "c": 1})
        assert perturbed_throughput(example_pipeline, a) == 3


class TestMigrationOccurred:
    def test_moves(self, example_pipeline):
        assert migration_occurred(
            example_pipeline, Multiplier({"a": 1, "b": 5, "c": 1})
        )

    def test_identity(self, example_pipeline):
        assert not migration_occurred(
            example_pipeline, Multiplier.identity(example_pipeline)
        )

    def test_stays(self, example_pipeline):
        assert not migration_occurred(
            example_pipeline, Multiplier({"a": 1, "b": 2, "c": 1})
        )


class TestValidatePipeline:
    def test_empty_stage_set(self):
        rep = validate_pipeline((), {})
        assert isinstance(rep, ValidationReport)
        assert any("assumption 1" in v for v in rep.violations)

    def test_zero_capacity(self):
        rep = validate_pipeline(("a",), {"a": 0})
        assert isinstance(rep, ValidationReport)
        assert any("assumption 2" in v for v in rep.violations)

    def test_example_valid(self):
        p = validate_pipeline(("a", "b", "c"), {"a": 3, "b": 1, "c": 4})
        assert isinstance(p, Pipeline)
        assert p.capacity["a"] == 3

    def test_duplicate_ids(self):
        rep = validate_pipeline(("a", "a"), {"a": 1})
        assert isinstance(rep, ValidationReport)
        assert any("duplicate" in v for v in rep.violations)

    def test_unknown_capacity(self):
        rep = validate_pipeline(("a",), {"a": 1, "ghost": 2})
        assert isinstance(rep, ValidationReport)
        assert any("unknown stage" in v for v in rep.violations)

    def test_reports_all_violations(self):
        rep = validate_pipeline(("a", "a"), {"a": -1, "ghost": 2})
        assert isinstance(rep, ValidationReport)
        assert len(rep.violations) >= 3

    def test_constructor_raises(self):
        with pytest.raises(PipelineValidationError):
            Pipeline(("a",), {"a": -3})

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Pipeline(("a",), {"a": 0.1})


# -- properties --------------------------------------------------------------


@given(pipelines())
def test_bottleneck_nonempty_and_attains_min(p):
    t = throughput(p)
    b = bottleneck_set(p)
    assert b
    assert all(p.capacity[s] == t for s in b)
    assert all(p.capacity[s] > t for s in p.stages if s not in b)


@given(pipeline_with_multiplier())
def test_perturb_closed(pm):
    p, a = pm
    q = perturb(p, a)
    assert q.stages == p.stages
    assert all(c > 0 for c in q.capacity.values())


@given(pipeline_with_multiplier())
def test_normal_form(pm):
    p, a = pm
    assert perturbed_throughput(p, a) == throughput(perturb(p, a))


@given(pipeline_with_multiplier(), st.lists(st.sampled_from(
    [Fraction(1), Fraction(3, 2), Fraction(2)]), min_size=6, max_size=6))
def test_monotonicity(pm, extras):
    p, a = pm
    b = Multiplier(
        {s: f * extras[i % len(extras)]
         for i, (s, f) in enumerate(sorted(a.factor.items()))}
    )
    assert perturbed_throughput(p, a) <= perturbed_throughput(p, b)


@given(pipeline_with_multiplier())
def test_non_decrease(pm):
    p, a = pm
    assert perturbed_throughput(p, a) >= throughput(p)


@given(st.lists(fractions(), min_size=1, max_size=8), fractions())
def test_strict_minimum_micro_lemma(values, c):
    # any family strictly above c has its minimum strictly above c
    family = [c + v for v in values]
    assert scan_min(family) > c
