from fractions import Fraction

import pytest

import pipecalc.harness as harness
from pipecalc import (
    GeneratorConfig,
    generate_instance,
    structured_report,
    verify_all,
)
from pipecalc.characterize import CharacterizationVerdict
from pipecalc.model import bottleneck_set


class TestGeneratorConfig:
    def test_defaults(self):
        cfg = GeneratorConfig()
        assert cfg.max_stages == 8
        assert Fraction(1) in cfg.factor_grid
        assert cfg.factor_grid.count(Fraction(1)) == 2

    def test_factor_grid_must_contain_one(self):
        with pytest.raises(ValueError, match="contain 1"):
            GeneratorConfig(factor_grid=(Fraction(2),))

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            GeneratorConfig(capacity_grid=())


class TestGenerateInstance:
    def test_deterministic_replay(self):
        cfg = GeneratorConfig(seed=123, instance_count=10)
        for i in range(10):
            assert generate_instance(cfg, i) == generate_instance(cfg, i)

    def test_different_indices_differ(self):
        cfg = GeneratorConfig(seed=123, instance_count=10)
        instances = {generate_instance(cfg, i) for i in range(10)}
        assert len(instances) > 1

    def test_respects_grids(self):
        cfg = GeneratorConfig(seed=5, instance_count=50, max_stages=3)
        for i in range(50):
            p, a = generate_instance(cfg, i)
            assert 1 <= len(p.stages) <= 3
            assert all(c in cfg.capacity_grid for c in p.capacity.values())
            assert all(f in cfg.factor_grid for f in a.factor.values())

    def test_tie_and_invariance_coverage(self):
        # small grids must produce frequent ties and kept-at-1 bottlenecks
        cfg = GeneratorConfig(seed=0, instance_count=2000)
        ties = kept = 0
        for i in range(2000):
            p, a = generate_instance(cfg, i)
            b = bottleneck_set(p)
            ties += len(b) >= 2
            kept += any(a.factor[s] == 1 for s in b)
        assert ties / 2000 > 0.10
        assert kept / 2000 > 0.20


class TestVerifyAll:
    def test_small_run_passes(self):
        verdict = verify_all(GeneratorConfig(seed=7, instance_count=100))
        assert verdict.passed
        assert verdict.checks["characterizations"] == 100

    def test_count_zero_is_vacuous(self):
        verdict = verify_all(GeneratorConfig(seed=7, instance_count=0))
        assert verdict.passed
        assert verdict.checks == {}
        assert verdict.counterexamples == ()

    def test_structured_report_replays_identically(self):
        cfg = GeneratorConfig(seed=21, instance_count=50)
        assert structured_report(verify_all(cfg)) == structured_report(
            verify_all(cfg)
        )

    def test_mutation_is_caught_with_replay_coordinates(self, monkeypatch):
        # corrupt the characterization cross-check: every instance must now
        # surface as a counterexample carrying its (seed, index)
        def corrupted(p, a):
            return CharacterizationVerdict(
                passed=False,
                failures=("deliberately corrupted comparison",),
                detail={},
            )

        monkeypatch.setattr(harness, "verify_characterizations", corrupted)
        cfg = GeneratorConfig(seed=99, instance_count=5)
        verdict = verify_all(cfg)
        assert not verdict.passed
        assert len(verdict.counterexamples) == 5
        ce = verdict.counterexamples[0]
        assert (ce.seed, ce.index) == (99, 0)
        # replay coordinates reproduce the instance exactly
        assert generate_instance(cfg, ce.index) == generate_instance(cfg, 0)
