import pytest

from latticestream.lattice import LatticeVector
from latticestream.oracles import ConcaveCoverage, GeneratorConfig, generate
from latticestream.sieve import (
    AlgoConfig,
    SieveState,
    ThresholdInstance,
    run,
    run_fixed,
    sieve_step,
    stream_step
)
from latticestream.types import Mode


T2 = AlgoConfig(t=2.0)


@pytest.fixture
def two_singletons(make_instance):
    """g(chi_a) = 1, g(chi_b) = 2, no costs, k = 8"""
    box = {"a": 1, "b": 1}
    gain = ConcaveCoverage(
        {"a": 1.0, "b": 2.0},
        {"a": {"a": 1.0}, "b": {"b": 1.0}},
        box,
        cap=1.0
    )
    return make_instance(gain, box, k=8)


class TestStreamStep:
    def test_accepts_largest_level(self, capped_instance):
        state = ThresholdInstance(0.5)
        record = stream_step(state, capped_instance, T2, "a")
        assert record.level == 2
        assert record.ceiling == 5
        assert record.calls > 0
        assert state.x == LatticeVector({"a": 2})
        entry = state.ledger[0]
        assert (entry.element, entry.level) == ("a", 2)
        assert entry.gain == pytest.approx(2.0)
        assert entry.cost == pytest.approx(0.2)
        assert entry.value == pytest.approx(0.8)

    def test_budget_exhausted(self, make_instance):
        """Once x(E) = k every later step is a no-op without oracle calls"""
        box = {"a": 3, "b": 3}
        gain = ConcaveCoverage.per_element(list(box), box, cap=3.0)
        inst = make_instance(gain, box, k=2)
        state = ThresholdInstance(0.1)
        assert stream_step(state, inst, T2, "a").level == 2
        record = stream_step(state, inst, T2, "b")
        assert (record.level, record.calls) == (0, 0)
        assert state.x == LatticeVector({"a": 2})

    def test_zero_box(self, make_instance):
        box = {"a": 5, "b": 0}
        gain = ConcaveCoverage.per_element(list(box), box, cap=2.0)
        inst = make_instance(gain, box, k=4)
        state = ThresholdInstance(0.1)
        record = stream_step(state, inst, T2, "b")
        assert (record.level, record.ceiling) == (0, 0)
        assert state.x.is_zero

    def test_rejected(self, capped_instance):
        state = ThresholdInstance(0.9)
        assert stream_step(state, capped_instance, T2, "a").level == 0
        assert state.ledger == []

    def test_fixed_tau(self):
        state = ThresholdInstance(0.25)
        assert state.tau == 0.25
        with pytest.raises(AttributeError):
            state.tau = 0.5
        with pytest.raises(ValueError):
            ThresholdInstance(-0.1)


class TestSieveStep:
    def test_lazy_spawn(self, two_singletons):
        """m = 1, k = 8, epsilon = 0.5 spawns the six powers of 1.5 in [1/8, 1]"""
        cfg = AlgoConfig(epsilon=0.5)
        with SieveState(two_singletons, cfg) as state:
            sieve_step(state, two_singletons, cfg, "a")
            assert state.m == pytest.approx(1.0)
            assert state.spawned == 6
            taus = [instance.tau for instance in state.live()]
            assert taus == pytest.approx([0.1317, 0.1975, 0.2963, 0.4444, 0.6667, 1.0], abs=1e-4)
            assert all(instance.x == {"a": 1} for instance in state.live())

    def test_window_shift(self, two_singletons):
        """Raising m to 2 drops tau below 0.25 / 1.5 and spawns 1.5"""
        cfg = AlgoConfig(epsilon=0.5)
        with SieveState(two_singletons, cfg) as state:
            sieve_step(state, two_singletons, cfg, "a")
            sieve_step(state, two_singletons, cfg, "b")
            assert state.m == pytest.approx(2.0)
            assert state.dropped == 1
            assert sorted(state.instances) == [-4, -3, -2, -1, 0, 1]
            late = state.instances[1]
            assert late.spawned_at == 1
            # the late instance never saw a
            assert late.x == {"b": 1}
            assert state.peak_live <= 8

    def test_nonpositive_singleton(self, make_instance):
        """Elements whose cost outweighs their gain leave m at 0"""
        box = {"a": 2}
        gain = ConcaveCoverage.per_element(["a"], box, cap=1.0)
        inst = make_instance(gain, box, k=2, costs={"a": 1.0})
        with SieveState(inst, AlgoConfig()) as state:
            sieve_step(state, inst, AlgoConfig(), "a")
            assert state.m == 0.0
            assert state.live() == []
            assert state.window is None


class TestRun:
    def test_best_instance(self, capped_instance):
        report = run(capped_instance, AlgoConfig())
        assert report.x == LatticeVector({"a": 2})
        assert report.objective == pytest.approx(1.8)
        assert report.gain_value == pytest.approx(2.0)
        assert report.best_instance() is not None
        assert report.best_instance().x == report.x
        assert report.mu is None and report.nu is None
        assert report.elements_seen == 1

    def test_nothing_clears(self, make_instance):
        box = {"a": 2, "b": 2}
        gain = ConcaveCoverage.per_element(list(box), box, cap=1.0)
        inst = make_instance(gain, box, k=3, costs={"a": 0.5, "b": 0.9})
        report = run(inst, AlgoConfig())
        assert report.x.is_zero
        assert report.objective == 0.0
        assert report.tau is None
        assert report.instances == []

    def test_empty_stream(self, make_instance):
        box = {"a": 2}
        gain = ConcaveCoverage.per_element(["a"], box)
        inst = make_instance(gain, box, k=2, order=[])
        report = run(inst, AlgoConfig())
        assert report.x.is_zero
        assert report.objective == 0.0
        assert report.elements_seen == 0
        assert report.total_oracle_calls == 0

    @pytest.mark.parametrize(
        "cfg,expected",
        [
            (AlgoConfig(), (0.3819660113, 1.0)),
            (AlgoConfig(mode="alpha", alpha=1.0), (1 / 3, 2 / 3)),
        ]
    )
    def test_ratio_pair(self, capped_instance, cfg, expected):
        report = run(capped_instance, cfg)
        assert report.theorem_ratios == pytest.approx(expected, abs=1e-9)
        assert report.mode is cfg.mode

    def test_workers(self):
        """Advancing instances on a thread pool gives the sequential result"""
        inst = generate(GeneratorConfig(n=5, b_max=3, k=6, seed=5))
        sequential = run(inst, AlgoConfig(epsilon=0.05))
        threaded = run(inst, AlgoConfig(epsilon=0.05, workers=4))
        assert threaded.x == sequential.x
        assert threaded.objective == sequential.objective
        assert [i.dict() for i in threaded.instances] == [i.dict() for i in sequential.instances]

    def test_deterministic(self):
        inst = generate(GeneratorConfig(family="budget", n=4, b_max=3, k=5, seed=9))
        first = run(inst, AlgoConfig(mode="alpha", alpha=0.8))
        second = run(inst, AlgoConfig(mode="alpha", alpha=0.8))
        assert first.canonical() == second.canonical()

    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("mode", [Mode.SUBMODULAR, Mode.ALPHA])
    def test_memory_and_ledger(self, seed, mode):
        """Live instances stay within the bound and every ledger clears tau per unit"""
        inst = generate(GeneratorConfig(n=5, b_max=3, k=6, seed=seed))
        cfg = AlgoConfig(mode=mode, epsilon=0.1)
        report = run(inst, cfg)
        assert report.peak_live <= report.live_bound
        for instance in report.instances:
            assert instance.total <= inst.k
            accepted = sum(entry.gain - cfg.scale * entry.cost for entry in instance.ledger)
            assert accepted >= instance.tau * instance.total - 1e-9 * (1 + inst.k)
            assert all(entry.value >= instance.tau - 1e-9 for entry in instance.ledger)


class TestRunFixed:
    def test_single_threshold(self, capped_instance):
        report = run_fixed(capped_instance, T2, 0.5)
        assert report.x == LatticeVector({"a": 2})
        assert report.tau == 0.5
        assert report.exponent is None
        assert report.live_bound is None
        assert len(report.instances) == 1

    def test_alpha_threshold(self, capped_instance):
        """tau_alpha uses the 1 + alpha cost scale"""
        cfg = AlgoConfig(mode="alpha", alpha=1.0)
        report = run_fixed(capped_instance, cfg, 0.5)
        # per unit values at scale 2 are 0.8, 0.8, 0.4667, so level 2
        assert report.x == LatticeVector({"a": 2})
