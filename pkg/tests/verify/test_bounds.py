import itertools
import math

import pytest

from latticestream.exceptions import GuaranteeViolation
from latticestream.guarantees import AUTO_T, root_t
from latticestream.oracles import ConcaveCoverage
from latticestream.sieve import AlgoConfig, run, run_fixed
from latticestream.types import LevelSearch, Mode
from latticestream.verify import (
    brute_force_opt,
    query_bound,
    raise_for_violation,
    theorem_bound,
    theorem_ratios,
    validate_lemma_full,
    validate_lemma_partial,
    validate_run
)


T2 = AlgoConfig(t=2.0)

GRID = [i / 10 for i in range(11)]


@pytest.fixture
def full_instance(make_instance):
    """Same gain and cost as capped_instance but k = 2, so tau = 0.5 spends the budget"""
    box = {"a": 5}
    gain = ConcaveCoverage.per_element(["a"], box, cap=2.0)
    return make_instance(gain, box, k=2, costs={"a": 0.1})


class TestTheoremRatios:
    @pytest.mark.parametrize(
        "mode,param,expected",
        [
            (Mode.SUBMODULAR, "auto", (0.3819660113, 1.0)),
            (Mode.SUBMODULAR, None, (0.3819660113, 1.0)),
            (Mode.SUBMODULAR, 2.0, (1 / 3, 2 / 3)),
            (Mode.SUBMODULAR, 1.0, (0.0, 0.0)),
            (Mode.ALPHA, 1.0, (1 / 3, 2 / 3)),
            (Mode.ALPHA, 0.5, (0.2, 0.6)),
        ]
    )
    def test_worst_case(self, mode, param, expected):
        ratios = theorem_ratios(mode, param)
        assert (ratios.rho_g, ratios.rho_c) == pytest.approx(expected, abs=1e-9)

    def test_auto_root(self):
        assert theorem_ratios("submodular", "auto").t1 == pytest.approx(AUTO_T)

    @pytest.mark.parametrize("mu,nu", itertools.product(GRID, GRID))
    def test_auto_cost_ratio(self, mu, nu):
        """At t = t1(mu, nu) the cost coefficient is exactly 1"""
        ratios = theorem_ratios(Mode.SUBMODULAR, "auto", mu, nu)
        assert ratios.rho_c == pytest.approx(1.0, abs=1e-9)
        assert ratios.t1 >= 1.0 + mu - 1e-12
        if nu < 1.0:
            assert ratios.t1 > 1.0 + mu

    def test_degenerate_corner(self):
        """mu = 0, nu = 1 takes the limit along the root"""
        ratios = theorem_ratios(Mode.SUBMODULAR, "auto", 0.0, 1.0)
        assert ratios == (1.0, 1.0, 1.0)
        assert root_t(0.0, 1.0) == 1.0

    def test_realized_alpha(self):
        """nu = mu reduces the alpha pair to (alpha / (1 + alpha), 1)"""
        ratios = theorem_ratios(Mode.ALPHA, 0.5, 0.4, 0.4)
        assert (ratios.rho_g, ratios.rho_c) == pytest.approx((1 / 3, 1.0))

    @pytest.mark.parametrize(
        "mode,param,mu,nu",
        [
            (Mode.SUBMODULAR, "auto", 1.5, 0.0),
            (Mode.SUBMODULAR, "auto", 0.0, -0.5),
            (Mode.SUBMODULAR, 0.5, 1.0, 0.0),
            (Mode.ALPHA, 0.0, 1.0, 0.0),
            (Mode.ALPHA, 1.5, 1.0, 0.0),
        ]
    )
    def test_invalid(self, mode, param, mu, nu):
        with pytest.raises(ValueError):
            theorem_ratios(mode, param, mu, nu)

    def test_bound(self):
        assert theorem_bound(Mode.SUBMODULAR, 2.0, 3.0, 0.3) == pytest.approx(0.8)


class TestQueryBound:
    @pytest.mark.parametrize(
        "ceiling,level_search,expected",
        [
            (0, LevelSearch.BINARY, 4),
            (5, LevelSearch.BINARY, 2 * math.ceil(math.log2(6)) + 4),
            (5, LevelSearch.LINEAR, 7),
            (1, LevelSearch.LINEAR, 3),
        ]
    )
    def test_formula(self, ceiling, level_search, expected):
        assert query_bound(ceiling, level_search) == expected


class TestFullBudget:
    def test_satisfied(self, full_instance):
        instance_run = run_fixed(full_instance, T2, 0.5).instances[0]
        report = validate_lemma_full(instance_run, 0.5, T2)
        assert report.lemma == "full"
        assert report.k == report.total == 2
        assert report.lemma_bound == pytest.approx(1.0)
        assert report.objective == pytest.approx(1.8)
        assert report.terms["scaled_objective"] == pytest.approx(1.6)
        assert report.satisfied
        assert all(report.checks.values())
        assert report.ledger is None

    def test_forged_gain(self, full_instance):
        """A report whose g(x) disagrees with its ledger fails"""
        instance_run = run_fixed(full_instance, T2, 0.5).instances[0]
        forged = instance_run.copy(update={"gain_value": 0.5})
        report = validate_lemma_full(forged, 0.5, T2)
        assert not report.satisfied
        assert not report.checks["objective"]
        assert not report.checks["ledger_replay"]
        assert [entry.level for entry in report.ledger] == [2]

    def test_forged_total(self, full_instance):
        """A report whose total disagrees with its accepted levels fails the replay"""
        instance_run = run_fixed(full_instance, T2, 0.5).instances[0]
        assert instance_run.accepted_levels == [2]
        forged = instance_run.copy(update={"total": 1})
        report = validate_lemma_full(forged, 0.5, T2, k=1)
        assert not report.checks["ledger_replay"]
        assert not report.satisfied

    def test_budget_mismatch(self, full_instance):
        instance_run = run_fixed(full_instance, T2, 0.5).instances[0]
        with pytest.raises(ValueError):
            validate_lemma_full(instance_run, 0.5, T2, k=3)


class TestPartialBudget:
    @pytest.mark.parametrize(
        "cfg",
        [T2, AlgoConfig(mode="alpha", alpha=1.0)],
        ids=["submodular", "alpha"]
    )
    def test_satisfied(self, capped_instance, cfg):
        """
        x = {a: 2} equals the optimum, so mu = 0 and nu = 0.2. Both modes
        give the bound 1 - 0.2 + 0.5 = 1.3
        """
        opt = brute_force_opt(capped_instance)
        instance_run = run_fixed(capped_instance, cfg, 0.5).instances[0]
        report = validate_lemma_partial(instance_run, 0.5, opt, cfg, capped_instance.k)
        assert report.lemma == "partial"
        assert (report.mu, report.nu) == pytest.approx((0.0, 0.2))
        assert not report.clamped
        assert report.lemma_bound == pytest.approx(1.3)
        assert report.satisfied
        assert report.theorem_ratios is not None

    def test_requires_slack(self, full_instance):
        opt = brute_force_opt(full_instance)
        instance_run = run_fixed(full_instance, T2, 0.5).instances[0]
        with pytest.raises(ValueError):
            validate_lemma_partial(instance_run, 0.5, opt, T2, full_instance.k)
        with pytest.raises(ValueError):
            validate_lemma_partial(instance_run, 0.5, opt, T2)


class TestValidateRun:
    def test_satisfied(self, capped_instance):
        cfg = AlgoConfig()
        report = run(capped_instance, cfg)
        opt = brute_force_opt(capped_instance)
        verification = validate_run(report, capped_instance, cfg, opt)
        assert verification.satisfied, verification.violations
        assert verification.memory_ok and verification.queries_ok
        assert verification.optimum_dominates
        assert len(verification.guarantees) == len(report.instances)
        assert verification.x_star == opt.x_star
        assert verification.worst_case_bound == pytest.approx(0.3819660113 * 2.0 - 0.2)
        raise_for_violation(verification)

    def test_without_optimum(self, full_instance):
        """Only instances that spent the budget are checked"""
        cfg = AlgoConfig()
        report = run(full_instance, cfg)
        verification = validate_run(report, full_instance, cfg)
        assert verification.satisfied
        assert verification.opt_value is None
        assert all(guarantee.lemma == "full" for guarantee in verification.guarantees)

    def test_memory_violation(self, capped_instance):
        cfg = AlgoConfig()
        report = run(capped_instance, cfg)
        forged = report.copy(update={"peak_live": report.live_bound + 1})
        verification = validate_run(forged, capped_instance, cfg)
        assert not verification.memory_ok
        with pytest.raises(GuaranteeViolation) as exc_info:
            raise_for_violation(verification)
        assert exc_info.value.report is verification

    def test_beats_optimum(self, capped_instance):
        cfg = AlgoConfig()
        report = run(capped_instance, cfg)
        opt = brute_force_opt(capped_instance)
        forged = report.copy(update={"objective": opt.value + 1.0})
        verification = validate_run(forged, capped_instance, cfg, opt)
        assert verification.optimum_dominates is False
        assert not verification.satisfied
