import pytest

from latticestream.exceptions import InstanceTooLargeError
from latticestream.lattice import ZERO, ConstraintSpec, LatticeVector
from latticestream.oracles import (
    BudgetAllocation,
    ConcaveCoverage,
    ConvexCoverage,
    GeneratorConfig,
    TableOracle,
    adversarial_table,
    generate
)
from latticestream.verify import (
    check_dr,
    check_lattice_submodular,
    check_monotone,
    check_normalized,
    estimate_alpha
)


def spec(box, k=None):
    return ConstraintSpec(box=box, k=k if k is not None else sum(box.values()))


class TestDRCheck:
    def test_coverage_passes(self):
        box = {"a": 3, "b": 3}
        g = ConcaveCoverage(
            {"u": 1.0, "v": 2.0},
            {"u": {"a": 1.0, "b": 0.5}, "v": {"b": 1.0}},
            box,
            phi={"u": "sqrt", "v": "exp"}
        )
        result = check_dr(g, spec(box))
        assert result.passed
        assert result
        assert result.witness is None
        assert result.checked > 0

    def test_square_fails(self):
        """Squaring the load gives marginal 3 at x = {a: 1} against 1 at 0"""
        box = {"a": 2}
        g = ConvexCoverage.per_element(["a"], box, phi="square")
        result = check_dr(g, spec(box))
        assert not result
        witness = result.witness
        assert witness.x == ZERO
        assert witness.y == LatticeVector({"a": 1})
        assert witness.e == "a"
        assert (witness.lhs, witness.rhs) == (3.0, 1.0)

    def test_linear_passes(self):
        box = {"a": 4, "b": 2}
        g = ConcaveCoverage.per_element(list(box), box, cap=10.0)
        assert check_dr(g, spec(box))

    def test_box_clipped_to_oracle(self):
        """Unbounded constraint entries fall back to k, then to the oracle bound"""
        g = ConcaveCoverage.per_element(["a"], {"a": 3}, cap=2.0)
        result = check_dr(g, ConstraintSpec(box={"a": "unbounded"}, k=50))
        assert result.passed
        assert result.checked == 3

    def test_too_large(self):
        box = {e: 9 for e in "abcdef"}
        g = ConcaveCoverage.per_element(list(box), box)
        with pytest.raises(InstanceTooLargeError):
            check_dr(g, spec(box))


class TestLatticeSubmodularCheck:
    def test_budget_allocation_passes(self):
        box = {"a": 3, "b": 2}
        g = BudgetAllocation({"t": 1.0, "s": 0.5}, {"t": {"a": 0.3, "b": 0.2}, "s": {"b": 0.6}}, box)
        result = check_lattice_submodular(g, spec(box))
        assert result.passed
        assert result.name == "lattice-submodular"

    def test_adversarial_table_fails(self):
        """g(chi_a + chi_b) = 3 exceeds g(chi_a) + g(chi_b)"""
        g = adversarial_table()
        assert not check_lattice_submodular(g, spec({"a": 1, "b": 1}))
        assert not check_dr(g, spec({"a": 1, "b": 1}))

    def test_lattice_not_dr(self):
        """
        Convex along one coordinate but modular across coordinates: lattice
        submodular, not DR-submodular
        """
        box = {"a": 2, "b": 1}
        g = TableOracle.tabulate(lambda x: float(x["a"] ** 2 + x["b"]), box)
        assert check_lattice_submodular(g, spec(box))
        assert not check_dr(g, spec(box))


class TestMonotoneCheck:
    def test_coverage(self):
        box = {"a": 3}
        assert check_monotone(ConcaveCoverage.per_element(["a"], box, cap=2.0), spec(box))

    def test_decreasing(self):
        box = {"a": 2}
        g = TableOracle.tabulate(lambda x: float(x["a"] % 2), box)
        result = check_monotone(g, spec(box))
        assert not result
        assert result.witness.x == LatticeVector({"a": 1})
        assert result.witness.y == LatticeVector({"a": 2})


class TestNormalizedCheck:
    def test_normalized(self):
        assert check_normalized(adversarial_table())

    def test_offset(self):
        g = TableOracle.tabulate(lambda x: 1.0 + x["a"], {"a": 1})
        result = check_normalized(g)
        assert not result
        assert result.witness.lhs == 1.0


class TestEstimateAlpha:
    def test_dr_oracle(self):
        box = {"a": 3, "b": 2}
        g = ConcaveCoverage.per_element(list(box), box, phi="sqrt")
        assert estimate_alpha(g, spec(box)) == pytest.approx(1.0)

    def test_adversarial_table(self):
        assert estimate_alpha(adversarial_table(), spec({"a": 1, "b": 1})) == pytest.approx(0.5)

    def test_zero_marginals(self):
        box = {"a": 2, "b": 2}
        g = TableOracle.tabulate(lambda x: 0.0, box)
        assert estimate_alpha(g, spec(box)) == 1.0

    def test_square(self):
        """Marginals 1, 3 on b = 2 give alpha = 1/3"""
        box = {"a": 2}
        g = ConvexCoverage.per_element(["a"], box, phi="square")
        assert estimate_alpha(g, spec(box)) == pytest.approx(1 / 3)


class TestGeneratedOracles:
    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize("family", ["coverage", "budget"])
    def test_dr_families(self, family, seed):
        inst = generate(GeneratorConfig(family=family, n=4, b_max=3, k=6, seed=seed))
        assert check_dr(inst.gain, inst.constraint).passed
        assert check_lattice_submodular(inst.gain, inst.constraint).passed
        assert check_monotone(inst.gain, inst.constraint).passed
        assert check_normalized(inst.gain).passed
        assert estimate_alpha(inst.gain, inst.constraint) == 1.0

    @pytest.mark.parametrize("seed", range(10))
    def test_adversarial_family(self, seed):
        inst = generate(GeneratorConfig(family="adversarial", n=4, b_max=3, k=6, seed=seed))
        result = check_dr(inst.gain, inst.constraint)
        assert not result.passed
        assert result.witness is not None
        assert check_monotone(inst.gain, inst.constraint).passed
        assert check_normalized(inst.gain).passed
