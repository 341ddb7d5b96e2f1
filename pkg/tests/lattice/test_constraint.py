import math

import pytest
from pydantic import ValidationError

from latticestream.exceptions import InfeasibleError, InstanceTooLargeError
from latticestream.lattice import ConstraintSpec, GroundSet, LatticeVector
from latticestream.lattice.enumerate import (
    box_caps,
    count_points,
    ensure_enumerable,
    iter_box,
    iter_budget,
    predecessors
)


class TestGroundSet:
    def test_valid(self):
        ground = GroundSet(elements=["b", "a", "c"])
        assert ground.n == 3
        assert ground.elements == ["b", "a", "c"]
        assert "a" in ground

    @pytest.mark.parametrize("elements", [[], ["a", "a"]])
    def test_invalid(self, elements):
        """Empty and duplicated ground sets are rejected"""
        with pytest.raises(ValidationError):
            GroundSet(elements=elements)


class TestConstraintSpec:
    def test_unbounded_entries(self):
        spec = ConstraintSpec(box={"a": 2, "b": "unbounded", "c": None}, k=4)
        assert spec.bound("a") == 2
        assert isinstance(spec.bound("a"), int)
        assert math.isinf(spec.bound("b"))
        assert math.isinf(spec.bound("c"))
        assert spec.cap("b") == 4
        assert spec.bound("missing") == 0
        assert not spec.is_bounded("b")

    @pytest.mark.parametrize(
        "box,k",
        [
            ({"a": -1}, 2),
            ({"a": 1.5}, 2),
            ({"a": "lots"}, 2),
            ({"a": 1}, -1),
        ]
    )
    def test_invalid(self, box, k):
        with pytest.raises(ValidationError):
            ConstraintSpec(box=box, k=k)

    def test_headroom(self):
        """Search ceiling is min{b(e) - x(e), k - x(E)}"""
        spec = ConstraintSpec(box={"a": 5, "b": "unbounded"}, k=6)
        x = LatticeVector({"a": 2, "b": 1})
        assert spec.headroom(x, "a") == 3
        assert spec.headroom(x, "b") == 3
        assert spec.headroom(LatticeVector({"a": 5, "b": 1}), "a") == 0
        assert spec.headroom(x, "missing") == 0

    @pytest.mark.parametrize(
        "x,constraint",
        [
            ({"a": 3}, "box"),
            ({"a": 2, "b": 3}, "cardinality"),
        ]
    )
    def test_ensure_feasible(self, x, constraint):
        """The error names the violated constraint"""
        spec = ConstraintSpec(box={"a": 2, "b": "unbounded"}, k=4)
        with pytest.raises(InfeasibleError) as exc_info:
            spec.ensure_feasible(LatticeVector(x))
        assert exc_info.value.constraint == constraint
        assert not spec.is_feasible(LatticeVector(x))

    def test_feasible(self):
        spec = ConstraintSpec(box={"a": 2, "b": "unbounded"}, k=4)
        spec.ensure_feasible(LatticeVector({"a": 2, "b": 2}))
        assert spec.violation(LatticeVector()) is None


class TestEnumerate:
    def test_box_caps(self):
        """Unbounded entries fall back to k"""
        spec = ConstraintSpec(box={"a": 2, "b": "unbounded"}, k=3)
        assert box_caps(spec) == (["a", "b"], [2, 3])

    def test_counts(self):
        caps = [2, 1, 3]
        assert count_points(caps) == 24
        assert len(list(iter_box(caps))) == 24
        assert ensure_enumerable(caps, 24) == 24
        with pytest.raises(InstanceTooLargeError) as exc_info:
            ensure_enumerable(caps, 23)
        assert exc_info.value.size == 24

    def test_budget(self):
        """Budget enumeration matches filtering the full box, in the same order"""
        caps = [3, 2, 2]
        expected = [p for p in iter_box(caps) if sum(p) <= 3]
        assert list(iter_budget(caps, 3)) == expected
        assert list(iter_budget(caps, 0)) == [(0, 0, 0)]

    def test_predecessors(self):
        assert dict(predecessors((1, 0, 2))) == {0: (0, 0, 2), 2: (1, 0, 1)}
        assert list(predecessors((0, 0))) == []
