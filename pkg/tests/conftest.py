from typing import Dict, List, Mapping

import pytest

from latticestream.lattice import ConstraintSpec, GroundSet
from latticestream.oracles import ConcaveCoverage, CostModel, GainOracle, ProblemInstance


def build_instance(
    gain: GainOracle,
    box: Mapping[str, object],
    k: int,
    costs: Dict[str, float] = None,
    order: List[str] = None
) -> ProblemInstance:
    elements = list(order) if order is not None else list(box)
    for e in box:
        if e not in elements:
            elements.append(e)
    return ProblemInstance(
        ground=GroundSet(elements=elements),
        constraint=ConstraintSpec(box=dict(box), k=k),
        gain=gain,
        cost=CostModel(unit_costs=costs or {}),
        stream_order=order
    )


@pytest.fixture
def make_instance():
    """Factory for ProblemInstance from an oracle, box, budget and unit costs"""
    return build_instance


@pytest.fixture
def capped_instance():
    """
    g(x) = sum_e min(x(e), 2), unit cost 0.1, b(a) = 5, k = 10. Level values
    at t = 2 for l = 1..5 are 0.8, 0.8, 0.4667, 0.3, 0.2
    """
    box = {"a": 5}
    gain = ConcaveCoverage.per_element(["a"], box, phi="capped-linear", cap=2.0)
    return build_instance(gain, box, k=10, costs={"a": 0.1})
