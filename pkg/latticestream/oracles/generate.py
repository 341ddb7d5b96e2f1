import logging
from typing import Callable, Dict, List

import numpy as np
from pydantic import BaseModel, validator

from ..lattice import ConstraintSpec, GroundSet
from ..types import Element
from .base import GainOracle
from .cost import CostModel
from .families import CONCAVE_PHI, BudgetAllocation, ConcaveCoverage, ConvexCoverage, TableOracle
from .models import ProblemInstance


logger = logging.getLogger(__name__)

# generated parameters are rounded so instance files stay readable
DIGITS = 6


class GeneratorConfig(BaseModel):

    """
    Seeded instance generation

    **Parameters**

    - **family** (*str*): *"coverage"*, *"budget"* or *"adversarial"*
    - **n** (*int*): ground set size, >= 1
    - **b_max** (*int*): largest box entry, >= 1
    - **k** (*int*): cardinality budget, >= 0
    - **seed** (*int*): seed for `numpy.random.default_rng`
    - **cost_max** (*float*): unit costs are drawn from [0, cost_max]
    """

    family: str = "coverage"
    n: int = 5
    b_max: int = 3
    k: int = 6
    seed: int = 0
    cost_max: float = 0.5

    class Config:
        allow_mutation = False

    @validator("family")
    def validate_family(cls, family: str) -> str:
        if family not in GENERATORS:
            raise ValueError(f"family must be one of {list(GENERATORS)}, got '{family}'")
        return family

    @validator("n", "b_max")
    def validate_positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be >= 1, got {value}")
        return value

    @validator("k")
    def validate_k(cls, k: int) -> int:
        if k < 0:
            raise ValueError(f"k must be >= 0, got {k}")
        return k

    @validator("cost_max")
    def validate_cost_max(cls, cost_max: float) -> float:
        if not 0.0 <= cost_max < float("inf"):
            raise ValueError(f"cost_max must be finite and >= 0, got {cost_max}")
        return cost_max


def _draw(rng: np.random.Generator, low: float, high: float) -> float:
    return round(float(rng.uniform(low, high)), DIGITS)

def _elements(n: int) -> List[Element]:
    return [f"e{i}" for i in range(n)]

def _box(rng: np.random.Generator, elements: List[Element], low: int, high: int) -> Dict[Element, int]:
    return {e: int(rng.integers(low, high + 1)) for e in elements}

def _assemble(
    rng: np.random.Generator,
    config: GeneratorConfig,
    elements: List[Element],
    box: Dict[Element, int],
    gain: GainOracle
) -> ProblemInstance:
    costs = {e: _draw(rng, 0.0, config.cost_max) for e in elements}
    order = [elements[int(i)] for i in rng.permutation(len(elements))]
    return ProblemInstance(
        ground=GroundSet(elements=elements),
        constraint=ConstraintSpec(box=box, k=config.k),
        gain=gain,
        cost=CostModel(unit_costs=costs),
        stream_order=order
    )

def _groups(rng: np.random.Generator, elements: List[Element], prefix: str) -> Dict[str, List[Element]]:
    """Random groups of elements, every element in at least one group"""
    count = int(rng.integers(1, len(elements) + 2))
    names = [f"{prefix}{j}" for j in range(count)]
    members: Dict[str, List[Element]] = {name: [] for name in names}
    for e in elements:
        mask = rng.random(count) < 0.5
        if not mask.any():
            mask[int(rng.integers(count))] = True
        for name, hit in zip(names, mask):
            if hit:
                members[name].append(e)
    return members

def generate_coverage(config: GeneratorConfig) -> ProblemInstance:
    """Concave coverage with random incidence, weights, phi kinds and caps"""
    rng = np.random.default_rng(config.seed)
    elements = _elements(config.n)
    box = _box(rng, elements, 1, config.b_max)
    groups = _groups(rng, elements, "u")
    weights = {j: _draw(rng, 0.5, 2.0) for j in groups}
    incidence = {j: {e: _draw(rng, 0.5, 1.5) for e in members} for j, members in groups.items()}
    phi = {j: str(rng.choice(CONCAVE_PHI)) for j in groups}
    cap = {j: _draw(rng, 1.0, 3.0) for j in groups}
    gain = ConcaveCoverage(weights, incidence, box, phi=phi, cap=cap)
    return _assemble(rng, config, elements, box, gain)

def generate_budget(config: GeneratorConfig) -> ProblemInstance:
    """Budget allocation with random activation probabilities and target weights"""
    rng = np.random.default_rng(config.seed)
    elements = _elements(config.n)
    box = _box(rng, elements, 1, config.b_max)
    targets: Dict[str, Dict[Element, float]] = {}
    for t, members in _groups(rng, elements, "t").items():
        targets[t] = {s: _draw(rng, 0.1, 0.6) for s in members}
    weights = {t: _draw(rng, 0.5, 2.0) for t in targets}
    gain = BudgetAllocation(weights, targets, box)
    return _assemble(rng, config, elements, box, gain)

def generate_adversarial(config: GeneratorConfig) -> ProblemInstance:
    """
    Coverage with phi(z) = z^2 per element. Box entries are at least 2 so
    the DR violation at x = 0, y = chi_e is inside the box
    """
    rng = np.random.default_rng(config.seed)
    elements = _elements(config.n)
    box = _box(rng, elements, 2, max(config.b_max, 2))
    gain = ConvexCoverage.per_element(elements, box, phi="square")
    return _assemble(rng, config, elements, box, gain)

def adversarial_table(claim: str = None) -> TableOracle:
    """
    Two element table with g(a) = g(b) = 1 and g(a + b) = 3. Monotone and
    normalized, violates g(x v y) + g(x ^ y) <= g(x) + g(y) and has alpha = 1/2
    """
    values = [
        ({}, 0.0),
        ({"a": 1}, 1.0),
        ({"b": 1}, 1.0),
        ({"a": 1, "b": 1}, 3.0),
    ]
    return TableOracle(values, {"a": 1, "b": 1}, claim=claim)


GENERATORS: Dict[str, Callable[[GeneratorConfig], ProblemInstance]] = {
    "coverage": generate_coverage,
    "budget": generate_budget,
    "adversarial": generate_adversarial,
}


def generate(config: GeneratorConfig) -> ProblemInstance:
    """Deterministic instance for `config.family` from `config.seed`"""
    logger.debug("generating %s instance n=%i seed=%i", config.family, config.n, config.seed)
    return GENERATORS[config.family](config)
