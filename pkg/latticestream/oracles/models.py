import logging
from typing import ClassVar, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, root_validator, validator

from ..exceptions import ConfigError
from ..lattice import ConstraintSpec, GroundSet, LatticeVector
from ..types import Element
from .base import GainOracle, OracleClass
from .cost import CostModel
from .families import BudgetAllocation, ConcaveCoverage, ConvexCoverage, TableOracle


logger = logging.getLogger(__name__)


class TableEntry(BaseModel):
    x: LatticeVector
    value: float


class OracleSpec(BaseModel):

    """
    Oracle specification file content. Required fields depend on `kind`

    - *concave-coverage*, *adversarial-test*: `weights`, `incidence`,
    optional `phi` and `cap`
    - *budget-allocation*: `weights`, `probabilities`
    - *table*: `values`

    **Usage**

    ```python
    spec = OracleSpec.parse_raw(path.read_bytes())
    oracle = spec.build()
    ```
    """

    kind: str
    box: Dict[Element, Union[int, str]]
    claim: Optional[OracleClass]
    weights: Optional[Dict[str, float]]
    incidence: Optional[Dict[str, Dict[Element, float]]]
    phi: Optional[Union[str, Dict[str, str]]]
    cap: Optional[Union[float, Dict[str, float]]]
    probabilities: Optional[Dict[str, Dict[Element, float]]]
    values: Optional[List[TableEntry]]

    KINDS: ClassVar[Dict[str, Tuple[str, ...]]] = {
        ConcaveCoverage.kind: ("weights", "incidence"),
        ConvexCoverage.kind: ("weights", "incidence"),
        BudgetAllocation.kind: ("weights", "probabilities"),
        TableOracle.kind: ("values",),
    }

    @validator("kind")
    def validate_kind(cls, kind: str) -> str:
        """Check kind is a shipped family"""
        if kind not in cls.KINDS:
            raise ValueError(f"Oracle kind must be one of {list(cls.KINDS)}, got '{kind}'")
        return kind

    @root_validator(skip_on_failure=True)
    def validate_required(cls, values: Dict[str, object]) -> Dict[str, object]:
        """Fields required by the kind must be present"""
        kind = values["kind"]
        missing = [field for field in cls.KINDS[kind] if values.get(field) is None]
        if missing:
            raise ValueError(f"Oracle kind '{kind}' requires fields {missing}")
        return values

    @classmethod
    def from_oracle(cls, oracle: GainOracle) -> "OracleSpec":
        return cls.parse_obj(oracle.to_spec())

    def build(self) -> GainOracle:
        """
        Construct the oracle described by this spec

        Raises:
            - ConfigError: parameters are out of range for the family
        """
        try:
            if self.kind in (ConcaveCoverage.kind, ConvexCoverage.kind):
                family = ConcaveCoverage if self.kind == ConcaveCoverage.kind else ConvexCoverage
                extra = {}
                if self.phi is not None:
                    extra["phi"] = self.phi
                if self.cap is not None:
                    extra["cap"] = self.cap
                return family(self.weights, self.incidence, self.box, claim=self.claim, **extra)
            if self.kind == BudgetAllocation.kind:
                return BudgetAllocation(self.weights, self.probabilities, self.box, claim=self.claim)
            return TableOracle(
                [(entry.x, entry.value) for entry in self.values],
                self.box,
                claim=self.claim
            )
        except (TypeError, ValueError) as err:
            raise ConfigError(f"Invalid {self.kind} oracle: {err}") from err


class ProblemInstance(BaseModel):

    """
    maximize g(x) - c(x) subject to x <= b, x(E) <= k

    **Parameters**

    - **ground** (*GroundSet*): ground set E
    - **constraint** (*ConstraintSpec*): box b and budget k
    - **gain** (*GainOracle*): monotone normalized gain g; its box must
    contain every feasible vector
    - **cost** (*CostModel*): linear cost c
    - **stream_order** (*Optional(list[str])*): arrival order of distinct
    ground elements, defaults to the ground set order
    """

    ground: GroundSet
    constraint: ConstraintSpec
    gain: GainOracle
    cost: CostModel
    stream_order: Optional[List[Element]]

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def validate_instance(cls, values: Dict[str, object]) -> Dict[str, object]:
        """Stream order, box and oracle domain must agree with the ground set"""
        ground: GroundSet = values["ground"]
        constraint: ConstraintSpec = values["constraint"]
        gain: GainOracle = values["gain"]
        cost: CostModel = values["cost"]
        order = values.get("stream_order")
        if order is None:
            order = list(ground.elements)
        seen = set()
        for e in order:
            if e not in ground:
                raise ValueError(f"Stream element '{e}' is not in the ground set")
            if e in seen:
                raise ValueError(f"Stream element '{e}' arrives more than once")
            seen.add(e)
        for source, keys in (("box", constraint.box), ("costs", cost.unit_costs)):
            unknown = [e for e in keys if e not in ground]
            if unknown:
                raise ValueError(f"{source} names elements outside the ground set: {unknown}")
        for e in ground.elements:
            if gain.bound(e) < constraint.cap(e):
                raise ValueError(
                    f"Gain oracle box {gain.bound(e)} for '{e}' does not dominate "
                    f"the constraint cap {constraint.cap(e)}"
                )
        values["stream_order"] = list(order)
        return values

    @property
    def k(self) -> int:
        return self.constraint.k

    def objective(self, x: LatticeVector) -> float:
        """
        g(x) - c(x) for a feasible x

        Raises:
            - InfeasibleError: x violates the box or the budget
        """
        self.constraint.ensure_feasible(x)
        return eval_gain(self.gain, x) - eval_cost(self.cost, x)


def eval_gain(oracle: GainOracle, x: LatticeVector) -> float:
    """g(x); counted by the oracle"""
    return oracle.evaluate(x)

def eval_cost(cost: CostModel, x: LatticeVector) -> float:
    """c(x)"""
    return cost.evaluate(x)

def objective(inst: ProblemInstance, x: LatticeVector) -> float:
    """g(x) - c(x), see ProblemInstance.objective"""
    return inst.objective(x)
