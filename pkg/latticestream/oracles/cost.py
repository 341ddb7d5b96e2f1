from typing import Dict

from pydantic import BaseModel

from ..lattice import LatticeVector
from ..types import Element
from ..util import check_nonnegative_values, reuse_validator


class CostModel(BaseModel):

    """
    Linear cost c(x) = sum_e unit_costs(e) * x(e). Elements without an
    entry cost nothing

    **Parameters**

    - **unit_costs** (*dict[str, float]*): nonnegative cost per unit
    """

    unit_costs: Dict[Element, float]

    class Config:
        allow_mutation = False

    _check_costs = reuse_validator("unit_costs", check_nonnegative_values)

    def unit(self, e: Element) -> float:
        """c(chi_e)"""
        return self.unit_costs.get(e, 0.0)

    def evaluate(self, x: LatticeVector) -> float:
        return sum(self.unit_costs.get(e, 0.0) * count for e, count in sorted(x.items()))

    def __call__(self, x: LatticeVector) -> float:
        return self.evaluate(x)
