import math
from typing import Dict, List, Optional

from pydantic import BaseModel, validator

from ..exceptions import InfeasibleError
from ..types import BoxBound, Element
from ..util import parse_bound
from .vector import LatticeVector


class GroundSet(BaseModel):

    """
    Ordered ground set E. Iteration order is the arrival order used
    when no explicit stream order is given

    **Parameters**

    - **elements** (*list[str]*): unique element identifiers, at least one
    """

    elements: List[Element]

    class Config:
        allow_mutation = False

    @validator("elements")
    def validate_elements(cls, elements: List[Element]) -> List[Element]:
        """Identifiers must be unique and the set nonempty"""
        if not elements:
            raise ValueError("Ground set must contain at least one element")
        seen = set()
        for e in elements:
            if e in seen:
                raise ValueError(f"Duplicate element identifier '{e}'")
            seen.add(e)
        return elements

    @property
    def n(self) -> int:
        return len(self.elements)

    def __contains__(self, e: object) -> bool:
        return e in self.elements


class ConstraintSpec(BaseModel):

    """
    Box and cardinality constraints `x <= b`, `x(E) <= k`

    **Parameters**

    - **box** (*dict[str, int | "unbounded"]*): per element upper bound on the
    multiplicity. Elements missing from the box are bounded by 0
    - **k** (*int*): cardinality budget, nonnegative
    """

    box: Dict[Element, float]
    k: int

    class Config:
        allow_mutation = False

    @validator("box", pre=True)
    def parse_box(cls, box: Dict[Element, object]) -> Dict[Element, BoxBound]:
        """Map unbounded tokens to math.inf and check entries are >= 0"""
        if not isinstance(box, dict):
            raise TypeError(f"Box must be a mapping, got {type(box)}")
        return {e: parse_bound(bound) for e, bound in box.items()}

    @validator("box")
    def restore_integer_bounds(cls, box: Dict[Element, float]) -> Dict[Element, BoxBound]:
        """Finite bounds are kept as ints after float coercion"""
        return {e: bound if math.isinf(bound) else int(bound) for e, bound in box.items()}

    @validator("k")
    def validate_k(cls, k: int) -> int:
        if k < 0:
            raise ValueError(f"Cardinality budget must be nonnegative, got {k}")
        return k

    def bound(self, e: Element) -> BoxBound:
        """b(e), math.inf when unbounded"""
        return self.box.get(e, 0)

    def cap(self, e: Element) -> int:
        """Largest multiplicity e can take in any feasible vector"""
        return int(min(self.bound(e), self.k))

    def headroom(self, x: LatticeVector, e: Element) -> int:
        """Search ceiling min{b(e) - x(e), k - x(E)}, never negative"""
        room = min(self.bound(e) - x[e], self.k - x.total)
        return max(int(room), 0)

    def violation(self, x: LatticeVector) -> Optional[str]:
        """Describe the first violated constraint or return None"""
        if x.total > self.k:
            return f"cardinality: x(E) = {x.total} exceeds k = {self.k}"
        for e in sorted(x):
            if x[e] > self.bound(e):
                return f"box: x({e}) = {x[e]} exceeds b({e}) = {self.bound(e)}"
        return None

    def is_feasible(self, x: LatticeVector) -> bool:
        return self.violation(x) is None

    def ensure_feasible(self, x: LatticeVector) -> None:
        """
        Raises:
            - InfeasibleError: x violates the box or the cardinality budget
        """
        violation = self.violation(x)
        if violation is not None:
            raise InfeasibleError(
                f"Infeasible vector {x.to_dict()}, {violation}",
                constraint=violation.split(":", 1)[0]
            )

    def is_bounded(self, e: Element) -> bool:
        return not math.isinf(self.bound(e))
