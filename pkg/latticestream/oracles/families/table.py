import math
from typing import Callable, Dict, Iterable, List, Mapping, Tuple, Union

from ...exceptions import OracleDomainError
from ...lattice import LatticeVector
from ...lattice.enumerate import count_points, iter_box
from ...types import Element
from ..base import GainOracle, OracleClass


TableEntries = Union[
    Mapping[LatticeVector, float],
    Iterable[Tuple[Mapping[Element, int], float]]
]


class TableOracle(GainOracle):

    """
    Explicit enumeration of g over every lattice point of a small finite
    box. Gives exact ground truth for property tests and lets tests build
    functions that violate a property on purpose

    **Parameters**

    - **values** (*Mapping[LatticeVector, float] | Iterable[(Mapping, float)]*):
    g at every point of the box, missing points raise `ValueError`
    - **box** (*Mapping[str, int]*): finite declared domain
    - **claim** (*Optional(OracleClass)*): declared class, alpha-weak by default
    """

    kind = "table"
    default_claim = OracleClass.ALPHA_WEAK

    def __init__(
        self,
        values: TableEntries,
        box: Mapping[Element, object],
        claim: OracleClass = None
    ) -> None:
        super().__init__(box, claim)
        if any(math.isinf(b) for b in self._box.values()):
            raise ValueError("Table oracles need a finite box")
        items = values.items() if isinstance(values, Mapping) else values
        table: Dict[LatticeVector, float] = {}
        for point, value in items:
            x = LatticeVector(point)
            self.check_domain(x)
            table[x] = float(value)
        expected = count_points(list(self._box.values()))
        if len(table) != expected:
            raise ValueError(
                f"Table covers {len(table)} of the {expected} points in its box"
            )
        self._table = table

    @classmethod
    def tabulate(
        cls,
        fn: Callable[[LatticeVector], float],
        box: Mapping[Element, int],
        claim: OracleClass = None
    ) -> "TableOracle":
        """Evaluate `fn` at every point of `box` and store the results"""
        elements = list(box)
        values = {}
        for point in iter_box([int(box[e]) for e in elements]):
            x = LatticeVector.from_dense(elements, point)
            values[x] = fn(x)
        return cls(values, box, claim=claim)

    def _value(self, x: LatticeVector) -> float:
        try:
            return self._table[x]
        except KeyError as err:
            raise OracleDomainError(f"No table entry for {x.to_dict()}") from err

    def _spec_fields(self) -> Dict[str, object]:
        entries: List[Dict[str, object]] = [
            {"x": x.to_dict(), "value": value} for x, value in self._table.items()
        ]
        entries.sort(key=lambda entry: sorted(entry["x"].items()))
        return {"values": entries}
