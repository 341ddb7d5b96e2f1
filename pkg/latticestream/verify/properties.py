import itertools
import logging
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel

from ..lattice import ZERO, ConstraintSpec, LatticeVector
from ..lattice.enumerate import (
    Point,
    box_caps,
    bump,
    ensure_enumerable,
    iter_box,
    predecessors
)
from ..oracles import GainOracle
from ..types import Element
from ..util import TOLERANCE


logger = logging.getLogger(__name__)

# lattice points a property check will evaluate
PROPERTY_LIMIT = 10 ** 5

# the join/meet pass compares all pairs, so it only runs on small boxes
PAIRWISE_LIMIT = 400


class Witness(BaseModel):

    """
    Counterexample to a property. `lhs` and `rhs` are the two sides of the
    violated inequality `lhs <= rhs`
    """

    x: LatticeVector
    y: LatticeVector
    e: Optional[Element]
    lhs: float
    rhs: float


class PropertyCheck(BaseModel):
    """Outcome of an exhaustive property check"""
    name: str
    passed: bool
    checked: int
    witness: Optional[Witness]

    def __bool__(self) -> bool:
        return self.passed


class BoxTable:

    """
    g evaluated once at every point of the full box b. Unbounded box
    entries fall back to k and every entry is clipped to the oracle's own
    domain

    Raises:
        - InstanceTooLargeError: the box has more than `limit` points
    """

    def __init__(self, o: GainOracle, box: ConstraintSpec, limit: int = PROPERTY_LIMIT) -> None:
        elements, caps = box_caps(box)
        self.elements: List[Element] = elements
        self.caps: List[int] = [int(min(cap, o.bound(e))) for e, cap in zip(elements, caps)]
        ensure_enumerable(self.caps, limit, what="property check box")
        self.values: Dict[Point, float] = {
            point: o.evaluate(self.vector(point)) for point in iter_box(self.caps)
        }

    def vector(self, point: Point) -> LatticeVector:
        return LatticeVector.from_dense(self.elements, point)

    def points(self) -> Iterator[Point]:
        """Points in lexicographic order, every predecessor before its successors"""
        return iter_box(self.caps)

    def marginal(self, point: Point, i: int) -> float:
        """g(chi_i | point)"""
        return self.values[bump(point, i)] - self.values[point]

    def down_minima(
        self,
        i: int,
        same_coordinate: bool = False
    ) -> Iterator[Tuple[Point, float, Optional[Tuple[float, Point]]]]:
        """
        For every point y with y(i) < cap(i) yield (y, g(chi_i | y), best)
        where best is the smallest marginal g(chi_i | x) over x < y with its
        point, or None when y has no predecessor. With `same_coordinate`
        only x with x(i) = y(i) are considered
        """
        minima: Dict[Point, Tuple[float, Point]] = {}
        for point in self.points():
            if point[i] >= self.caps[i]:
                continue
            d = self.marginal(point, i)
            below: Optional[Tuple[float, Point]] = None
            for j, pred in predecessors(point):
                if same_coordinate and j == i:
                    continue
                candidate = minima[pred]
                if below is None or candidate[0] < below[0]:
                    below = candidate
            yield point, d, below
            minima[point] = (d, point) if below is None or d <= below[0] else below


def _marginal_witness(table: BoxTable, i: int, lower: Point, upper: Point) -> Witness:
    return Witness(
        x=table.vector(lower),
        y=table.vector(upper),
        e=table.elements[i],
        lhs=table.marginal(upper, i),
        rhs=table.marginal(lower, i)
    )

def _check_marginals(
    name: str,
    table: BoxTable,
    tolerance: float,
    same_coordinate: bool
) -> PropertyCheck:
    checked = 0
    for i in range(len(table.elements)):
        for point, d, below in table.down_minima(i, same_coordinate):
            checked += 1
            if below is not None and d > below[0] + tolerance:
                logger.debug("%s violated at e=%s, x=%s, y=%s", name, table.elements[i], below[1], point)
                return PropertyCheck(
                    name=name,
                    passed=False,
                    checked=checked,
                    witness=_marginal_witness(table, i, below[1], point)
                )
    return PropertyCheck(name=name, passed=True, checked=checked, witness=None)

def check_dr(
    o: GainOracle,
    box: ConstraintSpec,
    limit: int = PROPERTY_LIMIT,
    tolerance: float = TOLERANCE
) -> PropertyCheck:
    """
    Exhaustively verify g(y + chi_e) - g(y) <= g(x + chi_e) - g(x) for all
    x <= y and e with y + chi_e in the box. A failure carries the witness
    triple (x, y, e)

    Raises:
        - InstanceTooLargeError: the box has more than `limit` points
    """
    table = BoxTable(o, box, limit)
    return _check_marginals("DR-submodular", table, tolerance, same_coordinate=False)

def check_lattice_submodular(
    o: GainOracle,
    box: ConstraintSpec,
    limit: int = PROPERTY_LIMIT,
    tolerance: float = TOLERANCE
) -> PropertyCheck:
    """
    Verify lattice submodularity. First over comparable pairs x <= y with
    x(e) = y(e): g(y + chi_e) - g(y) <= g(x + chi_e) - g(x). Then, on boxes
    of at most `PAIRWISE_LIMIT` points, g(x v y) + g(x ^ y) <= g(x) + g(y)
    over incomparable pairs

    Raises:
        - InstanceTooLargeError: the box has more than `limit` points
    """
    name = "lattice-submodular"
    table = BoxTable(o, box, limit)
    result = _check_marginals(name, table, tolerance, same_coordinate=True)
    if not result.passed or len(table.values) > PAIRWISE_LIMIT:
        return result
    checked = result.checked
    for p, q in itertools.combinations(table.values, 2):
        upper = tuple(max(a, b) for a, b in zip(p, q))
        lower = tuple(min(a, b) for a, b in zip(p, q))
        if upper in (p, q):
            continue
        checked += 1
        lhs = table.values[upper] + table.values[lower]
        rhs = table.values[p] + table.values[q]
        if lhs > rhs + tolerance:
            return PropertyCheck(
                name=name,
                passed=False,
                checked=checked,
                witness=Witness(x=table.vector(p), y=table.vector(q), e=None, lhs=lhs, rhs=rhs)
            )
    return PropertyCheck(name=name, passed=True, checked=checked, witness=None)

def check_monotone(
    o: GainOracle,
    box: ConstraintSpec,
    limit: int = PROPERTY_LIMIT,
    tolerance: float = TOLERANCE
) -> PropertyCheck:
    """Verify g(x) <= g(y) whenever y covers x in the box"""
    table = BoxTable(o, box, limit)
    checked = 0
    for point in table.points():
        for j, pred in predecessors(point):
            checked += 1
            if table.values[pred] > table.values[point] + tolerance:
                return PropertyCheck(
                    name="monotone",
                    passed=False,
                    checked=checked,
                    witness=Witness(
                        x=table.vector(pred),
                        y=table.vector(point),
                        e=table.elements[j],
                        lhs=table.values[pred],
                        rhs=table.values[point]
                    )
                )
    return PropertyCheck(name="monotone", passed=True, checked=checked, witness=None)

def check_normalized(o: GainOracle, tolerance: float = TOLERANCE) -> PropertyCheck:
    """Verify g(0) = 0"""
    value = o.evaluate(ZERO)
    if abs(value) <= tolerance:
        return PropertyCheck(name="normalized", passed=True, checked=1, witness=None)
    return PropertyCheck(
        name="normalized",
        passed=False,
        checked=1,
        witness=Witness(x=ZERO, y=ZERO, e=None, lhs=value, rhs=0.0)
    )

def estimate_alpha(
    o: GainOracle,
    box: ConstraintSpec,
    limit: int = PROPERTY_LIMIT,
    tolerance: float = TOLERANCE
) -> float:
    """
    Largest alpha with alpha * g(chi_e | t) <= g(chi_e | s) for all s <= t
    in the box: the minimum of g(chi_e | s) / g(chi_e | t) over triples
    with g(chi_e | t) > 0, clamped to [0, 1]. Returns 1 when no marginal
    is positive

    Raises:
        - InstanceTooLargeError: the box has more than `limit` points
    """
    table = BoxTable(o, box, limit)
    alpha = 1.0
    for i in range(len(table.elements)):
        for _, d, below in table.down_minima(i):
            if d <= tolerance:
                continue
            smallest = d if below is None else min(d, below[0])
            if smallest >= d - tolerance:
                continue
            alpha = min(alpha, smallest / d)
    return min(max(alpha, 0.0), 1.0)
