import itertools
import math
from typing import Iterator, List, Sequence, Tuple

from ..exceptions import InstanceTooLargeError
from ..types import Element
from .constraint import ConstraintSpec

Point = Tuple[int, ...]


def box_caps(box: ConstraintSpec, elements: Sequence[Element] = None) -> Tuple[List[Element], List[int]]:
    """
    Elements and per element caps of the full box b. Unbounded entries
    fall back to k, the budget alone bounds them
    """
    elements = list(elements) if elements is not None else list(box.box)
    caps = [
        int(box.bound(e)) if box.is_bounded(e) else box.k
        for e in elements
    ]
    return elements, caps

def count_points(caps: Sequence[int]) -> int:
    """Number of lattice points in the box prod(cap + 1)"""
    return math.prod(cap + 1 for cap in caps)

def ensure_enumerable(caps: Sequence[int], limit: int, what: str = "box") -> int:
    """
    Raises:
        - InstanceTooLargeError: the box has more than `limit` points
    """
    size = count_points(caps)
    if size > limit:
        raise InstanceTooLargeError(
            f"{what} has {size} lattice points, limit is {limit}",
            size=size,
            limit=limit
        )
    return size

def iter_box(caps: Sequence[int]) -> Iterator[Point]:
    """All points 0 <= p <= caps in lexicographic order"""
    return itertools.product(*(range(cap + 1) for cap in caps))

def iter_budget(caps: Sequence[int], k: int) -> Iterator[Point]:
    """
    Points of the box with total <= k in lexicographic order. Branches
    whose partial sum already exceeds k are pruned
    """
    n = len(caps)
    point = [0] * n

    def descend(i: int, used: int) -> Iterator[Point]:
        if i == n:
            yield tuple(point)
            return
        for count in range(min(caps[i], k - used) + 1):
            point[i] = count
            yield from descend(i + 1, used + count)
        point[i] = 0

    if k < 0:
        return iter(())
    return descend(0, 0)

def predecessors(point: Point) -> Iterator[Tuple[int, Point]]:
    """Points obtained by removing one unit from one coordinate"""
    for i, count in enumerate(point):
        if count:
            yield i, point[:i] + (count - 1,) + point[i + 1:]

def bump(point: Point, i: int, l: int = 1) -> Point:
    return point[:i] + (point[i] + l,) + point[i + 1:]
