from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Generator,
    Iterable,
    Iterator,
    Mapping,
    Sequence,
    Tuple,
    Union
)

from ..exceptions import LatticeError
from ..types import Element


class LatticeVector(Mapping[Element, int]):

    """
    Immutable sparse vector in N^E. Only positive multiplicities are
    stored, absent coordinates read as 0

    **Usage**

    ```python
    x = LatticeVector({"a": 1, "b": 2})
    y = x.add_scaled("a", 3)     # {a: 4, b: 2}
    x["c"]                       # 0
    x.total, x.support           # 3, frozenset({"a", "b"})
    ```

    **Parameters**

    - **counts** (*Optional(Mapping[str, int])*): coordinate multiplicities.
    Zero entries are dropped, negative or non integer entries raise
    `LatticeError`
    """

    __slots__ = ("_counts", "_total", "_hash")

    def __init__(self, counts: Union[Mapping[Element, int], Iterable[Tuple[Element, int]]] = None) -> None:
        stored: Dict[Element, int] = {}
        if counts is not None:
            items = counts.items() if isinstance(counts, Mapping) else counts
            for e, count in items:
                count = self._validate_count(e, count)
                if count:
                    stored[e] = stored.get(e, 0) + count
        self._counts = stored
        self._total = sum(stored.values())
        self._hash = None

    @classmethod
    def unit(cls, e: Element, l: int = 1) -> "LatticeVector":
        """Return l * chi_e"""
        return cls({e: l})

    @classmethod
    def from_dense(cls, elements: Sequence[Element], counts: Sequence[int]) -> "LatticeVector":
        """Build a vector from parallel element and count sequences"""
        if len(elements) != len(counts):
            raise LatticeError(
                f"Length mismatch, {len(elements)} elements and {len(counts)} counts"
            )
        return cls(zip(elements, counts))

    @property
    def total(self) -> int:
        """x(E), the sum of all multiplicities"""
        return self._total

    @property
    def support(self) -> FrozenSet[Element]:
        """supp+(x)"""
        return frozenset(self._counts)

    @property
    def is_zero(self) -> bool:
        return not self._counts

    def add_scaled(self, e: Element, l: int) -> "LatticeVector":
        """Return x + l * chi_e. l must be nonnegative"""
        l = self._validate_count(e, l)
        if l == 0:
            return self
        counts = dict(self._counts)
        counts[e] = counts.get(e, 0) + l
        return self._from_trusted(counts, self._total + l)

    def join(self, other: Mapping[Element, int]) -> "LatticeVector":
        """Coordinate-wise maximum"""
        counts = dict(self._counts)
        for e, count in other.items():
            if count > counts.get(e, 0):
                counts[e] = count
        return LatticeVector(counts)

    def meet(self, other: Mapping[Element, int]) -> "LatticeVector":
        """Coordinate-wise minimum"""
        counts = {}
        for e, count in self._counts.items():
            low = min(count, other.get(e, 0))
            if low:
                counts[e] = low
        return LatticeVector(counts)

    def multiset_diff(self, other: Mapping[Element, int]) -> "LatticeVector":
        """(x - y) v 0 per coordinate"""
        counts = {}
        for e, count in self._counts.items():
            rest = count - other.get(e, 0)
            if rest > 0:
                counts[e] = rest
        return LatticeVector(counts)

    def to_dict(self) -> Dict[Element, int]:
        """Plain dict with keys in sorted order"""
        return {e: self._counts[e] for e in sorted(self._counts)}

    def to_dense(self, elements: Sequence[Element]) -> Tuple[int, ...]:
        return tuple(self._counts.get(e, 0) for e in elements)

    def __add__(self, other: Mapping[Element, int]) -> "LatticeVector":
        if not isinstance(other, Mapping):
            return NotImplemented
        counts = dict(self._counts)
        for e, count in other.items():
            counts[e] = counts.get(e, 0) + count
        return LatticeVector(counts)

    def __le__(self, other: Mapping[Element, int]) -> bool:
        if not isinstance(other, Mapping):
            return NotImplemented
        return all(count <= other.get(e, 0) for e, count in self._counts.items())

    def __ge__(self, other: Mapping[Element, int]) -> bool:
        if not isinstance(other, Mapping):
            return NotImplemented
        return all(self.get(e, 0) >= count for e, count in other.items())

    def __getitem__(self, e: Element) -> int:
        return self._counts.get(e, 0)

    def __contains__(self, e: object) -> bool:
        return e in self._counts

    def __iter__(self) -> Iterator[Element]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LatticeVector):
            return self._counts == other._counts
        if isinstance(other, Mapping):
            return self._counts == {e: c for e, c in other.items() if c}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LatticeVector({self.to_dict()})"

    # pydantic v1 custom type hooks

    @classmethod
    def __get_validators__(cls) -> Generator[Callable[[Any], "LatticeVector"], None, None]:
        yield cls.validate

    @classmethod
    def validate(cls, value: Any) -> "LatticeVector":
        if isinstance(value, LatticeVector):
            return value
        if isinstance(value, Mapping):
            try:
                return cls(value)
            except LatticeError as err:
                raise ValueError(str(err)) from err
        raise TypeError(f"Cannot build LatticeVector from {type(value)}")

    @classmethod
    def _from_trusted(cls, counts: Dict[Element, int], total: int) -> "LatticeVector":
        vector = cls.__new__(cls)
        vector._counts = counts
        vector._total = total
        vector._hash = None
        return vector

    @staticmethod
    def _validate_count(e: Element, count: Any) -> int:
        if isinstance(count, bool) or not isinstance(count, int):
            if isinstance(count, float) and count.is_integer():
                count = int(count)
            else:
                raise LatticeError(f"Multiplicity for '{e}' must be an integer, got {count!r}")
        if count < 0:
            raise LatticeError(f"Multiplicity for '{e}' must be nonnegative, got {count}")
        return count


ZERO = LatticeVector()


def add_scaled(x: LatticeVector, e: Element, l: int) -> LatticeVector:
    """x + l * chi_e"""
    return x.add_scaled(e, l)

def join(x: LatticeVector, y: LatticeVector) -> LatticeVector:
    """x v y"""
    return x.join(y)

def meet(x: LatticeVector, y: LatticeVector) -> LatticeVector:
    """x ^ y"""
    return x.meet(y)

def multiset_diff(x: LatticeVector, y: LatticeVector) -> LatticeVector:
    """{x} \\ {y}"""
    return x.multiset_diff(y)
