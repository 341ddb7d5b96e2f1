from .constraint import ConstraintSpec, GroundSet
from .marginal import marginal
from .vector import ZERO, LatticeVector, add_scaled, join, meet, multiset_diff

__all__ = [
    "ConstraintSpec",
    "GroundSet",
    "LatticeVector",
    "ZERO",
    "add_scaled",
    "join",
    "marginal",
    "meet",
    "multiset_diff",
]
