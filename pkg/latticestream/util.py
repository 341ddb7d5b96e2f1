import math
from enum import Enum
from functools import partial
from typing import (
    Any,
    Callable,
    Dict,
    Mapping,
    Optional,
    Union
)

import orjson
from pydantic import BaseModel, validator

from .types import BoxBound, JSONType


# all value comparisons share one absolute tolerance
TOLERANCE = 1e-9

# reports round floats to this many decimal places
REPORT_DECIMALS = 9

UNBOUNDED_TOKENS = ("unbounded", "inf", "+inf", "infinity")


def json_dump_content(
    content: JSONType,
    *,
    default: Optional[Callable[[Any], Any]] = None
) -> str:
    """
    Helper to decode orjson.dumps which produces bytes
    """
    return orjson.dumps(content, default=default).decode()

def json_load_content(content: Union[bytes, str]) -> JSONType:
    """
    Load JSON content from bytes or str. Raises orjson.JSONDecodeError
    on malformed input, callers decide how to report it
    """
    if isinstance(content, str):
        content = content.encode("utf-8")
    return orjson.loads(content)

def canonicalize(obj: Any, decimals: int = REPORT_DECIMALS) -> JSONType:
    """
    Convert report content into plain JSON types with every float rounded
    to a fixed number of decimal places. Non finite floats become strings
    so they survive a round trip
    """
    if isinstance(obj, BaseModel):
        return canonicalize(obj.dict(), decimals)
    if isinstance(obj, Enum):
        return canonicalize(obj.value, decimals)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        rounded = round(obj, decimals)
        # avoid "-0.0" flapping between platforms
        return 0.0 if rounded == 0 else rounded
    if isinstance(obj, Mapping):
        return {str(key): canonicalize(val, decimals) for key, val in obj.items()}
    if hasattr(obj, "to_dict"):
        return canonicalize(obj.to_dict(), decimals)
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [canonicalize(item, decimals) for item in obj]
        if isinstance(obj, (set, frozenset)):
            items.sort(key=lambda item: orjson.dumps(item, option=orjson.OPT_SORT_KEYS))
        return items
    raise TypeError(f"Cannot canonicalize object of type {type(obj)}")

def dump_canonical(content: Any) -> bytes:
    """
    Serialize report content canonically: sorted keys, fixed float
    precision, trailing newline. Identical inputs give identical bytes
    """
    return orjson.dumps(
        canonicalize(content),
        option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE
    )

def parse_bound(raw: Any) -> BoxBound:
    """
    Parse a box entry. `None` and the unbounded tokens map to math.inf,
    finite entries must be nonnegative integers
    """
    if raw is None:
        return math.inf
    if isinstance(raw, str):
        if raw.strip().lower() in UNBOUNDED_TOKENS:
            return math.inf
        raise ValueError(f"Invalid box entry '{raw}'")
    if isinstance(raw, float):
        if math.isinf(raw) and raw > 0:
            return math.inf
        if not raw.is_integer():
            raise ValueError(f"Box entries must be integers, got {raw}")
        raw = int(raw)
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise TypeError(f"Invalid type for box entry '{type(raw)}'")
    if raw < 0:
        raise ValueError(f"Box entries must be nonnegative, got {raw}")
    return raw

def check_nonnegative_values(values: Dict[str, float]) -> Dict[str, float]:
    """
    Shared validator: every value in the mapping is a finite number >= 0
    """
    for key, value in values.items():
        if not math.isfinite(value) or value < 0:
            raise ValueError(f"Value for '{key}' must be finite and nonnegative, got {value}")
    return values

def reuse_validator(key: str, validate_func: Callable[[Any], Any]) -> Any:
    """
    Helper function for pydantic reuse validator
    """
    if isinstance(validate_func, partial):
        validate_func.__name__ = validate_func.func.__name__
    return validator(key, allow_reuse=True, check_fields=False)(validate_func)
