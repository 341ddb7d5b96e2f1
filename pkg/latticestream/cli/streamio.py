import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import orjson
from pydantic import BaseModel, StrictInt, ValidationError, validator

from ..exceptions import ConfigError, StreamFormatError
from ..lattice import ConstraintSpec, GroundSet
from ..oracles import CostModel, GainOracle, OracleSpec, ProblemInstance
from ..types import Element
from ..util import dump_canonical, json_load_content


logger = logging.getLogger(__name__)

HEADER = "header"
ARRIVE = "arrive"


class StreamHeader(BaseModel):

    """
    First record of a stream file

    ```json
    {"type": "header", "elements": ["a", "b"], "box": {"a": 2, "b": "unbounded"},
     "costs": {"a": 0.1}, "k": 3, "oracle": "instance.oracle.json"}
    ```

    `oracle` is a path, relative to the stream file, or an inline oracle
    specification object
    """

    type: str
    elements: List[Element]
    box: Dict[Element, Union[int, str]]
    costs: Dict[Element, float] = {}
    k: StrictInt
    oracle: Union[str, Dict[str, Any]]

    @validator("type")
    def validate_type(cls, type_: str) -> str:
        if type_ != HEADER:
            raise ValueError(f"first record must have type '{HEADER}', got '{type_}'")
        return type_


def _load_line(raw: bytes, line: int) -> Dict[str, Any]:
    try:
        record = json_load_content(raw)
    except orjson.JSONDecodeError as err:
        raise StreamFormatError(f"line {line}: malformed JSON, {err}", line=line) from err
    if not isinstance(record, dict):
        raise StreamFormatError(f"line {line}: record must be a JSON object", line=line)
    return record

def load_oracle(ref: Union[str, Dict[str, Any]], base_dir: Path = None) -> GainOracle:
    """
    Build the oracle for a header reference or an `--oracle` path

    Raises:
        - ConfigError: unreadable or invalid oracle specification
    """
    if isinstance(ref, str):
        path = Path(ref)
        if not path.is_absolute() and base_dir is not None:
            path = base_dir / path
        try:
            content = json_load_content(path.read_bytes())
        except OSError as err:
            raise ConfigError(f"Cannot read oracle file '{path}': {err}") from err
        except orjson.JSONDecodeError as err:
            raise ConfigError(f"Oracle file '{path}' is not valid JSON: {err}") from err
    else:
        content = ref
    try:
        spec = OracleSpec.parse_obj(content)
    except ValidationError as err:
        raise ConfigError(f"Invalid oracle specification: {err}") from err
    return spec.build()

def read_stream(path: Union[str, Path], oracle: Union[str, Path] = None) -> ProblemInstance:
    """
    Parse a stream file into a ProblemInstance whose stream order is the
    body order. `oracle` overrides the header's oracle reference

    Raises:
        - StreamFormatError: missing header, malformed record, unknown or
        repeated element; carries the 1 based line number
        - ConfigError: invalid header values or oracle
    """
    path = Path(path)
    try:
        lines = path.read_bytes().splitlines()
    except OSError as err:
        raise ConfigError(f"Cannot read stream file '{path}': {err}") from err

    header: Optional[StreamHeader] = None
    order: List[Element] = []
    seen = set()
    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        record = _load_line(raw, number)
        if header is None:
            try:
                header = StreamHeader.parse_obj(record)
            except ValidationError as err:
                if record.get("type") != HEADER:
                    raise StreamFormatError(
                        f"line {number}: stream must start with a header record", line=number
                    ) from err
                raise ConfigError(f"Invalid stream header: {err}") from err
            ground = set(header.elements)
            continue
        if record.get("type") != ARRIVE or not isinstance(record.get("e"), str):
            raise StreamFormatError(
                f"line {number}: expected {{\"type\": \"{ARRIVE}\", \"e\": <id>}}", line=number
            )
        e = record["e"]
        if e not in ground:
            raise StreamFormatError(f"line {number}: unknown element '{e}'", line=number)
        if e in seen:
            raise StreamFormatError(f"line {number}: element '{e}' arrives twice", line=number)
        seen.add(e)
        order.append(e)
    if header is None:
        raise StreamFormatError("line 1: stream file has no header record", line=1)

    gain = load_oracle(str(oracle) if oracle is not None else header.oracle, path.parent)
    try:
        return ProblemInstance(
            ground=GroundSet(elements=header.elements),
            constraint=ConstraintSpec(box=header.box, k=header.k),
            gain=gain,
            cost=CostModel(unit_costs=header.costs),
            stream_order=order
        )
    except ValidationError as err:
        raise ConfigError(f"Invalid instance: {err}") from err

def _dump_line(record: Dict[str, Any]) -> bytes:
    return orjson.dumps(record, option=orjson.OPT_SORT_KEYS) + b"\n"

def oracle_path(stream_path: Union[str, Path]) -> Path:
    """Oracle file paired with a stream file: s.jsonl -> s.oracle.json"""
    stream_path = Path(stream_path)
    return stream_path.with_name(f"{stream_path.stem}.oracle.json")

def write_stream(inst: ProblemInstance, path: Union[str, Path]) -> Tuple[Path, Path]:
    """Write the stream file and its paired oracle file, return both paths"""
    path = Path(path)
    spec_path = oracle_path(path)
    box = {
        e: ("unbounded" if math.isinf(bound) else bound)
        for e, bound in inst.constraint.box.items()
    }
    header = {
        "type": HEADER,
        "elements": list(inst.ground.elements),
        "box": box,
        "costs": dict(inst.cost.unit_costs),
        "k": inst.k,
        "oracle": spec_path.name,
    }
    body = b"".join(_dump_line({"type": ARRIVE, "e": e}) for e in inst.stream_order)
    try:
        path.write_bytes(_dump_line(header) + body)
        spec_path.write_bytes(dump_canonical(inst.gain.to_spec()))
    except OSError as err:
        raise ConfigError(f"Cannot write stream '{path}': {err}") from err
    logger.debug("wrote %s and %s", path, spec_path)
    return path, spec_path
