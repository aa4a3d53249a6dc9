"""
JSON codec
Instance schema {"n", "k", "C", "d", "q"} with rationals as integers or "p/q" strings
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

from exactmath import Mat, scalar_to_json, to_scalar
from utils.errors import DimensionError, InputFormatError
from .instance import Instance, MatrixTuple, SolutionTuple


def to_jsonable(obj: Any) -> Any:
    """Convert exact objects into plain JSON values"""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (int, Fraction)):
        return scalar_to_json(obj)
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Mat):
        return obj.to_json()
    if isinstance(obj, MatrixTuple):
        return [m.to_json() for m in obj]
    if isinstance(obj, SolutionTuple):
        return [to_jsonable(x) for x in obj.xs]
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, dict):
        return {str(key): to_jsonable(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise InputFormatError(f"Cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    """Deterministic JSON text (sorted keys)"""
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2)


def _parse_scalar(value: Any, where: str):
    if isinstance(value, float):
        raise InputFormatError(f"{where}: floating-point value {value!r}; write rationals as integers or \"p/q\" strings")
    try:
        return to_scalar(value)
    except InputFormatError as e:
        raise InputFormatError(f"{where}: {e}") from e


def _parse_vector(value: Any, where: str) -> tuple:
    if not isinstance(value, list):
        raise InputFormatError(f"{where}: expected a list, got {type(value).__name__}")
    return tuple(_parse_scalar(v, f"{where}[{i}]") for i, v in enumerate(value))


def _parse_matrix(value: Any, where: str) -> Mat:
    if not isinstance(value, list) or not value:
        raise InputFormatError(f"{where}: expected a non-empty list of rows")
    rows = [_parse_vector(r, f"{where}[{i}]") for i, r in enumerate(value)]
    if any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError(f"{where}: rows have different lengths")
    if len(rows[0]) != len(rows):
        raise DimensionError(f"{where}: matrix is {len(rows)}x{len(rows[0])}, expected square")
    return Mat.from_rows(rows)


def _require_mapping(doc: Any) -> Dict[str, Any]:
    if not isinstance(doc, dict):
        raise InputFormatError(f"Expected a JSON object, got {type(doc).__name__}")
    return doc


def matrix_tuple_from_dict(doc: Dict[str, Any]) -> MatrixTuple:
    doc = _require_mapping(doc)
    if "C" not in doc:
        raise InputFormatError("Missing required key \"C\"")
    members = doc["C"]
    if not isinstance(members, list) or len(members) < 2:
        raise InputFormatError("\"C\" must list at least two matrices (C0, C1, ...)")
    mats = tuple(_parse_matrix(m, f"C[{j}]") for j, m in enumerate(members))

    n = mats[0].n_rows
    if "n" in doc and doc["n"] != n:
        raise DimensionError(f"Declared n={doc['n']} but C0 is {n}x{n}")
    if "k" in doc and doc["k"] != len(mats) - 1:
        raise DimensionError(f"Declared k={doc['k']} but C has {len(mats)} members")
    return MatrixTuple(mats)


def instance_from_dict(doc: Dict[str, Any]) -> Instance:
    doc = _require_mapping(doc)
    c = matrix_tuple_from_dict(doc)
    if "q" not in doc:
        raise InputFormatError("Missing required key \"q\"")
    q = _parse_vector(doc["q"], "q")
    d_doc = doc.get("d", [])
    if not isinstance(d_doc, list):
        raise InputFormatError("\"d\" must be a list of vectors")
    d = tuple(_parse_vector(dj, f"d[{j}]") for j, dj in enumerate(d_doc))
    return Instance(c, d, q)


def matrix_tuple_to_dict(c: MatrixTuple) -> Dict[str, Any]:
    return {"n": c.n, "k": c.k, "C": [m.to_json() for m in c]}


def instance_to_dict(inst: Instance) -> Dict[str, Any]:
    doc = matrix_tuple_to_dict(inst.c)
    doc["d"] = to_jsonable(inst.d)
    doc["q"] = to_jsonable(inst.q)
    return doc


def solution_tuple_to_dict(x: SolutionTuple) -> Dict[str, List]:
    return {"x": to_jsonable(x)}


def solution_tuple_from_dict(doc: Dict[str, Any]) -> SolutionTuple:
    doc = _require_mapping(doc)
    blocks = doc.get("x")
    if not isinstance(blocks, list):
        raise InputFormatError("Missing required key \"x\"")
    return SolutionTuple(tuple(_parse_vector(b, f"x[{j}]") for j, b in enumerate(blocks)))
