"""Canonical JSON forms, one object per line.

  LinkedPartition  {"n":9,"arcs":[[1,2],[1,4],...]}
  Permutation      {"n":3,"values":[1,3,2]}
  Tableau          {"n":11,"columns":[3,4,6,8,10],"filling":[[1,0,0,1,0],...]}
  DotDiagram       {"n":11,"columns":[3,4,6,8,10],"dots":[[1,4],[1,10],...]}
  Shape            {"n":9,"columns":[4,7,9]}

Rows are implied as the complement of columns, in increasing order, and every
row lists its cells left to right.  Output has no whitespace and keys in the
order above, so printing a parsed canonical line reproduces it byte for byte.
"""

import json
import logging
from typing import Any, Dict, List, Union

from . import constants as c
from .enums import ObjectKind
from .linked_partition import LinkedPartition, validate_arcs
from .permutation import Permutation, validate_permutation
from .tableau import DotDiagram, PermutationTableau, Shape, make_dot_diagram, make_shape, validate_tableau


logger = logging.getLogger("ptab.serialization")
logger.setLevel(logging.INFO)

Serializable = Union[LinkedPartition, Permutation, PermutationTableau, DotDiagram, Shape]


class MalformedInputException(ValueError):
  """Raised when a line is not JSON or does not have the canonical schema."""


def to_dict(obj: Serializable) -> Dict[str, Any]:
  if isinstance(obj, LinkedPartition):
    return {c.nKey: obj.n, c.arcsKey: [list(arc) for arc in obj.arcs]}
  if isinstance(obj, Permutation):
    return {c.nKey: obj.n, c.valuesKey: list(obj.values)}
  if isinstance(obj, PermutationTableau):
    return {
      c.nKey: obj.shape.n,
      c.columnsKey: list(obj.shape.columns),
      c.fillingKey: [list(row) for row in obj.filling],
    }
  if isinstance(obj, DotDiagram):
    return {
      c.nKey: obj.shape.n,
      c.columnsKey: list(obj.shape.columns),
      c.dotsKey: [list(dot) for dot in obj.dots],
    }
  if isinstance(obj, Shape):
    return {c.nKey: obj.n, c.columnsKey: list(obj.columns)}
  raise TypeError(f"cannot serialize {obj!r}")


def dumps(payload: Any) -> str:
  return json.dumps(payload, separators=c.jsonSeparators)


def to_json(obj: Serializable) -> str:
  return dumps(to_dict(obj))


def _load(line: str) -> Dict[str, Any]:
  try:
    payload = json.loads(line)
  except json.JSONDecodeError as e:
    raise MalformedInputException(f"not valid JSON: {e}") from e
  if not isinstance(payload, dict):
    raise MalformedInputException(f"expected a JSON object, got {type(payload).__name__}")
  return payload


def _require_keys(payload: Dict[str, Any], keys: List[str]) -> None:
  if sorted(payload) != sorted(keys):
    raise MalformedInputException(f"expected keys {keys}, got {list(payload)}")


def _int_list(payload: Dict[str, Any], key: str) -> List[Any]:
  value = payload[key]
  if not isinstance(value, list):
    raise MalformedInputException(f"{key!r} must be a list")
  return value


def _pairs(payload: Dict[str, Any], key: str) -> List[List[int]]:
  value = _int_list(payload, key)
  if any(not isinstance(pair, list) or len(pair) != 2 for pair in value):
    raise MalformedInputException(f"every entry of {key!r} must be a pair")
  return value


def lp_from_dict(payload: Dict[str, Any]) -> LinkedPartition:
  _require_keys(payload, [c.nKey, c.arcsKey])
  return validate_arcs(payload[c.nKey], _pairs(payload, c.arcsKey))


def perm_from_dict(payload: Dict[str, Any]) -> Permutation:
  _require_keys(payload, [c.nKey, c.valuesKey])
  return validate_permutation(_int_list(payload, c.valuesKey), payload[c.nKey])


def tableau_from_dict(payload: Dict[str, Any]) -> PermutationTableau:
  _require_keys(payload, [c.nKey, c.columnsKey, c.fillingKey])
  shape = make_shape(payload[c.nKey], _int_list(payload, c.columnsKey))
  filling = _int_list(payload, c.fillingKey)
  if any(not isinstance(row, list) for row in filling):
    raise MalformedInputException("every row of the filling must be a list")
  return validate_tableau(shape, filling)


def dots_from_dict(payload: Dict[str, Any]) -> DotDiagram:
  _require_keys(payload, [c.nKey, c.columnsKey, c.dotsKey])
  shape = make_shape(payload[c.nKey], _int_list(payload, c.columnsKey))
  return make_dot_diagram(shape, _pairs(payload, c.dotsKey))


def parse_line(line: str, kind: ObjectKind) -> Serializable:
  """Parses one canonical line of the given family.

  Raises:
    MalformedInputException for JSON or schema errors; the family's own
    validation exception when the object itself is invalid.
  """
  payload = _load(line)
  if kind == ObjectKind.LinkedPartition:
    return lp_from_dict(payload)
  if kind == ObjectKind.Permutation:
    return perm_from_dict(payload)
  return tableau_from_dict(payload)


def parse_any(line: str) -> Serializable:
  """Parses a linked partition, permutation, tableau or dot diagram, chosen by its keys."""
  payload = _load(line)
  if c.arcsKey in payload:
    return lp_from_dict(payload)
  if c.valuesKey in payload:
    return perm_from_dict(payload)
  if c.fillingKey in payload:
    return tableau_from_dict(payload)
  if c.dotsKey in payload:
    return dots_from_dict(payload)
  raise MalformedInputException(f"cannot tell the object family from keys {list(payload)}")
