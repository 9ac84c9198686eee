import pytest

from linkedpartitions.bijections import shape_of
from linkedpartitions.enums import ObjectKind
from linkedpartitions.linked_partition import DuplicateRightEndpointException, LinkedPartition
from linkedpartitions.permutation import InvalidPermutationException, Permutation
from linkedpartitions.serialization import MalformedInputException, parse_any, parse_line, to_json
from linkedpartitions.tableau import DotDiagram, ForbiddenZeroException, PermutationTableau, dots_of


NINE_JSON = '{"n":9,"arcs":[[1,2],[1,4],[2,3],[3,9],[5,6],[6,7]]}'
ELEVEN_TABLEAU_JSON = '{"n":11,"columns":[3,4,6,8,10],"filling":[[1,0,0,1,0],[0,1,0,1,1],[0,0,1],[0,0],[1],[]]}'


def test_canonical_forms(nine_lp, eleven_tableau):
  assert to_json(nine_lp) == NINE_JSON
  assert to_json(eleven_tableau) == ELEVEN_TABLEAU_JSON
  assert to_json(shape_of(nine_lp)) == '{"n":9,"columns":[4,7,9]}'
  assert to_json(dots_of(eleven_tableau)) == (
    '{"n":11,"columns":[3,4,6,8,10],"dots":[[1,4],[1,10],[2,3],[2,8],[2,10],[5,6],[5,8],[7,8]]}'
  )


@pytest.mark.parametrize(
  "line,kind",
  [
    (NINE_JSON, ObjectKind.LinkedPartition),
    ('{"n":3,"values":[1,3,2]}', ObjectKind.Permutation),
    (ELEVEN_TABLEAU_JSON, ObjectKind.Tableau),
  ],
)
def test_canonical_lines_reprint_unchanged(line, kind):
  assert to_json(parse_line(line, kind)) == line


def test_parse_sorts_arcs(nine_lp):
  shuffled = '{"arcs":[[6,7],[1,4],[3,9],[1,2],[5,6],[2,3]],"n":9}'
  assert parse_line(shuffled, ObjectKind.LinkedPartition) == nine_lp


@pytest.mark.parametrize(
  "line,kind",
  [
    ("not json", ObjectKind.LinkedPartition),
    ("[1,2]", ObjectKind.Permutation),
    ('{"n":3}', ObjectKind.LinkedPartition),
    ('{"n":3,"arcs":[],"extra":1}', ObjectKind.LinkedPartition),
    ('{"n":3,"arcs":[[1,2,3]]}', ObjectKind.LinkedPartition),
    ('{"n":3,"arcs":{"1":2}}', ObjectKind.LinkedPartition),
    ('{"n":4,"columns":[3,4],"filling":[1,1]}', ObjectKind.Tableau),
  ],
)
def test_malformed(line, kind):
  with pytest.raises(MalformedInputException):
    parse_line(line, kind)


def test_invalid_objects_raise_family_errors():
  with pytest.raises(DuplicateRightEndpointException):
    parse_line('{"n":4,"arcs":[[1,3],[2,3]]}', ObjectKind.LinkedPartition)
  with pytest.raises(InvalidPermutationException):
    parse_line('{"n":4,"values":[1,3,2]}', ObjectKind.Permutation)
  with pytest.raises(ForbiddenZeroException):
    parse_line('{"n":4,"columns":[3,4],"filling":[[1,1],[1,0]]}', ObjectKind.Tableau)


@pytest.mark.parametrize(
  "line,objectType",
  [
    (NINE_JSON, LinkedPartition),
    ('{"n":2,"values":[2,1]}', Permutation),
    (ELEVEN_TABLEAU_JSON, PermutationTableau),
    ('{"n":3,"columns":[3],"dots":[[1,3]]}', DotDiagram),
  ],
)
def test_parse_any_detects_family(line, objectType):
  assert isinstance(parse_any(line), objectType)


def test_parse_any_unknown_keys():
  with pytest.raises(MalformedInputException):
    parse_any('{"n":3,"columns":[3]}')
