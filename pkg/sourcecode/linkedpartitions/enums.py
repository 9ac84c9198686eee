from enum import Enum
from typing import List, Set, Type, TypeVar


class VertexKind(Enum):
  """Role of a vertex in the linear representation of a linked partition."""

  Origin = "origin"
  Transient = "transient"
  Singleton = "singleton"
  Destination = "destination"


class ObjectKind(Enum):
  """Object families handled by enumeration, counting and the CLI."""

  LinkedPartition = "lp"
  Permutation = "perm"
  Tableau = "tableau"


class Statistic(Enum):
  """Statistics accepted by enumeration.distribution.

  The same name may apply to several object families.  On tableaux, `transients`
  counts rightmost restricted 0's and `singletons` counts rows with no topmost 1
  and no restricted 0, which is what those statistics become under the
  linked-partition to tableau bijection.
  """

  Blocks = "blocks"
  Arcs = "arcs"
  Crossings = "crossings"
  Nestings = "nestings"
  Descents = "descents"
  WeakExcedances = "weak_excedances"
  Rows = "rows"
  Columns = "columns"
  Dots = "dots"
  Transients = "transients"
  Singletons = "singletons"


class Filter(Enum):
  """Stream filters for the enumerate and count commands (blocks=K is separate)."""

  Noncrossing = "noncrossing"
  Nonnesting = "nonnesting"
  I2Avoiding = "i2-avoiding"
  J2Avoiding = "j2-avoiding"


class PatternKind(Enum):
  """Dot-diagram patterns on a rectangle of labels i1 < i2 < j1 < j2."""

  I2 = "I2"
  J2 = "J2"


class MapName(Enum):
  """Line-by-line transformers exposed by the map command."""

  LpToPerm = "lp-to-perm"
  PermToLp = "perm-to-lp"
  LpToTableau = "lp-to-tableau"
  TableauToLp = "tableau-to-lp"
  LpToShape = "lp-to-shape"
  TableauToDots = "tableau-to-dots"
  PermToTableau = "perm-to-tableau"
  TableauToPerm = "tableau-to-perm"


class Suite(Enum):
  """Verification suites.  `all` runs every other suite in declaration order."""

  Roundtrip = "roundtrip"
  Distribution = "distribution"
  TableauOracle = "tableau-oracle"
  Corollaries = "corollaries"
  Patterns = "patterns"
  All = "all"


class RenderFormat(Enum):
  Ascii = "ascii"
  Svg = "svg"


class RecordStatus(Enum):
  """Outcome of one verification record.

  Observed records document a measured relationship without gating the report.
  """

  Pass = "pass"
  Fail = "fail"
  Observed = "observed"


E = TypeVar("E", bound=Enum)


def from_value(enumType: Type[E], value: str) -> E:
  """Looks up an enum member by its string value.

  Raises:
    ValueError if value names no member of enumType.
  """
  for member in enumType:
    if member.value == value:
      return member
  raise ValueError(f"Unknown value {value}")


def enum_values(enumType: Type[Enum]) -> List[str]:
  return [member.value for member in enumType]


def filters_from_csv(csv: str) -> Set[Filter]:
  """Converts a CSV of filter names to a set of Filter values.

  Args:
    csv: CSV string of filter names, e.g. "noncrossing,nonnesting".

  Returns:
    Set containing Filters.

  Raises:
    ValueError if csv contains a token which is not a valid Filter.
  """
  return {from_value(Filter, value.strip()) for value in csv.split(",") if value.strip()}
