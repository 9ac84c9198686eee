import pytest

from linkedpartitions.permutation import (
  InvalidPermutationException,
  ascents,
  descents,
  validate_permutation,
  weak_excedances,
)


@pytest.mark.parametrize(
  "values,expectedDescents,expectedAscents,expectedWeakExcedances",
  [
    ((1, 3, 2), [2], [1], 2),
    ((3, 2, 1), [1, 2], [], 2),
    ((1, 2, 3), [], [1, 2], 3),
    ((1,), [], [], 1),
  ],
)
def test_statistics(values, expectedDescents, expectedAscents, expectedWeakExcedances):
  p = validate_permutation(values)
  assert descents(p) == expectedDescents
  assert ascents(p) == expectedAscents
  assert weak_excedances(p) == expectedWeakExcedances


def test_descents_of_nine_vertex_image():
  p = validate_permutation([8, 5, 1, 9, 3, 4, 2, 7, 6])
  assert descents(p) == [1, 2, 4, 6, 8]
  assert str(p) == "8 5 1 9 3 4 2 7 6"


@pytest.mark.parametrize(
  "values,n",
  [((1, 1), None), ((0, 1), None), ((), None), ((1, 2), 3), ((1.0, 2), None)],
)
def test_rejects(values, n):
  with pytest.raises(InvalidPermutationException):
    validate_permutation(values, n)
