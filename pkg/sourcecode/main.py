#!/usr/bin/env python3

"""Command-line entry point for linked partitions, permutations and permutation tableaux.

Example Usage:
  # Every linked partition of [4] with no crossing, one JSON object per line.
  python main.py enumerate --object lp --n 4 --noncrossing

  # Round trip through the tableau bijection.
  python main.py enumerate --object lp --n 6 \
    | python main.py map lp-to-tableau \
    | python main.py map tableau-to-lp

  # Block census of L(3) and the full verification run.
  python main.py count --object lp --n 3 --by blocks
  PTAB_THREADS=4 python main.py verify --suite all --n-max 7

  # Draw a tableau.
  echo '{"n":9,"columns":[4,7,9],"filling":[[1,0,1],[0,0,1],[0,0,1],[1,1],[0,0],[1]]}' \
    | python main.py render --format ascii
"""

import logging
import sys

from linkedpartitions.runner import main


if __name__ == "__main__":
  logging.basicConfig(level=logging.DEBUG)
  sys.exit(main())
