"""Exact counting of nonzero labelings, with brute-force oracles.

All results are plain Python integers, so they are exact at any size; no
floating point enters any code path here.  The counts are counts of
labelings: the number of ways to assign nonzero lattice values to the
supported positions of a line (or of a whole space), which over L_n means
(n + 1) choices per position.

The line-count inference inverts the labeling count of a space whose lines
all have the same support size v: if the total is m = (n+1)^(b*v), the
number of lines is recovered by exact integer power testing, never by a
floating-point logarithm.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence

from .errors import FlsError, NoExactSolutionError, ResourceLimitError
from .lattice import ChainLattice
from .space import FuzzyLinearSpace

MAX_ORACLE_POSITIONS = 24
MAX_ORACLE_ASSIGNMENTS = 10_000_000


def count_k_fuzzy_line_labelings(k: int, lattice: ChainLattice) -> int:
    """Number of nonzero labelings of a fixed k-point support: (n+1)^k."""
    if k < 0:
        raise FlsError(f"k must be nonnegative, got {k}")
    return (lattice.n + 1) ** k


def count_k_fuzzy_point_configs(
    support_sizes: Iterable[int], lattice: ChainLattice
) -> int:
    """Number of joint nonzero labelings of several supports: prod (n+1)^v_j."""
    total = 1
    for v_j in support_sizes:
        if v_j < 0:
            raise FlsError(f"support sizes must be nonnegative, got {v_j}")
        total *= (lattice.n + 1) ** v_j
    return total


def space_cardinality(space: FuzzyLinearSpace) -> int:
    """Nonzero relabelings of the space's incidence skeleton."""
    return count_k_fuzzy_point_configs(
        (d.support_size for d in space.lines), space.lattice
    )


def labeling_oracle(
    supports: Sequence[Iterable[int]],
    lattice: ChainLattice,
    max_positions: int = MAX_ORACLE_POSITIONS,
    max_assignments: int = MAX_ORACLE_ASSIGNMENTS,
) -> int:
    """Count labelings by literally enumerating every assignment.

    Walks the full cartesian product of nonzero values over every support
    position and counts the tuples one by one.  Independent of the formula
    evaluators by construction, and guarded accordingly: the position
    count is capped, and so is the assignment total, since (n+1)^positions
    explodes quickly.
    """
    positions = sum(len(frozenset(s)) for s in supports)
    if positions > max_positions:
        raise ResourceLimitError(
            f"{positions} support positions exceed the bound of {max_positions}"
        )
    choices = lattice.n + 1
    if choices**positions > max_assignments:
        raise ResourceLimitError(
            f"{choices}^{positions} assignments exceed the bound of {max_assignments}"
        )
    nonzero_ranks = range(1, lattice.n + 2)
    return sum(1 for _ in product(nonzero_ranks, repeat=positions))


def infer_line_count(m: int, v: int, lattice: ChainLattice) -> int:
    """Recover the line count b from m = (n+1)^(b*v), by exact power testing.

    Requires n >= 1 (over L_0 every labeling count is 1) and a uniform
    support size v.  Raises NoExactSolutionError when m is not an exact
    power of n+1 (reporting the nearest exponents) or when the exponent is
    not divisible by v.
    """
    if lattice.n < 1:
        raise FlsError("line-count inference needs n >= 1")
    if v < 1:
        raise FlsError(f"support size must be positive, got {v}")
    if m < 1:
        raise FlsError(f"labeling count must be positive, got {m}")
    base = lattice.n + 1
    exponent = 0
    power = 1
    while power < m:
        power *= base
        exponent += 1
    if power != m:
        raise NoExactSolutionError(
            f"{m} is not a power of {base}: "
            f"{base}^{exponent - 1} = {power // base} and {base}^{exponent} = {power} "
            f"are the nearest"
        )
    if exponent % v != 0:
        raise NoExactSolutionError(
            f"{m} = {base}^{exponent}, but {exponent} is not divisible by "
            f"the support size {v}"
        )
    return exponent // v


def infer_line_count_for_space(space: FuzzyLinearSpace) -> int:
    """Round trip on a whole space: infer b from its labeling count.

    Only meaningful when all supports share one size; a mixed-size space
    has no single divisor to invert by, so it is rejected outright.
    """
    sizes = {d.support_size for d in space.lines}
    if len(sizes) != 1:
        raise NoExactSolutionError(
            f"supports have mixed sizes {sorted(sizes)}; "
            "line-count inference needs a uniform size"
        )
    (v_line,) = sizes
    return infer_line_count(space_cardinality(space), v_line, space.lattice)
