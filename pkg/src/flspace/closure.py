"""The closure operator on point sets, in two quantifier readings.

For |X| <= 1 the closure is X itself.  For larger X:

  EXISTS_SUBSET   a point belongs to the closure when some line meets X
                  in at least two points and carries the point.
  FORALL_SUBSETS  a point belongs when, for every subset T of X with
                  |T| >= 2, some line carries all of T together with the
                  point.

EXISTS_SUBSET is the default: it is the only reading that reproduces both
the two-point example (the closure of two points is the support of their
line) and the identity that the whole point set is closed.  Under
FORALL_SUBSETS the closure of the full triangle point set is empty, so
that mode is kept for comparison, not as the default.

closure_oracle evaluates the quantifier definitions literally, walking
every subset T and every line and combining membership values with
lattice meets.  It shares no shortcut with closure() and is the reference
the fast path is tested against.
"""

from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterable

from .errors import FlsError, ResourceLimitError
from .lattice import meet_all
from .space import FuzzyLinearSpace


class ClosureMode(enum.Enum):
    EXISTS_SUBSET = "exists"
    FORALL_SUBSETS = "forall"


def _as_point_set(space: FuzzyLinearSpace, points: Iterable[int]) -> frozenset[int]:
    xs = frozenset(points)
    for x in xs:
        if not 0 <= x < space.v:
            raise FlsError(f"point index {x} outside the space (v={space.v})")
    return xs


def closure(
    space: FuzzyLinearSpace,
    points: Iterable[int],
    mode: ClosureMode = ClosureMode.EXISTS_SUBSET,
) -> frozenset[int]:
    """Closure of a point set under the selected reading."""
    xs = _as_point_set(space, points)
    if len(xs) <= 1:
        return xs
    supports = space.supports()
    if mode is ClosureMode.EXISTS_SUBSET:
        out: set[int] = set()
        for supp in supports:
            if len(supp & xs) >= 2:
                out |= supp
        return frozenset(out)
    if mode is ClosureMode.FORALL_SUBSETS:
        # The T = X case subsumes every smaller T: a line carrying X and the
        # candidate point carries each subset of X with it.
        return frozenset(
            x for x in range(space.v)
            if any(xs <= supp and x in supp for supp in supports)
        )
    raise FlsError(f"unknown closure mode {mode!r}")


def closure_oracle(
    space: FuzzyLinearSpace,
    points: Iterable[int],
    mode: ClosureMode = ClosureMode.EXISTS_SUBSET,
    max_subset_points: int = 20,
) -> frozenset[int]:
    """Literal evaluation of the quantifier definition, for cross-checking.

    Iterates every T subseteq X with |T| >= 2 and evaluates the lattice meet
    of line values over T and the candidate point, with no support-based
    shortcut.  Exponential in |X|, hence the size guard.
    """
    xs = _as_point_set(space, points)
    if len(xs) <= 1:
        return xs
    if len(xs) > max_subset_points:
        raise ResourceLimitError(
            f"oracle would enumerate 2^{len(xs)} subsets; limit is 2^{max_subset_points}"
        )
    lat = space.lattice
    ordered = sorted(xs)
    subsets = [
        tuple(t)
        for k in range(2, len(ordered) + 1)
        for t in combinations(ordered, k)
    ]

    def witnessed(t: tuple[int, ...], x: int) -> bool:
        for d in space.lines:
            values = [lat.element(d.values[i]) for i in t]
            values.append(lat.element(d.values[x]))
            if not meet_all(lat, values).is_zero:
                return True
        return False

    out = set()
    for x in range(space.v):
        if mode is ClosureMode.EXISTS_SUBSET:
            hit = any(witnessed(t, x) for t in subsets)
        elif mode is ClosureMode.FORALL_SUBSETS:
            hit = all(witnessed(t, x) for t in subsets)
        else:
            raise FlsError(f"unknown closure mode {mode!r}")
        if hit:
            out.add(x)
    return frozenset(out)


def generates(
    space: FuzzyLinearSpace,
    points: Iterable[int],
    target: Iterable[int],
    mode: ClosureMode = ClosureMode.EXISTS_SUBSET,
) -> bool:
    """True when the closure of the point set equals the target set."""
    return closure(space, points, mode) == _as_point_set(space, target)
