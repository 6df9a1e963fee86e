"""k-fuzzy classification of points and lines.

A point is k-fuzzy when k distinct lines all take a nonzero value there; a
line is k-fuzzy when it takes a nonzero value on k distinct points.  On a
chain lattice a meet of values is nonzero exactly when every value is, so
both predicates reduce to counting: point degree >= k, support size >= k.
The literal meet-based oracles are kept so the shortcut stays honest if a
non-chain lattice ever lands.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import FlsError
from .lattice import meet_all
from .space import FuzzyLine, FuzzyLinearSpace


def is_k_fuzzy_point(space: FuzzyLinearSpace, point: int, k: int) -> bool:
    """True when k distinct lines are all nonzero at the point (k = 0: always)."""
    if k < 0:
        raise FlsError(f"k must be nonnegative, got {k}")
    return space.point_degree(point) >= k


def is_k_fuzzy_line(line: FuzzyLine, k: int) -> bool:
    """True when the line is nonzero on k distinct points (k = 0: always)."""
    if k < 0:
        raise FlsError(f"k must be nonnegative, got {k}")
    return line.support_size >= k


def is_k_fuzzy_point_oracle(space: FuzzyLinearSpace, point: int, k: int) -> bool:
    """Literal reading: some k-subset of lines has a nonzero meet at the point."""
    if k < 0:
        raise FlsError(f"k must be nonnegative, got {k}")
    lat = space.lattice
    space._check_point(point)
    return any(
        not meet_all(lat, (lat.element(d.values[point]) for d in chosen)).is_zero
        for chosen in combinations(space.lines, k)
    )


def is_k_fuzzy_line_oracle(space: FuzzyLinearSpace, line: FuzzyLine, k: int) -> bool:
    """Literal reading: some k-subset of points has a nonzero meet on the line."""
    if k < 0:
        raise FlsError(f"k must be nonnegative, got {k}")
    lat = space.lattice
    return any(
        not meet_all(lat, (lat.element(line.values[i]) for i in chosen)).is_zero
        for chosen in combinations(range(space.v), k)
    )


@dataclass(frozen=True)
class FuzzinessSummary:
    """Per-point and per-line fuzzy degrees, keyed by name."""

    per_point_degree: dict[str, int]
    per_line_degree: dict[str, int]
    max_point_k: int
    max_line_k: int

    def to_dict(self) -> dict:
        return {
            "per_point_degree": dict(self.per_point_degree),
            "per_line_degree": dict(self.per_line_degree),
            "max_point_k": self.max_point_k,
            "max_line_k": self.max_line_k,
        }


def summarize(space: FuzzyLinearSpace) -> FuzzinessSummary:
    """Largest k for which each point (line) is k-fuzzy, plus the maxima."""
    point_deg = {
        name: space.point_degree(i) for i, name in enumerate(space.point_names)
    }
    line_deg = {d.name: d.support_size for d in space.lines}
    return FuzzinessSummary(
        per_point_degree=point_deg,
        per_line_degree=line_deg,
        max_point_k=max(point_deg.values(), default=0),
        max_line_k=max(line_deg.values(), default=0),
    )
