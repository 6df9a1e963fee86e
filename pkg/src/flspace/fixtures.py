"""Builders for the standard test spaces.

These are the structures every verification run leans on: the crisp
three-point triangle and its lattice-valued relabeling, near-pencils,
all-pairs designs, and the seven-point projective plane.  The JSON files
under fixtures/ are generated from these builders (fls fixtures --out DIR)
and a test pins the two representations together.
"""

from __future__ import annotations

from .lattice import ChainLattice
from .space import FuzzyLine, FuzzyLinearSpace


def example2() -> FuzzyLinearSpace:
    """Three points x, y, z; each pair on its own crisp line."""
    return FuzzyLinearSpace(
        ("x", "y", "z"),
        ChainLattice(0),
        (
            FuzzyLine("d1", (1, 1, 0)),
            FuzzyLine("d2", (0, 1, 1)),
            FuzzyLine("d3", (1, 0, 1)),
        ),
    )


def example2_l1() -> FuzzyLinearSpace:
    """The same supports over L_1 with mixed nonzero values."""
    return FuzzyLinearSpace(
        ("x", "y", "z"),
        ChainLattice(1),
        (
            FuzzyLine("d1", (1, 2, 0)),
            FuzzyLine("d2", (0, 1, 2)),
            FuzzyLine("d3", (2, 0, 1)),
        ),
    )


def triangle() -> FuzzyLinearSpace:
    return all_pairs(3)


def near_pencil(v: int) -> FuzzyLinearSpace:
    """One line through all but the last point, plus v-1 two-point lines."""
    if v < 3:
        raise ValueError(f"near-pencil needs v >= 3, got {v}")
    points = tuple(f"p{i + 1}" for i in range(v))
    long_line = FuzzyLine("d1", tuple(1 if i < v - 1 else 0 for i in range(v)))
    short = tuple(
        FuzzyLine(
            f"d{i + 2}", tuple(1 if j in (i, v - 1) else 0 for j in range(v))
        )
        for i in range(v - 1)
    )
    return FuzzyLinearSpace(points, ChainLattice(0), (long_line,) + short)


def all_pairs(v: int) -> FuzzyLinearSpace:
    """Every pair of points as its own two-point line."""
    if v < 3:
        raise ValueError(f"all-pairs needs v >= 3, got {v}")
    points = tuple(f"p{i + 1}" for i in range(v))
    lines = []
    index = 0
    for i in range(v):
        for j in range(i + 1, v):
            index += 1
            lines.append(
                FuzzyLine(f"d{index}", tuple(1 if t in (i, j) else 0 for t in range(v)))
            )
    return FuzzyLinearSpace(points, ChainLattice(0), tuple(lines))


def fano() -> FuzzyLinearSpace:
    """The projective plane of order 2: seven points, seven 3-point lines."""
    triples = [
        (0, 1, 2),
        (0, 3, 4),
        (0, 5, 6),
        (1, 3, 5),
        (1, 4, 6),
        (2, 3, 6),
        (2, 4, 5),
    ]
    points = tuple(f"p{i + 1}" for i in range(7))
    lines = tuple(
        FuzzyLine(f"d{k + 1}", tuple(1 if i in t else 0 for i in range(7)))
        for k, t in enumerate(triples)
    )
    return FuzzyLinearSpace(points, ChainLattice(0), lines)


FIXTURES = {
    "example2": example2,
    "example2_l1": example2_l1,
    "triangle": triangle,
    "nearpencil4": lambda: near_pencil(4),
    "nearpencil5": lambda: near_pencil(5),
    "nearpencil6": lambda: near_pencil(6),
    "allpairs4": lambda: all_pairs(4),
    "allpairs5": lambda: all_pairs(5),
    "allpairs6": lambda: all_pairs(6),
    "fano": fano,
}
