"""The fuzzy linear space data model: named points, a chain lattice, and
lattice-valued lines, plus the axiom checks that make the incidence
structure a linear space.

The axiom set is explicit and configurable:

  A1  point set and line set are nonempty (and finite, which the
      representation already guarantees),
  A2  every line has support of size >= 2,
  A3  every unordered pair of points lies on exactly one line's support,
  A4  (optional) every two line supports intersect.

On a chain lattice d(x) ^ d(y) != 0 exactly when both values are nonzero,
so A3 and A4 are conditions on supports.  A4 is kept separate because the
pairwise-intersection clause of the generalized theorem does not follow
from A1-A3 (the all-pairs design on four points is the smallest witness).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import AxiomViolationError, FlsError
from .lattice import ChainLattice


class Axiom(enum.Enum):
    A1 = "a1"
    A2 = "a2"
    A3 = "a3"
    A4 = "a4"


AxiomSet = frozenset
DEFAULT_AXIOMS: frozenset[Axiom] = frozenset({Axiom.A1, Axiom.A2, Axiom.A3})
ALL_AXIOMS: frozenset[Axiom] = DEFAULT_AXIOMS | {Axiom.A4}


def parse_axiom_set(text: str) -> frozenset[Axiom]:
    """Parse a compact axiom-set spelling such as "a1a2a3" or "a1a2a3a4"."""
    chunks = text.lower().replace(",", "").split()
    flat = "".join(chunks)
    if len(flat) % 2 != 0 or not flat:
        raise FlsError(f"cannot parse axiom set {text!r}")
    axioms = set()
    for i in range(0, len(flat), 2):
        pair = flat[i : i + 2]
        try:
            axioms.add(Axiom(pair))
        except ValueError:
            raise FlsError(f"unknown axiom {pair!r} in {text!r}") from None
    return frozenset(axioms)


def format_axiom_set(axioms: frozenset[Axiom]) -> str:
    return "".join(a.value for a in sorted(axioms, key=lambda a: a.value))


@dataclass(frozen=True)
class FuzzyLine:
    """A lattice-valued map on the point set, stored as a rank per point."""

    name: str
    values: tuple[int, ...]

    @cached_property
    def support(self) -> frozenset[int]:
        """Indices of points where the line's value is nonzero."""
        return frozenset(i for i, r in enumerate(self.values) if r != 0)

    @property
    def support_size(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class FuzzyLinearSpace:
    """A space (points, lattice, lines).  Immutable after construction.

    Construction checks structural well-formedness only (unique names,
    value vectors of the right length, ranks inside the lattice);
    axiom validation is a separate, explicit step.
    """

    point_names: tuple[str, ...]
    lattice: ChainLattice
    lines: tuple[FuzzyLine, ...]

    def __post_init__(self) -> None:
        if len(set(self.point_names)) != len(self.point_names):
            raise FlsError("point names must be unique")
        if len({d.name for d in self.lines}) != len(self.lines):
            raise FlsError("line names must be unique")
        top = self.lattice.n + 1
        for d in self.lines:
            if len(d.values) != len(self.point_names):
                raise FlsError(
                    f"line {d.name!r} has {len(d.values)} values "
                    f"for {len(self.point_names)} points"
                )
            for r in d.values:
                if not 0 <= r <= top:
                    raise FlsError(
                        f"line {d.name!r} holds rank {r}, outside L_{self.lattice.n}"
                    )

    @property
    def v(self) -> int:
        """Number of points."""
        return len(self.point_names)

    @property
    def b(self) -> int:
        """Number of lines."""
        return len(self.lines)

    @property
    def is_crisp(self) -> bool:
        return self.lattice.n == 0

    def point_index(self, name: str) -> int:
        try:
            return self.point_names.index(name)
        except ValueError:
            raise FlsError(f"unknown point {name!r}") from None

    def line_named(self, name: str) -> FuzzyLine:
        for d in self.lines:
            if d.name == name:
                return d
        raise FlsError(f"unknown line {name!r}")

    def supports(self) -> list[frozenset[int]]:
        return [d.support for d in self.lines]

    def point_degree(self, point: int) -> int:
        """Number of lines whose value at the point is nonzero."""
        self._check_point(point)
        return sum(1 for d in self.lines if point in d.support)

    def crisp_shadow(self) -> FuzzyLinearSpace:
        """Same points and supports over L_0, values replaced by indicators."""
        lat = ChainLattice(0)
        lines = tuple(
            FuzzyLine(d.name, tuple(1 if r != 0 else 0 for r in d.values))
            for d in self.lines
        )
        return FuzzyLinearSpace(self.point_names, lat, lines)

    def line_through(self, x: int, y: int) -> FuzzyLine:
        """The unique line whose support contains both points (needs A3)."""
        self._check_point(x)
        self._check_point(y)
        if x == y:
            raise FlsError("line_through needs two distinct points")
        hits = [d for d in self.lines if x in d.support and y in d.support]
        if not hits:
            raise AxiomViolationError(
                f"no line covers the pair ({self.point_names[x]}, {self.point_names[y]})"
            )
        return hits[0]

    def validate(self, axioms: frozenset[Axiom] = DEFAULT_AXIOMS) -> ValidationReport:
        """Check the requested axioms, reporting witnesses for failures."""
        checks = []
        for axiom in sorted(axioms, key=lambda a: a.value):
            checks.append(_CHECKERS[axiom](self))
        return ValidationReport(tuple(checks))

    def _check_point(self, point: int) -> None:
        if not 0 <= point < self.v:
            raise FlsError(f"point index {point} out of range for v={self.v}")

    def __repr__(self) -> str:
        return (
            f"FuzzyLinearSpace(v={self.v}, b={self.b}, lattice=L_{self.lattice.n})"
        )


@dataclass(frozen=True)
class AxiomCheck:
    axiom: Axiom
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[AxiomCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def require(self, context: str = "operation") -> None:
        """Raise unless every checked axiom passed."""
        bad = self.failures()
        if bad:
            details = "; ".join(
                f"{c.axiom.value}: {c.witness or 'failed'}" for c in bad
            )
            raise AxiomViolationError(f"{context} requires a valid space ({details})")


def _check_a1(space: FuzzyLinearSpace) -> AxiomCheck:
    if space.v == 0:
        return AxiomCheck(Axiom.A1, False, "empty point set")
    if space.b == 0:
        return AxiomCheck(Axiom.A1, False, "empty line set")
    return AxiomCheck(Axiom.A1, True)


def _check_a2(space: FuzzyLinearSpace) -> AxiomCheck:
    for d in space.lines:
        if d.support_size < 2:
            return AxiomCheck(
                Axiom.A2, False, f"line {d.name!r} has support of size {d.support_size}"
            )
    return AxiomCheck(Axiom.A2, True)


def _check_a3(space: FuzzyLinearSpace) -> AxiomCheck:
    names = space.point_names
    for x, y in combinations(range(space.v), 2):
        covering = [d.name for d in space.lines if x in d.support and y in d.support]
        if len(covering) != 1:
            what = "no line" if not covering else f"lines {covering}"
            return AxiomCheck(
                Axiom.A3, False, f"pair ({names[x]}, {names[y]}) covered by {what}"
            )
    return AxiomCheck(Axiom.A3, True)


def _check_a4(space: FuzzyLinearSpace) -> AxiomCheck:
    for d, e in combinations(space.lines, 2):
        if not d.support & e.support:
            return AxiomCheck(
                Axiom.A4, False, f"lines {d.name!r} and {e.name!r} have disjoint supports"
            )
    return AxiomCheck(Axiom.A4, True)


_CHECKERS = {
    Axiom.A1: _check_a1,
    Axiom.A2: _check_a2,
    Axiom.A3: _check_a3,
    Axiom.A4: _check_a4,
}
