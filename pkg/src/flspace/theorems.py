"""Clause-by-clause checkers for the line-count theorems.

Both checkers produce the same Verdict structure so the crisp and the
lattice-valued results can be compared field by field:

  C1  b >= v                       (b > v is reported alongside, since the
                                    two spaces with b = v make the strict
                                    form false)
  C2  every two lines share a point with nonzero values on both
  C3  shape of the line-size profile: near-pencil (one line of size v-1,
      the rest of size 2; at v = 3 the sizes coincide and the all-pairs
      triangle counts as a near-pencil), uniform (all sizes k+1, k >= 2),
      or neither
  C4  in the uniform case: the crisp regularity "every point on exactly
      k+1 lines", next to the labeling-count product prod (|L|-1)^{v_j}
      over the k+1 lines through a point

The product in C4 cannot be a point degree (degrees are at most b), so it
is reported as the labeling count it arithmetically is, with a note in the
verdict flagging the mismatch.  Closure idempotence over all point pairs
is measured and reported as information, not asserted.

No clause failure raises: failures land in the Verdict with a witness.
Only hypothesis violations (not enough lines or points, axioms failing,
a non-crisp space handed to the crisp checker) raise.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from itertools import combinations

from .closure import ClosureMode, closure
from .errors import FlsError
from .space import Axiom, DEFAULT_AXIOMS, FuzzyLinearSpace


class Shape(enum.Enum):
    NEAR_PENCIL = "near-pencil"
    UNIFORM = "uniform"
    NEITHER = "neither"


@dataclass(frozen=True)
class Verdict:
    b: int
    v: int
    b_geq_v: bool
    b_gt_v: bool
    pairwise_intersection: bool
    disjoint_witness: tuple[str, str] | None
    shape: Shape
    k: int | None
    uniform_point_regular: bool | None
    fuzz_point_product: int | None
    closure_idempotent: bool
    notes: tuple[str, ...]

    def support_clauses(self) -> tuple:
        """C1-C3 plus the regularity bit: everything determined by supports.

        Excludes the C4 product (it scales with the lattice size) and the
        notes, so relabeling-invariance comparisons are exact.
        """
        return (
            self.b,
            self.v,
            self.b_geq_v,
            self.b_gt_v,
            self.pairwise_intersection,
            self.disjoint_witness,
            self.shape,
            self.k,
            self.uniform_point_regular,
            self.closure_idempotent,
        )

    @property
    def generalized_holds(self) -> bool:
        """All clauses of the generalized statement, shape dichotomy included."""
        return (
            self.b_geq_v
            and self.pairwise_intersection
            and self.shape is not Shape.NEITHER
            and self.uniform_point_regular is not False
        )

    @property
    def classical_holds(self) -> bool:
        """b >= v, and the b = v dichotomy when it applies."""
        if not self.b_geq_v:
            return False
        if self.b == self.v:
            return self.pairwise_intersection and self.shape is not Shape.NEITHER
        return True

    def to_dict(self) -> dict:
        return {
            "b": self.b,
            "v": self.v,
            "b_geq_v": self.b_geq_v,
            "b_gt_v": self.b_gt_v,
            "pairwise_intersection": self.pairwise_intersection,
            "disjoint_witness": list(self.disjoint_witness)
            if self.disjoint_witness
            else None,
            "shape": self.shape.value,
            "k": self.k,
            "uniform_point_regular": self.uniform_point_regular,
            "fuzz_point_product": self.fuzz_point_product,
            "closure_idempotent": self.closure_idempotent,
            "notes": list(self.notes),
        }


def _shape_of(space: FuzzyLinearSpace) -> tuple[Shape, int | None]:
    sizes = sorted(d.support_size for d in space.lines)
    v = space.v
    if v == 3 and sizes and all(s == 2 for s in sizes):
        # Boundary case: every 2-line both is the (v-1)-line and a 2-line.
        return Shape.NEAR_PENCIL, None
    long_lines = [s for s in sizes if s == v - 1]
    others = [s for s in sizes if s != v - 1]
    if len(long_lines) == 1 and all(s == 2 for s in others):
        return Shape.NEAR_PENCIL, None
    if sizes and len(set(sizes)) == 1 and sizes[0] >= 3:
        return Shape.UNIFORM, sizes[0] - 1
    return Shape.NEITHER, None


def _pairwise(space: FuzzyLinearSpace) -> tuple[bool, tuple[str, str] | None]:
    for d, e in combinations(space.lines, 2):
        if not d.support & e.support:
            return False, (d.name, e.name)
    return True, None


def _closure_idempotent(space: FuzzyLinearSpace) -> bool:
    for x, y in combinations(range(space.v), 2):
        once = closure(space, {x, y}, ClosureMode.EXISTS_SUBSET)
        if closure(space, once, ClosureMode.EXISTS_SUBSET) != once:
            return False
    return True


def _assess(space: FuzzyLinearSpace) -> Verdict:
    b, v = space.b, space.v
    notes: list[str] = []
    pairwise, witness = _pairwise(space)
    shape, k = _shape_of(space)
    uniform_regular: bool | None = None
    product: int | None = None
    if b == v:
        notes.append("b = v: the strict inequality b > v fails here")
    if shape is Shape.UNIFORM and k is not None:
        degrees = [space.point_degree(x) for x in range(v)]
        uniform_regular = all(deg == k + 1 for deg in degrees)
        base = space.lattice.size - 1
        per_point = {
            _point_product(space, x, base) for x in range(v)
        }
        if len(per_point) == 1:
            product = per_point.pop()
        else:
            notes.append(
                "point products disagree: " + ", ".join(map(str, sorted(per_point)))
            )
        notes.append(
            "the uniform-case product counts labelings of the lines through a "
            "point; it cannot be a point degree (degrees are at most b)"
        )
    return Verdict(
        b=b,
        v=v,
        b_geq_v=b >= v,
        b_gt_v=b > v,
        pairwise_intersection=pairwise,
        disjoint_witness=witness,
        shape=shape,
        k=k,
        uniform_point_regular=uniform_regular,
        fuzz_point_product=product,
        closure_idempotent=_closure_idempotent(space),
        notes=tuple(notes),
    )


def _point_product(space: FuzzyLinearSpace, point: int, base: int) -> int:
    total = 1
    for d in space.lines:
        if point in d.support:
            total *= base**d.support_size
    return total


def check_classical_dbe(space: FuzzyLinearSpace) -> Verdict:
    """Check the crisp statement on a crisp space validated under A1-A3."""
    if space.lattice.n != 0:
        raise FlsError(
            f"the crisp checker needs lattice L_0, got L_{space.lattice.n}"
        )
    space.validate(DEFAULT_AXIOMS).require("crisp theorem check")
    if space.b <= 1:
        raise FlsError(f"hypothesis b > 1 fails: b = {space.b}")
    return _assess(space)


def check_generalized_dbe(
    space: FuzzyLinearSpace, axioms: frozenset[Axiom] = DEFAULT_AXIOMS
) -> Verdict:
    """Check the lattice-valued statement under an explicit axiom set.

    C2 is always evaluated, even when A4 was not part of the axiom set:
    the point of the checker is to locate which axiom carries that clause.
    """
    space.validate(axioms).require("generalized theorem check")
    if space.b <= 1:
        raise FlsError(f"hypothesis b > 1 fails: b = {space.b}")
    if space.v < 3:
        raise FlsError(f"hypothesis v >= 3 fails: v = {space.v}")
    return _assess(space)


def render_verdict(verdict: Verdict, fmt: str = "text") -> str:
    """Serialize a verdict; JSON output is stable across runs."""
    if fmt == "json":
        return json.dumps(verdict.to_dict(), indent=2, sort_keys=False)
    if fmt != "text":
        raise FlsError(f"unknown format {fmt!r}")
    rows = [
        ("b >= v", _mark(verdict.b_geq_v), f"b={verdict.b}, v={verdict.v}"),
        ("b >  v", _mark(verdict.b_gt_v), ""),
        (
            "pairwise line intersection",
            _mark(verdict.pairwise_intersection),
            ""
            if verdict.disjoint_witness is None
            else "disjoint: %s, %s" % verdict.disjoint_witness,
        ),
        (
            "shape",
            verdict.shape.value + (f"(k={verdict.k})" if verdict.k is not None else ""),
            "",
        ),
    ]
    if verdict.uniform_point_regular is not None:
        rows.append(
            ("every point on k+1 lines", _mark(verdict.uniform_point_regular), "")
        )
    if verdict.fuzz_point_product is not None:
        rows.append(
            ("per-point labeling product", str(verdict.fuzz_point_product), "")
        )
    rows.append(("closure idempotent (measured)", _mark(verdict.closure_idempotent), ""))
    width = max(len(r[0]) for r in rows)
    lines = [
        f"{label:<{width}}  {value}" + (f"  [{extra}]" if extra else "")
        for label, value, extra in rows
    ]
    for note in verdict.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def _mark(flag: bool) -> str:
    return "pass" if flag else "FAIL"
