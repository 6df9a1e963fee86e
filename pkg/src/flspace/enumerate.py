"""Exhaustive generation of small linear-space skeletons and censuses.

A skeleton is a crisp space: a family of point subsets (each of size >= 2)
covering every point pair exactly once.  Generation backtracks on the
smallest uncovered pair: the line through that pair is unique in any
completion, so each labeled skeleton is produced exactly once, in a
deterministic order.  Incidence lives in per-line point bitmasks and pair
coverage in a bitmask over the C(v,2) pairs.

Isomorphism rejection is brute force over all v! point permutations (the
kernels module); v is capped at 7, so at most 5040.  A census walks the
labeled stream, folds it into canonical classes, attaches theorem verdicts
and (over L_n, n >= 1) a capped, seeded sweep of nonzero relabelings, and
reports exact labeled-copy counts as a cross-check: the orbit sizes of the
classes must add up to the number of labeled skeletons generated.

The search tree can be partitioned across workers by the choice of the
first line (the one through the smallest pair), which splits the labeled
stream exactly; results are merged and sorted by canonical form, so the
census bytes do not depend on the worker count.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .counting import space_cardinality
from .errors import FlsError
from .lattice import ChainLattice
from .space import Axiom, DEFAULT_AXIOMS, FuzzyLine, FuzzyLinearSpace, format_axiom_set
from .theorems import Verdict, check_generalized_dbe

MIN_POINTS = 3
MAX_POINTS = _kernels.MAX_POINTS
DEFAULT_LABELING_CAP = 10_000


# ---------------------------------------------------------------------------
# skeleton generation


def _pair_bits(v: int) -> dict[tuple[int, int], int]:
    bits = {}
    for idx, (i, j) in enumerate(combinations(range(v), 2)):
        bits[(i, j)] = 1 << idx
    return bits


def _line_pair_mask(line_mask: int, v: int, bits: dict[tuple[int, int], int]) -> int:
    mask = 0
    members = [p for p in range(v) if line_mask >> p & 1]
    for i, j in combinations(members, 2):
        mask |= bits[(i, j)]
    return mask


def _candidates(v: int, covered: int, bits: dict[tuple[int, int], int]) -> list[int]:
    """Lines usable for the smallest uncovered pair, in deterministic order."""
    first = None
    for pair, bit in bits.items():
        if not covered & bit:
            first = pair
            break
    if first is None:
        return []
    i, j = first
    eligible = [
        p
        for p in range(v)
        if p not in (i, j)
        and not covered & bits[tuple(sorted((i, p)))]
        and not covered & bits[tuple(sorted((j, p)))]
    ]
    base = (1 << i) | (1 << j)
    out = []
    for sub in range(1 << len(eligible)):
        extra = [eligible[t] for t in range(len(eligible)) if sub >> t & 1]
        if any(covered & bits[tuple(sorted(pq))] for pq in combinations(extra, 2)):
            continue
        mask = base
        for p in extra:
            mask |= 1 << p
        out.append(mask)
    return out


def _complete(
    v: int,
    covered: int,
    full: int,
    chosen: list[int],
    bits: dict[tuple[int, int], int],
) -> Iterator[tuple[int, ...]]:
    if covered == full:
        yield tuple(chosen)
        return
    for cand in _candidates(v, covered, bits):
        chosen.append(cand)
        yield from _complete(
            v, covered | _line_pair_mask(cand, v, bits), full, chosen, bits
        )
        chosen.pop()


def _mask_to_values(mask: int, v: int) -> tuple[int, ...]:
    return tuple(1 if mask >> i & 1 else 0 for i in range(v))


def _skeleton_space(masks: Sequence[int], v: int) -> FuzzyLinearSpace:
    rows = sorted(_mask_to_values(m, v) for m in masks)
    rows.sort(key=_kernels.line_key)
    lines = tuple(FuzzyLine(f"d{j + 1}", row) for j, row in enumerate(rows))
    points = tuple(f"p{i + 1}" for i in range(v))
    return FuzzyLinearSpace(points, ChainLattice(0), lines)


def _check_point_range(v: int) -> None:
    if not MIN_POINTS <= v <= MAX_POINTS:
        raise FlsError(
            f"skeleton enumeration supports {MIN_POINTS} <= v <= {MAX_POINTS}, got {v}"
        )


def enumerate_skeletons(
    v: int, nontrivial_only: bool = False
) -> Iterator[FuzzyLinearSpace]:
    """All labeled pair-cover skeletons on v points, in deterministic order.

    Isomorphic copies are all emitted; rejection is the census's job.
    nontrivial_only drops the single-line skeleton (b = 1).
    """
    _check_point_range(v)
    bits = _pair_bits(v)
    full = (1 << len(bits)) - 1
    for masks in _complete(v, 0, full, [], bits):
        if nontrivial_only and len(masks) == 1:
            continue
        yield _skeleton_space(masks, v)


# ---------------------------------------------------------------------------
# canonical forms


def canonicalize(space: FuzzyLinearSpace) -> FuzzyLinearSpace:
    """Minimum representation over all point permutations.

    Two spaces are isomorphic exactly when their canonical forms are equal,
    so names are normalized to p1..pv and d1..db; the lattice is kept.
    """
    rows = [d.values for d in space.lines]
    ranks = _kernels.pack_ranks(rows, space.v)
    perms = _kernels.permutation_matrix(space.v)
    forms = _kernels.sorted_key_forms(ranks, perms)
    best = _kernels.minimum_form(forms)
    lines = tuple(
        FuzzyLine(f"d{j + 1}", _kernels.unpack_key(int(key), space.v))
        for j, key in enumerate(best)
    )
    points = tuple(f"p{i + 1}" for i in range(space.v))
    return FuzzyLinearSpace(points, space.lattice, lines)


def _orbit(space: FuzzyLinearSpace) -> tuple[np.ndarray, np.ndarray, int]:
    """(canonical row, distinct sorted-key rows, automorphism count)."""
    rows = [d.values for d in space.lines]
    ranks = _kernels.pack_ranks(rows, space.v)
    perms = _kernels.permutation_matrix(space.v)
    forms = _kernels.sorted_key_forms(ranks, perms)
    distinct = np.unique(forms, axis=0)
    automorphisms = len(perms) // len(distinct)
    return distinct[0], distinct, automorphisms


def _space_from_key_row(
    row: np.ndarray, v: int, lattice: ChainLattice
) -> FuzzyLinearSpace:
    lines = tuple(
        FuzzyLine(f"d{j + 1}", _kernels.unpack_key(int(key), v))
        for j, key in enumerate(row)
    )
    points = tuple(f"p{i + 1}" for i in range(v))
    return FuzzyLinearSpace(points, lattice, lines)


def embed_crisp(skeleton: FuzzyLinearSpace, lattice: ChainLattice) -> FuzzyLinearSpace:
    """The skeleton over another lattice, nonzero values mapped to the top."""
    top = lattice.top_rank
    lines = tuple(
        FuzzyLine(d.name, tuple(top if r else 0 for r in d.values))
        for d in skeleton.lines
    )
    return FuzzyLinearSpace(skeleton.point_names, lattice, lines)


# ---------------------------------------------------------------------------
# labelings


class LabelingStream:
    """Nonzero relabelings of a skeleton over a lattice.

    Exhaustive in lexicographic order when the total fits under the cap;
    otherwise a seeded uniform sample of cap distinct labelings, emitted in
    lexicographic order and flagged as sampled.
    """

    def __init__(
        self,
        skeleton: FuzzyLinearSpace,
        lattice: ChainLattice,
        cap: int = DEFAULT_LABELING_CAP,
        seed: int = 0,
    ):
        if cap < 1:
            raise FlsError(f"labeling cap must be >= 1, got {cap}")
        self.skeleton = skeleton
        self.lattice = lattice
        self.cap = cap
        self.seed = seed
        self.positions = [
            (j, i)
            for j, d in enumerate(skeleton.lines)
            for i in sorted(d.support)
        ]
        self.total = (lattice.n + 1) ** len(self.positions)
        self.sampled = self.total > cap
        self.count = cap if self.sampled else self.total

    def _space_for(self, ranks: Sequence[int]) -> FuzzyLinearSpace:
        values = [list(d.values) for d in self.skeleton.lines]
        for (j, i), r in zip(self.positions, ranks):
            values[j][i] = r
        lines = tuple(
            FuzzyLine(d.name, tuple(row))
            for d, row in zip(self.skeleton.lines, values)
        )
        return FuzzyLinearSpace(self.skeleton.point_names, self.lattice, lines)

    def _decode(self, index: int) -> list[int]:
        choices = self.lattice.n + 1
        digits = []
        for _ in self.positions:
            index, digit = divmod(index, choices)
            digits.append(digit + 1)
        digits.reverse()
        return digits

    def __iter__(self) -> Iterator[FuzzyLinearSpace]:
        nonzero = range(1, self.lattice.n + 2)
        if not self.sampled:
            for ranks in product(nonzero, repeat=len(self.positions)):
                yield self._space_for(ranks)
            return
        rng = random.Random(self.seed)
        picked: set[int] = set()
        while len(picked) < self.cap:
            picked.add(rng.randrange(self.total))
        for index in sorted(picked):
            yield self._space_for(self._decode(index))

    def __len__(self) -> int:
        return self.count


def enumerate_labelings(
    skeleton: FuzzyLinearSpace,
    lattice: ChainLattice,
    cap: int = DEFAULT_LABELING_CAP,
    seed: int = 0,
) -> LabelingStream:
    return LabelingStream(skeleton, lattice, cap, seed)


# ---------------------------------------------------------------------------
# census


@dataclass(frozen=True)
class LabelingSummary:
    total: int
    checked: int
    sampled: bool
    verdicts_match_crisp: bool | None

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "checked": self.checked,
            "sampled": self.sampled,
            "verdicts_match_crisp": self.verdicts_match_crisp,
        }


@dataclass(frozen=True)
class CensusEntry:
    space: FuzzyLinearSpace
    automorphism_count: int
    labeled_count: int
    verdict: Verdict | None
    labelings: LabelingSummary | None

    def to_dict(self) -> dict:
        from .documents import space_to_dict

        return {
            "space": space_to_dict(self.space),
            "automorphism_count": self.automorphism_count,
            "labeled_count": self.labeled_count,
            "verdict": self.verdict.to_dict() if self.verdict else None,
            "labelings": self.labelings.to_dict() if self.labelings else None,
        }


@dataclass(frozen=True)
class Census:
    v: int
    lattice: ChainLattice
    axioms: frozenset[Axiom]
    nontrivial_only: bool
    cap: int
    seed: int
    labeled_spaces_seen: int
    skipped_classes: int
    skipped_labeled: int
    entries: tuple[CensusEntry, ...]

    @property
    def labeled_count_sum(self) -> int:
        return sum(e.labeled_count for e in self.entries)

    def to_dict(self) -> dict:
        return {
            "points": self.v,
            "lattice_n": self.lattice.n,
            "axioms": format_axiom_set(self.axioms),
            "nontrivial_only": self.nontrivial_only,
            "cap": self.cap,
            "seed": self.seed,
            "labeled_spaces_seen": self.labeled_spaces_seen,
            "labeled_count_sum": self.labeled_count_sum,
            "skipped_classes": self.skipped_classes,
            "skipped_labeled": self.skipped_labeled,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _class_entry(
    row: np.ndarray,
    automorphisms: int,
    labeled_count: int,
    v: int,
    lattice: ChainLattice,
    axioms: frozenset[Axiom],
    cap: int,
    seed: int,
) -> CensusEntry:
    crisp = _space_from_key_row(row, v, ChainLattice(0))
    shown = embed_crisp(crisp, lattice)
    if crisp.b <= 1:
        return CensusEntry(shown, automorphisms, labeled_count, None, None)
    verdict = check_generalized_dbe(shown, axioms)
    stream = LabelingStream(crisp, lattice, cap, seed)
    matches: bool | None = None
    checked = 0
    if lattice.n >= 1:
        matches = True
        for labeled in stream:
            checked += 1
            if check_generalized_dbe(labeled, axioms).support_clauses() != (
                verdict.support_clauses()
            ):
                matches = False
    else:
        checked = stream.count
    summary = LabelingSummary(stream.total, checked, stream.sampled, matches)
    return CensusEntry(shown, automorphisms, labeled_count, verdict, summary)


@dataclass
class _WorkerResult:
    labeled_seen: int
    classes: dict  # canonical key bytes -> (row, distinct rows, aut, labeled seen)


def _census_worker(
    v: int, roots: Sequence[int], bits: dict, full: int, nontrivial_only: bool
) -> _WorkerResult:
    seen: dict[bytes, bytes] = {}  # member row bytes -> canonical key bytes
    classes: dict[bytes, list] = {}
    labeled_seen = 0
    for root in roots:
        covered = _line_pair_mask(root, v, bits)
        for masks in _complete(v, covered, full, [root], bits):
            if nontrivial_only and len(masks) == 1:
                continue
            labeled_seen += 1
            skeleton = _skeleton_space(masks, v)
            identity = np.array(
                sorted(_kernels.line_key(d.values) for d in skeleton.lines),
                dtype=np.int64,
            )
            member = identity.tobytes()
            if member in seen:
                classes[seen[member]][3] += 1
                continue
            canon_row, distinct, automorphisms = _orbit(skeleton)
            key = canon_row.tobytes()
            for other in distinct:
                seen[other.tobytes()] = key
            classes[key] = [canon_row, len(distinct), automorphisms, 1]
    return _WorkerResult(labeled_seen, classes)


def census(
    v: int,
    lattice: ChainLattice,
    nontrivial_only: bool = False,
    cap: int = DEFAULT_LABELING_CAP,
    seed: int = 0,
    axioms: frozenset[Axiom] = DEFAULT_AXIOMS,
    workers: int = 1,
) -> Census:
    """Canonical skeleton classes on v points with verdicts and labelings.

    Output is a pure function of (v, lattice, nontrivial_only, cap, seed,
    axioms); the worker count only partitions the search tree.
    """
    _check_point_range(v)
    if workers < 1:
        raise FlsError(f"worker count must be >= 1, got {workers}")
    bits = _pair_bits(v)
    full = (1 << len(bits)) - 1
    roots = _candidates(v, 0, bits)
    chunks = [roots[w::workers] for w in range(workers)]
    chunks = [c for c in chunks if c]
    if len(chunks) == 1:
        results = [_census_worker(v, chunks[0], bits, full, nontrivial_only)]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            results = list(
                pool.map(
                    lambda c: _census_worker(v, c, bits, full, nontrivial_only),
                    chunks,
                )
            )

    labeled_seen = 0
    merged: dict[bytes, list] = {}
    for res in results:
        labeled_seen += res.labeled_seen
        for key, (row, orbit_size, automorphisms, seen_count) in res.classes.items():
            if key in merged:
                merged[key][3] += seen_count
            else:
                merged[key] = [row, orbit_size, automorphisms, seen_count]

    entries = []
    skipped_classes = 0
    skipped_labeled = 0
    ordered = sorted(
        merged.values(), key=lambda item: (len(item[0]), tuple(int(k) for k in item[0]))
    )
    for row, orbit_size, automorphisms, seen_count in ordered:
        if seen_count != orbit_size:
            raise FlsError(
                "labeled-copy cross-check failed: "
                f"saw {seen_count} copies of a class with orbit size {orbit_size}"
            )
        crisp = _space_from_key_row(row, v, ChainLattice(0))
        if crisp.b > 1 and not crisp.validate(axioms).ok:
            skipped_classes += 1
            skipped_labeled += orbit_size
            continue
        entries.append(
            _class_entry(row, automorphisms, orbit_size, v, lattice, axioms, cap, seed)
        )
    return Census(
        v=v,
        lattice=lattice,
        axioms=axioms,
        nontrivial_only=nontrivial_only,
        cap=cap,
        seed=seed,
        labeled_spaces_seen=labeled_seen,
        skipped_classes=skipped_classes,
        skipped_labeled=skipped_labeled,
        entries=tuple(entries),
    )


# ---------------------------------------------------------------------------
# counterexample search


_CLAUSES = ("c1", "c2", "c3")


def _clause_failures(verdict: Verdict, clause: str) -> list[tuple[str, str]]:
    wanted = _CLAUSES if clause == "all" else (clause,)
    out = []
    if "c1" in wanted and not verdict.b_geq_v:
        out.append(("c1", f"b = {verdict.b} < v = {verdict.v}"))
    if "c2" in wanted and not verdict.pairwise_intersection:
        out.append(("c2", "disjoint lines %s, %s" % verdict.disjoint_witness))
    if "c3" in wanted and verdict.shape.value == "neither":
        out.append(("c3", "line sizes fit neither near-pencil nor uniform"))
    return out


@dataclass(frozen=True)
class ClauseFailure:
    v: int
    clause: str
    witness: str
    entry: CensusEntry

    def to_dict(self) -> dict:
        return {
            "points": self.v,
            "clause": self.clause,
            "witness": self.witness,
            "entry": self.entry.to_dict(),
        }


@dataclass(frozen=True)
class SearchReport:
    v_max: int
    lattice: ChainLattice
    clause: str
    axioms: frozenset[Axiom]
    cap: int
    seed: int
    classes_checked: int
    failures: tuple[ClauseFailure, ...]

    @property
    def empty(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "v_max": self.v_max,
            "lattice_n": self.lattice.n,
            "clause": self.clause,
            "axioms": format_axiom_set(self.axioms),
            "cap": self.cap,
            "seed": self.seed,
            "classes_checked": self.classes_checked,
            "failures": [f.to_dict() for f in self.failures],
        }


def search_counterexamples(
    v_max: int,
    lattice: ChainLattice,
    clause: str = "all",
    axioms: frozenset[Axiom] = DEFAULT_AXIOMS,
    cap: int = DEFAULT_LABELING_CAP,
    seed: int = 0,
    workers: int = 1,
) -> SearchReport:
    """Hunt for clause failures over every nontrivial skeleton with v <= v_max.

    Skeletons that do not satisfy the requested axiom set are outside the
    hypothesis and are skipped, not reported.  An empty report means the
    clause held on everything searched.
    """
    if clause not in _CLAUSES + ("all",):
        raise FlsError(f"unknown clause {clause!r}")
    if not MIN_POINTS <= v_max <= MAX_POINTS:
        raise FlsError(
            f"search supports {MIN_POINTS} <= v_max <= {MAX_POINTS}, got {v_max}"
        )
    failures = []
    classes_checked = 0
    for v in range(MIN_POINTS, v_max + 1):
        result = census(
            v,
            lattice,
            nontrivial_only=True,
            cap=cap,
            seed=seed,
            axioms=axioms,
            workers=workers,
        )
        for entry in result.entries:
            if entry.verdict is None:
                continue
            classes_checked += 1
            for name, witness in _clause_failures(entry.verdict, clause):
                failures.append(ClauseFailure(v, name, witness, entry))
            if entry.labelings and entry.labelings.verdicts_match_crisp is False:
                failures.append(
                    ClauseFailure(
                        v,
                        clause,
                        "a nonzero relabeling changed the verdict",
                        entry,
                    )
                )
    return SearchReport(
        v_max=v_max,
        lattice=lattice,
        clause=clause,
        axioms=axioms,
        cap=cap,
        seed=seed,
        classes_checked=classes_checked,
        failures=tuple(failures),
    )
