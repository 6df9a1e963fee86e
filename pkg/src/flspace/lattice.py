"""Finite chain lattices 0 < a_1 < ... < a_n < 1.

Elements are represented by integer rank: 0 is the bottom (written "0"),
n + 1 is the top (written "1"), and ranks 1..n are the intermediate
elements a_1..a_n.  On a chain, meet is minimum and join is maximum, and
the fact every other module leans on is that a meet of finitely many
elements is nonzero exactly when all of them are.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator

from .errors import FlsError, LatticeMismatchError, TokenError

_TOKEN_RE = re.compile(r"\Aa([1-9][0-9]*)\Z")


@dataclass(frozen=True)
class ChainLattice:
    """The chain with n intermediate elements, so n + 2 elements in total."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise FlsError(f"chain lattice needs n >= 0, got {self.n}")

    @property
    def size(self) -> int:
        return self.n + 2

    @property
    def top_rank(self) -> int:
        return self.n + 1

    def element(self, rank: int) -> LatticeElement:
        if not 0 <= rank <= self.n + 1:
            raise FlsError(f"rank {rank} out of range for L_{self.n}")
        return LatticeElement(self, rank)

    @property
    def bottom(self) -> LatticeElement:
        return LatticeElement(self, 0)

    @property
    def top(self) -> LatticeElement:
        return LatticeElement(self, self.n + 1)

    def elements(self) -> Iterator[LatticeElement]:
        for rank in range(self.n + 2):
            yield LatticeElement(self, rank)

    def nonzero_elements(self) -> Iterator[LatticeElement]:
        for rank in range(1, self.n + 2):
            yield LatticeElement(self, rank)

    def parse(self, token: str) -> LatticeElement:
        """Parse a value token: "0", "1", or "a<i>" with 1 <= i <= n."""
        if token == "0":
            return self.bottom
        if token == "1":
            return self.top
        match = _TOKEN_RE.match(token)
        if match is None:
            raise TokenError(f"unknown lattice token {token!r}")
        index = int(match.group(1))
        if index > self.n:
            raise TokenError(f"token {token!r} out of range for L_{self.n}")
        return LatticeElement(self, index)

    def token(self, rank: int) -> str:
        if not 0 <= rank <= self.n + 1:
            raise FlsError(f"rank {rank} out of range for L_{self.n}")
        if rank == 0:
            return "0"
        if rank == self.n + 1:
            return "1"
        return f"a{rank}"

    def __repr__(self) -> str:
        return f"ChainLattice(n={self.n})"


@dataclass(frozen=True)
class LatticeElement:
    lattice: ChainLattice
    rank: int

    def __post_init__(self) -> None:
        if not 0 <= self.rank <= self.lattice.n + 1:
            raise FlsError(
                f"rank {self.rank} out of range for L_{self.lattice.n}"
            )

    @property
    def is_zero(self) -> bool:
        return self.rank == 0

    @property
    def token(self) -> str:
        return self.lattice.token(self.rank)

    def __repr__(self) -> str:
        return f"<{self.token} in L_{self.lattice.n}>"


def _same_lattice(a: LatticeElement, b: LatticeElement) -> ChainLattice:
    if a.lattice != b.lattice:
        raise LatticeMismatchError(
            f"elements of L_{a.lattice.n} and L_{b.lattice.n} cannot be combined"
        )
    return a.lattice


def meet(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    """Greatest lower bound; on a chain this is the element of smaller rank."""
    lat = _same_lattice(a, b)
    return lat.element(min(a.rank, b.rank))


def join(a: LatticeElement, b: LatticeElement) -> LatticeElement:
    """Least upper bound; on a chain this is the element of larger rank."""
    lat = _same_lattice(a, b)
    return lat.element(max(a.rank, b.rank))


def meet_all(lattice: ChainLattice, elements: Iterable[LatticeElement]) -> LatticeElement:
    """Meet of arbitrarily many elements; the empty meet is the top."""
    return reduce(meet, elements, lattice.top)
