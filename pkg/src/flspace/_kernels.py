"""Canonical-form kernels: the one hot loop in the package.

Isomorphism rejection brute-forces the minimum representation over all v!
point permutations (v <= 7, so at most 5040).  For every permutation the
kernel packs each line's value vector into one integer key (8 bits per
point) and keeps the keys sorted; the (v!, b) matrix of sorted key rows is
everything the callers need: its lexicographic minimum row is the
canonical form, the multiplicity of any row is the automorphism count,
and the set of distinct rows is the isomorphism orbit.

Two implementations are provided and must agree bit for bit:

  numba   @njit loops (default when numba imports)
  numpy   vectorized fallback

Selection: set FLS_KERNEL=numpy (or numba) in the environment, or pass
backend= explicitly.  benchmarks/bench_canonical.py compares the two.
"""

from __future__ import annotations

import os
from functools import lru_cache
from itertools import permutations

import numpy as np

from .errors import FlsError

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAS_NUMBA = False

MAX_POINTS = 7
MAX_RANK = 255


def _sorted_key_forms_numpy(ranks: np.ndarray, perms: np.ndarray) -> np.ndarray:
    v = perms.shape[1]
    weights = np.left_shift(np.int64(1), 8 * np.arange(v - 1, -1, -1, dtype=np.int64))
    permuted = ranks[:, perms].astype(np.int64)  # (b, P, v)
    keys = (permuted * weights).sum(axis=2)  # (b, P)
    keys.sort(axis=0)
    return np.ascontiguousarray(keys.T)


if HAS_NUMBA:

    @njit(cache=True)
    def _sorted_key_forms_numba(ranks, perms):  # pragma: no cover - jitted
        n_perms, v = perms.shape
        b = ranks.shape[0]
        out = np.empty((n_perms, b), np.int64)
        for p in range(n_perms):
            for j in range(b):
                key = 0
                for i in range(v):
                    key = (key << 8) | ranks[j, perms[p, i]]
                pos = j
                while pos > 0 and out[p, pos - 1] > key:
                    out[p, pos] = out[p, pos - 1]
                    pos -= 1
                out[p, pos] = key
            # rows stay sorted via insertion as keys are produced
        return out


def available_backends() -> tuple[str, ...]:
    return ("numba", "numpy") if HAS_NUMBA else ("numpy",)


def active_backend() -> str:
    """Backend chosen by the FLS_KERNEL env var, defaulting to numba."""
    choice = os.environ.get("FLS_KERNEL", "").strip().lower()
    if choice in ("", "auto"):
        return "numba" if HAS_NUMBA else "numpy"
    if choice not in ("numba", "numpy"):
        raise FlsError(f"FLS_KERNEL must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numba" and not HAS_NUMBA:
        raise FlsError("FLS_KERNEL=numba but numba is not importable")
    return choice


def sorted_key_forms(
    ranks: np.ndarray, perms: np.ndarray, backend: str | None = None
) -> np.ndarray:
    """All sorted packed-key rows, one per permutation: shape (v!, b)."""
    backend = backend or active_backend()
    ranks = np.ascontiguousarray(ranks, dtype=np.uint8)
    if backend == "numba":
        if not HAS_NUMBA:
            raise FlsError("numba backend requested but numba is not importable")
        return _sorted_key_forms_numba(ranks, perms)
    if backend == "numpy":
        return _sorted_key_forms_numpy(ranks, perms)
    raise FlsError(f"unknown kernel backend {backend!r}")


@lru_cache(maxsize=None)
def permutation_matrix(v: int) -> np.ndarray:
    """All permutations of range(v) as a read-only (v!, v) int64 array."""
    if not 1 <= v <= MAX_POINTS:
        raise FlsError(f"permutation table supports 1 <= v <= {MAX_POINTS}, got {v}")
    mat = np.array(list(permutations(range(v))), dtype=np.int64)
    mat.setflags(write=False)
    return mat


def pack_ranks(values_rows: list[tuple[int, ...]], v: int) -> np.ndarray:
    """Rank matrix (b, v) for the kernels; ranks must fit in one byte."""
    if v > MAX_POINTS:
        raise FlsError(f"kernels support at most {MAX_POINTS} points, got {v}")
    mat = np.zeros((len(values_rows), v), dtype=np.uint8)
    for j, row in enumerate(values_rows):
        for i, r in enumerate(row):
            if r > MAX_RANK:
                raise FlsError(f"rank {r} does not fit the packed representation")
            mat[j, i] = r
    return mat


def line_key(values: tuple[int, ...]) -> int:
    """The packed integer key of one value row (8 bits per point)."""
    key = 0
    for r in values:
        key = (key << 8) | r
    return key


def unpack_key(key: int, v: int) -> tuple[int, ...]:
    """Inverse of line_key for a fixed point count."""
    out = []
    for i in range(v):
        out.append((key >> (8 * (v - 1 - i))) & 0xFF)
    return tuple(out)


def minimum_form(forms: np.ndarray) -> np.ndarray:
    """Lexicographically smallest row of a (P, b) key matrix."""
    order = np.lexsort(forms.T[::-1])
    return forms[order[0]]
