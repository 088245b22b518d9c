"""Probability vectors, the majorization preorder, and entropies.

Everything downstream (LOCC convertibility tests, discrimination feasibility,
entanglement costs) reduces to comparisons between sorted probability vectors,
so this module is the numerical core of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import ValidationError

__all__ = [
    "DEFAULT_TOL",
    "ProbVector",
    "binary_entropy",
    "entropy_bits",
    "majorizes",
    "mix",
    "pad",
    "tensor",
]

# Absolute tolerance for partial-sum comparisons and normalization checks.
# Amplitudes are O(1), so double precision leaves ample headroom.
DEFAULT_TOL = 1e-9

# Entries below -NEG_ENTRY_TOL are rejected; negatives above it are treated as
# numerical noise (eigensolvers routinely return -1e-16) and clamped to zero.
NEG_ENTRY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ProbVector:
    """A probability vector stored in canonical non-increasing order.

    Entries are clamped/validated and sorted once at construction so that
    partial-sum comparisons never have to re-sort. Instances are immutable.
    """

    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=float).ravel()
        if arr.size == 0:
            raise ValidationError("probability vector must have at least one entry")
        if not np.all(np.isfinite(arr)):
            raise ValidationError("probability vector entries must be finite")
        low = arr.min()
        if low < -NEG_ENTRY_TOL:
            raise ValidationError(f"entry {low:.3e} is negative beyond tolerance {NEG_ENTRY_TOL:.0e}")
        arr = np.clip(arr, 0.0, None)
        total = arr.sum()
        if abs(total - 1.0) > DEFAULT_TOL:
            raise ValidationError(f"entries sum to {total!r}, expected 1 within {DEFAULT_TOL:.0e}")
        arr = np.sort(arr, kind="stable")[::-1].copy()
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def dim(self) -> int:
        return int(self.entries.size)

    def __len__(self) -> int:
        return self.dim

    def __iter__(self):
        return iter(self.entries)

    def __repr__(self) -> str:
        body = ", ".join(format(v, ".12g") for v in self.entries)
        return f"ProbVector([{body}])"


def _padded_desc(x: np.ndarray, n: int) -> np.ndarray:
    if x.size >= n:
        return x
    return np.concatenate([x, np.zeros(n - x.size)])


def _majorized_by(x_desc: np.ndarray, y_desc: np.ndarray, tol: float) -> bool:
    """Partial-sum dominance test on already-sorted (descending) arrays."""
    n = max(x_desc.size, y_desc.size)
    cx = np.cumsum(_padded_desc(x_desc, n))
    cy = np.cumsum(_padded_desc(y_desc, n))
    return bool(np.all(cx <= cy + tol))


def majorizes(x: ProbVector, y: ProbVector, tol: float = DEFAULT_TOL) -> bool:
    """Return True iff ``x`` is majorized by ``y``.

    The shorter vector is zero-padded before comparing partial sums of the
    descending-sorted entries; total-sum equality holds by the normalization
    invariant, so only the dominance inequalities are checked.
    """
    return _majorized_by(x.entries, y.entries, tol)


def tensor(x: ProbVector, y: ProbVector) -> ProbVector:
    """All pairwise products of the entries, re-sorted descending."""
    return ProbVector(np.outer(x.entries, y.entries).ravel())


def pad(x: ProbVector, d: int) -> ProbVector:
    """Append zeros up to dimension ``d`` (``d`` must not shrink the vector)."""
    if d < x.dim:
        raise ValidationError(f"cannot pad dimension {x.dim} down to {d}")
    return ProbVector(_padded_desc(x.entries, d))


def mix(weighted: Iterable[tuple[float, ProbVector]]) -> ProbVector:
    """Weighted component-wise average of sorted vectors.

    Each input vector is already in descending order (the ProbVector
    invariant); all are zero-padded to the largest dimension and averaged
    component-wise with the given weights.
    """
    pairs = list(weighted)
    if not pairs:
        raise ValidationError("mix requires at least one component")
    weights = np.array([p for p, _ in pairs], dtype=float)
    if weights.min() < -NEG_ENTRY_TOL:
        raise ValidationError("mixing weights must be nonnegative")
    weights = np.clip(weights, 0.0, None)
    total = weights.sum()
    if abs(total - 1.0) > DEFAULT_TOL:
        raise ValidationError(f"mixing weights sum to {total!r}, expected 1 within {DEFAULT_TOL:.0e}")
    n = max(v.dim for _, v in pairs)
    out = np.zeros(n)
    for w, (_, v) in zip(weights, pairs):
        out += w * _padded_desc(v.entries, n)
    return ProbVector(out)


def entropy_bits(x: ProbVector) -> float:
    """Shannon entropy of the vector in bits, with 0*log(0) = 0."""
    lam = x.entries[x.entries > 0.0]
    return float(-(lam * np.log2(lam)).sum() + 0.0)  # +0.0 normalizes -0.0 away


def binary_entropy(p: float) -> float:
    """Entropy in bits of the two-outcome distribution (p, 1-p)."""
    if p < -NEG_ENTRY_TOL or p > 1.0 + NEG_ENTRY_TOL:
        raise ValidationError(f"binary entropy argument {p!r} outside [0, 1]")
    p = min(max(p, 0.0), 1.0)
    out = 0.0
    if p > 0.0:
        out -= p * np.log2(p)
    if p < 1.0:
        out -= (1.0 - p) * np.log2(1.0 - p)
    return float(out)
