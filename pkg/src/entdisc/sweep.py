"""Parameter-grid scans over the family's (a^2, c^2) square, emitted as CSV.

Grid points are independent; the scans below evaluate them as one batched
numpy computation (stacked small SVDs, vectorized bisection) that mirrors the
per-point operations in :mod:`entdisc.discrimination` exactly. Records are
emitted in deterministic row-major order (outer loop a^2, inner loop c^2), so
repeated runs produce byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .discrimination import BISECTION_ITERATIONS, FEASIBILITY_TOL
from .errors import ValidationError
from .spectra import DEFAULT_TOL, binary_entropy
from .states import BellFamily, bell_states

__all__ = [
    "CSV_HEADER",
    "SWEEP_MODES",
    "SweepRecord",
    "avg_entanglement",
    "records_to_csv",
    "run_sweep",
    "write_csv",
]

SWEEP_MODES = ("assist", "preserve", "feasible3")

CSV_HEADER = "a2,c2,avg_ent_ebits,feasible_unassisted,alpha2_max,assist_cost_ebits,preserve_cost_ebits"

DEFAULT_GRID_N = 101


@dataclass(frozen=True)
class SweepRecord:
    """One grid point's outputs; unpopulated columns are None."""

    a2: float
    c2: float
    avg_ent_ebits: float
    feasible_unassisted: bool | None = None
    alpha2_max: float | None = None
    assist_cost_ebits: float | None = None
    preserve_cost_ebits: float | None = None


def avg_entanglement(family: BellFamily, probs: Sequence[float] | None = None) -> float:
    """Probability-weighted mean entanglement entropy of the four members."""
    if probs is None:
        probs = (0.25,) * 4
    if len(probs) != 4:
        raise ValidationError(f"expected 4 probabilities, got {len(probs)}")
    h_a = binary_entropy(family.a**2)
    h_c = binary_entropy(family.c**2)
    member_entropy = (h_a, h_a, h_c, h_c)
    return float(sum(p * e for p, e in zip(probs, member_entropy)))


def _entropy_terms(values: np.ndarray) -> np.ndarray:
    """Elementwise -v*log2(v) with 0*log(0) = 0."""
    safe = np.where(values > 0.0, values, 1.0)
    return -values * np.log2(safe) + 0.0  # +0.0 normalizes -0.0 away


def _binary_entropy_rows(p: np.ndarray) -> np.ndarray:
    return _entropy_terms(p) + _entropy_terms(1.0 - p)


def _member_matrices(a2: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """Coefficient matrices of the four family members, shape (4, n, 2, 2)."""
    n = a2.size
    a, b = np.sqrt(a2), np.sqrt(1.0 - a2)
    c, d = np.sqrt(c2), np.sqrt(1.0 - c2)
    psi = np.zeros((4, n, 2, 2))
    psi[0, :, 0, 0], psi[0, :, 1, 1] = a, b
    psi[1, :, 0, 0], psi[1, :, 1, 1] = b, -a
    psi[2, :, 0, 1], psi[2, :, 1, 0] = c, d
    psi[3, :, 0, 1], psi[3, :, 1, 0] = d, -c
    return psi


def _pointer_spectra(
    member_mats: Sequence[np.ndarray], probs: Sequence[float], pointer_mats: Sequence[np.ndarray]
) -> np.ndarray:
    """Descending reduced spectra of the batched pointer states, shape (n, 4).

    Mirrors ``pointer_state`` + ``reduced_spectrum``: the composite lives on
    the AC:BD cut with A and C grouped row-major.
    """
    n = member_mats[0].shape[0]
    composite = np.zeros((n, 4, 4))
    for psi, prob, phi in zip(member_mats, probs, pointer_mats):
        composite += np.sqrt(prob) * np.einsum("nab,cd->nacbd", psi, phi).reshape(n, 4, 4)
    singular = np.linalg.svd(composite, compute_uv=False)
    return singular**2


def _majorized_rows(lam_desc: np.ndarray, target_cumsum: np.ndarray, tol: float) -> np.ndarray:
    return np.all(np.cumsum(lam_desc, axis=1) <= target_cumsum + tol, axis=1)


def _resource_feasible(alpha2: np.ndarray, lam_desc: np.ndarray, tol: float) -> np.ndarray:
    """Full partial-sum test of (alpha2, 1-alpha2) x spectrum against (1/2, 1/2, 0, ...)."""
    cand = np.concatenate([alpha2[:, None] * lam_desc, (1.0 - alpha2[:, None]) * lam_desc], axis=1)
    cand = -np.sort(-cand, axis=1)
    target_cumsum = np.ones(cand.shape[1])
    target_cumsum[0] = 0.5
    return np.all(np.cumsum(cand, axis=1) <= target_cumsum + tol, axis=1)


def _alpha2_max_rows(lam_desc: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized replica of the bisection in ``assisted_alpha2_max``."""
    n = lam_desc.shape[0]
    feasible = _resource_feasible(np.full(n, 0.5), lam_desc, FEASIBILITY_TOL)
    at_one = _resource_feasible(np.ones(n), lam_desc, FEASIBILITY_TOL)
    lo, hi = np.full(n, 0.5), np.ones(n)
    for _ in range(BISECTION_ITERATIONS):
        mid = 0.5 * (lo + hi)
        ok = _resource_feasible(mid, lam_desc, FEASIBILITY_TOL)
        lo = np.where(ok, mid, lo)
        hi = np.where(ok, hi, mid)
    alpha2 = np.where(at_one, 1.0, lo)
    alpha2 = np.where(feasible, alpha2, np.nan)
    return alpha2, feasible


def run_sweep(
    mode: str,
    grid_n: int = DEFAULT_GRID_N,
    probs: Sequence[float] | None = None,
    which: Sequence[int] = (0, 1, 2),
) -> list[SweepRecord]:
    """Evaluate one analysis mode on the uniform grid_n x grid_n lattice over [0.5, 1]^2.

    Modes:
      * ``assist``: unassisted feasibility plus the assisted-resource bound
        and its entropy cost (the resource search itself always uses equal
        priors, matching ``assisted_alpha2_max``).
      * ``preserve``: entanglement cost of discrimination that keeps the
        identified state intact.
      * ``feasible3``: feasibility of discriminating the three-member subset
        ``which`` (priors default to 1/3 each).
    """
    if mode not in SWEEP_MODES:
        raise ValidationError(f"unknown sweep mode {mode!r}; expected one of {SWEEP_MODES}")
    if grid_n < 2:
        raise ValidationError(f"grid_n must be at least 2, got {grid_n}")
    if probs is None:
        probs = (1 / 3,) * 3 if mode == "feasible3" else (0.25,) * 4
    probs = [float(p) for p in probs]
    expected = 3 if mode == "feasible3" else 4
    if len(probs) != expected:
        raise ValidationError(f"mode {mode!r} expects {expected} probabilities, got {len(probs)}")
    which = tuple(int(i) for i in which)
    if mode == "feasible3" and (
        len(which) != 3 or len(set(which)) != 3 or not all(0 <= i < 4 for i in which)
    ):
        raise ValidationError(f"which={which!r} must be three distinct indices in 0..3")

    axis = np.linspace(0.5, 1.0, grid_n)
    a2g, c2g = np.meshgrid(axis, axis, indexing="ij")
    a2, c2 = a2g.ravel(), c2g.ravel()
    pointer_mats = [np.real(ptr.coefficient_matrix()) for ptr in bell_states()]
    members = _member_matrices(a2, c2)

    h_a, h_c = _binary_entropy_rows(a2), _binary_entropy_rows(c2)
    member_entropy = (h_a, h_a, h_c, h_c)

    if mode == "assist":
        avg_ent = sum(p * member_entropy[i] for i, p in enumerate(probs))
        lam = _pointer_spectra(members, probs, pointer_mats)
        unassisted = _majorized_rows(lam, np.array([0.5, 1.0, 1.0, 1.0]), DEFAULT_TOL)
        if probs == [0.25] * 4:
            lam_equal = lam
        else:
            lam_equal = _pointer_spectra(members, (0.25,) * 4, pointer_mats)
        alpha2, feasible = _alpha2_max_rows(lam_equal)
        cost = np.where(feasible, _binary_entropy_rows(np.where(feasible, alpha2, 0.5)), np.nan)
        return [
            SweepRecord(
                a2=float(a2[k]),
                c2=float(c2[k]),
                avg_ent_ebits=float(avg_ent[k]),
                feasible_unassisted=bool(unassisted[k]),
                alpha2_max=float(alpha2[k]),
                assist_cost_ebits=float(cost[k]),
            )
            for k in range(a2.size)
        ]

    if mode == "preserve":
        avg_ent = sum(p * member_entropy[i] for i, p in enumerate(probs))
        # Each member's self-tensored spectrum is already sorted, so the
        # mixture is the component-wise weighted sum (x^2, xy, xy, y^2).
        w_a, w_c = probs[0] + probs[1], probs[2] + probs[3]
        b2, d2 = 1.0 - a2, 1.0 - c2
        columns = [
            w_a * a2**2 + w_c * c2**2,
            w_a * a2 * b2 + w_c * c2 * d2,
            w_a * a2 * b2 + w_c * c2 * d2,
            w_a * b2**2 + w_c * d2**2,
        ]
        cost = sum(_entropy_terms(col) for col in columns)
        return [
            SweepRecord(
                a2=float(a2[k]),
                c2=float(c2[k]),
                avg_ent_ebits=float(avg_ent[k]),
                preserve_cost_ebits=float(cost[k]),
            )
            for k in range(a2.size)
        ]

    avg_ent = sum(p * member_entropy[i] for p, i in zip(probs, which))
    lam = _pointer_spectra([members[i] for i in which], probs, pointer_mats[:3])
    feasible3 = _majorized_rows(lam, np.array([0.5, 1.0, 1.0, 1.0]), DEFAULT_TOL)
    return [
        SweepRecord(
            a2=float(a2[k]),
            c2=float(c2[k]),
            avg_ent_ebits=float(avg_ent[k]),
            feasible_unassisted=bool(feasible3[k]),
        )
        for k in range(a2.size)
    ]


def _format_field(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return format(value, ".12g")


def records_to_csv(records: Sequence[SweepRecord]) -> str:
    """Render records under the fixed header, floats at 12 significant digits."""
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                _format_field(v)
                for v in (
                    r.a2,
                    r.c2,
                    r.avg_ent_ebits,
                    r.feasible_unassisted,
                    r.alpha2_max,
                    r.assist_cost_ebits,
                    r.preserve_cost_ebits,
                )
            )
        )
    return "\n".join(lines) + "\n"


def write_csv(records: Sequence[SweepRecord], destination) -> None:
    """Write the CSV rendering to a path or text file object (UTF-8, LF)."""
    text = records_to_csv(records)
    if isinstance(destination, (str, bytes)) or hasattr(destination, "__fspath__"):
        with open(destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        destination.write(text)
