"""Feasibility and entanglement-cost analysis of local state discrimination.

The central device is the pointer construction: a discrimination problem over
an ensemble {p_i, psi_i} on the A:B cut is encoded as the composite state
sum_i sqrt(p_i) |psi_i>_AB |phi_i>_CD with mutually orthogonal pointers
phi_i, read as a bipartite state on the AC:BD cut. Distinguishing the
ensemble then implies an ensemble transformation of the composite into the
pointers, which majorization decides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import ValidationError
from .spectra import (
    DEFAULT_TOL,
    ProbVector,
    binary_entropy,
    entropy_bits,
    majorizes,
    mix,
    tensor,
)
from .states import (
    BellFamily,
    Ensemble,
    PureState,
    bell_states,
    reduced_spectrum,
)

__all__ = [
    "CostReport",
    "Ensemble",
    "Residual",
    "assisted_alpha2_max",
    "closed_form_lhs",
    "conjugation_probe",
    "locc_deterministic_feasible",
    "locc_ensemble_feasible",
    "partial_inner_product",
    "perfect_discrimination_feasible",
    "pointer_state",
    "preserve_cost",
    "preserve_spectrum",
    "three_state_feasible",
]

BISECTION_ITERATIONS = 60

# Tolerance used inside the resource bisection. Tighter than DEFAULT_TOL so
# the boundary estimate cannot overshoot the closed-form first-partial-sum
# bound by more than float noise, yet loose enough to absorb eigenvalue
# round-off (~1e-16) at the maximally entangled corner.
FEASIBILITY_TOL = 1e-13

ZERO_NORM_TOL = 1e-12

EQUAL_PRIORS_4 = (0.25, 0.25, 0.25, 0.25)


def pointer_state(ensemble: Ensemble, pointers: Sequence[PureState]) -> PureState:
    """Attach one orthogonal pointer per ensemble member.

    Returns sum_i sqrt(p_i) |psi_i>_AB |phi_i>_CD as a pure state on the
    AC:BD cut: the A and C indices are grouped on one side (row-major, A
    outer), B and D on the other. Orthonormal pointers make the result
    normalized for any ensemble.
    """
    if len(pointers) != len(ensemble.members):
        raise ValidationError(
            f"need one pointer per member, got {len(pointers)} for {len(ensemble.members)}"
        )
    dims = {(p.dim_a, p.dim_b) for p in pointers}
    if len(dims) != 1:
        raise ValidationError("all pointers must share the same local dimensions")
    for i in range(len(pointers)):
        for j in range(i + 1, len(pointers)):
            if abs(pointers[i].overlap(pointers[j])) > DEFAULT_TOL:
                raise ValidationError(f"pointers {i} and {j} are not orthogonal")
    dim_c, dim_d = dims.pop()
    out = np.zeros((ensemble.dim_a, dim_c, ensemble.dim_b, dim_d), dtype=complex)
    for (prob, psi), phi in zip(ensemble.members, pointers):
        block = np.multiply.outer(psi.coefficient_matrix(), phi.coefficient_matrix())
        out += np.sqrt(prob) * block.transpose(0, 2, 1, 3)
    return PureState.from_matrix(out.reshape(ensemble.dim_a * dim_c, ensemble.dim_b * dim_d))


def locc_deterministic_feasible(
    source: ProbVector, target: ProbVector, tol: float = DEFAULT_TOL
) -> bool:
    """Deterministic LOCC convertibility: the source spectrum must be majorized by the target's."""
    return majorizes(source, target, tol)


def locc_ensemble_feasible(
    source: ProbVector,
    targets: Sequence[tuple[float, ProbVector]],
    tol: float = DEFAULT_TOL,
) -> bool:
    """Probabilistic LOCC convertibility into an ensemble of targets.

    Feasible iff the source spectrum is majorized by the probability-weighted
    average of the sorted target spectra.
    """
    return majorizes(source, mix(targets), tol)


def _family_ensemble(family: BellFamily, probs: Sequence[float], expected: int) -> list[float]:
    probs = [float(p) for p in probs]
    if len(probs) != expected:
        raise ValidationError(f"expected {expected} probabilities, got {len(probs)}")
    return probs


def perfect_discrimination_feasible(
    family: BellFamily,
    probs: Sequence[float] | None = None,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Can all four family members be perfectly distinguished by LOCC alone?

    Builds the pointer state over the four maximally entangled pointers and
    tests its spectrum against the mixed pointer spectra.
    """
    probs = _family_ensemble(family, probs if probs is not None else EQUAL_PRIORS_4, 4)
    pointers = bell_states()
    ensemble = Ensemble(tuple(zip(probs, family.states())))
    lam = reduced_spectrum(pointer_state(ensemble, pointers))
    target = mix([(p, reduced_spectrum(ptr)) for p, ptr in zip(probs, pointers)])
    return majorizes(lam, target, tol)


def closed_form_lhs(family: BellFamily) -> float:
    """Largest eigenvalue of the equal-priors four-member pointer state, (a+b+c+d)^2 / 8."""
    return (family.a + family.b + family.c + family.d) ** 2 / 8.0


def three_state_feasible(
    family: BellFamily,
    which: Sequence[int] = (0, 1, 2),
    probs: Sequence[float] | None = None,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Feasibility of discriminating a three-member subset of the family.

    ``which`` selects three distinct member indices (zero-based). The chosen
    members are attached, in order, to the first three maximally entangled
    pointer states.
    """
    which = tuple(int(i) for i in which)
    if len(which) != 3 or len(set(which)) != 3 or not all(0 <= i < 4 for i in which):
        raise ValidationError(f"which={which!r} must be three distinct indices in 0..3")
    probs = _family_ensemble(family, probs if probs is not None else (1 / 3,) * 3, 3)
    members = family.states()
    pointers = bell_states()[:3]
    ensemble = Ensemble(tuple(zip(probs, (members[i] for i in which))))
    lam = reduced_spectrum(pointer_state(ensemble, pointers))
    target = mix([(p, reduced_spectrum(ptr)) for p, ptr in zip(probs, pointers)])
    return majorizes(lam, target, tol)


@dataclass(frozen=True)
class CostReport:
    """Resource requirements for entanglement-assisted discrimination.

    ``alpha2_max`` is the largest admissible squared Schmidt coefficient of a
    two-term resource state: larger means a *less* entangled resource
    suffices. ``cost_ebits`` is the binary entropy of ``alpha2_max``, and
    ``first_sum_bound`` is the closed-form cap min(1, 4/(a+b+c+d)^2) implied
    by the leading partial sum alone. Both numbers are reported so their
    agreement is observable rather than assumed.
    """

    alpha2_max: float
    cost_ebits: float
    first_sum_bound: float
    feasible: bool


def assisted_alpha2_max(family: BellFamily) -> CostReport:
    """Weakest two-term resource that unlocks perfect four-state discrimination.

    Searches for the largest alpha^2 in [0.5, 1] such that the spectrum of
    resource x pointer-state is majorized by the mixed pointer spectra,
    bisecting the monotone feasibility boundary. Every partial sum is
    checked, not only the leading one.
    """
    ensemble = Ensemble(tuple(zip(EQUAL_PRIORS_4, family.states())))
    pointers = bell_states()
    lam = reduced_spectrum(pointer_state(ensemble, pointers)).entries
    target = np.zeros(2 * lam.size)
    target[0] = target[1] = 0.5
    target_cumsum = np.cumsum(target)

    def feasible(alpha2: float) -> bool:
        cand = np.sort(np.concatenate((alpha2 * lam, (1.0 - alpha2) * lam)))[::-1]
        return bool(np.all(np.cumsum(cand) <= target_cumsum + FEASIBILITY_TOL))

    total = family.a + family.b + family.c + family.d
    first_sum_bound = min(1.0, 4.0 / total**2)

    if not feasible(0.5):
        return CostReport(
            alpha2_max=float("nan"),
            cost_ebits=float("nan"),
            first_sum_bound=first_sum_bound,
            feasible=False,
        )
    if feasible(1.0):
        alpha2 = 1.0
    else:
        lo, hi = 0.5, 1.0
        for _ in range(BISECTION_ITERATIONS):
            mid = 0.5 * (lo + hi)
            if feasible(mid):
                lo = mid
            else:
                hi = mid
        alpha2 = lo
    return CostReport(
        alpha2_max=alpha2,
        cost_ebits=binary_entropy(alpha2),
        first_sum_bound=first_sum_bound,
        feasible=True,
    )


def preserve_spectrum(
    family: BellFamily, probs: Sequence[float] | None = None
) -> ProbVector:
    """Spectrum cap for a resource that lets discrimination keep the states intact.

    The probability-weighted mixture of each member's self-tensored reduced
    spectrum. Any resource able to fund identification without degrading the
    identified state must have a spectrum majorized by this vector.
    """
    probs = _family_ensemble(family, probs if probs is not None else EQUAL_PRIORS_4, 4)
    return mix([(p, tensor(s, s)) for p, s in zip(probs, family.spectra())])


def preserve_cost(family: BellFamily, probs: Sequence[float] | None = None) -> float:
    """Minimal e-bits for state-preserving discrimination.

    Entropy is Schur-concave, so every admissible resource spectrum carries
    at least the entropy of the cap vector, and the cap itself is admissible:
    its entropy is the exact minimum. Always within [0, 2] for this family.
    """
    return entropy_bits(preserve_spectrum(family, probs))


class Residual(NamedTuple):
    """Unnormalized contraction result: ``norm`` plus the normalized state.

    The probability weight of the branch is ``norm ** 2``. ``state`` is None
    when the contraction vanished.
    """

    norm: float
    state: PureState | None


def partial_inner_product(
    bra: PureState,
    joint: PureState,
    dims_out: tuple[int, int] | None = None,
) -> Residual:
    """Contract a joint state's first subsystem pair against ``bra``.

    ``joint`` lives on the cut (AB):(residual pair); its first local
    dimension must equal the bra's total dimension. The result is the
    residual-pair state <bra|joint>, returned with its norm so the branch
    probability norm^2 is recoverable. ``dims_out`` fixes the residual
    pair's bipartite split; it defaults to the bra's own (dim_a, dim_b)
    when the sizes allow it.
    """
    dim_ab = bra.dim_a * bra.dim_b
    if joint.dim_a != dim_ab:
        raise ValidationError(
            f"joint's first cut has dimension {joint.dim_a}, expected {dim_ab}"
        )
    if dims_out is None:
        if joint.dim_b != dim_ab:
            raise ValidationError(
                "residual split is ambiguous for asymmetric joints; pass dims_out"
            )
        dims_out = (bra.dim_a, bra.dim_b)
    if dims_out[0] * dims_out[1] != joint.dim_b:
        raise ValidationError(
            f"dims_out {dims_out!r} does not factor the residual dimension {joint.dim_b}"
        )
    residual = np.conj(bra.amplitudes) @ joint.coefficient_matrix()
    norm = float(np.linalg.norm(residual))
    if norm <= ZERO_NORM_TOL:
        return Residual(norm=0.0, state=None)
    return Residual(norm=norm, state=PureState(residual / norm, dims_out[0], dims_out[1]))


def conjugation_probe(dim_a: int = 2, dim_b: int = 2) -> PureState:
    """Joint state whose partial inner products return conjugated inputs.

    Built as a product of one maximally entangled pair per local factor and
    regrouped onto the (AB):(mirror pair) cut. For any bra psi on the AB cut,
    contracting against this probe yields psi's complex conjugate with norm
    1/sqrt(dim_a * dim_b).
    """
    u = np.eye(dim_a) / np.sqrt(dim_a)
    v = np.eye(dim_b) / np.sqrt(dim_b)
    coeffs = np.einsum("ij,kl->ikjl", u, v).reshape(dim_a * dim_b, dim_a * dim_b)
    return PureState.from_matrix(coeffs)
