"""Bipartite pure states, Schmidt decompositions, and entanglement measures.

Amplitudes are stored row-major over (a_index, b_index): the amplitude of
|i>_A |j>_B sits at position i * dim_b + j. That convention makes the
coefficient-matrix reshape used by the Schmidt decomposition unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .spectra import DEFAULT_TOL, ProbVector, entropy_bits

__all__ = [
    "BellFamily",
    "DistinguishabilityBound",
    "Ensemble",
    "PureState",
    "SchmidtDecomposition",
    "bell_family",
    "bell_states",
    "distinguishability_bound",
    "entanglement_entropy",
    "geometric_measure",
    "global_robustness",
    "reduced_spectrum",
    "relative_entropy_ent",
    "schmidt",
]


@dataclass(frozen=True, eq=False)
class PureState:
    """A normalized pure state on a bipartite cut with declared local dimensions."""

    amplitudes: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).ravel()
        if self.dim_a < 1 or self.dim_b < 1:
            raise ValidationError("local dimensions must be positive")
        if amps.size != self.dim_a * self.dim_b:
            raise ValidationError(
                f"got {amps.size} amplitudes for dimensions {self.dim_a}x{self.dim_b}"
            )
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > DEFAULT_TOL:
            raise ValidationError(f"state norm^2 is {norm2!r}, expected 1 within {DEFAULT_TOL:.0e}")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_matrix(cls, coeffs: np.ndarray) -> "PureState":
        """Build a state from its dim_a x dim_b coefficient matrix."""
        coeffs = np.asarray(coeffs, dtype=complex)
        if coeffs.ndim != 2:
            raise ValidationError("coefficient matrix must be two-dimensional")
        return cls(coeffs.ravel(), coeffs.shape[0], coeffs.shape[1])

    def coefficient_matrix(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dim_a, self.dim_b)

    def overlap(self, other: "PureState") -> complex:
        """Inner product <self|other>."""
        if (self.dim_a, self.dim_b) != (other.dim_a, other.dim_b):
            raise ValidationError("overlap requires matching local dimensions")
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(frozen=True, eq=False)
class SchmidtDecomposition:
    """Schmidt probabilities and the matching orthonormal local bases.

    ``basis_a[k]`` / ``basis_b[k]`` are the local vectors paired with
    ``probs.entries[k]``. Bases are only unique up to degenerate-subspace
    rotations; the contract-bearing guarantee is that ``reconstruct()``
    reproduces the original state.
    """

    probs: ProbVector
    basis_a: np.ndarray
    basis_b: np.ndarray

    def reconstruct(self) -> PureState:
        coeffs = np.sqrt(self.probs.entries)
        matrix = np.einsum("k,ki,kj->ij", coeffs, self.basis_a, self.basis_b)
        return PureState.from_matrix(matrix)


def schmidt(state: PureState) -> SchmidtDecomposition:
    """Schmidt-decompose a bipartite pure state.

    The amplitudes are reshaped to a dim_a x dim_b matrix and factored by
    singular value decomposition; the squared singular values are the Schmidt
    probabilities, returned in descending order together with the paired
    local basis vectors.
    """
    matrix = state.coefficient_matrix()
    u, sing, vh = np.linalg.svd(matrix, full_matrices=False)
    probs = ProbVector(sing**2)
    basis_a = np.ascontiguousarray(u.T)
    basis_b = np.ascontiguousarray(vh)
    basis_a.setflags(write=False)
    basis_b.setflags(write=False)
    return SchmidtDecomposition(probs=probs, basis_a=basis_a, basis_b=basis_b)


def reduced_spectrum(state: PureState) -> ProbVector:
    """Eigenvalues of the reduced density matrix, sorted descending."""
    sing = np.linalg.svd(state.coefficient_matrix(), compute_uv=False)
    return ProbVector(sing**2)


@dataclass(frozen=True)
class BellFamily:
    """The four-state family a|00>+b|11>, b|00>-a|11>, c|01>+d|10>, d|01>-c|10>.

    Amplitudes are real and canonically ordered (a >= b >= 0, c >= d >= 0),
    with each pair normalized.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        if not (self.a >= self.b >= 0.0 and self.c >= self.d >= 0.0):
            raise ValidationError("amplitudes must satisfy a >= b >= 0 and c >= d >= 0")
        if abs(self.a**2 + self.b**2 - 1.0) > DEFAULT_TOL:
            raise ValidationError("a^2 + b^2 must equal 1")
        if abs(self.c**2 + self.d**2 - 1.0) > DEFAULT_TOL:
            raise ValidationError("c^2 + d^2 must equal 1")

    @classmethod
    def from_squared(cls, a2: float, c2: float) -> "BellFamily":
        """Construct from the squared Schmidt parameters a^2, c^2 in [0.5, 1]."""
        for name, value in (("a2", a2), ("c2", c2)):
            if not 0.5 <= value <= 1.0:
                raise ValidationError(f"{name}={value!r} outside [0.5, 1]")
        return cls(
            a=float(np.sqrt(a2)),
            b=float(np.sqrt(1.0 - a2)),
            c=float(np.sqrt(c2)),
            d=float(np.sqrt(1.0 - c2)),
        )

    def states(self) -> list[PureState]:
        """The four mutually orthogonal family members as 2x2 pure states."""
        a, b, c, d = self.a, self.b, self.c, self.d
        return [
            PureState(np.array([a, 0.0, 0.0, b]), 2, 2),
            PureState(np.array([b, 0.0, 0.0, -a]), 2, 2),
            PureState(np.array([0.0, c, d, 0.0]), 2, 2),
            PureState(np.array([0.0, d, -c, 0.0]), 2, 2),
        ]

    def spectra(self) -> list[ProbVector]:
        """Reduced spectra of the four members: (a^2, b^2) twice, (c^2, d^2) twice."""
        first = ProbVector([self.a**2, self.b**2])
        second = ProbVector([self.c**2, self.d**2])
        return [first, first, second, second]


def bell_family(a2: float, c2: float) -> list[PureState]:
    """The four family members for squared Schmidt parameters (a2, c2)."""
    return BellFamily.from_squared(a2, c2).states()


def bell_states() -> list[PureState]:
    """The four maximally entangled two-qubit states.

    Order matters downstream: pointer constructions pair the i-th ensemble
    member with the i-th state of this list.
    """
    r = 1.0 / np.sqrt(2.0)
    return [
        PureState(np.array([r, 0.0, 0.0, r]), 2, 2),
        PureState(np.array([r, 0.0, 0.0, -r]), 2, 2),
        PureState(np.array([0.0, r, r, 0.0]), 2, 2),
        PureState(np.array([0.0, r, -r, 0.0]), 2, 2),
    ]


@dataclass(frozen=True, eq=False)
class Ensemble:
    """A list of (probability, state) pairs sharing one bipartite cut."""

    members: tuple[tuple[float, PureState], ...]

    def __post_init__(self):
        members = tuple((float(p), s) for p, s in self.members)
        if not members:
            raise ValidationError("ensemble must have at least one member")
        probs = np.array([p for p, _ in members])
        if probs.min() < -DEFAULT_TOL:
            raise ValidationError("ensemble probabilities must be nonnegative")
        if abs(probs.sum() - 1.0) > DEFAULT_TOL:
            raise ValidationError(f"ensemble probabilities sum to {probs.sum()!r}, expected 1")
        dims = {(s.dim_a, s.dim_b) for _, s in members}
        if len(dims) != 1:
            raise ValidationError("all ensemble states must share the same local dimensions")
        members = tuple((max(p, 0.0), s) for p, s in members)
        object.__setattr__(self, "members", members)

    @classmethod
    def equal_priors(cls, states: list[PureState]) -> "Ensemble":
        n = len(states)
        return cls(tuple((1.0 / n, s) for s in states))

    @property
    def probs(self) -> list[float]:
        return [p for p, _ in self.members]

    @property
    def states(self) -> list[PureState]:
        return [s for _, s in self.members]

    @property
    def dim_a(self) -> int:
        return self.members[0][1].dim_a

    @property
    def dim_b(self) -> int:
        return self.members[0][1].dim_b


def entanglement_entropy(state: PureState) -> float:
    """Entropy in e-bits of the reduced spectrum."""
    return entropy_bits(reduced_spectrum(state))


def global_robustness(state: PureState) -> float:
    """Global robustness of entanglement, (sum_i sqrt(lambda_i))^2 - 1.

    The closed form holds for bipartite pure states; it vanishes exactly on
    product states.
    """
    lam = reduced_spectrum(state).entries
    value = float(np.sqrt(lam).sum() ** 2 - 1.0)
    return max(value, 0.0) + 0.0


def relative_entropy_ent(state: PureState) -> float:
    """Relative entropy of entanglement; equals the entanglement entropy for pure states."""
    return entanglement_entropy(state)


def geometric_measure(state: PureState) -> float:
    """Geometric measure of entanglement, -log2 of the largest Schmidt probability."""
    lam = reduced_spectrum(state).entries
    return max(float(-np.log2(lam[0])), 0.0) + 0.0


@dataclass(frozen=True)
class DistinguishabilityBound:
    """Upper bounds on how many ensemble members are locally distinguishable."""

    n_robustness: float
    n_rel_entropy: float
    n_geometric: float


def distinguishability_bound(ensemble: Ensemble) -> DistinguishabilityBound:
    """Bound the number of perfectly LOCC-distinguishable states three ways.

    Each bound is D divided by the arithmetic mean (over the ensemble
    members) of an entanglement-derived weight: 1 + robustness, 2^(relative
    entropy), and 2^(geometric measure). The three results are reported
    side by side; the robustness bound is always the tightest.
    """
    states = ensemble.states
    total_dim = ensemble.dim_a * ensemble.dim_b
    mean_rob = float(np.mean([1.0 + global_robustness(s) for s in states]))
    mean_rel = float(np.mean([2.0 ** relative_entropy_ent(s) for s in states]))
    mean_geo = float(np.mean([2.0 ** geometric_measure(s) for s in states]))
    return DistinguishabilityBound(
        n_robustness=total_dim / mean_rob,
        n_rel_entropy=total_dim / mean_rel,
        n_geometric=total_dim / mean_geo,
    )
