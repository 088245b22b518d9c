import numpy as np
import pytest

from entdisc import (
    BellFamily,
    Ensemble,
    PureState,
    ValidationError,
    bell_family,
    bell_states,
    distinguishability_bound,
    entanglement_entropy,
    geometric_measure,
    global_robustness,
    reduced_spectrum,
    relative_entropy_ent,
    schmidt,
)
from helpers import random_pure_state, random_unitary, rdm_spectrum

BELL = PureState(np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0), 2, 2)
PRODUCT = PureState(np.array([0.0, 1.0, 0.0, 0.0]), 2, 2)  # |01>
LOPSIDED = PureState(np.array([0.8, 0.0, 0.0, 0.6]), 2, 2)  # probs (0.64, 0.36)


class TestPureState:
    def test_rejects_wrong_length(self):
        with pytest.raises(ValidationError):
            PureState(np.array([1.0, 0.0, 0.0]), 2, 2)

    def test_rejects_unnormalized(self):
        with pytest.raises(ValidationError):
            PureState(np.array([1.0, 1.0, 0.0, 0.0]), 2, 2)

    def test_matrix_round_trip(self):
        state = random_pure_state(np.random.default_rng(0), 3, 4)
        again = PureState.from_matrix(state.coefficient_matrix())
        assert np.allclose(again.amplitudes, state.amplitudes)
        assert (again.dim_a, again.dim_b) == (3, 4)

    def test_overlap(self):
        assert BELL.overlap(BELL) == pytest.approx(1.0)
        assert abs(BELL.overlap(PRODUCT)) == pytest.approx(0.0, abs=1e-12)

    def test_overlap_dimension_mismatch(self):
        other = random_pure_state(np.random.default_rng(1), 4, 1)
        with pytest.raises(ValidationError):
            BELL.overlap(other)


class TestSchmidt:
    def test_bell_state(self):
        assert np.allclose(schmidt(BELL).probs.entries, [0.5, 0.5])

    def test_product_state(self):
        assert np.allclose(schmidt(PRODUCT).probs.entries, [1.0, 0.0])

    def test_lopsided_state(self):
        # reduced density matrix is diag(0.64, 0.36) by hand
        assert np.allclose(schmidt(LOPSIDED).probs.entries, [0.64, 0.36])

    def test_reconstruction_round_trip(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            dim_a, dim_b = int(rng.integers(2, 5)), int(rng.integers(2, 6))
            state = random_pure_state(rng, dim_a, dim_b)
            rebuilt = schmidt(state).reconstruct()
            assert np.linalg.norm(rebuilt.amplitudes - state.amplitudes) < 1e-8

    def test_basis_vectors_orthonormal(self):
        state = random_pure_state(np.random.default_rng(3), 3, 3)
        dec = schmidt(state)
        gram_a = dec.basis_a @ dec.basis_a.conj().T
        gram_b = dec.basis_b @ dec.basis_b.conj().T
        assert np.allclose(gram_a, np.eye(gram_a.shape[0]), atol=1e-12)
        assert np.allclose(gram_b, np.eye(gram_b.shape[0]), atol=1e-12)


class TestReducedSpectrum:
    def test_matches_dense_eigensolve(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            dim_a, dim_b = int(rng.integers(2, 5)), int(rng.integers(2, 5))
            state = random_pure_state(rng, dim_a, dim_b)
            lam = reduced_spectrum(state).entries
            oracle = rdm_spectrum(state)[: lam.size]
            assert np.allclose(lam, oracle, atol=1e-12)

    def test_local_unitary_invariance(self):
        rng = np.random.default_rng(5)
        for _ in range(50):
            state = random_pure_state(rng, 3, 3)
            u = random_unitary(rng, 3)
            v = random_unitary(rng, 3)
            rotated = PureState.from_matrix(u @ state.coefficient_matrix() @ v.T)
            assert np.allclose(
                reduced_spectrum(state).entries, reduced_spectrum(rotated).entries, atol=1e-12
            )

    def test_dimension_is_smaller_side(self):
        state = random_pure_state(np.random.default_rng(6), 2, 5)
        assert reduced_spectrum(state).dim == 2


class TestBellFamily:
    def test_maximally_entangled_case_gives_bell_states(self):
        family = bell_family(0.5, 0.5)
        for got, want in zip(family, bell_states()):
            assert np.allclose(got.amplitudes, want.amplitudes)

    def test_product_case(self):
        family = bell_family(1.0, 1.0)
        expected = [
            [1.0, 0.0, 0.0, 0.0],   # |00>
            [0.0, 0.0, 0.0, -1.0],  # -|11>
            [0.0, 1.0, 0.0, 0.0],   # |01>
            [0.0, 0.0, -1.0, 0.0],  # -|10>
        ]
        for got, want in zip(family, expected):
            assert np.allclose(got.amplitudes, want)

    def test_pairwise_orthogonality(self):
        for a2, c2 in [(0.5, 0.5), (0.7, 0.9), (1.0, 0.6), (0.93, 1.0)]:
            family = bell_family(a2, c2)
            for i in range(4):
                for j in range(i + 1, 4):
                    assert abs(family[i].overlap(family[j])) < 1e-12

    def test_domain_validation(self):
        for a2, c2 in [(0.4, 0.6), (0.6, 1.1), (-0.1, 0.7)]:
            with pytest.raises(ValidationError):
                bell_family(a2, c2)

    def test_amplitude_invariants(self):
        with pytest.raises(ValidationError):
            BellFamily(a=0.6, b=0.8, c=1.0, d=0.0)  # a < b
        with pytest.raises(ValidationError):
            BellFamily(a=0.9, b=0.1, c=1.0, d=0.0)  # a^2+b^2 != 1

    def test_member_spectra(self):
        fam = BellFamily.from_squared(0.8, 0.65)
        spectra = fam.spectra()
        assert np.allclose(spectra[0].entries, [0.8, 0.2])
        assert np.allclose(spectra[2].entries, [0.65, 0.35])
        for member, spec in zip(fam.states(), spectra):
            assert np.allclose(reduced_spectrum(member).entries, spec.entries, atol=1e-12)


class TestMeasures:
    def test_entanglement_entropy(self):
        assert entanglement_entropy(BELL) == pytest.approx(1.0, abs=1e-12)
        assert entanglement_entropy(PRODUCT) == pytest.approx(0.0, abs=1e-12)
        assert entanglement_entropy(LOPSIDED) == pytest.approx(0.942683, abs=1e-6)

    def test_global_robustness(self):
        assert global_robustness(BELL) == pytest.approx(1.0, abs=1e-9)
        assert global_robustness(PRODUCT) == pytest.approx(0.0, abs=1e-9)
        assert global_robustness(LOPSIDED) == pytest.approx(0.96, abs=1e-9)

    def test_relative_entropy_matches_entropy(self):
        rng = np.random.default_rng(14)
        for _ in range(20):
            state = random_pure_state(rng, 2, 2)
            assert relative_entropy_ent(state) == entanglement_entropy(state)

    def test_geometric_measure(self):
        assert geometric_measure(BELL) == pytest.approx(1.0, abs=1e-9)
        assert geometric_measure(PRODUCT) == pytest.approx(0.0, abs=1e-9)
        assert geometric_measure(LOPSIDED) == pytest.approx(0.643856, abs=1e-6)

    def test_measure_chain_on_random_states(self):
        rng = np.random.default_rng(15)
        for _ in range(200):
            state = random_pure_state(rng, 2, 2)
            assert 1.0 + global_robustness(state) >= 2.0 ** relative_entropy_ent(state) - 1e-9
            assert 2.0 ** relative_entropy_ent(state) >= 2.0 ** geometric_measure(state) - 1e-9

    def test_two_qubit_entropy_at_most_one(self):
        rng = np.random.default_rng(16)
        for _ in range(200):
            assert entanglement_entropy(random_pure_state(rng, 2, 2)) <= 1.0 + 1e-12


class TestEnsemble:
    def test_validates_probability_sum(self):
        with pytest.raises(ValidationError):
            Ensemble(((0.7, BELL), (0.7, PRODUCT)))

    def test_validates_negative_probability(self):
        with pytest.raises(ValidationError):
            Ensemble(((1.5, BELL), (-0.5, PRODUCT)))

    def test_validates_common_dimensions(self):
        odd = random_pure_state(np.random.default_rng(17), 4, 1)
        with pytest.raises(ValidationError):
            Ensemble(((0.5, BELL), (0.5, odd)))

    def test_equal_priors(self):
        ens = Ensemble.equal_priors(bell_states())
        assert ens.probs == [0.25] * 4
        assert (ens.dim_a, ens.dim_b) == (2, 2)


class TestDistinguishabilityBound:
    def test_four_bell_states(self):
        bound = distinguishability_bound(Ensemble.equal_priors(bell_states()))
        assert bound.n_robustness == pytest.approx(2.0, abs=1e-9)
        assert bound.n_rel_entropy == pytest.approx(2.0, abs=1e-9)
        assert bound.n_geometric == pytest.approx(2.0, abs=1e-9)

    def test_four_product_states(self):
        bound = distinguishability_bound(Ensemble.equal_priors(bell_family(1.0, 1.0)))
        assert bound.n_robustness == pytest.approx(4.0, abs=1e-9)
        assert bound.n_rel_entropy == pytest.approx(4.0, abs=1e-9)
        assert bound.n_geometric == pytest.approx(4.0, abs=1e-9)

    def test_bound_ordering(self):
        rng = np.random.default_rng(18)
        for _ in range(50):
            states = [random_pure_state(rng, 2, 2) for _ in range(3)]
            bound = distinguishability_bound(Ensemble.equal_priors(states))
            assert bound.n_robustness <= bound.n_rel_entropy + 1e-9
            assert bound.n_rel_entropy <= bound.n_geometric + 1e-9
