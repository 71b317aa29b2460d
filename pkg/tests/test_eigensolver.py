import numpy as np
import pytest

from xxring.eigensolver import eigh_symmetric, full_spectrum, ground_state_vector
from xxring.hamiltonian import ModelParams, build_sector_hamiltonian, full_hamiltonian

from oracles import reference_spectrum_n4


def _random_symmetric(rng, dim):
    a = rng.normal(size=(dim, dim))
    return (a + a.T) / 2.0


def test_identity_eigensystem():
    eig = eigh_symmetric(np.eye(2))
    assert np.allclose(eig.values, [1.0, 1.0])


def test_pauli_x_eigenvalues():
    eig = eigh_symmetric(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(eig.values, [-1.0, 1.0], atol=1e-14)


def test_decomposition_invariants_random(rng):
    for dim in (3, 17, 60):
        a = _random_symmetric(rng, dim)
        eig = eigh_symmetric(a)
        assert np.all(np.diff(eig.values) >= 0)
        gram = eig.vectors.T @ eig.vectors
        assert np.abs(gram - np.eye(dim)).max() < 1e-10
        residual = a @ eig.vectors - eig.vectors * eig.values
        assert np.abs(residual).max() < 1e-9 * max(1.0, np.abs(a).max())


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        eigh_symmetric(np.ones((2, 3)))
    with pytest.raises(ValueError):
        eigh_symmetric(np.array([[0.0, 1.0], [0.5, 0.0]]))


def test_n4_half_filling_sector_values():
    block = build_sector_hamiltonian(ModelParams(n=4, j=1.0, b=0.0), 2)
    values = eigh_symmetric(block.entries).values
    s2 = 4.0 * np.sqrt(2.0)
    assert np.allclose(values, [-s2, 0.0, 0.0, 0.0, 0.0, s2], atol=1e-12)


def test_full_spectrum_counts_and_ground(rng):
    for n in (1, 2, 3, 5):
        j, b = rng.uniform(-2, 2, size=2)
        spectrum = full_spectrum(ModelParams(n=n, j=j, b=b))
        values = spectrum.eigenvalues()
        assert values.size == 2 ** n
        assert spectrum.ground_energy == pytest.approx(values[0], abs=0)


def test_full_spectrum_n4_matches_reference_levels(rng):
    for _ in range(5):
        j, b = rng.uniform(-2, 2, size=2)
        spectrum = full_spectrum(ModelParams(n=4, j=j, b=b))
        assert np.allclose(spectrum.eigenvalues(), reference_spectrum_n4(j, b), atol=1e-10)


def test_full_spectrum_single_site():
    spectrum = full_spectrum(ModelParams(n=1, j=123.0, b=0.7))
    assert np.allclose(spectrum.eigenvalues(), [-0.7, 0.7], atol=0)


def test_n6_ground_energy_against_brute_force():
    params = ModelParams(n=6, j=1.0, b=0.0)
    oracle = np.linalg.eigvalsh(full_hamiltonian(params))
    spectrum = full_spectrum(params)
    assert np.allclose(spectrum.eigenvalues(), np.sort(oracle), atol=1e-9)
    assert spectrum.ground_energy == pytest.approx(-8.0, abs=1e-10)


def test_eigenvalue_sums_match_traces(rng):
    params = ModelParams(n=6, j=float(rng.uniform(-2, 2)), b=float(rng.uniform(-2, 2)))
    for sec in full_spectrum(params).sectors:
        block = build_sector_hamiltonian(params, sec.basis.r)
        assert abs(sec.eig.values.sum() - np.trace(block.entries)) < 1e-9


def test_field_sign_flip_negates_spectrum(rng):
    for n in (2, 4, 6):
        j, b = rng.uniform(-2, 2, size=2)
        plus = full_spectrum(ModelParams(n=n, j=j, b=b)).eigenvalues()
        minus = full_spectrum(ModelParams(n=n, j=j, b=-b)).eigenvalues()
        assert np.allclose(plus, -minus[::-1], atol=1e-10)


def test_ground_states_span_degenerate_levels():
    # the first crossing field: two branches meet there
    b_cross = 2.0 * (np.sqrt(2.0) - 1.0)
    spectrum = full_spectrum(ModelParams(n=4, j=1.0, b=b_cross))
    assert len(spectrum.ground_states()) == 2


def test_ground_state_vector_unique_case():
    spectrum = full_spectrum(ModelParams(n=4, j=1.0, b=1.0))
    vec = ground_state_vector(spectrum)
    assert vec.shape == (16,)
    assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)
    h = full_hamiltonian(ModelParams(n=4, j=1.0, b=1.0))
    assert np.allclose(h @ vec, spectrum.ground_energy * vec, atol=1e-9)


def test_ground_state_vector_rejects_degeneracy():
    spectrum = full_spectrum(ModelParams(n=4, j=1.0, b=2.0 * (np.sqrt(2.0) - 1.0)))
    with pytest.raises(ValueError):
        ground_state_vector(spectrum)
