"""Purification pipeline: padding, amplitude loading, end-to-end round trips."""
import numpy as np
import numpy.testing as npt
import pytest

from mixedprep import (
    Circuit,
    Cnot,
    MultiControlledRy,
    NotAProbabilityVectorError,
    NotDensityMatrixError,
    Ry,
    UnitaryBlock,
    build_preparation_circuit,
    eig_hermitian,
    eigenvalue_amplitudes,
    fidelity,
    ginibre_density,
    orthonormal_completion,
    pad_to_qubit_dimension,
    prepare_density,
    purity,
    p00_family,
    reduced_density,
    run,
)
from mixedprep.linalg import SpectralDecomposition


def random_density_any_dim(d, seed):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    m = g @ g.conj().T
    return m / np.trace(m).real


def test_pad_power_of_two_unchanged():
    rho = ginibre_density(4, 1)
    out = pad_to_qubit_dimension(rho)
    npt.assert_array_equal(out, rho)


def test_pad_3x3():
    rho = np.diag([0.5, 0.3, 0.2]).astype(complex)
    out = pad_to_qubit_dimension(rho)
    npt.assert_allclose(out, np.diag([0.5, 0.3, 0.2, 0.0]), atol=0)


def test_pad_5x5():
    rho = random_density_any_dim(5, 2)
    out = pad_to_qubit_dimension(rho)
    assert out.shape == (8, 8)
    npt.assert_array_equal(out[:5, :5], rho)
    assert np.abs(out[5:, :]).max() == 0 and np.abs(out[:, 5:]).max() == 0


def test_pad_rejects_garbage():
    with pytest.raises(NotDensityMatrixError):
        pad_to_qubit_dimension(np.eye(3))


def test_eigenvalue_amplitudes():
    dec = SpectralDecomposition(np.array([1.0, 0.0]), np.eye(2, dtype=complex))
    npt.assert_allclose(eigenvalue_amplitudes(dec), [1, 0], atol=0)
    dec = SpectralDecomposition(np.full(4, 0.25), np.eye(4, dtype=complex))
    npt.assert_allclose(eigenvalue_amplitudes(dec), [0.5] * 4, atol=0)
    p00 = 0.6
    w = np.sort([p00 / 3, (1 - p00) / 3, 2 * p00 / 3, 2 * (1 - p00) / 3])[::-1]
    dec = SpectralDecomposition(w, np.eye(4, dtype=complex))
    npt.assert_allclose(eigenvalue_amplitudes(dec), np.sqrt(w), atol=1e-15)


def test_eigenvalue_amplitudes_clamps_and_renormalizes():
    w = np.array([1.0 + 5e-11, -5e-11])
    dec = SpectralDecomposition(w, np.eye(2, dtype=complex))
    amps = eigenvalue_amplitudes(dec)
    assert amps[1] == 0.0
    npt.assert_allclose(np.linalg.norm(amps), 1.0, atol=1e-12)


def test_eigenvalue_amplitudes_rejects():
    bad = SpectralDecomposition(np.array([0.9, -0.1]), np.eye(2, dtype=complex))
    with pytest.raises(NotAProbabilityVectorError):
        eigenvalue_amplitudes(bad)
    bad = SpectralDecomposition(np.array([0.6, 0.6]), np.eye(2, dtype=complex))
    with pytest.raises(NotAProbabilityVectorError):
        eigenvalue_amplitudes(bad)


def test_bundle_structure():
    rho = ginibre_density(4, 7)
    bundle = build_preparation_circuit(rho)
    c = bundle.circuit
    n = 2
    assert c.num_qubits == 2 * n
    assert bundle.system_qubits == (0, 1)
    assert bundle.ancilla_qubits == (2, 3)
    assert len(c.gates) == (2 ** n - 1) + n + 1
    loader, cnots, block = c.gates[: 2 ** n - 1], c.gates[2 ** n - 1 : -1], c.gates[-1]
    assert all(isinstance(g, (Ry, MultiControlledRy)) for g in loader)
    assert cnots == [Cnot(0, 2), Cnot(1, 3)]
    assert isinstance(block, UnitaryBlock) and block.qubits == (0, 1)
    npt.assert_allclose(np.sum(bundle.spectral.eigenvalues), 1.0, atol=1e-10)


def test_roundtrip_pure_and_maximally_mixed():
    out = prepare_density(np.diag([1.0, 0.0]))
    npt.assert_allclose(out, np.diag([1.0, 0.0]), atol=1e-12)
    out = prepare_density(np.eye(2) / 2)
    npt.assert_allclose(out, np.eye(2) / 2, atol=1e-12)


def test_identity_over_two_gives_bell_structure():
    bundle = build_preparation_circuit(np.eye(2) / 2)
    ry = bundle.circuit.gates[0]
    npt.assert_allclose(ry.theta, np.pi / 2, atol=1e-12)
    state = run(bundle.circuit)
    npt.assert_allclose(np.abs(state) ** 2, [0.5, 0, 0, 0.5], atol=1e-12)


def test_roundtrip_seeded_targets():
    for d in (2, 4, 8):
        for seed in range(5):
            rho = ginibre_density(d, 10 * d + seed)
            out = prepare_density(rho)
            assert np.linalg.norm(out - rho) <= 1e-9
            assert fidelity(out, rho) >= 1 - 1e-9


def test_roundtrip_xstate():
    rho = p00_family(0.5)
    out = prepare_density(rho)
    assert fidelity(out, rho) >= 1 - 1e-9


def test_full_state_is_pure():
    bundle = build_preparation_circuit(ginibre_density(4, 3))
    state = run(bundle.circuit)
    full = np.outer(state, state.conj())
    npt.assert_allclose(purity(full), 1.0, atol=1e-12)


def test_intermediate_state_after_cnot_layer():
    # dropping the final basis change leaves diag(eigenvalues) on the system
    for seed in range(5):
        rho = ginibre_density(4, 40 + seed)
        bundle = build_preparation_circuit(rho)
        partial = Circuit(bundle.circuit.num_qubits, bundle.circuit.gates[:-1])
        red = reduced_density(run(partial), bundle.system_qubits)
        npt.assert_allclose(red, np.diag(bundle.spectral.eigenvalues), atol=1e-10)


def test_rank_deficient_completion_freedom():
    # swapping in a different completion of the zero-eigenvalue columns
    # must not change the traced output
    rho = np.diag([0.6, 0.4, 0.0, 0.0]).astype(complex)
    bundle = build_preparation_circuit(rho)
    reference = reduced_density(run(bundle.circuit), bundle.system_qubits)

    dec = eig_hermitian(rho)
    kept = dec.eigenvectors[:, :2]
    completed = orthonormal_completion(kept)
    # perturb: swap the two synthesized columns and flip one sign
    twisted = completed.copy()
    twisted[:, [2, 3]] = twisted[:, [3, 2]]
    twisted[:, 3] *= -1
    circuit = Circuit(bundle.circuit.num_qubits, bundle.circuit.gates[:-1])
    circuit.gates.append(UnitaryBlock((0, 1), twisted))
    alt = reduced_density(run(circuit), bundle.system_qubits)
    npt.assert_allclose(alt, reference, atol=1e-12)
    npt.assert_allclose(reference, rho, atol=1e-12)


def test_padded_roundtrip_3x3():
    rho = random_density_any_dim(3, 9)
    out = prepare_density(rho)
    assert out.shape == (4, 4)
    npt.assert_allclose(out[:3, :3], rho, atol=1e-9)
    assert abs(out[3, 3]) <= 1e-9
