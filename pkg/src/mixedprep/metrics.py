"""Verification metrics: fidelity, coherence, concurrence, Pauli analysis.

All functions take density matrices as plain complex numpy arrays.  The
two-qubit helpers follow the shared convention that qubit 0 (subsystem A)
is the most significant bit of the basis index.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import (
    BadLabelError,
    DimensionMismatchError,
    MissingExpectationError,
    NotAProbabilityVectorError,
)
from .linalg import (
    DEFAULT_TOL,
    matrix_sqrt_psd,
    partial_trace,
    require_density,
)

PAULI_1Q = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


def pauli_matrix(label: str) -> np.ndarray:
    """Tensor product of single-qubit Paulis; leftmost letter = qubit 0."""
    label = label.upper()
    if not label or any(ch not in PAULI_1Q for ch in label):
        raise BadLabelError(f"pauli label {label!r} must be a nonempty string over I, X, Y, Z")
    out = PAULI_1Q[label[0]]
    for ch in label[1:]:
        out = np.kron(out, PAULI_1Q[ch])
    return out


def pauli_labels(n: int) -> list:
    """All 4**n labels in lexicographic I < X < Y < Z order per position."""
    return ["".join(combo) for combo in product("IXYZ", repeat=n)]


def exact_pauli_expectations(rho, tol: float = DEFAULT_TOL) -> dict:
    """Tr(rho P) for every Pauli string on the matrix's qubit count."""
    rho = require_density(rho, tol)
    n = rho.shape[0].bit_length() - 1
    if 2 ** n != rho.shape[0]:
        raise DimensionMismatchError(f"dimension {rho.shape[0]} is not a power of two")
    return {
        label: float(np.trace(rho @ pauli_matrix(label)).real)
        for label in pauli_labels(n)
    }


def purity(rho) -> float:
    rho = np.asarray(rho, dtype=complex)
    return float(np.trace(rho @ rho).real)


def fidelity(rho, sigma, tol: float = DEFAULT_TOL) -> float:
    """Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))**2, clipped to [0, 1].

    When either argument is numerically pure the quadratic form <psi|other|psi>
    is used instead of the matrix square roots.
    """
    rho = np.asarray(rho, dtype=complex)
    sigma = np.asarray(sigma, dtype=complex)
    if rho.shape != sigma.shape:
        raise DimensionMismatchError(f"shape mismatch: {rho.shape} vs {sigma.shape}")
    rho = require_density(rho, tol)
    sigma = require_density(sigma, tol)

    for pure_candidate, other in ((rho, sigma), (sigma, rho)):
        w, v = np.linalg.eigh(pure_candidate)
        if w[-1] >= 1.0 - 1e-12:
            psi = v[:, -1]
            val = float((psi.conj() @ other @ psi).real)
            return min(max(val, 0.0), 1.0)

    rt = matrix_sqrt_psd(rho, tol)
    inner = rt @ sigma @ rt
    w = np.linalg.eigvalsh((inner + inner.conj().T) / 2)
    f = float(np.sqrt(np.clip(w, 0.0, None)).sum() ** 2)
    return min(max(f, 0.0), 1.0)


def l1_coherence(rho, tol: float = DEFAULT_TOL) -> float:
    """Sum of |off-diagonal| entries in the computational basis."""
    rho = require_density(rho, tol)
    mags = np.abs(rho)
    return float(mags.sum() - np.trace(mags))


def local_l1_coherence(rho, subsystem, tol: float = DEFAULT_TOL) -> float:
    """Coherence of one qubit's reduced state; subsystem 'A' = qubit 0, 'B' = qubit 1."""
    rho = require_density(rho, tol)
    if rho.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 two-qubit matrix, got {rho.shape}")
    qubit = _subsystem_qubit(subsystem)
    reduced = partial_trace(rho, {qubit}, 2)
    mags = np.abs(reduced)
    return float(mags.sum() - np.trace(mags))


def _subsystem_qubit(subsystem) -> int:
    if isinstance(subsystem, str):
        key = subsystem.strip().upper()
        if key == "A":
            return 0
        if key == "B":
            return 1
    elif subsystem in (0, 1):
        return int(subsystem)
    raise BadLabelError(f"subsystem must be 'A', 'B', 0, or 1; got {subsystem!r}")


_YY = np.kron(PAULI_1Q["Y"], PAULI_1Q["Y"])


# Eigenvalues of rho below this are treated as exact rank deficiency inside
# concurrence(); keeps the spin-flip spectrum clean for singular states.
_CONC_RANK_TOL = 1e-14


def concurrence(rho, tol: float = DEFAULT_TOL) -> float:
    """Two-qubit entanglement: max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).

    The l's are the descending eigenvalues of rho * spin-flipped(rho).
    Factoring rho = L L^dagger and cycling the product shows their square
    roots equal the singular values of L^T (Y x Y) L, which is how they are
    computed: the SVD resolves the small ones at absolute precision, where
    rooting a near-zero eigenvalue would lose half the digits.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 two-qubit matrix, got {rho.shape}")
    rho = require_density(rho, tol)
    w, v = np.linalg.eigh(rho)
    w = np.where(w < _CONC_RANK_TOL, 0.0, w)
    factor = v * np.sqrt(w)
    s = np.linalg.svd(factor.T @ _YY @ factor, compute_uv=False)
    val = float(s[0] - s[1:].sum())
    return min(max(val, 0.0), 1.0)


@dataclass
class PauliDecomposition2Q:
    """Coefficients of 4 rho over the two-qubit Pauli basis.

    ``a`` multiplies sigma_j (x) identity, ``b`` identity (x) sigma_k, and
    ``cross[j, k]`` multiplies sigma_j (x) sigma_k; the diagonal of ``cross``
    is exposed as ``c``.
    """

    a: np.ndarray      # (3,)
    b: np.ndarray      # (3,)
    cross: np.ndarray  # (3, 3)

    @property
    def c(self) -> np.ndarray:
        return np.diag(self.cross).copy()

    def reconstruct(self) -> np.ndarray:
        letters = "XYZ"
        out = np.eye(4, dtype=complex)
        for j in range(3):
            out += self.a[j] * pauli_matrix(letters[j] + "I")
            out += self.b[j] * pauli_matrix("I" + letters[j])
            for k in range(3):
                out += self.cross[j, k] * pauli_matrix(letters[j] + letters[k])
        return out / 4.0


def pauli_decompose_2q(rho, tol: float = DEFAULT_TOL) -> PauliDecomposition2Q:
    """Expectation coefficients Tr(rho sigma_j (x) sigma_k) of a 4x4 state."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise DimensionMismatchError(f"expected a 4x4 two-qubit matrix, got {rho.shape}")
    rho = require_density(rho, tol)
    letters = "XYZ"
    a = np.array(
        [float(np.trace(rho @ pauli_matrix(l + "I")).real) for l in letters]
    )
    b = np.array(
        [float(np.trace(rho @ pauli_matrix("I" + l)).real) for l in letters]
    )
    cross = np.array(
        [
            [float(np.trace(rho @ pauli_matrix(lj + lk)).real) for lk in letters]
            for lj in letters
        ]
    )
    return PauliDecomposition2Q(a=a, b=b, cross=cross)


def tomography_reconstruct(expectations: dict, n: int) -> np.ndarray:
    """Linear-inversion estimate projected back onto the density-matrix set.

    ``expectations`` maps Pauli strings of length ``n`` to real estimates;
    the all-identity entry may be omitted (implied 1).  The raw estimate
    2**-n * sum(<P> P) is Hermitized, negative eigenvalues are clamped to
    zero, and the trace is rescaled to 1.
    """
    if n < 1:
        raise DimensionMismatchError(f"qubit count must be >= 1, got {n}")
    table = {str(k).upper(): float(v) for k, v in expectations.items()}
    table.setdefault("I" * n, 1.0)
    dim = 2 ** n
    raw = np.zeros((dim, dim), dtype=complex)
    for label in pauli_labels(n):
        if label not in table:
            raise MissingExpectationError(f"no expectation value for pauli string {label!r}")
        raw += table[label] * pauli_matrix(label)
    raw /= dim
    raw = (raw + raw.conj().T) / 2
    w, v = np.linalg.eigh(raw)
    w = np.clip(w, 0.0, None)
    total = float(w.sum())
    if total <= 0.0:
        raise NotAProbabilityVectorError(
            "clamped eigenvalue mass is zero; expectations are inconsistent"
        )
    w /= total
    return (v * w) @ v.conj().T
