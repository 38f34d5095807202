"""Dense complex linear algebra shared by the whole package.

Matrices are plain numpy arrays with complex entries.  Qubit 0 is always
the most significant bit of a basis-state index, so the first tensor
factor of a Kronecker product owns the leading block of the matrix.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    NoConvergenceError,
    NotDensityMatrixError,
    NotHermitianError,
    NotOrthonormalError,
    NotPSDError,
)

DEFAULT_TOL = 1e-10

# Eigenvalues closer than this are treated as one degenerate group when the
# eigenvector basis is made deterministic.
TIE_TOL = 1e-12


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return float(np.abs(m - m.conj().T).max()) <= tol


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    gram = m.conj().T @ m
    return float(np.abs(gram - np.eye(m.shape[0])).max()) <= tol


def is_density(m, tol: float = DEFAULT_TOL) -> bool:
    """Hermitian, unit trace, and positive semidefinite within ``tol``."""
    m = np.asarray(m)
    if not is_hermitian(m, tol):
        return False
    if abs(complex(np.trace(m)) - 1.0) > tol:
        return False
    return float(np.linalg.eigvalsh((m + m.conj().T) / 2).min()) >= -tol


def require_density(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return ``m`` as a complex array, raising if it is not a density matrix.

    The error message names the first violated invariant (shape, Hermiticity,
    trace, or positivity).
    """
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotDensityMatrixError(f"expected a square matrix, got shape {m.shape}")
    asym = float(np.abs(m - m.conj().T).max())
    if asym > tol:
        raise NotDensityMatrixError(
            f"matrix is not Hermitian: max |m - m^dagger| = {asym:.3e} > {tol:g}"
        )
    dev = abs(complex(np.trace(m)) - 1.0)
    if dev > tol:
        raise NotDensityMatrixError(f"trace deviates from 1 by {dev:.3e} > {tol:g}")
    lo = float(np.linalg.eigvalsh((m + m.conj().T) / 2).min())
    if lo < -tol:
        raise NotDensityMatrixError(
            f"matrix is not positive semidefinite: minimum eigenvalue {lo:.3e} < -{tol:g}"
        )
    return m


@dataclass
class SpectralDecomposition:
    """Eigenvalues sorted descending with matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray   # (d,) real, non-increasing
    eigenvectors: np.ndarray  # (d, d) complex, column j pairs with eigenvalues[j]

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def eig_hermitian(m, tol: float = DEFAULT_TOL) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix with a deterministic basis.

    Eigenvalues come out non-increasing.  Within any group of eigenvalues
    that agree to :data:`TIE_TOL`, the eigenvectors are rebuilt by
    Gram-Schmidt on the projections of the canonical basis vectors (taken in
    index order), and every eigenvector's global phase is fixed so that its
    first nonzero component is real positive.  The result therefore depends
    only on the input matrix, not on solver internals.
    """
    m = np.asarray(m, dtype=complex)
    if not is_hermitian(m, tol):
        raise NotHermitianError(
            f"matrix is not Hermitian within tol={tol:g}"
        )
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(f"eigensolver did not converge: {exc}") from exc
    w = np.ascontiguousarray(w[::-1].real)
    v = np.ascontiguousarray(v[:, ::-1])
    v = _canonical_eigenbasis(w, v)
    return SpectralDecomposition(w, v)


def _canonical_eigenbasis(w: np.ndarray, v: np.ndarray) -> np.ndarray:
    d = w.shape[0]
    out = v.copy()
    start = 0
    while start < d:
        stop = start + 1
        while stop < d and w[stop - 1] - w[stop] <= TIE_TOL:
            stop += 1
        if stop - start > 1:
            out[:, start:stop] = _subspace_basis(v[:, start:stop])
        start = stop
    for j in range(d):
        out[:, j] = _phase_fixed(out[:, j])
    return out


def _subspace_basis(cols: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis of span(cols).

    Gram-Schmidt over the projections of e_0, e_1, ... onto the subspace;
    vectors that project to (numerically) nothing are skipped.
    """
    d, k = cols.shape
    proj = cols @ cols.conj().T
    basis: list[np.ndarray] = []
    for j in range(d):
        if len(basis) == k:
            break
        vec = proj[:, j].copy()
        for _ in range(2):  # re-orthogonalize once for stability
            for b in basis:
                vec -= b * (b.conj() @ vec)
        nrm = float(np.linalg.norm(vec))
        if nrm > 1e-8:
            basis.append(vec / nrm)
    if len(basis) < k:  # pragma: no cover - canonical vectors span C^d
        for j in range(k):
            vec = cols[:, j].copy()
            for b in basis:
                vec -= b * (b.conj() @ vec)
            nrm = float(np.linalg.norm(vec))
            if nrm > 1e-8:
                basis.append(vec / nrm)
            if len(basis) == k:
                break
    return np.column_stack(basis)


def _phase_fixed(col: np.ndarray, zero_tol: float = DEFAULT_TOL) -> np.ndarray:
    idx = np.flatnonzero(np.abs(col) > zero_tol)
    if idx.size == 0:
        return col
    lead = col[idx[0]]
    return col * (lead.conjugate() / abs(lead))


def matrix_sqrt_psd(m, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix.

    Eigenvalues in ``[-tol, 0)`` are clamped to 0; anything below ``-tol``
    raises :class:`NotPSDError`.
    """
    dec = eig_hermitian(m, tol)
    w = dec.eigenvalues
    lo = float(w.min())
    if lo < -tol:
        raise NotPSDError(f"matrix is not PSD: minimum eigenvalue {lo:.3e} < -{tol:g}")
    root = np.sqrt(np.clip(w, 0.0, None))
    v = dec.eigenvectors
    s = (v * root) @ v.conj().T
    return (s + s.conj().T) / 2


def partial_trace(state, keep, total_qubits: int) -> np.ndarray:
    """Trace a ``2**total_qubits`` density matrix down to the qubits in ``keep``.

    ``keep`` is a nonempty set of qubit indices; the output orders them
    ascending.  The trace of the input is preserved.
    """
    m = np.asarray(state, dtype=complex)
    dim = 2 ** total_qubits
    if m.shape != (dim, dim):
        raise DimensionMismatchError(
            f"expected a {dim}x{dim} matrix for {total_qubits} qubits, got {m.shape}"
        )
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise DimensionMismatchError("keep must be a nonempty set of qubit indices")
    if kept[0] < 0 or kept[-1] >= total_qubits:
        raise DimensionMismatchError(
            f"keep indices {kept} out of range for {total_qubits} qubits"
        )
    dropped = [q for q in range(total_qubits) if q not in kept]
    t = m.reshape([2] * (2 * total_qubits))
    perm = (
        kept
        + dropped
        + [total_qubits + q for q in kept]
        + [total_qubits + q for q in dropped]
    )
    dk = 2 ** len(kept)
    dd = 2 ** len(dropped)
    t = t.transpose(perm).reshape(dk, dd, dk, dd)
    return np.trace(t, axis1=1, axis2=3)


def kron(a, b) -> np.ndarray:
    """Kronecker product; the left factor owns the most significant index bits."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def orthonormal_completion(partial_cols, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Extend orthonormal columns to a full unitary.

    The input columns are kept verbatim as the leading columns; the missing
    ones are produced by Gram-Schmidt against the canonical basis vectors in
    index order, which makes the completion deterministic.  An empty
    ``(d, 0)`` input yields the identity.
    """
    q = np.asarray(partial_cols, dtype=complex)
    if q.ndim != 2:
        raise DimensionMismatchError(f"expected a 2-d array of columns, got ndim={q.ndim}")
    d, k = q.shape
    if k > d:
        raise DimensionMismatchError(f"cannot fit {k} orthonormal columns in dimension {d}")
    if k:
        gram = q.conj().T @ q
        err = float(np.abs(gram - np.eye(k)).max())
        if err > tol:
            raise NotOrthonormalError(
                f"columns are not orthonormal: max Gram deviation {err:.3e} > {tol:g}"
            )
    cols = [q[:, j] for j in range(k)]
    for j in range(d):
        if len(cols) == d:
            break
        vec = np.zeros(d, dtype=complex)
        vec[j] = 1.0
        for _ in range(2):
            for b in cols:
                vec = vec - b * (b.conj() @ vec)
        nrm = float(np.linalg.norm(vec))
        if nrm > 1e-8:
            cols.append(vec / nrm)
    if len(cols) != d:  # pragma: no cover - canonical vectors always complete
        raise NotOrthonormalError("failed to complete an orthonormal basis")
    return np.column_stack(cols)
