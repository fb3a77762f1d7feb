"""Dense complex linear algebra for small Hilbert spaces (dim <= 64).

Basis conventions used throughout the package:

* qubit basis ordering: index 0 is spin-up, index 1 is spin-down, and
  ``sigma_z |up> = +|up>``;
* multi-qubit product basis: site 0 is the leftmost tensor factor (most
  significant bit), so for two qubits the ordering is
  ``|uu>, |ud>, |du>, |dd>``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_DIM = 64

SIGMA = {
    "i": np.eye(2, dtype=complex),
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


@dataclass(frozen=True)
class PauliLabel:
    """Single-site Pauli axis ('i', 'x', 'y' or 'z') at a 0-based qubit site."""

    axis: str
    site: int

    def __post_init__(self):
        if self.axis.lower() not in SIGMA:
            raise ValueError(f"unknown Pauli axis {self.axis!r}")
        if self.site < 0:
            raise ValueError("site index must be non-negative")

    def operator(self, n_qubits: int) -> np.ndarray:
        return pauli_operator(self.axis, self.site, n_qubits)


def kron_all(*factors: np.ndarray) -> np.ndarray:
    """Tensor product of the given matrices, left factor most significant."""
    out = np.asarray(factors[0], dtype=complex)
    for f in factors[1:]:
        out = np.kron(out, f)
    return out


def pauli_operator(axis: str, site: int, n_qubits: int) -> np.ndarray:
    """Embed a single-site Pauli matrix into an n-qubit space: I x .. x sigma x .. x I."""
    if not 0 <= site < n_qubits:
        raise ValueError(f"site {site} out of range for {n_qubits} qubits")
    factors = [SIGMA["i"]] * n_qubits
    factors[site] = SIGMA[axis.lower()]
    return kron_all(*factors)


def basis_state(index: int, dim: int) -> np.ndarray:
    v = np.zeros(dim, dtype=complex)
    v[index] = 1.0
    return v


def destroy_operator(n_levels: int) -> np.ndarray:
    """Bosonic annihilation operator truncated to n_levels Fock states."""
    a = np.zeros((n_levels, n_levels), dtype=complex)
    n = np.arange(1, n_levels)
    a[n - 1, n] = np.sqrt(n)
    return a


def dag(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def frobenius_norm(m: np.ndarray) -> float:
    return float(np.linalg.norm(m))


def is_hermitian(m: np.ndarray, rtol: float = 1e-12) -> bool:
    m = np.asarray(m)
    scale = max(frobenius_norm(m), 1.0)
    return bool(np.max(np.abs(m - m.conj().T)) < rtol * scale)


def assert_hermitian(m: np.ndarray, rtol: float = 1e-12) -> None:
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not is_hermitian(m, rtol):
        raise ValueError("matrix is not Hermitian within tolerance")


def is_unitary(u: np.ndarray, atol: float = 1e-10) -> bool:
    u = np.asarray(u)
    return bool(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[1]))) < atol)


def _gram_schmidt(block: np.ndarray) -> np.ndarray:
    """Modified Gram-Schmidt orthonormalization of the columns of block."""
    q = block.astype(complex).copy()
    for j in range(q.shape[1]):
        for i in range(j):
            q[:, j] -= (q[:, i].conj() @ q[:, j]) * q[:, i]
        q[:, j] /= np.linalg.norm(q[:, j])
    return q


def eigendecompose_hermitian(h: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvectors as columns).  Eigenvectors
    within a degenerate cluster (gap < 1e-9 * scale) are re-orthonormalized;
    each eigenvector's largest-magnitude component is made real positive so
    the output is deterministic.
    """
    h = np.asarray(h, dtype=complex)
    assert_hermitian(h)
    n = h.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"dimension {n} exceeds supported maximum {MAX_DIM}")

    a = h.copy()
    v = np.eye(n, dtype=complex)
    scale = frobenius_norm(h)
    if scale == 0.0:
        return np.zeros(n), v
    tol = 1e-14 * scale

    for _ in range(60):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off < tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                m = abs(apq)
                if m <= tol / n:
                    continue
                f = apq / m
                tau = (a[q, q].real - a[p, p].real) / (2.0 * m)
                t = 1.0 if tau == 0.0 else -np.sign(tau) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # unitary plane rotation U: U[p,p]=c, U[p,q]=-s*f, U[q,p]=s*conj(f), U[q,q]=c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p + s * np.conj(f) * col_q
                a[:, q] = -s * f * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p + s * f * row_q
                a[q, :] = -s * np.conj(f) * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                col_p = v[:, p].copy()
                col_q = v[:, q].copy()
                v[:, p] = c * col_p + s * np.conj(f) * col_q
                v[:, q] = -s * f * col_p + c * col_q
    else:
        raise RuntimeError("Jacobi eigensolver failed to converge")

    eigenvalues = np.real(np.diag(a))
    order = np.argsort(eigenvalues, kind="stable")
    eigenvalues = eigenvalues[order]
    v = v[:, order]

    # re-orthonormalize degenerate clusters
    cluster_gap = 1e-9 * scale
    start = 0
    for k in range(1, n + 1):
        if k == n or eigenvalues[k] - eigenvalues[k - 1] > cluster_gap:
            if k - start > 1:
                v[:, start:k] = _gram_schmidt(v[:, start:k])
            start = k

    # deterministic phase: largest-|component| entry real positive
    for j in range(n):
        idx = int(np.argmax(np.abs(v[:, j])))
        phase = v[idx, j] / abs(v[idx, j])
        v[:, j] *= np.conj(phase)

    return eigenvalues, v


def spectral_radius(h: np.ndarray) -> float:
    """Largest |eigenvalue| of a Hermitian matrix."""
    vals, _ = eigendecompose_hermitian(h)
    return float(np.max(np.abs(vals))) if vals.size else 0.0


def project(op: np.ndarray, basis: list[np.ndarray] | np.ndarray) -> np.ndarray:
    """Matrix of op in the given orthonormal basis: out[i, j] = <b_i| op |b_j>."""
    op = np.asarray(op, dtype=complex)
    if isinstance(basis, np.ndarray) and basis.ndim == 2:
        b = np.asarray(basis, dtype=complex)
    else:
        b = np.column_stack([np.asarray(x, dtype=complex) for x in basis])
    if b.shape[0] != op.shape[0] or op.shape[0] != op.shape[1]:
        raise ValueError(f"dimension mismatch: op {op.shape}, basis vectors of length {b.shape[0]}")
    overlap = b.conj().T @ b
    if np.max(np.abs(overlap - np.eye(b.shape[1]))) > 1e-10:
        raise ValueError("basis vectors are not orthonormal to 1e-10")
    return b.conj().T @ op @ b
