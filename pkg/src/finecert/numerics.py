"""Dense Hermitian eigenproblems and entropy functions for small complex matrices.

Everything here is a pure function of its arguments; all entropies are in bits
(logarithms base 2). Matrices are plain ``numpy`` arrays; validation helpers
raise ``ValueError`` with the offending deviation so callers can report it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

#: Maximum matrix dimension accepted by the eigensolver path.
MAX_DIM = 64

#: Hermiticity tolerance for generic operator inputs.
HERMITIAN_TOL = 1e-10

#: Tolerances for density-matrix validation.
DENSITY_HERMITIAN_TOL = 1e-12
DENSITY_TRACE_TOL = 1e-12

#: Spectrum values in [EIGENVALUE_FLOOR, 0) are treated as exact zeros when
#: taking logarithms; anything below the floor is a genuinely invalid state.
EIGENVALUE_FLOOR = -1e-10

STATE_NORM_TOL = 1e-10
PROBABILITY_SUM_TOL = 1e-9


def as_square_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a finite square complex matrix of dimension <= MAX_DIM."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] < 1 or a.shape[0] > MAX_DIM:
        raise ValueError(f"matrix dimension {a.shape[0]} outside [1, {MAX_DIM}]")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("matrix contains NaN or Inf entries")
    return a


def hermiticity_deviation(m) -> float:
    """Largest entrywise deviation of ``m`` from its conjugate transpose."""
    a = np.asarray(m, dtype=complex)
    return float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    a = as_square_matrix(m)
    dev = hermiticity_deviation(a)
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian: max |M - M^dag| = {dev:.3e} > {tol:.1e}")
    return a


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in ascending order with orthonormal eigenvectors as columns.

    When eigenvalues are (nearly) degenerate the individual vectors inside the
    degenerate cluster are an arbitrary orthonormal choice; only the spanned
    subspace and the extremal eigenvalues are meaningful to consumers.
    """

    values: np.ndarray
    vectors: np.ndarray

    @property
    def largest(self) -> float:
        return float(self.values[-1])

    @property
    def largest_vector(self) -> np.ndarray:
        return self.vectors[:, -1]

    def reconstruct(self) -> np.ndarray:
        return (self.vectors * self.values) @ self.vectors.conj().T


def hermitian_eig(m, tol: float = HERMITIAN_TOL) -> SpectralDecomposition:
    """Diagonalize a Hermitian matrix, deterministically for identical input.

    Parameters
    ----------
    m : array_like
        Square complex matrix, Hermitian to within ``tol``.

    Returns
    -------
    SpectralDecomposition
        Ascending real eigenvalues and orthonormal eigenvector columns.
    """
    a = check_hermitian(m, tol)
    # Symmetrize so roundoff asymmetry below the tolerance cannot leak into
    # the solver; keeps output identical for inputs that compare equal.
    a = 0.5 * (a + a.conj().T)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        off = float(np.max(np.abs(a - np.diag(np.diag(a)))))
        raise ValueError(
            f"eigensolver failed to converge (off-diagonal residual {off:.3e}): {exc}"
        ) from exc
    return SpectralDecomposition(values=values, vectors=vectors)


def fix_global_phase(psi: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Rotate the global phase so the first non-negligible amplitude is real >= 0."""
    for a in psi:
        if abs(a) > tol:
            return psi * (a.conjugate() / abs(a))
    return psi


def check_state_vector(v, dim: int | None = None) -> np.ndarray:
    """Validate a normalized complex state vector."""
    a = np.asarray(v, dtype=complex).reshape(-1)
    if dim is not None and a.shape[0] != dim:
        raise ValueError(f"state has dimension {a.shape[0]}, expected {dim}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError("state contains NaN or Inf entries")
    norm = float(np.linalg.norm(a))
    if abs(norm - 1.0) > STATE_NORM_TOL:
        raise ValueError(f"state is not normalized: ||v|| = {norm:.12f}")
    return a


def projector(v) -> np.ndarray:
    """Rank-1 projector |v><v| of a normalized state vector."""
    a = check_state_vector(v)
    return np.outer(a, a.conj())


def check_density_matrix(rho) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity of a density matrix."""
    a = as_square_matrix(rho)
    dev = hermiticity_deviation(a)
    if dev > DENSITY_HERMITIAN_TOL:
        raise ValueError(f"density matrix not Hermitian: deviation {dev:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > DENSITY_TRACE_TOL:
        raise ValueError(f"density matrix trace {tr:.12f} != 1")
    lam = np.linalg.eigvalsh(0.5 * (a + a.conj().T))
    if float(lam.min()) < EIGENVALUE_FLOOR:
        raise ValueError(f"density matrix has negative eigenvalue {float(lam.min()):.3e}")
    return a


def shannon_entropy(p) -> float:
    """Shannon entropy in bits of a probability distribution, with 0*log0 = 0."""
    a = np.asarray(p, dtype=float).reshape(-1)
    if a.size == 0:
        raise ValueError("empty probability list")
    if float(a.min()) < 0.0:
        raise ValueError(f"negative probability {float(a.min()):.3e}")
    total = float(a.sum())
    if abs(total - 1.0) > PROBABILITY_SUM_TOL:
        raise ValueError(f"probabilities sum to {total:.12f}, not 1")
    positive = a[a > 0.0]
    return float(-(positive * np.log2(positive)).sum())


def binary_entropy(p: float) -> float:
    """Entropy in bits of the two-outcome distribution (p, 1-p)."""
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"binary entropy argument {p} outside [0, 1]")
    return shannon_entropy(np.array([p, 1.0 - p]))


def von_neumann_entropy(rho) -> float:
    """Entropy in bits of a density matrix's eigenvalue spectrum.

    Eigenvalues in [-1e-10, 0) are numerical noise around zero and are
    clamped before the logarithm.
    """
    a = check_density_matrix(rho)
    lam = hermitian_eig(a, tol=HERMITIAN_TOL).values
    lam = lam[lam > 0.0]
    return float(-(lam * np.log2(lam)).sum()) if lam.size else 0.0
