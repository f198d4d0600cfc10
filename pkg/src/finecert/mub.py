"""Complete sets of mutually unbiased bases in odd prime dimension.

The construction builds, on top of the computational basis (the eigenbasis of
the generalized Pauli shift-phase operator Z with Z|j> = w^j|j>, w = e^{2pi i/d}),
a family of d quadratic-phase bases

    |j, k> = d^{-1/2} * sum_l w^{k l^2 - 2 j l} |l>,   k = 0..d-1,

whose cross-basis squared overlaps all equal 1/d. The phase exponent is
reduced modulo d before the root of unity is evaluated, so large indices never
accumulate angle error. For d = 2 the quadratic phase degenerates (the -2jl
term vanishes mod 2) and the construction is rejected; qubit users get the
three Pauli eigenbases from :mod:`finecert.qubit` instead.

Basis labels used throughout the package: the string ``"z"`` names the
computational basis, integers ``0..d-1`` name the quadratic-phase bases.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_MUB_DIM = 64

#: Label of the computational (Z eigenbasis) member of a family.
Z_LABEL = "z"


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    n = int(n)
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_odd_prime(d: int) -> int:
    d = int(d)
    if d == 2 or not is_prime(d):
        raise ValueError(
            f"d must be an odd prime (got {d}); for d=2 use the Pauli "
            "eigenbases provided by finecert.qubit"
        )
    if d > MAX_MUB_DIM:
        raise ValueError(f"d={d} exceeds the supported maximum {MAX_MUB_DIM}")
    return d


def computational_basis(d: int) -> np.ndarray:
    """Standard basis of dimension d as rows of the identity, complex dtype."""
    d = check_odd_prime(d)
    return np.eye(d, dtype=complex)


def mub_vector(d: int, k: int, j: int) -> np.ndarray:
    """Vector j of quadratic-phase basis k in dimension d.

    Every amplitude has modulus 1/sqrt(d); the exponent k*l^2 - 2*j*l is
    reduced mod d before evaluating the d-th root of unity.
    """
    d = check_odd_prime(d)
    k = int(k)
    j = int(j)
    if not 0 <= k < d:
        raise ValueError(f"basis index k={k} outside 0..{d - 1}")
    if not 0 <= j < d:
        raise ValueError(f"outcome index j={j} outside 0..{d - 1}")
    l = np.arange(d)
    exponent = (k * l * l - 2 * j * l) % d
    return np.exp(2j * np.pi * exponent / d) / np.sqrt(d)


def quadratic_basis(d: int, k: int) -> np.ndarray:
    """All d vectors of quadratic-phase basis k, stacked as rows."""
    return np.stack([mub_vector(d, k, j) for j in range(int(d))])


@dataclass(frozen=True)
class MubFamily:
    """d+1 orthonormal bases of dimension d with pairwise squared overlap 1/d.

    ``bases[0]`` is the computational basis; ``bases[1 + k]`` is quadratic
    basis ``k``. ``bases[b][j]`` is the j-th vector (a row).
    """

    d: int
    bases: np.ndarray  # shape (d+1, d, d)

    @property
    def labels(self) -> tuple:
        return (Z_LABEL,) + tuple(range(self.d))

    def basis_index(self, label) -> int:
        if isinstance(label, str):
            if label.lower() == Z_LABEL:
                return 0
            raise ValueError(f"unknown basis label {label!r}; use 'z' or 0..{self.d - 1}")
        k = int(label)
        if not 0 <= k < self.d:
            raise ValueError(f"basis label {k} outside 0..{self.d - 1}")
        return 1 + k

    def basis(self, label) -> np.ndarray:
        return self.bases[self.basis_index(label)]

    def vector(self, label, j: int) -> np.ndarray:
        j = int(j)
        if not 0 <= j < self.d:
            raise ValueError(f"outcome index j={j} outside 0..{self.d - 1}")
        return self.bases[self.basis_index(label), j]


def mub_family(d: int) -> MubFamily:
    """Computational basis plus the d quadratic-phase bases."""
    d = check_odd_prime(d)
    bases = np.empty((d + 1, d, d), dtype=complex)
    bases[0] = np.eye(d, dtype=complex)
    for k in range(d):
        bases[1 + k] = quadratic_basis(d, k)
    return MubFamily(d=d, bases=bases)


@dataclass(frozen=True)
class MubVerification:
    """Exhaustive orthonormality and unbiasedness scan of a family."""

    d: int
    tol: float
    max_orthonormality_deviation: float
    max_unbiasedness_deviation: float
    #: (basis label, j, j') of the worst within-basis Gram deviation.
    worst_orthonormality: tuple
    #: ((label, j), (label', j')) of the worst cross-basis overlap deviation.
    worst_unbiasedness: tuple
    passed: bool

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "tol": self.tol,
            "max_orthonormality_deviation": self.max_orthonormality_deviation,
            "max_unbiasedness_deviation": self.max_unbiasedness_deviation,
            "worst_orthonormality": list(self.worst_orthonormality),
            "worst_unbiasedness": [list(self.worst_unbiasedness[0]), list(self.worst_unbiasedness[1])],
            "passed": self.passed,
        }


def verify_mub(family: MubFamily, tol: float = 1e-10) -> MubVerification:
    """Check every within-basis Gram entry and every cross-basis overlap.

    Pass iff the largest |G - I| entry over all bases and the largest
    | |<u|v>|^2 - 1/d | over all cross-basis pairs are both <= tol.
    """
    d = family.d
    labels = family.labels
    n_bases = d + 1

    worst_orth = 0.0
    worst_orth_at = (labels[0], 0, 0)
    for b in range(n_bases):
        gram = family.bases[b] @ family.bases[b].conj().T
        dev = np.abs(gram - np.eye(d))
        idx = np.unravel_index(int(np.argmax(dev)), dev.shape)
        if float(dev[idx]) >= worst_orth:
            worst_orth = float(dev[idx])
            worst_orth_at = (labels[b], int(idx[0]), int(idx[1]))

    worst_unb = 0.0
    worst_unb_at = ((labels[0], 0), (labels[1], 0))
    for b1 in range(n_bases):
        for b2 in range(b1 + 1, n_bases):
            overlap_sq = np.abs(family.bases[b1] @ family.bases[b2].conj().T) ** 2
            dev = np.abs(overlap_sq - 1.0 / d)
            idx = np.unravel_index(int(np.argmax(dev)), dev.shape)
            if float(dev[idx]) >= worst_unb:
                worst_unb = float(dev[idx])
                worst_unb_at = ((labels[b1], int(idx[0])), (labels[b2], int(idx[1])))

    return MubVerification(
        d=d,
        tol=float(tol),
        max_orthonormality_deviation=worst_orth,
        max_unbiasedness_deviation=worst_unb,
        worst_orthonormality=worst_orth_at,
        worst_unbiasedness=worst_unb_at,
        passed=bool(worst_orth <= tol and worst_unb <= tol),
    )
