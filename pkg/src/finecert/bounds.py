"""Certainty bounds for weighted combinations of projective-measurement outcomes.

For an ensemble of measurements t chosen with probability p(t), each with one
selected outcome projector P_t, the largest achievable value of
sum_t p(t) <psi|P_t|psi> over all states is the top eigenvalue of the weighted
projector sum A = sum_t p(t) P_t, attained at its top eigenvector. That
spectral route is the primary path; an exhaustive hyperspherical grid search
over pure states is kept as an independent oracle for small dimensions.

For a pair of rank-1 outcomes drawn from two mutually unbiased bases with
equal weights, the bound has the closed form 1/2 + 1/(2 sqrt d): the top
eigenvalue of (|u><u| + |v><v|)/2 is (1 + |<u|v>|)/2 and cross-basis overlap
moduli are 1/sqrt(d). The spectral evaluation reproduces it for every
cross-basis outcome pair, which is what makes the closed form exact rather
than an estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import mub as _mub
from . import qubit as _qubit
from .numerics import check_state_vector, fix_global_phase, hermitian_eig, hermiticity_deviation

WEIGHT_SUM_TOL = 1e-9
IDEMPOTENCY_TOL = 1e-10
DEGENERACY_TOL = 1e-9

#: Hard cap on grid-search size, about a minute of vectorized evaluation.
MAX_GRID_POINTS = 500_000_000
MAX_GRID_DIM = 5


@dataclass(frozen=True)
class EnsembleTerm:
    label: str
    weight: float
    projector: np.ndarray


@dataclass(frozen=True)
class MeasurementEnsemble:
    """Weighted selected-outcome projectors, one per measurement choice."""

    dim: int
    terms: tuple


def measurement_ensemble(terms, tol: float = IDEMPOTENCY_TOL) -> MeasurementEnsemble:
    """Validate and freeze (label, weight, projector) triples into an ensemble.

    Weights must be >= 0 and sum to 1 within 1e-9; every projector must be
    Hermitian and idempotent within ``tol`` (rank above 1 is allowed, which
    coarse-grains several outcomes into one).
    """
    packed = []
    dim = None
    for label, weight, proj in terms:
        weight = float(weight)
        if weight < 0.0:
            raise ValueError(f"negative weight {weight} for term {label!r}")
        p = np.asarray(proj, dtype=complex)
        if p.ndim != 2 or p.shape[0] != p.shape[1]:
            raise ValueError(f"projector for term {label!r} is not square: {p.shape}")
        if dim is None:
            dim = p.shape[0]
        elif p.shape[0] != dim:
            raise ValueError(
                f"dimension mismatch: term {label!r} is {p.shape[0]}-dimensional, expected {dim}"
            )
        dev = hermiticity_deviation(p)
        if dev > tol:
            raise ValueError(f"projector for term {label!r} not Hermitian: deviation {dev:.3e}")
        idem = float(np.max(np.abs(p @ p - p)))
        if idem > tol:
            raise ValueError(f"projector for term {label!r} not idempotent: deviation {idem:.3e}")
        packed.append(EnsembleTerm(label=str(label), weight=weight, projector=p))
    if not packed:
        raise ValueError("ensemble needs at least one term")
    total = sum(t.weight for t in packed)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ValueError(f"weights sum to {total:.12f}, not 1")
    return MeasurementEnsemble(dim=int(dim), terms=tuple(packed))


def certainty_operator(ens: MeasurementEnsemble) -> np.ndarray:
    """Weighted projector sum; Hermitian, PSD, top eigenvalue <= 1.

    Accumulated in term order so that appending a zero-weight term leaves the
    result bitwise unchanged.
    """
    op = np.zeros((ens.dim, ens.dim), dtype=complex)
    for term in ens.terms:
        op += term.weight * term.projector
    return op


@dataclass(frozen=True)
class CertaintyBound:
    """Top eigenvalue of the certainty operator with its maximizing state."""

    zeta: float
    maximizer: np.ndarray
    #: Distance to the second eigenvalue (inf for dimension 1).
    gap: float
    #: True when the top eigenvalue is degenerate within 1e-9, in which case
    #: the maximizer is one arbitrary vector of the top eigenspace.
    degenerate: bool


def zeta_spectral(ens: MeasurementEnsemble) -> CertaintyBound:
    """Exact certainty bound via the top eigenpair of the weighted projector sum."""
    decomp = hermitian_eig(certainty_operator(ens))
    zeta = decomp.largest
    gap = float(decomp.values[-1] - decomp.values[-2]) if ens.dim > 1 else float("inf")
    return CertaintyBound(
        zeta=zeta,
        maximizer=fix_global_phase(decomp.largest_vector),
        gap=gap,
        degenerate=bool(gap < DEGENERACY_TOL),
    )


def lhs_value(ens: MeasurementEnsemble, psi) -> float:
    """Weighted outcome probability sum for one state, in [0, 1]."""
    psi = check_state_vector(psi, dim=ens.dim)
    op = certainty_operator(ens)
    return float(np.real(psi.conj() @ op @ psi))


@dataclass(frozen=True)
class HypersphericalAngles:
    """Pure-state angles: moduli from x_i in [0, pi/2], phases in [0, 2 pi)."""

    x: tuple
    phi: tuple

    def state(self) -> np.ndarray:
        return hyperspherical_state(self.x, self.phi)


def hyperspherical_state(x, phi) -> np.ndarray:
    """Amplitudes (cos x0, e^{i phi_1} sin x0 cos x1, ..., e^{i phi_{d-1}} sin x0..sin x_{d-2})."""
    x = np.asarray(x, dtype=float).reshape(-1)
    phi = np.asarray(phi, dtype=float).reshape(-1)
    if x.size != phi.size or x.size < 1:
        raise ValueError(f"need d-1 moduli angles and d-1 phases, got {x.size} and {phi.size}")
    if np.any(x < 0.0) or np.any(x > np.pi / 2.0 + 1e-12):
        raise ValueError("moduli angles must lie in [0, pi/2]")
    if np.any(phi < 0.0) or np.any(phi >= 2.0 * np.pi):
        raise ValueError("phases must lie in [0, 2 pi)")
    d = x.size + 1
    amps = np.empty(d, dtype=complex)
    amps[0] = np.cos(x[0])
    running = 1.0
    for m in range(1, d - 1):
        running *= np.sin(x[m - 1])
        amps[m] = running * np.cos(x[m]) * np.exp(1j * phi[m - 1])
    running *= np.sin(x[d - 2])
    amps[d - 1] = running * np.exp(1j * phi[d - 2])
    return amps


@dataclass(frozen=True)
class GridSearchResult:
    """Best weighted probability sum found by an exhaustive angle scan.

    The value is a true state evaluation, hence never above the exact bound.
    For dimension 2 the scan error is quadratic in the step around the
    maximum; higher dimensions report the steps without a sharp error claim.
    """

    zeta: float
    angles: HypersphericalAngles
    state: np.ndarray
    steps_per_angle: int
    x_step: float
    phi_step: float


def _grid_amplitudes(x_cols, phi_cols, d: int) -> np.ndarray:
    n = x_cols[0].shape[0]
    amps = np.empty((n, d), dtype=complex)
    amps[:, 0] = np.cos(x_cols[0])
    running = np.ones(n)
    for m in range(1, d - 1):
        running = running * np.sin(x_cols[m - 1])
        amps[:, m] = running * np.cos(x_cols[m]) * np.exp(1j * phi_cols[m - 1])
    running = running * np.sin(x_cols[d - 2])
    amps[:, d - 1] = running * np.exp(1j * phi_cols[d - 2])
    return amps


def zeta_gridsearch(ens: MeasurementEnsemble, steps_per_angle: int) -> GridSearchResult:
    """Exhaustive scan over the hyperspherical angle grid (independent oracle).

    Scans all combinations of d-1 moduli angles over [0, pi/2] (endpoints
    included) and d-1 phases over [0, 2 pi) with ``steps_per_angle`` values
    each. Deterministic: on ties the lexicographically smallest angle tuple
    wins. Intended for cross-checking the spectral path in dimension <= 5.
    """
    d = ens.dim
    if d > MAX_GRID_DIM:
        raise ValueError(
            f"grid search supports dimension <= {MAX_GRID_DIM} (got {d}); use zeta_spectral"
        )
    if d < 2:
        raise ValueError("grid search needs dimension >= 2")
    steps = int(steps_per_angle)
    if steps < 8:
        raise ValueError(f"steps_per_angle must be >= 8 (got {steps})")
    total = steps ** (2 * (d - 1))
    if total > MAX_GRID_POINTS:
        raise ValueError(f"grid of {total} points is too large; reduce steps_per_angle")

    op = certainty_operator(ens)
    x_grid = np.linspace(0.0, np.pi / 2.0, steps)
    phi_grid = 2.0 * np.pi * np.arange(steps) / steps
    inner_axes = [x_grid] * (d - 2) + [phi_grid] * (d - 1)

    mesh = np.meshgrid(*inner_axes, indexing="ij")
    cols = [m.ravel() for m in mesh]
    n = cols[0].shape[0]

    best_value = -np.inf
    best_angles = None
    # Outer loop over x0 keeps chunks in lexicographic order; meshgrid with
    # C-order ravel preserves it over the remaining axes, so argmax picks the
    # lexicographically smallest angle tuple on exact ties.
    for x0 in x_grid:
        x_cols = [np.full(n, x0)] + cols[: d - 2]
        phi_cols = cols[d - 2 :]
        amps = _grid_amplitudes(x_cols, phi_cols, d)
        values = np.sum(amps.conj() * (amps @ op.T), axis=1).real
        pos = int(np.argmax(values))
        if float(values[pos]) > best_value:
            best_value = float(values[pos])
            best_angles = (
                tuple(float(c[pos]) for c in x_cols),
                tuple(float(c[pos]) for c in phi_cols),
            )

    angles = HypersphericalAngles(x=best_angles[0], phi=best_angles[1])
    return GridSearchResult(
        zeta=best_value,
        angles=angles,
        state=angles.state(),
        steps_per_angle=steps,
        x_step=float(x_grid[1] - x_grid[0]),
        phi_step=float(phi_grid[1] - phi_grid[0]),
    )


def pauli_pair_ensemble(axis1: str = "x", axis2: str = "z", outcomes=(0, 0)) -> MeasurementEnsemble:
    """Equal-weight qubit ensemble of one outcome from each of two Pauli bases."""
    if axis1 == axis2:
        raise ValueError("the two Pauli measurements must differ")
    o1, o2 = (int(o) for o in outcomes)
    return measurement_ensemble(
        [
            (f"{axis1}:{o1}", 0.5, _qubit.pauli_outcome_projector(axis1, o1)),
            (f"{axis2}:{o2}", 0.5, _qubit.pauli_outcome_projector(axis2, o2)),
        ]
    )


def pauli_triple_ensemble(outcomes=(0, 0, 0)) -> MeasurementEnsemble:
    """Equal-weight qubit ensemble of one outcome from each Pauli basis."""
    outcomes = tuple(int(o) for o in outcomes)
    if len(outcomes) != 3:
        raise ValueError("need one outcome for each of the axes x, y, z")
    third = 1.0 / 3.0
    return measurement_ensemble(
        [
            (f"{axis}:{o}", third, _qubit.pauli_outcome_projector(axis, o))
            for axis, o in zip("xyz", outcomes)
        ]
    )


def _pair_vectors(d: int, k1, k2, j1: int, j2: int):
    """Outcome vectors (j1 of basis k1, j2 of basis k2) in dimension d.

    Labels: "z" for the computational basis, 0..d-1 for the quadratic-phase
    bases. For d=2 the quadratic construction degenerates, so "z" maps to the
    sigma_z eigenbasis and 0 to the sigma_x eigenbasis.
    """
    d = int(d)
    if d == 2:
        def index(label):
            if isinstance(label, str) and label.lower() == _mub.Z_LABEL:
                return 0
            if int(label) == 0:
                return 1
            raise ValueError(f"d=2 supports basis labels 'z' and 0 only (got {label!r})")

        i1, i2 = index(k1), index(k2)
        if i1 == i2:
            raise ValueError("the two bases must differ; same-basis outcomes are "
                             "either identical or orthogonal and carry no pair bound")
        bases = (_qubit.pauli_eigenbasis("z"), _qubit.pauli_eigenbasis("x"))
        for j in (j1, j2):
            if int(j) not in (0, 1):
                raise ValueError(f"outcome index {j} outside 0..1")
        return bases[i1][int(j1)], bases[i2][int(j2)]
    family = _mub.mub_family(d)
    if family.basis_index(k1) == family.basis_index(k2):
        raise ValueError("the two bases must differ; same-basis outcomes are "
                         "either identical or orthogonal and carry no pair bound")
    return family.vector(k1, j1), family.vector(k2, j2)


def mub_pair_ensemble(d: int, k1="z", k2=0, j1: int = 0, j2: int = 0) -> MeasurementEnsemble:
    """Equal-weight ensemble of one outcome from each of two unbiased bases."""
    v1, v2 = _pair_vectors(d, k1, k2, j1, j2)
    return measurement_ensemble(
        [
            (f"{k1}:{int(j1)}", 0.5, np.outer(v1, v1.conj())),
            (f"{k2}:{int(j2)}", 0.5, np.outer(v2, v2.conj())),
        ]
    )


def mub_pair_bound(d: int) -> float:
    """Closed-form equal-weight pair bound 1/2 + 1/(2 sqrt d) for prime d."""
    d = int(d)
    if not _mub.is_prime(d):
        raise ValueError(f"d must be prime (got {d})")
    return 0.5 + 0.5 / np.sqrt(d)


def all_outcome_pairs_bound(d: int, k1, k2, j1: int, j2: int) -> float:
    """Spectral pair bound for any cross-basis outcome pair; equals
    1/2 + 1/(2 sqrt d) for every choice of distinct bases and outcomes."""
    return zeta_spectral(mub_pair_ensemble(d, k1, k2, j1, j2)).zeta
