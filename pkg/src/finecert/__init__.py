"""Certainty bounds for projective measurements, mutually unbiased bases, and
a membrane work-extraction cycle relating the two to entropy accounting."""

from .numerics import (
    SpectralDecomposition,
    binary_entropy,
    check_density_matrix,
    check_state_vector,
    hermitian_eig,
    projector,
    shannon_entropy,
    von_neumann_entropy,
)
from .mub import (
    MubFamily,
    MubVerification,
    computational_basis,
    is_prime,
    mub_family,
    mub_vector,
    verify_mub,
)
from .qubit import (
    AverageCertainty,
    PairCertainty,
    TriplePauliBound,
    average_certainty,
    bloch_to_state,
    pair_bound,
    pair_certainty,
    pauli_eigenbasis,
    pauli_outcome_projector,
    spin_projector,
    spin_up_probability,
    state_to_bloch,
    triple_pauli_bound,
)
from .bounds import (
    CertaintyBound,
    GridSearchResult,
    HypersphericalAngles,
    MeasurementEnsemble,
    all_outcome_pairs_bound,
    certainty_operator,
    hyperspherical_state,
    lhs_value,
    measurement_ensemble,
    mub_pair_bound,
    mub_pair_ensemble,
    pauli_pair_ensemble,
    pauli_triple_ensemble,
    zeta_gridsearch,
    zeta_spectral,
)
from .cycle import (
    CycleConfig,
    MembraneLayout,
    ScanReport,
    WorkReport,
    chamber_distribution,
    component_state,
    component_states,
    cycle_config,
    delta_w,
    haar_random_basis,
    scan_bases,
    singleton_arguments,
    work_extraction_w1,
    work_retrieval_w2,
)

__version__ = "0.1.0"
