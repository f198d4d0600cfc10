"""Membrane work-extraction cycle tying the pair certainty bound to entropy accounting.

The cycle mixes d component states rho_i = (|i><i| + |i,0><i,0|)/2, one per
outcome of the computational basis paired with quadratic-phase basis 0 (the
sigma_x eigenbasis for d=2). Mixing through semi-transparent membranes, one
per vector of an orthonormal membrane basis {e_j}, extracts

    W1 = H(priors) + H(outcome distribution) - H(chamber distribution),

while the reversible return path costs W2 = S(rho_avg) - sum_i p_i S(rho_i)
(all entropies in bits). A membrane layout assigns, per outcome j, a partition
of the component indices into chamber groups; the bookkeeping above reproduces
the per-chamber q log q terms for any layout.

For uniform priors and a singleton-style layout (one designated component per
outcome, the rest merged), W1 - W2 collapses to the binary-entropy form

    delta_w = H_b(1/2 + 1/(2 sqrt d)) - (1/d) sum_j H_b(s_j),

where s_j is the singleton component's expectation at membrane j, which for
the standard components is the equal-weight two-basis probability combination
bounded by 1/2 + 1/(2 sqrt d). Whenever every s_j lies in the interval where
H_b stays below its value at the bound, delta_w <= 0; samples with some
s_j < 1 - bound fall outside that monotone-comparison window and are reported
rather than asserted. An explicitly labeled counterfactual mode substitutes a
hypothetical bound value for every s_j to show that a higher achievable bound
would make delta_w positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import mub as _mub
from . import qubit as _qubit
from .bounds import mub_pair_bound
from .numerics import binary_entropy, shannon_entropy, von_neumann_entropy

PRIOR_SUM_TOL = 1e-9
BASIS_TOL = 1e-10
UNIFORM_TOL = 1e-12
#: Slack used when classifying singleton arguments against the bound.
WINDOW_SLACK = 1e-10


def component_state(d: int, i: int) -> np.ndarray:
    """Equal mixture of outcome i's projectors from the two paired bases.

    Eigenvalues are ((1 +- 1/sqrt d)/2, 0, ..., 0), so every component has
    entropy H_b(1/2 + 1/(2 sqrt d)).
    """
    d = int(d)
    if not _mub.is_prime(d):
        raise ValueError(f"d must be prime (got {d})")
    i = int(i)
    if not 0 <= i < d:
        raise ValueError(f"component index {i} outside 0..{d - 1}")
    if d == 2:
        v = _qubit.pauli_eigenbasis("x")[i]
    else:
        v = _mub.mub_vector(d, 0, i)
    rho = np.zeros((d, d), dtype=complex)
    rho[i, i] = 0.5
    rho += 0.5 * np.outer(v, v.conj())
    return rho


def component_states(d: int) -> list:
    return [component_state(d, i) for i in range(int(d))]


@dataclass(frozen=True)
class MembraneLayout:
    """Per-outcome partition of component indices into chamber groups.

    ``groups[j]`` lists the chamber groups formed behind membrane j;
    ``singletons[j]``, when set, designates the component whose expectation
    enters the binary-entropy form of the work difference.
    """

    name: str
    groups: tuple
    singletons: tuple | None = None

    @classmethod
    def paper_preset(cls, d: int) -> "MembraneLayout":
        """One singleton per outcome: component 0 for all but the last
        membrane, component d-1 for the last; remaining components merged."""
        d = int(d)
        singles = tuple([0] * (d - 1) + [d - 1])
        return cls._from_singletons("paper", d, singles)

    @classmethod
    def symmetric_preset(cls, d: int) -> "MembraneLayout":
        """Singleton component j at membrane j, remaining components merged."""
        d = int(d)
        return cls._from_singletons("symmetric", d, tuple(range(d)))

    @classmethod
    def finest(cls, d: int) -> "MembraneLayout":
        d = int(d)
        per_outcome = tuple((i,) for i in range(d))
        return cls(name="finest", groups=tuple(per_outcome for _ in range(d)), singletons=None)

    @classmethod
    def merged(cls, d: int) -> "MembraneLayout":
        d = int(d)
        everything = (tuple(range(d)),)
        return cls(name="merged", groups=tuple(everything for _ in range(d)), singletons=None)

    @classmethod
    def _from_singletons(cls, name: str, d: int, singles: tuple) -> "MembraneLayout":
        groups = []
        for s in singles:
            rest = tuple(i for i in range(d) if i != s)
            groups.append((rest, (s,)))
        return cls(name=name, groups=tuple(groups), singletons=singles)


def check_layout(layout: MembraneLayout, d: int) -> MembraneLayout:
    d = int(d)
    if len(layout.groups) != d:
        raise ValueError(f"layout covers {len(layout.groups)} outcomes, expected {d}")
    full = set(range(d))
    for j, outcome_groups in enumerate(layout.groups):
        seen = []
        for group in outcome_groups:
            seen.extend(int(i) for i in group)
        if sorted(seen) != sorted(full) or len(seen) != d:
            raise ValueError(f"groups for outcome {j} do not partition 0..{d - 1}: {outcome_groups}")
    if layout.singletons is not None:
        if len(layout.singletons) != d:
            raise ValueError("need one designated singleton per outcome")
        for j, s in enumerate(layout.singletons):
            if (int(s),) not in tuple(tuple(int(i) for i in g) for g in layout.groups[j]):
                raise ValueError(f"designated singleton {s} is not a group of outcome {j}")
    return layout


@dataclass(frozen=True)
class CycleConfig:
    d: int
    priors: np.ndarray
    basis: np.ndarray  # rows are the membrane states e_j
    layout: MembraneLayout


def cycle_config(d: int, priors=None, basis=None, layout: MembraneLayout | None = None) -> CycleConfig:
    """Validated cycle configuration; defaults are uniform priors, the
    computational membrane basis, and the singleton-style default layout."""
    d = int(d)
    if not _mub.is_prime(d):
        raise ValueError(f"d must be prime (got {d})")
    priors = np.full(d, 1.0 / d) if priors is None else np.asarray(priors, dtype=float).reshape(-1)
    if priors.shape[0] != d:
        raise ValueError(f"need {d} priors, got {priors.shape[0]}")
    if float(priors.min()) < 0.0:
        raise ValueError(f"negative prior {float(priors.min()):.3e}")
    if abs(float(priors.sum()) - 1.0) > PRIOR_SUM_TOL:
        raise ValueError(f"priors sum to {float(priors.sum()):.12f}, not 1")
    basis = np.eye(d, dtype=complex) if basis is None else np.asarray(basis, dtype=complex)
    if basis.shape != (d, d):
        raise ValueError(f"membrane basis must be {d}x{d}, got {basis.shape}")
    gram_dev = float(np.max(np.abs(basis @ basis.conj().T - np.eye(d))))
    if gram_dev > BASIS_TOL:
        raise ValueError(f"membrane basis not orthonormal: deviation {gram_dev:.3e}")
    layout = MembraneLayout.paper_preset(d) if layout is None else check_layout(layout, d)
    return CycleConfig(d=d, priors=priors, basis=basis, layout=layout)


def _outcome_probabilities(cfg: CycleConfig, components) -> np.ndarray:
    """probs[i, j] = <e_j| rho_i |e_j>, clamped against roundoff below zero."""
    probs = np.empty((cfg.d, cfg.d))
    for i, rho in enumerate(components):
        vals = np.real(np.einsum("ja,ab,jb->j", cfg.basis.conj(), rho, cfg.basis))
        probs[i] = np.clip(vals, 0.0, 1.0)
    return probs


def chamber_distribution(cfg: CycleConfig, components) -> list:
    """Equilibrium chamber weights [(outcome j, group, weight), ...].

    Each weight is sum_{i in group} p_i <e_j|rho_i|e_j>; across all outcomes
    and groups the weights sum to 1.
    """
    check_layout(cfg.layout, cfg.d)
    if len(components) != cfg.d:
        raise ValueError(f"need {cfg.d} component states, got {len(components)}")
    probs = _outcome_probabilities(cfg, components)
    chambers = []
    for j, outcome_groups in enumerate(cfg.layout.groups):
        for group in outcome_groups:
            weight = float(sum(cfg.priors[int(i)] * probs[int(i), j] for i in group))
            chambers.append((j, tuple(int(i) for i in group), weight))
    total = sum(w for _, _, w in chambers)
    if abs(total - 1.0) > PRIOR_SUM_TOL:
        raise ValueError(f"chamber weights sum to {total:.12f}, not 1")
    return chambers


def work_extraction_w1(cfg: CycleConfig, components) -> float:
    """Work extracted by the mixing path (in bits, per-particle prefactor omitted):
    H(priors) + H(outcome distribution of the average state) - H(chambers)."""
    probs = _outcome_probabilities(cfg, components)
    outcome_dist = cfg.priors @ probs
    chamber_weights = np.array([w for _, _, w in chamber_distribution(cfg, components)])
    return shannon_entropy(cfg.priors) + shannon_entropy(outcome_dist) - shannon_entropy(chamber_weights)


def work_retrieval_w2(cfg: CycleConfig, components) -> float:
    """Work required by the reversible return path:
    S(average state) - sum_i p_i S(rho_i), in bits."""
    rho_avg = sum(p * rho for p, rho in zip(cfg.priors, components))
    return von_neumann_entropy(rho_avg) - float(
        sum(p * von_neumann_entropy(rho) for p, rho in zip(cfg.priors, components))
    )


def singleton_arguments(cfg: CycleConfig, components) -> np.ndarray:
    """s_j = <e_j| rho_single(j) |e_j> for the layout's designated singletons.

    For the standard components this is the equal-weight combination of the
    two paired-basis outcome probabilities of the pure state |e_j>, the
    quantity capped by the pair certainty bound.
    """
    if cfg.layout.singletons is None:
        raise ValueError(f"layout {cfg.layout.name!r} designates no singleton components")
    probs = _outcome_probabilities(cfg, components)
    return np.array([probs[int(s), j] for j, s in enumerate(cfg.layout.singletons)])


@dataclass(frozen=True)
class WorkReport:
    """Work bookkeeping of one cycle, with the binary-entropy cross-check.

    ``consistency_residual`` is |(w1 - w2) - hb_form_delta_w| and is always
    reported when the binary-entropy form applies (uniform priors and a
    singleton-style layout). ``in_window`` records whether every singleton
    argument lies in [1 - zeta, zeta], the interval on which the second-law
    comparison is monotone. Counterfactual fields are populated only in the
    explicitly requested what-if mode and never describe a physical cycle.
    """

    d: int
    w1: float
    w2: float
    delta_w: float
    zeta: float
    layout_name: str
    singleton_args: tuple | None = None
    hb_form_delta_w: float | None = None
    consistency_residual: float | None = None
    in_window: bool | None = None
    counterfactual: bool = False
    counterfactual_zeta: float | None = None
    counterfactual_delta_w: float | None = None

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "w1": self.w1,
            "w2": self.w2,
            "delta_w": self.delta_w,
            "zeta": self.zeta,
            "layout": self.layout_name,
            "singleton_args": None if self.singleton_args is None else list(self.singleton_args),
            "hb_form_delta_w": self.hb_form_delta_w,
            "consistency_residual": self.consistency_residual,
            "in_window": self.in_window,
            "counterfactual": self.counterfactual,
            "counterfactual_zeta": self.counterfactual_zeta,
            "counterfactual_delta_w": self.counterfactual_delta_w,
        }


def delta_w(cfg: CycleConfig, components=None, counterfactual_zeta: float | None = None) -> WorkReport:
    """Net work of the full cycle, with the binary-entropy form when it applies.

    The raw value w1 - w2 is computed for any configuration. The
    binary-entropy form (and the counterfactual mode, which substitutes the
    hypothetical bound for every singleton argument) additionally needs
    uniform priors and a layout that designates singleton components.
    """
    components = component_states(cfg.d) if components is None else list(components)
    w1 = work_extraction_w1(cfg, components)
    w2 = work_retrieval_w2(cfg, components)
    delta = w1 - w2
    zeta = mub_pair_bound(cfg.d)

    uniform = bool(np.max(np.abs(cfg.priors - 1.0 / cfg.d)) <= UNIFORM_TOL)
    has_singletons = cfg.layout.singletons is not None

    if counterfactual_zeta is not None and not (uniform and has_singletons):
        raise ValueError(
            "the binary-entropy form needs uniform priors and a layout with "
            "designated singletons; cannot evaluate a counterfactual bound here"
        )

    s_args = None
    hb_form = None
    residual = None
    in_window = None
    if has_singletons:
        s = singleton_arguments(cfg, components)
        s_args = tuple(float(v) for v in s)
        in_window = bool(np.all(s >= 1.0 - zeta) and np.all(s <= zeta + WINDOW_SLACK))
        if uniform:
            hb_form = binary_entropy(zeta) - float(
                np.mean([binary_entropy(min(max(float(v), 0.0), 1.0)) for v in s])
            )
            residual = abs(delta - hb_form)

    cf_delta = None
    if counterfactual_zeta is not None:
        cf = float(counterfactual_zeta)
        cf_delta = binary_entropy(zeta) - binary_entropy(cf)

    return WorkReport(
        d=cfg.d,
        w1=w1,
        w2=w2,
        delta_w=delta,
        zeta=zeta,
        layout_name=cfg.layout.name,
        singleton_args=s_args,
        hb_form_delta_w=hb_form,
        consistency_residual=residual,
        in_window=in_window,
        counterfactual=counterfactual_zeta is not None,
        counterfactual_zeta=None if counterfactual_zeta is None else float(counterfactual_zeta),
        counterfactual_delta_w=cf_delta,
    )


def haar_random_basis(d: int, rng: np.random.Generator) -> np.ndarray:
    """Orthonormal basis (rows) drawn uniformly: QR of a complex Gaussian
    matrix with the R-diagonal phases folded back in."""
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    diag = np.diag(r).copy()
    diag[diag == 0] = 1.0
    return (q * (diag / np.abs(diag))).T


@dataclass(frozen=True)
class ScanReport:
    """Summary of cycle evaluations over seeded random membrane bases."""

    d: int
    seed: int
    n_samples: int
    layout_name: str
    zeta: float
    delta_w_min: float
    delta_w_max: float
    delta_w_mean: float
    histogram_counts: tuple
    histogram_edges: tuple
    max_consistency_residual: float
    #: Largest s_j - zeta over all samples; positive values would breach the bound.
    max_singleton_excess: float
    n_in_window: int
    in_window_delta_w_max: float | None
    #: Samples where some s_j < 1 - zeta (outside the monotone-comparison window).
    outside_window_indices: tuple
    per_sample_delta_w: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "seed": self.seed,
            "n_samples": self.n_samples,
            "layout": self.layout_name,
            "zeta": self.zeta,
            "delta_w_min": self.delta_w_min,
            "delta_w_max": self.delta_w_max,
            "delta_w_mean": self.delta_w_mean,
            "histogram": {
                "counts": list(self.histogram_counts),
                "edges": list(self.histogram_edges),
            },
            "max_consistency_residual": self.max_consistency_residual,
            "max_singleton_excess": self.max_singleton_excess,
            "n_in_window": self.n_in_window,
            "in_window_delta_w_max": self.in_window_delta_w_max,
            "outside_window_indices": list(self.outside_window_indices),
            "per_sample_delta_w": None
            if self.per_sample_delta_w is None
            else list(self.per_sample_delta_w),
        }


def scan_bases(
    d: int,
    n_samples: int,
    seed: int,
    layout: MembraneLayout | None = None,
    keep_samples: bool = False,
) -> ScanReport:
    """Evaluate the cycle on seeded Haar-random membrane bases.

    Deterministic for a given seed: each sample uses its own substream spawned
    from the seed, so the report does not depend on evaluation order.
    """
    d = int(d)
    n_samples = int(n_samples)
    if n_samples < 1:
        raise ValueError(f"n_samples must be >= 1 (got {n_samples})")
    layout = MembraneLayout.paper_preset(d) if layout is None else layout
    components = component_states(d)
    zeta = mub_pair_bound(d)

    streams = np.random.SeedSequence(seed).spawn(n_samples)
    deltas = np.empty(n_samples)
    residual_max = 0.0
    excess_max = -np.inf
    n_in_window = 0
    outside = []
    in_window_max = None
    for idx, stream in enumerate(streams):
        basis = haar_random_basis(d, np.random.default_rng(stream))
        cfg = cycle_config(d, basis=basis, layout=layout)
        report = delta_w(cfg, components)
        deltas[idx] = report.delta_w
        if report.consistency_residual is not None:
            residual_max = max(residual_max, report.consistency_residual)
        if report.singleton_args is not None:
            excess_max = max(excess_max, max(report.singleton_args) - zeta)
            if report.in_window:
                n_in_window += 1
                in_window_max = (
                    report.delta_w if in_window_max is None else max(in_window_max, report.delta_w)
                )
            else:
                outside.append(idx)

    counts, edges = np.histogram(deltas, bins=20)
    return ScanReport(
        d=d,
        seed=int(seed),
        n_samples=n_samples,
        layout_name=layout.name,
        zeta=zeta,
        delta_w_min=float(deltas.min()),
        delta_w_max=float(deltas.max()),
        delta_w_mean=float(deltas.mean()),
        histogram_counts=tuple(int(c) for c in counts),
        histogram_edges=tuple(float(e) for e in edges),
        max_consistency_residual=float(residual_max),
        max_singleton_excess=float(excess_max) if np.isfinite(excess_max) else 0.0,
        n_in_window=n_in_window,
        in_window_delta_w_max=in_window_max,
        outside_window_indices=tuple(outside),
        per_sample_delta_w=tuple(float(v) for v in deltas) if keep_samples else None,
    )
