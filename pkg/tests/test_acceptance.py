"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints exactly one [PASS]/[FAIL] line (visible with ``pytest -s``
or on failure); the assertions carry the same tolerances as the printed
checks. The whole module is deterministic, including the seeded scans.
"""

import numpy as np

import finecert as fc
from finecert.numerics import binary_entropy, hermitian_eig

SCAN_SEED = 20260810


def run_criterion(name, fn):
    try:
        fn()
    except BaseException as exc:
        print(f"[FAIL] {name}: {exc}")
        raise
    print(f"[PASS] {name}")


def test_criterion_1_pauli_pair_bound_and_maximizer():
    def check():
        bound = fc.zeta_spectral(fc.pauli_pair_ensemble("x", "z"))
        assert abs(bound.zeta - (0.5 + 0.5 / np.sqrt(2.0))) <= 1e-12
        bloch = fc.state_to_bloch(bound.maximizer)
        assert float(np.max(np.abs(bloch - np.array([1.0, 0.0, 1.0]) / np.sqrt(2.0)))) <= 1e-9

    run_criterion("equal-weight sigma_x/sigma_z bound 1/2 + 1/(2 sqrt 2), bisector maximizer", check)


def test_criterion_2_unbiased_pair_bound_all_dimensions():
    def check():
        for d in (2, 3, 5, 7, 11, 13):
            zeta = fc.zeta_spectral(fc.mub_pair_ensemble(d)).zeta
            assert abs(zeta - (0.5 + 0.5 / np.sqrt(d))) <= 1e-10, f"d={d}"
        for d in (3, 5):
            expected = fc.mub_pair_bound(d)
            labels = ["z"] + list(range(d))
            for a in range(len(labels)):
                for b in range(a + 1, len(labels)):
                    for j1 in range(d):
                        for j2 in range(d):
                            zeta = fc.all_outcome_pairs_bound(d, labels[a], labels[b], j1, j2)
                            assert abs(zeta - expected) <= 1e-10, (d, labels[a], labels[b], j1, j2)

    run_criterion("pair bound 1/2 + 1/(2 sqrt d) for d in {2..13}, all outcome pairs for d in {3,5}", check)


def test_criterion_3_saturating_state_d3():
    def check():
        x0 = np.pi / 4.0 - 0.5 * np.arcsin(1.0 / np.sqrt(3.0))
        psi = fc.hyperspherical_state([x0, np.pi / 4.0], [0.0, 0.0])
        ens = fc.mub_pair_ensemble(3)
        assert abs(fc.lhs_value(ens, psi) - (0.5 + 0.5 / np.sqrt(3.0))) <= 1e-9
        fam = fc.mub_family(3)
        p1 = abs(np.vdot(fam.vector("z", 0), psi)) ** 2
        p2 = abs(np.vdot(fam.vector(0, 0), psi)) ** 2
        assert abs(p1 - p2) <= 1e-9

    run_criterion("d=3 saturating angles reach the bound with balanced probabilities", check)


def test_criterion_4_planar_average_quadrature():
    def check():
        grid = np.linspace(0.0, np.pi, 1001)
        closed = np.empty(1001)
        for i, alpha in enumerate(grid):
            c, q = fc.average_certainty(float(alpha))
            closed[i] = c
            assert abs(c - q) <= 1e-8, f"alpha={alpha}"
        argmax = grid[int(np.argmax(closed))]
        assert abs(argmax - np.pi / 2.0) <= grid[1] - grid[0]

    run_criterion("planar average certainty: quadrature matches 1 + sin(alpha)/pi, argmax at pi/2", check)


def test_criterion_5_random_direction_pairs():
    def check():
        rng = np.random.default_rng(SCAN_SEED)
        for _ in range(1000):
            m = rng.standard_normal(3)
            m /= np.linalg.norm(m)
            n = rng.standard_normal(3)
            n /= np.linalg.norm(n)
            top = hermitian_eig(fc.spin_projector(m) + fc.spin_projector(n)).largest
            gamma = fc.pair_certainty(m, n).gamma
            assert abs(top - (1.0 + np.cos(gamma / 2.0))) <= 1e-9

    run_criterion("1000 random direction pairs: top eigenvalue equals 1 + cos(gamma/2)", check)


def test_criterion_6_triple_pauli():
    def check():
        closed = fc.triple_pauli_bound()
        assert abs(closed.zeta - (0.5 + 0.5 / np.sqrt(3.0))) <= 1e-12
        bound = fc.zeta_spectral(fc.pauli_triple_ensemble())
        assert abs(bound.zeta - closed.zeta) <= 1e-12
        bloch = fc.state_to_bloch(bound.maximizer)
        assert float(np.max(np.abs(bloch - np.full(3, 1.0 / np.sqrt(3.0))))) <= 1e-9
        for o1 in (0, 1):
            for o2 in (0, 1):
                for o3 in (0, 1):
                    other = fc.zeta_spectral(fc.pauli_triple_ensemble((o1, o2, o3))).zeta
                    assert abs(other - closed.zeta) <= 1e-10, (o1, o2, o3)

    run_criterion("three-Pauli bound 1/2 + 1/(2 sqrt 3) on the body diagonal, all outcome triples", check)


def test_criterion_7_family_verification():
    def check():
        for d in (3, 5, 7, 11, 13):
            report = fc.verify_mub(fc.mub_family(d), tol=1e-10)
            assert report.passed, f"d={d}: {report}"

    run_criterion("unbiased-basis family verification at tol 1e-10 for d in {3,5,7,11,13}", check)


def test_criterion_8_grid_oracle_equivalence():
    def check():
        pair2 = fc.pauli_pair_ensemble("x", "z")
        exact2 = fc.zeta_spectral(pair2).zeta
        grid2 = fc.zeta_gridsearch(pair2, 721)
        assert grid2.zeta <= exact2 + 1e-10
        assert exact2 - grid2.zeta <= 1e-5
        pair3 = fc.mub_pair_ensemble(3)
        exact3 = fc.zeta_spectral(pair3).zeta
        grid3 = fc.zeta_gridsearch(pair3, 60)
        assert grid3.zeta <= exact3 + 1e-10
        assert exact3 - grid3.zeta <= 2e-3

    run_criterion("grid oracle matches spectral bound (1e-5 at dim 2, 2e-3 at dim 3)", check)


def test_criterion_9_cycle_identity_and_second_law_window():
    def check():
        for d in (3, 5, 7):
            report = fc.scan_bases(d, 1000, seed=SCAN_SEED)
            assert report.max_consistency_residual <= 1e-9, f"d={d}"
            assert report.max_singleton_excess <= 1e-10, f"d={d}"
            if report.n_in_window:
                assert report.in_window_delta_w_max <= 1e-9, f"d={d}"
            w2 = fc.delta_w(fc.cycle_config(d)).w2
            expected_w2 = np.log2(d) - binary_entropy(0.5 + 0.5 / np.sqrt(d))
            assert abs(w2 - expected_w2) <= 1e-10, f"d={d}"

    run_criterion(
        "cycle scans (d in {3,5,7}, 1000 seeded bases): entropy and binary-entropy "
        "accounting agree to 1e-9, singleton arguments respect the bound, "
        "in-window net work stays non-positive, return work matches its closed form",
        check,
    )


def test_criterion_10_counterfactual_second_law_link():
    def check():
        comps = fc.component_states(3)
        vectors = hermitian_eig(comps[0]).vectors  # ascending eigenvalues
        basis = np.stack([vectors[:, 2], vectors[:, 1], vectors[:, 0]])  # top first
        cfg = fc.cycle_config(3, basis=basis)
        zeta = fc.mub_pair_bound(3)
        report = fc.delta_w(cfg, counterfactual_zeta=zeta + 0.05)
        assert abs(report.singleton_args[0] - zeta) <= 1e-10  # basis saturates the bound
        assert report.counterfactual
        assert report.counterfactual_zeta == zeta + 0.05
        assert report.counterfactual_delta_w > 0.0

    run_criterion(
        "counterfactual mode: a bound higher by 0.05 at a saturating basis reports "
        "positive net work, clearly labeled",
        check,
    )
