import numpy as np
import pytest

from finecert.mub import (
    MubFamily,
    computational_basis,
    is_prime,
    mub_family,
    mub_vector,
    verify_mub,
)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61]
    for n in range(64):
        assert is_prime(n) == (n in primes)


def test_computational_basis_examples():
    b3 = computational_basis(3)
    np.testing.assert_array_equal(b3[0], [1, 0, 0])
    b5 = computational_basis(5)
    np.testing.assert_array_equal(b5[4], [0, 0, 0, 0, 1])


def test_z_eigenvalue_of_basis_states():
    # Z = diag(w^0, ..., w^{d-1}) has the computational vectors as eigenvectors
    d = 3
    w = np.exp(2j * np.pi / d)
    z = np.diag([w**j for j in range(d)])
    b = computational_basis(d)
    for j in range(d):
        np.testing.assert_allclose(z @ b[j], (w**j) * b[j], atol=1e-15)


def test_computational_basis_rejects_non_odd_prime():
    for d in (2, 4, 9, 15):
        with pytest.raises(ValueError, match="odd prime"):
            computational_basis(d)


def test_mub_vector_uniform_case():
    np.testing.assert_allclose(mub_vector(3, 0, 0), np.full(3, 1 / np.sqrt(3)), atol=1e-15)


def test_mub_vector_hand_evaluated_exponents():
    # k=0, j=1, d=3: exponents -2l mod 3 are (0, 1, 2), i.e. (1, w, w^2)/sqrt(3)
    w = np.exp(2j * np.pi / 3)
    np.testing.assert_allclose(
        mub_vector(3, 0, 1), np.array([1, w, w**2]) / np.sqrt(3), atol=1e-15
    )


def test_mub_vector_normalized_and_flat():
    rng = np.random.default_rng(3)
    for _ in range(40):
        d = int(rng.choice([3, 5, 7, 11, 13]))
        k = int(rng.integers(d))
        j = int(rng.integers(d))
        v = mub_vector(d, k, j)
        assert abs(np.linalg.norm(v) - 1.0) <= 1e-12
        np.testing.assert_allclose(np.abs(v), np.full(d, 1 / np.sqrt(d)), atol=1e-12)


def test_mub_vector_bitwise_deterministic():
    a = mub_vector(7, 4, 2)
    b = mub_vector(7, 4, 2)
    assert np.array_equal(a, b)


def test_mub_vector_rejects_out_of_range():
    with pytest.raises(ValueError, match="k="):
        mub_vector(3, 3, 0)
    with pytest.raises(ValueError, match="j="):
        mub_vector(3, 0, -1)


def test_family_shape_and_labels():
    fam = mub_family(3)
    assert fam.bases.shape == (4, 3, 3)
    assert fam.labels == ("z", 0, 1, 2)
    assert mub_family(5).bases.shape == (6, 5, 5)


def test_family_rejects_qubit_dimension_with_guidance():
    with pytest.raises(ValueError, match="qubit"):
        mub_family(2)


def test_each_basis_is_unitary():
    for d in (3, 5, 7):
        fam = mub_family(d)
        for b in fam.bases:
            u = b.T  # columns are the basis vectors
            np.testing.assert_allclose(u.conj().T @ u, np.eye(d), atol=1e-10)


@pytest.mark.parametrize("d", [3, 5, 7, 11, 13])
def test_verify_mub_passes(d):
    report = verify_mub(mub_family(d), tol=1e-10)
    assert report.passed
    assert report.max_orthonormality_deviation <= 1e-10
    assert report.max_unbiasedness_deviation <= 1e-10


def test_verify_mub_large_dimension_example():
    assert verify_mub(mub_family(13), tol=1e-9).passed


def test_verify_mub_locates_corruption():
    fam = mub_family(3)
    bases = fam.bases.copy()
    # replace one vector of quadratic basis 0 by |0>
    bases[1, 1] = np.array([1.0, 0.0, 0.0])
    report = verify_mub(MubFamily(d=3, bases=bases), tol=1e-10)
    assert not report.passed
    assert report.max_orthonormality_deviation > 1e-10
    assert report.worst_orthonormality[0] == 0  # label of quadratic basis 0
    assert report.max_unbiasedness_deviation > 1e-10


def test_basis_lookup_labels():
    fam = mub_family(5)
    np.testing.assert_array_equal(fam.basis("z"), fam.bases[0])
    np.testing.assert_array_equal(fam.basis(2), fam.bases[3])
    np.testing.assert_array_equal(fam.vector(0, 3), mub_vector(5, 0, 3))
    with pytest.raises(ValueError, match="label"):
        fam.basis("w")
    with pytest.raises(ValueError, match="label"):
        fam.basis(5)
