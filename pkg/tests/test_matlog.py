import math

import numpy as np
import pytest
import scipy.linalg

from entropic_bell.errors import DomainError, NotInvertibleError
from entropic_bell.matlog import eigen2, expm, is_invertible, log_status, logm
from entropic_bell.models import Axis, GeneralMatrix, LogMethod, LogStatus, Sign
from entropic_bell.qstate import density_xz, literal_density, mix_pair

from .conftest import bloch_state, random_bloch_vector


def _random_invertible(rng, min_det=1e-3):
    while True:
        entries = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        if abs(np.linalg.det(entries)) > min_det:
            return entries


def _unit_square_invertible(rng, min_det=1e-6):
    while True:
        entries = rng.uniform(size=(2, 2)) + 1j * rng.uniform(size=(2, 2))
        if abs(np.linalg.det(entries)) > min_det:
            return entries


def test_eigen2_hermitian(rng):
    for _ in range(100):
        rho = bloch_state(random_bloch_vector(rng))
        decomp = eigen2(rho)
        assert decomp.hermitian_input
        assert decomp.diagonalizable
        high, low = decomp.real_eigenvalues
        assert high >= low
        vectors = decomp.eigenvectors
        assert np.allclose(vectors.conj().T @ vectors, np.eye(2), atol=1e-12)
        rebuilt = vectors @ np.diag(decomp.eigenvalues) @ vectors.conj().T
        assert np.allclose(rebuilt, rho.entries, atol=1e-12)


def test_eigen2_general_matrix(rng):
    for _ in range(100):
        entries = _random_invertible(rng)
        decomp = eigen2(GeneralMatrix(entries))
        assert decomp.diagonalizable
        for lam, vector in zip(decomp.eigenvalues, decomp.eigenvectors.T):
            assert np.allclose(entries @ vector, lam * vector, atol=1e-9)


def test_eigen2_sum_and_product_match_trace_and_det(rng):
    inputs = [GeneralMatrix(_unit_square_invertible(rng)) for _ in range(200)]
    inputs += [bloch_state(random_bloch_vector(rng)) for _ in range(100)]
    for m in inputs:
        lam1, lam2 = eigen2(m).eigenvalues
        assert abs(lam1 + lam2 - m.trace) <= 1e-12
        assert abs(lam1 * lam2 - m.det) <= 1e-12


@pytest.mark.parametrize("gap", np.logspace(-9.5, -4, 25))
def test_eigen2_resolves_close_eigenvalues(gap):
    corner = 1.0 + gap
    decomp = eigen2(GeneralMatrix([[1, 1], [0, corner]]))
    assert decomp.diagonalizable
    assert sorted(decomp.real_eigenvalues) == pytest.approx([1.0, corner], abs=1e-15)


def test_eigen2_defective():
    decomp = eigen2(GeneralMatrix([[1, 1], [0, 1]]))
    assert not decomp.diagonalizable
    assert decomp.eigenvalues == pytest.approx([1, 1])


def test_eigen2_scalar_matrix_is_diagonalizable():
    decomp = eigen2(GeneralMatrix([[2 + 1j, 0], [0, 2 + 1j]]))
    assert decomp.diagonalizable
    assert np.allclose(decomp.eigenvectors, np.eye(2))


def test_is_invertible():
    assert is_invertible(GeneralMatrix(np.eye(2)))
    assert not is_invertible(GeneralMatrix([[1, 2], [2, 4]]))
    with pytest.raises(DomainError):
        is_invertible(GeneralMatrix(np.eye(2)), tol=0.0)


def test_logm_of_negative_diagonal_is_complex():
    result = logm(GeneralMatrix([[-1, 0], [0, 1]]))
    assert np.allclose(result.matrix.entries, [[1j * math.pi, 0], [0, 0]], atol=1e-12)
    assert result.is_complex
    assert result.method is LogMethod.EIGEN


def test_logm_jordan_block():
    result = logm(GeneralMatrix([[1, 1], [0, 1]]))
    assert result.method is LogMethod.JORDAN
    assert np.allclose(result.matrix.entries, [[0, 1], [0, 0]], atol=1e-12)
    assert not result.is_complex


def test_logm_jordan_block_with_scale():
    m = np.array([[3, 2], [0, 3]], dtype=complex)
    result = logm(GeneralMatrix(m))
    assert result.method is LogMethod.JORDAN
    assert np.allclose(result.matrix.entries, scipy.linalg.logm(m), atol=1e-10)


@pytest.mark.parametrize(
    "entries",
    [
        [[0, 0], [0, 0]],
        [[1, 2], [2, 4]],
        [[1, 0], [0, 0]],
    ],
)
def test_logm_singular_raises(entries):
    with pytest.raises(NotInvertibleError):
        logm(GeneralMatrix(entries))


def test_logm_singular_pure_states(rng):
    for beta in rng.uniform(0, 2 * math.pi, size=20):
        with pytest.raises(NotInvertibleError):
            logm(density_xz(float(beta), Sign.PLUS))


def test_logm_literal_matrix_is_never_invertible(rng):
    for alpha, beta in rng.uniform(0, 2 * math.pi, size=(20, 2)):
        with pytest.raises(NotInvertibleError):
            logm(literal_density(Axis(alpha=alpha, beta=beta), Sign.PLUS))


def test_logm_respects_tolerance():
    m = GeneralMatrix(np.diag([1.0, 1e-6]))
    assert logm(m).matrix.entries[1, 1] == pytest.approx(math.log(1e-6))
    with pytest.raises(NotInvertibleError):
        logm(m, tol=1e-5)


@pytest.mark.parametrize("gap", np.logspace(-12, -4, 40))
def test_logm_near_defective_upper_triangular(gap):
    corner = 1.0 + gap
    m = GeneralMatrix([[1, 1], [0, corner]])
    result = logm(m)
    log_corner = math.log1p(corner - 1.0)
    expected = [[0.0, log_corner / (corner - 1.0)], [0.0, log_corner]]
    assert np.allclose(result.matrix.entries, expected, rtol=0.0, atol=1e-12)
    back = expm(result.matrix)
    assert np.allclose(back.entries, m.entries, rtol=0.0, atol=1e-9)


def test_expm_logm_round_trip(rng):
    for _ in range(1000):
        entries = _unit_square_invertible(rng)
        back = expm(logm(GeneralMatrix(entries)).matrix)
        assert np.allclose(back.entries, entries, rtol=0.0, atol=1e-9)


def test_logm_matches_scipy(rng):
    for _ in range(100):
        entries = _random_invertible(rng)
        ours = logm(GeneralMatrix(entries)).matrix.entries
        assert np.allclose(ours, scipy.linalg.logm(entries), atol=1e-8)


def test_expm_matches_scipy(rng):
    for _ in range(100):
        entries = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        assert np.allclose(expm(GeneralMatrix(entries)).entries, scipy.linalg.expm(entries), atol=1e-9)


def test_expm_defective_uses_series():
    result = expm(GeneralMatrix([[2, 1], [0, 2]]))
    expected = math.exp(2) * np.array([[1, 1], [0, 1]])
    assert np.allclose(result.entries, expected, atol=1e-9)


def test_expm_diagonal_is_exact():
    result = expm(GeneralMatrix(np.diag([0.0, 1j * math.pi])))
    assert result.entries[0, 0] == 1.0
    assert result.entries[1, 1] == pytest.approx(-1.0)


def test_logm_of_real_xz_mixtures_is_real(rng):
    for beta_a, beta_b in rng.uniform(0, 2 * math.pi, size=(100, 2)):
        mixed = mix_pair(density_xz(float(beta_a), Sign.PLUS), density_xz(float(beta_b), Sign.MINUS))
        if not is_invertible(mixed):
            continue
        result = logm(mixed)
        assert not result.is_complex
        assert result.matrix.is_hermitian(tol=1e-10)


def test_logm_of_states_is_hermitian(rng):
    for _ in range(100):
        rho = bloch_state(random_bloch_vector(rng))
        assert logm(rho).matrix.is_hermitian(tol=1e-10)


def test_log_status():
    assert log_status(GeneralMatrix([[1, 0], [0, 0]])) is LogStatus.SINGULAR
    assert log_status(GeneralMatrix([[2, 0], [0, 3]])) is LogStatus.REAL
    assert log_status(GeneralMatrix([[-1, 0], [0, 1]])) is LogStatus.COMPLEX
