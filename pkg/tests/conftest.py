# Shared fixtures.
import numpy as np
import pytest

from entropic_bell.models import DensityMatrix

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def bloch_state(vector) -> DensityMatrix:
    """rho = (I + r . sigma) / 2 for a Bloch vector with |r| <= 1."""
    entries = 0.5 * np.eye(2, dtype=complex)
    for component, pauli in zip(vector, PAULI):
        entries = entries + 0.5 * component * pauli
    return DensityMatrix(entries)


def random_bloch_vector(rng, max_radius=0.99):
    direction = rng.normal(size=3)
    direction /= np.linalg.norm(direction)
    return direction * rng.uniform(0.0, max_radius)


@pytest.fixture
def rng():
    return np.random.default_rng(20241018)
