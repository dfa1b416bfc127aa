import numpy as np
import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

coord = st.floats(-4, 4, allow_nan=False, allow_infinity=False)


@st.composite
def matrices(draw):
    """2x2 complex matrices with moderately sized entries."""
    vals = [complex(draw(coord), draw(coord)) for _ in range(4)]
    return np.array(vals, dtype=complex).reshape(2, 2)


def gaussian_matrices(n, seed):
    rng = np.random.Generator(np.random.Philox(seed))
    return (rng.standard_normal((n, 2, 2)) + 1j * rng.standard_normal((n, 2, 2))) / np.sqrt(2)


def random_unitary(rng):
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(20240611))


def rel_err(got, want):
    got, want = np.asarray(got), np.asarray(want)
    return float(np.max(np.abs(got - want)) / max(1.0, float(np.max(np.abs(want)))))
