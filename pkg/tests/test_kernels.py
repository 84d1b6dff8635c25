import mpmath
import numpy as np
import pytest

from efl import _kernels
from efl._kernels import python_kernels, compiled_kernels

BACKENDS = [python_kernels] + ([compiled_kernels] if compiled_kernels is not None else [])
Z_POINTS = [0.5 + 0j, 1 + 0j, 3.7 - 2j, 0.25 + 14.1j, -2.5 + 0.3j, 0.1 - 40j, 7 + 120j, -10.3 - 5j]


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_loggamma_matches_mpmath(kern):
    got = kern.loggamma(np.array(Z_POINTS))
    for z, g in zip(Z_POINTS, got):
        want = complex(mpmath.loggamma(z))
        assert abs(g - want) <= 1e-12 * max(1.0, abs(want))


@pytest.mark.parametrize("kern", BACKENDS, ids=lambda k: k.__name__.rsplit(".", 1)[-1])
def test_hurwitz_weighted_matches_mpmath(kern):
    s = np.array([2.0, 0.5 + 14j, 0.3 - 25j, -1.5 + 2j, 3 + 100j])
    shifts, weights = [0.25, 0.75], [1.0, -1.0]
    got = kern.hurwitz_weighted(s, shifts, weights)
    for sv, g in zip(s, got):
        want = complex(mpmath.zeta(sv, 0.25) - mpmath.zeta(sv, 0.75))
        assert abs(g - want) <= 1e-11 * max(1.0, abs(want))


@pytest.mark.skipif(compiled_kernels is None, reason="extension not built")
def test_backends_agree():
    rng = np.random.default_rng(3)
    s = rng.uniform(-1, 2, 50) + 1j * rng.uniform(-200, 200, 50)
    shifts = rng.uniform(0.05, 1.0, 4)
    weights = rng.normal(size=4) + 1j * rng.normal(size=4)
    a = python_kernels.hurwitz_weighted(s, shifts, weights)
    b = compiled_kernels.hurwitz_weighted(s, shifts, weights)
    assert np.max(np.abs(a - b) / np.maximum(1, np.abs(a))) <= 1e-12
    assert np.max(np.abs(python_kernels.loggamma(s) - compiled_kernels.loggamma(s))) <= 1e-12


def test_backend_label():
    assert _kernels.BACKEND in ("cython", "python")
    assert (_kernels.BACKEND == "cython") == (_kernels.loggamma is getattr(compiled_kernels, "loggamma", None))
