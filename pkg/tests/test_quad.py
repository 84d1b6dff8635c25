import math

import numpy as np

from efl.quad import adaptive, composite, gauss_legendre


def test_polynomial_exact():
    assert abs(gauss_legendre(lambda x: x**31, 0, 1) - 1 / 32) <= 1e-15


def test_composite_oscillatory():
    val = composite(lambda x: np.cos(50 * x), 0, math.pi / 3, panels=20)
    assert abs(val - math.sin(50 * math.pi / 3) / 50) <= 1e-14


def test_adaptive_endpoint_singularity():
    val, err = adaptive(lambda x: np.sqrt(x), 0, 1, tol=1e-12)
    assert abs(val - 2 / 3) <= 1e-11 and err <= 1e-10


def test_adaptive_complex():
    val, _ = adaptive(lambda x: np.exp(1j * x), 0, math.pi)
    assert abs(val - 2j) <= 1e-13
