"""Gamma factors, digamma and Hurwitz zeta."""
import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from ._kernels._coeffs import bernoulli_numbers
from .quad import adaptive

LOG_PI = math.log(math.pi)
LOG_2PI = math.log(2 * math.pi)
EULER_GAMMA = 0.5772156649015329


class PoleError(ValueError):
    """Evaluation requested at a pole."""


def _is_nonpositive_int(z):
    z = complex(z)
    return z.imag == 0 and z.real <= 0 and z.real == math.floor(z.real)


def loggamma(z):
    """log Gamma(z) on the principal branch (scalar in, scalar out)."""
    if _is_nonpositive_int(z):
        raise PoleError(f"Gamma has a pole at {z}")
    return complex(_kernels.loggamma(complex(z))[0])


def gamma(z):
    return cmath.exp(loggamma(z))


def log_gamma_r(s):
    """log of pi^(-s/2) Gamma(s/2)."""
    return -0.5 * s * LOG_PI + loggamma(0.5 * s)


def log_gamma_c(s):
    """log of (2 pi)^(-s) Gamma(s)."""
    return -s * LOG_2PI + loggamma(s)


def gamma_r(s):
    if _is_nonpositive_int(0.5 * complex(s)):
        raise PoleError(f"Gamma_R has a pole at {s}")
    return cmath.exp(log_gamma_r(complex(s)))


def gamma_c(s):
    if _is_nonpositive_int(s):
        raise PoleError(f"Gamma_C has a pole at {s}")
    return cmath.exp(log_gamma_c(complex(s)))


@dataclass(frozen=True)
class GammaFactorSpec:
    """kind(s + shift) ** multiplicity with kind in {"R", "C"}."""

    kind: str
    shift: float = 0.0
    multiplicity: int = 1

    def __post_init__(self):
        if self.kind not in ("R", "C"):
            raise ValueError("kind must be 'R' or 'C'")
        if self.multiplicity < 0:
            raise ValueError("multiplicity must be nonnegative")

    def log_value(self, s):
        f = log_gamma_r if self.kind == "R" else log_gamma_c
        return self.multiplicity * f(s + self.shift)


# -- digamma ----------------------------------------------------------------

_B = bernoulli_numbers(30)
_DIGAMMA_ASYM = [float(_B[2 * k]) / (2 * k) for k in range(1, 15)]


def digamma(z):
    """psi(z) by upward recurrence to Re z >= 15, then the asymptotic series."""
    z = complex(z)
    if _is_nonpositive_int(z):
        raise PoleError(f"digamma has a pole at {z}")
    if z.real < 0.5:
        # reflection: psi(1-z) - psi(z) = pi cot(pi z)
        return digamma(1 - z) - math.pi / cmath.tan(math.pi * z)
    acc = 0j
    while abs(z) < 15:
        acc -= 1 / z
        z += 1
    inv2 = 1 / (z * z)
    series = 0j
    p = inv2
    for c in _DIGAMMA_ASYM:
        series += c * p
        p *= inv2
    return acc + cmath.log(z) - 0.5 / z - series


def _digamma_tail_bound(s, cutoff):
    # |int_L^inf e^{-u}/u| <= e^{-L}/L and |int_L^inf e^{-us/2}/(1-e^{-u})| <= 2 e^{-L Re s/2}/(Re s (1-e^{-L}))
    x = s.real
    return math.exp(-cutoff) / cutoff + 2 * math.exp(-0.5 * cutoff * x) / (x * -math.expm1(-cutoff))


def digamma_half_integral(s, cutoff=None, tol=1e-12):
    """psi(s/2) from int_0^inf (e^{-u}/u - e^{-us/2}/(1 - e^{-u})) du.

    The integral is truncated at ``cutoff`` (default: where the tail bound
    drops below 1e-16).  Returns (value, tail_bound).
    """
    s = complex(s)
    if s.real <= 0:
        raise ValueError("integral diverges for Re s <= 0")
    if cutoff is None:
        cutoff = 1.0
        while _digamma_tail_bound(s, cutoff) > 1e-16:
            cutoff *= 1.5
    half = 0.5 * s

    def integrand(u):
        em1 = -np.expm1(-u)
        small = u < 1e-3
        with np.errstate(divide='ignore', invalid='ignore'):
            out = np.exp(-u) / u - np.exp(-half * u) / em1
        if np.any(small):
            out[small] = _small_u_series(u[small], half)
        return out

    value, _ = adaptive(integrand, 0.0, min(1.0, cutoff), tol=tol)
    if cutoff > 1.0:
        rest, _ = adaptive(integrand, 1.0, cutoff, tol=tol)
        value += rest
    return complex(value), _digamma_tail_bound(s, cutoff)


def _small_u_series(u, h):
    """Taylor series of e^{-u}/u - e^{-hu}/(1-e^{-u}) around u = 0, through u^3."""
    # e^{-u}/u = 1/u - 1 + u/2 - u^2/6 + u^3/24
    # u/(1-e^{-u}) = 1 + u/2 + u^2/12 - u^4/720, so e^{-hu}/(1-e^{-u}) = e^{-hu} (1/u)(1 + u/2 + u^2/12 + 0 u^3 - u^4/720)
    e = [1.0, -h, h * h / 2, -h**3 / 6, h**4 / 24]
    b = [1.0, 0.5, 1 / 12, 0.0, -1 / 720]
    prod = [sum(e[i] * b[k - i] for i in range(k + 1)) for k in range(5)]
    first = [-1.0, 0.5, -1 / 6, 1 / 24]
    return sum((first[k] - prod[k + 1]) * u**k for k in range(4))


# -- Hurwitz zeta --------------------------------------------------------------

def hurwitz_zeta(s, a, terms=None):
    """zeta(s, a) = sum_{n >= 0} (n + a)^{-s} for 0 < a <= 1, by Euler-Maclaurin."""
    s = complex(s)
    if s == 1:
        raise PoleError("Hurwitz zeta has a pole at s = 1")
    if not 0 < a <= 1:
        raise ValueError("shift must lie in (0, 1]")
    kw = {} if terms is None else {"terms": terms}
    return complex(_kernels.hurwitz_weighted(np.array([s]), [float(a)], [1.0], **kw)[0])
