"""Numpy implementations of the hot kernels (fallback when the extension is absent)."""
import math

import numpy as np

from ._coeffs import (EM_COEFFS, EM_DEFAULT_TERMS, EM_MIN_N, EM_RATIO,
                      LANCZOS_COEFFS, LANCZOS_G)

_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
_LOG_PI = math.log(math.pi)


def _log_sin_pi(z):
    # Stable for large |Im z|; conjugate symmetry handles the lower half plane.
    flip = z.imag < 0
    w = np.where(flip, np.conj(z), z)
    u = np.exp(2j * np.pi * w)
    val = -1j * np.pi * w + np.log((u - 1.0) / 2j)
    return np.where(flip, np.conj(val), val)


def _lanczos_log(z):
    w = z - 1.0
    x = np.full(z.shape, LANCZOS_COEFFS[0], dtype=complex)
    for i, c in enumerate(LANCZOS_COEFFS[1:], start=1):
        x = x + c / (w + i)
    t = w + LANCZOS_G + 0.5
    return _HALF_LOG_2PI + (w + 0.5) * np.log(t) - t + np.log(x)


def loggamma(z):
    """Complex log-gamma, Lanczos for Re z >= 1/2 and reflection below."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    refl = z.real < 0.5
    out = np.empty_like(z)
    if np.any(~refl):
        out[~refl] = _lanczos_log(z[~refl])
    if np.any(refl):
        zr = z[refl]
        out[refl] = _LOG_PI - _log_sin_pi(zr) - _lanczos_log(1.0 - zr)
    return out


def em_cutoff(abs_s, terms):
    return max(EM_MIN_N, int(math.ceil((abs_s + 2 * terms) / (2 * math.pi * EM_RATIO))))


def hurwitz_weighted(s, shifts, weights, terms=EM_DEFAULT_TERMS):
    """sum_j weights[j] * zeta(s, shifts[j]) for every s, by Euler-Maclaurin."""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    a = np.asarray(shifts, dtype=float)
    wts = np.asarray(weights, dtype=complex)
    coeffs = np.asarray(EM_COEFFS[:terms])
    out = np.empty(s.shape, dtype=complex)
    for idx, sv in enumerate(s):
        n_cut = em_cutoff(abs(sv), terms)
        n = np.arange(n_cut, dtype=float)
        head = np.exp(-sv * np.log(n[None, :] + a[:, None])).sum(axis=1)
        x = n_cut + a
        lx = np.log(x)
        base = np.exp(-sv * lx)
        tail = x * base / (sv - 1.0) + 0.5 * base
        poch = sv
        xpow = base / x
        inv_x2 = 1.0 / (x * x)
        for k in range(terms):
            tail = tail + coeffs[k] * poch * xpow
            poch = poch * (sv + 2 * k + 1) * (sv + 2 * k + 2)
            xpow = xpow * inv_x2
        out[idx] = np.dot(wts, head + tail)
    return out
