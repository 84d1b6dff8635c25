# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled versions of the hot kernels; same contracts as ``_pykernels``."""
import numpy as np

from libc.math cimport atan2, ceil, cos, exp, hypot, log, sin, M_PI

from ._coeffs import (EM_COEFFS, EM_DEFAULT_TERMS, EM_MIN_N, EM_RATIO,
                      LANCZOS_COEFFS, LANCZOS_G)

cdef double[9] _LC
cdef double[40] _EMC
cdef double _G = LANCZOS_G
cdef double _RATIO = EM_RATIO
cdef int _MIN_N = EM_MIN_N
cdef double _HALF_LOG_2PI = 0.5 * log(2.0 * M_PI)
cdef double _LOG_PI = log(M_PI)

for _i in range(9):
    _LC[_i] = LANCZOS_COEFFS[_i]
for _i in range(40):
    _EMC[_i] = EM_COEFFS[_i]


cdef inline double complex _mk(double re, double im) noexcept nogil:
    return re + im * 1j


cdef inline double complex _cexp(double complex z) noexcept nogil:
    cdef double m = exp(z.real)
    return _mk(m * cos(z.imag), m * sin(z.imag))


cdef inline double complex _clog(double complex z) noexcept nogil:
    return _mk(log(hypot(z.real, z.imag)), atan2(z.imag, z.real))


cdef inline double complex _lanczos_log(double complex z) noexcept nogil:
    cdef double complex w = z - 1.0
    cdef double complex x = _LC[0]
    cdef int i
    for i in range(1, 9):
        x = x + _LC[i] / (w + i)
    cdef double complex t = w + _G + 0.5
    return _HALF_LOG_2PI + (w + 0.5) * _clog(t) - t + _clog(x)


cdef inline double complex _log_sin_pi(double complex z) noexcept nogil:
    cdef bint flip = z.imag < 0
    cdef double complex w = z
    if flip:
        w = _mk(z.real, -z.imag)
    cdef double complex u = _cexp(_mk(-2.0 * M_PI * w.imag, 2.0 * M_PI * w.real))
    cdef double complex v = _mk(M_PI * w.imag, -M_PI * w.real) + _clog((u - 1.0) / _mk(0.0, 2.0))
    if flip:
        return _mk(v.real, -v.imag)
    return v


cdef inline double complex _loggamma(double complex z) noexcept nogil:
    if z.real < 0.5:
        return _LOG_PI - _log_sin_pi(z) - _lanczos_log(1.0 - z)
    return _lanczos_log(z)


def loggamma(z):
    """Complex log-gamma, Lanczos for Re z >= 1/2 and reflection below."""
    arr = np.ascontiguousarray(np.atleast_1d(np.asarray(z, dtype=complex)))
    out = np.empty_like(arr)
    cdef double complex[::1] zin = arr.ravel()
    cdef double complex[::1] zout = out.ravel()
    cdef Py_ssize_t i, n = zin.shape[0]
    with nogil:
        for i in range(n):
            zout[i] = _loggamma(zin[i])
    return out


cdef inline double complex _pow_neg(double lx, double complex s) noexcept nogil:
    # x ** (-s) with lx = log x, x > 0
    cdef double m = exp(-s.real * lx)
    return _mk(m * cos(s.imag * lx), -m * sin(s.imag * lx))


def em_cutoff(double abs_s, int terms):
    return max(_MIN_N, <int>ceil((abs_s + 2 * terms) / (2 * M_PI * _RATIO)))


def hurwitz_weighted(s, shifts, weights, int terms=EM_DEFAULT_TERMS):
    """sum_j weights[j] * zeta(s, shifts[j]) for every s, by Euler-Maclaurin."""
    if terms < 1 or terms > 40:
        raise ValueError("terms must lie in 1..40")
    sarr = np.ascontiguousarray(np.atleast_1d(np.asarray(s, dtype=complex)))
    cdef double complex[::1] sv = sarr.ravel()
    cdef double[::1] a = np.ascontiguousarray(np.asarray(shifts, dtype=float))
    cdef double complex[::1] w = np.ascontiguousarray(np.asarray(weights, dtype=complex))
    out = np.empty(sarr.shape, dtype=complex)
    cdef double complex[::1] res = out.ravel()
    cdef Py_ssize_t i, j, n, ns = sv.shape[0], na = a.shape[0]
    cdef int k, n_cut
    cdef double complex s0, acc, total, base, tail, poch, xpow
    cdef double x, lx, inv_x2
    with nogil:
        for i in range(ns):
            s0 = sv[i]
            n_cut = <int>ceil((hypot(s0.real, s0.imag) + 2 * terms) / (2 * M_PI * _RATIO))
            if n_cut < _MIN_N:
                n_cut = _MIN_N
            total = 0
            for j in range(na):
                if w[j].real == 0 and w[j].imag == 0:
                    continue
                acc = 0
                for n in range(n_cut):
                    acc = acc + _pow_neg(log(n + a[j]), s0)
                x = n_cut + a[j]
                lx = log(x)
                base = _pow_neg(lx, s0)
                tail = x * base / (s0 - 1.0) + 0.5 * base
                poch = s0
                xpow = base / x
                inv_x2 = 1.0 / (x * x)
                for k in range(terms):
                    tail = tail + _EMC[k] * poch * xpow
                    poch = poch * (s0 + 2 * k + 1) * (s0 + 2 * k + 2)
                    xpow = xpow * inv_x2
                total = total + w[j] * (acc + tail)
            res[i] = total
    return out
