"""Dirichlet L-functions, completed L-functions, theta series and the Mellin relation."""
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import _kernels
from .arith import primes_up_to
from .characters import DirichletCharacter, root_number
from .quad import adaptive
from .special import LOG_2PI, LOG_PI, GammaFactorSpec, PoleError

_NEAR_ONE = 1e-3


def _combo_near_one(s, shifts, weights):
    """sum_j w_j zeta(s, a_j) when sum_j w_j = 0 and s is close to 1.

    The 1/(s-1) parts cancel; x^{1-s}/(s-1) is replaced by its regular part
    -sum_k (-(s-1))^k log(x)^{k+1}/(k+1)!.
    """
    a = np.asarray(shifts, dtype=float)
    w = np.asarray(weights, dtype=complex)
    n_cut = 200
    n = np.arange(n_cut, dtype=float)
    head = np.exp(-s * np.log(n[None, :] + a[:, None])).sum(axis=1)
    x = n_cut + a
    lx = np.log(x)
    d = s - 1
    reg = np.zeros_like(lx, dtype=complex)
    term = -lx.astype(complex)
    for k in range(30):
        reg += term
        term = term * (-d) * lx / (k + 2)
    base = np.exp(-s * lx)
    tail = reg + 0.5 * base
    # Euler-Maclaurin corrections; x is large so a few terms suffice
    b2k = (1 / 12, -1 / 720, 1 / 30240, -1 / 1209600)
    poch = s
    xpow = base / x
    for k, c in enumerate(b2k):
        tail = tail + c * poch * xpow
        poch = poch * (s + 2 * k + 1) * (s + 2 * k + 2)
        xpow = xpow / (x * x)
    return complex(np.dot(w, head + tail))


def _dirichlet_data(chi):
    m = chi.modulus
    if m == 1:
        return [1.0], [1.0]
    units = [a for a in range(1, m) if math.gcd(a, m) == 1]
    return [a / m for a in units], [chi(a) for a in units]


def l_values(chi, s):
    """L(chi, s) for an array of s, via m^{-s} sum_a chi(a) zeta(s, a/m)."""
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    shifts, weights = _dirichlet_data(chi)
    m = chi.modulus
    near = np.abs(s - 1) < _NEAR_ONE
    if np.any(s == 1) and chi.is_trivial:
        raise PoleError("L(chi, s) has a pole at s = 1 for trivial chi")
    out = np.empty(s.shape, dtype=complex)
    far = ~near if not chi.is_trivial else np.ones(s.shape, dtype=bool)
    if np.any(far):
        out[far] = _kernels.hurwitz_weighted(s[far], shifts, weights)
    for i in np.flatnonzero(~far):
        out[i] = _combo_near_one(s[i], shifts, weights)
    return out * np.exp(-s * math.log(m))


def l_value(chi, s):
    return complex(l_values(chi, [s])[0])


def zeta(s):
    return l_value(DirichletCharacter.trivial(1), s)


def euler_product(chi, s, prime_bound):
    """prod_{p <= bound} (1 - chi(p) p^{-s})^{-1}, accumulated in log form."""
    ps = primes_up_to(prime_bound)
    m = chi.modulus
    if m == 1:
        vals = np.ones(len(ps), dtype=complex)
    else:
        table = chi.value_table
        vals = table[ps % m]
    return complex(np.exp(-np.sum(np.log1p(-vals * np.exp(-s * np.log(ps.astype(float)))))))


# -- completed L-functions -----------------------------------------------------

def _log_gamma_factor(spec, s):
    z = s + spec.shift
    if spec.kind == "R":
        val = -0.5 * z * LOG_PI + _kernels.loggamma(0.5 * z)
    else:
        val = -z * LOG_2PI + _kernels.loggamma(z)
    return spec.multiplicity * val


def _near_gamma_pole(spec, s, radius=1e-6):
    z = s + spec.shift
    if spec.multiplicity == 0:
        return False
    if spec.kind == "R":
        z = z / 2
    k = round(z.real)
    return k <= 0 and abs(z - k) < radius


@dataclass(frozen=True)
class CompletedLFunction:
    """N^{s/2} e^{log_const} prod(gamma factors) L(s).

    ``l_func`` maps an array of s to L(s); ``poles`` lists (location, order)
    of the completed function; ``root_number`` is W with
    Lambda(s) = W * conj(Lambda(1 - conj(s))).
    """

    label: str
    conductor: int
    gamma_factors: tuple
    l_func: Callable
    poles: tuple = ()
    log_const: float = 0.0
    root_number: complex = 1.0
    self_dual: bool = True
    factors: tuple = field(default=())

    def log_factor(self, s):
        """log of everything except L, for an array of s."""
        s = np.atleast_1d(np.asarray(s, dtype=complex))
        out = self.log_const + 0.5 * s * math.log(self.conductor)
        for g in self.gamma_factors:
            out = out + _log_gamma_factor(g, s)
        return out

    def values(self, s):
        s = np.atleast_1d(np.asarray(s, dtype=complex))
        for sv in s:
            for loc, _ in self.poles:
                if sv == loc:
                    raise PoleError(f"{self.label} has a pole at {sv}")
        # trivial zeros of L cancel the gamma poles; evaluate there through s -> 1 - s
        near = np.array([any(_near_gamma_pole(g, sv) for g in self.gamma_factors) for sv in s], dtype=bool)
        out = np.empty(s.shape, dtype=complex)
        if np.any(~near):
            out[~near] = np.exp(self.log_factor(s[~near])) * self.l_func(s[~near])
        if np.any(near):
            mirror = 1 - np.conj(s[near])
            out[near] = self.root_number * np.conj(np.exp(self.log_factor(mirror)) * self.l_func(mirror))
        return out

    def __call__(self, s):
        return complex(self.values([s])[0])


def zeta_completed():
    """pi^{-s/2} Gamma(s/2) zeta(s), poles at 0 and 1."""
    triv = DirichletCharacter.trivial(1)
    return CompletedLFunction(
        label="zeta",
        conductor=1,
        gamma_factors=(GammaFactorSpec("R", 0.0, 1),),
        l_func=lambda s: l_values(triv, s),
        poles=((0j, 1), (1 + 0j, 1)),
    )


def dirichlet_completed(chi):
    """(m/pi)^{s/2} Gamma((s+q)/2) L(chi, s) for primitive chi.

    Written as m^{s/2} pi^{q/2} Gamma_R(s + q) L(chi, s).
    """
    if not chi.is_primitive:
        raise ValueError("completed L-function needs a primitive character")
    if chi.modulus == 1:
        return zeta_completed()
    q = chi.parity
    return CompletedLFunction(
        label=f"dirichlet:{chi.modulus}:{chi.exponents}",
        conductor=chi.modulus,
        gamma_factors=(GammaFactorSpec("R", float(q), 1),),
        l_func=lambda s: l_values(chi, s),
        poles=(),
        log_const=0.5 * q * LOG_PI,
        root_number=root_number(chi),
        self_dual=chi.is_real,
    )


def completed_value(L, s):
    return L(s)


def completed_dirichlet_value(chi, s):
    return dirichlet_completed(chi)(s)


# -- theta series ------------------------------------------------------------

def _theta_terms(chi, y_min):
    # tail bound: sum_{n > N} n^q e^{-pi n^2 y/m} < 1e-17 relative to the prefactor
    m = chi.modulus
    n = 1
    while (n + 1) ** chi.parity * math.exp(-math.pi * (n + 1) ** 2 * y_min / m) > 1e-18:
        n += 1
    return n + 1


def theta_values(chi, y):
    """(1/2)(pi/m)^{q/2} sum_{n in Z} chi(n) n^q e^{-pi n^2 y / m} on an array of y > 0."""
    y = np.atleast_1d(np.asarray(y, dtype=float))
    if np.any(y <= 0):
        raise ValueError("theta needs y > 0")
    m, q = chi.modulus, chi.parity
    n_max = _theta_terms(chi, float(y.min()))
    n = np.arange(1, n_max + 1)
    coef = np.array([chi(int(k)) for k in n], dtype=complex) * n.astype(float) ** q
    # chi(-n)(-n)^q = chi(n) n^q, so the two half-lines double up
    terms = np.exp(-math.pi * np.outer(y, n.astype(float) ** 2) / m)
    total = terms @ coef
    if chi(0) != 0 and q == 0:
        total = total + 0.5
    return (math.pi / m) ** (q / 2) * total


def theta_value(chi, y):
    return complex(theta_values(chi, [y])[0])


def theta_constant(chi, x=None):
    """Numerical W' with theta(chi, 1/x) = W' x^{q+1/2} theta(conj chi, x)."""
    q = chi.parity
    xs = [x] if x is not None else [1.3, 1.17, 1.45, 1.61]
    best = max(xs, key=lambda v: abs(theta_value(chi.conjugate(), v)))
    return theta_value(chi, 1 / best) / (best ** (q + 0.5) * theta_value(chi.conjugate(), best))


def _upper_mellin(chi, s, tol):
    """int_1^inf theta(chi, y) y^{(s+q)/2} dy/y, truncated where the integrand is below 1e-18."""
    m, q = chi.modulus, chi.parity
    e = 0.5 * (s + q)
    big = 1.0
    while math.exp(-math.pi * big / m) * big ** max(e.real, 0.0) * (1 + big) > 1e-18:
        big *= 1.5

    def f(y):
        return theta_values(chi, y) * np.exp((e - 1) * np.log(y))

    # split so the adaptive rule sees the oscillation scale
    pieces = np.unique(np.concatenate([np.geomspace(1.0, big, 8), [big]]))
    total, err = 0j, 0.0
    for lo, hi in zip(pieces[:-1], pieces[1:]):
        v, e_ = adaptive(f, lo, hi, tol=tol)
        total += v
        err += e_
    return total, err


def completed_value_theta(chi, s, tol=1e-12):
    """Lambda(chi, s) from the split theta integral; valid for all s, primitive nontrivial chi."""
    if chi.is_trivial or not chi.is_primitive:
        raise ValueError("theta representation needs a primitive nontrivial character")
    s = complex(s)
    w = root_number(chi)
    a, _ = _upper_mellin(chi, s, tol)
    b, _ = _upper_mellin(chi.conjugate(), 1 - s, tol)
    return a + w * b


def functional_equation_residual(chi, s):
    """|Lambda(chi, s) - W Lambda(conj chi, 1 - s)|.

    The left side uses the Hurwitz evaluation, the right side the theta
    integral, so the residual compares two independent computations.
    """
    if chi.is_trivial or not chi.is_primitive:
        raise ValueError("functional equation needs a primitive nontrivial character")
    s = complex(s)
    lhs = dirichlet_completed(chi)(s)
    rhs = root_number(chi) * completed_value_theta(chi.conjugate(), 1 - s)
    return abs(lhs - rhs)


def mellin_check(chi, s):
    """|int_0^inf theta(chi,y) y^{(s+q)/2} dy/y - Lambda(chi, s)| for Re s > 1.

    The piece over (0, 1) is folded onto (1, inf) with the numerically
    determined transformation constant, which must match the root number.
    """
    s = complex(s)
    if s.real <= 1:
        raise ValueError("mellin_check needs Re s > 1")
    if chi.is_trivial or not chi.is_primitive:
        raise ValueError("mellin_check needs a primitive nontrivial character")
    w_num = theta_constant(chi)
    w = root_number(chi)
    if abs(w_num - w) > 1e-8:
        raise ArithmeticError(f"theta transformation constant {w_num} differs from root number {w}")
    a, _ = _upper_mellin(chi, s, 1e-12)
    b, _ = _upper_mellin(chi.conjugate(), 1 - s, 1e-12)
    return abs(a + w_num * b - dirichlet_completed(chi)(s))
