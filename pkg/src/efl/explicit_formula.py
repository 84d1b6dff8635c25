"""Both sides of the explicit formulas for zeta, Dirichlet, Dedekind and abelian Artin L-functions."""
import math
from dataclasses import dataclass, field
from math import factorial

import numpy as np
from scipy.special import exp1

from .arith import factorize, primes_up_to
from .lseries import dirichlet_completed
from .numberfield import CyclotomicField, artin_local_data, archimedean_signature, split_prime
from .quad import adaptive

LOG_PI = math.log(math.pi)
SERIES_CUTOFF = 1e-3
SERIES_TERMS = 10


# -- test functions ------------------------------------------------------------

def _bump(x):
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape)
    inside = np.abs(x) < 1
    xi = x[inside]
    out[inside] = np.exp(-1.0 / (1.0 - xi * xi))
    return out


@dataclass(frozen=True)
class TestFunction:
    """alpha(t) = scale * exp(-1/(1 - ((t - c)/w)^2)) on |t - c| < w, zero elsewhere."""

    __test__ = False  # not a pytest class

    c: float
    w: float
    scale: float = 1.0

    def __post_init__(self):
        if not self.w > 0:
            raise ValueError("width must be positive")

    def __call__(self, t):
        return self.scale * _bump((np.asarray(t, dtype=float) - self.c) / self.w)

    @property
    def support(self):
        return (self.c - self.w, self.c + self.w)

    @property
    def reach(self):
        """max |t| over the support."""
        return max(abs(self.c - self.w), abs(self.c + self.w))

    def contains_zero(self):
        lo, hi = self.support
        return lo <= 0 <= hi

    def positive_support(self):
        return self.support[0] >= 0

    def value_at_zero(self):
        return float(self(0.0))

    def taylor_at(self, t0, n):
        """Taylor coefficients of alpha about t0 (zero outside the open support)."""
        x0 = (t0 - self.c) / self.w
        if abs(x0) >= 1:
            return np.zeros(n)
        # -1/(1-x^2) = -(1/2)(1/(1-x) + 1/(1+x)), expanded in powers of (x - x0)
        k = np.arange(n)
        g = -0.5 * (1.0 / (1 - x0) ** (k + 1) + (-1.0) ** k / (1 + x0) ** (k + 1))
        coeffs = _series_exp(g)
        return self.scale * coeffs / self.w**k

    def to_json(self):
        return {"c": self.c, "w": self.w}


def _series_exp(g):
    """Coefficients of exp(sum g_k u^k)."""
    n = len(g)
    out = np.zeros(n)
    out[0] = math.exp(g[0])
    for k in range(1, n):
        out[k] = sum(j * g[j] * out[k - j] for j in range(1, k + 1)) / k
    return out


def _series_mul(a, b):
    n = len(a)
    return np.array([sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)])


def _series_div(a, b):
    n = len(a)
    q = np.zeros(n)
    for k in range(n):
        q[k] = (a[k] - sum(q[i] * b[k - i] for i in range(k))) / b[0]
    return q


def _phi_panels(alpha, s_max):
    return 32 + int(math.ceil(s_max * alpha.w / 2))


def phi_transform(alpha, s, nodes=16):
    """Phi(s) = int e^{st} alpha(t) dt for an array of s (scalar in, scalar out)."""
    scalar = np.ndim(s) == 0
    s = np.atleast_1d(np.asarray(s, dtype=complex))
    out = np.empty(s.shape, dtype=complex)
    if s.size == 0:
        return out
    panels = _phi_panels(alpha, float(np.max(np.abs(s))))
    x, wt = np.polynomial.legendre.leggauss(nodes)
    edges = np.linspace(-1.0, 1.0, panels + 1)
    h = 0.5 * np.diff(edges)
    xs = (edges[:-1, None] + h[:, None] * (x[None, :] + 1.0)).ravel()
    ws = (h[:, None] * wt[None, :]).ravel() * _bump(xs) * alpha.scale * alpha.w
    ts = alpha.c + alpha.w * xs
    chunk = max(1, 2_000_000 // len(ts))
    for i in range(0, s.size, chunk):
        out[i:i + chunk] = np.exp(np.outer(s[i:i + chunk], ts)) @ ws
    return complex(out[0]) if scalar else out


def _segments(points, lo, hi):
    pts = sorted({lo, hi, *[p for p in points if lo < p < hi]})
    return list(zip(pts[:-1], pts[1:]))


def _integrate(f, lo, hi, breaks, tol=1e-13):
    total, err = 0.0, 0.0
    for a, b in _segments(breaks, lo, hi):
        v, e = adaptive(f, a, b, tol=tol)
        total += v
        err += e
    return total, err


def _breakpoints(alpha):
    lo, hi = alpha.support
    return [abs(lo), abs(hi), lo, hi]


# -- archimedean terms ---------------------------------------------------------

def _w_inf_series(alpha, n=SERIES_TERMS):
    """Power series of the regularized archimedean integrand about t = 0."""
    a = alpha.taylor_at(0.0, n + 1)
    a_neg = a * (-1.0) ** np.arange(n + 1)
    em = np.array([(-1.0) ** k / factorial(k) for k in range(n + 1)])
    num = a + _series_mul(em, a_neg)
    d = np.array([-((-2.0) ** (k + 1)) / factorial(k + 1) for k in range(n + 1)])
    q = _series_div(num, d)
    a0 = a[0]
    return np.array([q[k + 1] - a0 * (-2.0) ** (k + 1) / factorial(k + 1) for k in range(n)])


def archimedean_w_infinity(alpha, with_error=False):
    """alpha(0) log pi + int_0^inf [(alpha(t) + e^{-t} alpha(-t))/(1 - e^{-2t}) - alpha(0) e^{-2t}/t] dt."""
    a0 = alpha.value_at_zero()
    top = alpha.reach

    def f(t):
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (alpha(t) + np.exp(-t) * alpha(-t)) / (-np.expm1(-2 * t)) - a0 * np.exp(-2 * t) / t
        small = t < SERIES_CUTOFF
        if np.any(small):
            coeffs = _w_inf_series(alpha)
            out[small] = np.polynomial.polynomial.polyval(t[small], coeffs)
        return out

    total, err = 0.0, 0.0
    if top > 0:
        total, err = _integrate(f, 0.0, top, [SERIES_CUTOFF] + _breakpoints(alpha))
    if a0 != 0.0:
        # beyond the support only the counterterm survives
        total += -a0 * exp1(2 * top) if top > 0 else 0.0
    value = float(np.real(a0 * LOG_PI + total))
    return (value, err) if with_error else value


def _positive_integral(alpha, weight):
    """int_0^inf alpha(t) weight(t) dt over the positive part of the support."""
    lo, hi = alpha.support
    lo = max(lo, 0.0)
    if hi <= lo:
        return 0.0, 0.0
    return _integrate(lambda t: alpha(t) * weight(t), lo, hi, [])


def _negative_integral(alpha, weight):
    """int_{-inf}^0 alpha(t) weight(t) dt."""
    lo, hi = alpha.support
    hi = min(hi, 0.0)
    if hi <= lo:
        return 0.0, 0.0
    return _integrate(lambda t: alpha(t) * weight(t), lo, hi, [])


def archimedean_dirichlet(alpha, q):
    """int_0^inf (alpha(x) e^{-qx} + alpha(-x) e^{-x(1+q)})/(1 - e^{-2x}) dx (alpha(0) = 0)."""
    a, ea = _positive_integral(alpha, lambda x: np.exp(-q * x) / -np.expm1(-2 * x))
    b, eb = _negative_integral(alpha, lambda x: np.exp(x * (1 + q)) / -np.expm1(2 * x))
    return a + b, ea + eb


def archimedean_artin(alpha, n_plus, n_minus):
    """int_0^inf alpha(x)(n+ + n- e^{-x})/(1 - e^{-2x}) dx."""
    return _positive_integral(alpha, lambda x: (n_plus + n_minus * np.exp(-x)) / -np.expm1(-2 * x))


def archimedean_dedekind(alpha, r1, r2):
    """Real and complex place densities paired with alpha (alpha(0) = 0)."""
    parts = [
        (r1, _positive_integral(alpha, lambda t: 1 / -np.expm1(-2 * t))),
        (r1, _negative_integral(alpha, lambda t: np.exp(t) / -np.expm1(2 * t))),
        (r2, _positive_integral(alpha, lambda t: 1 / -np.expm1(-t))),
        (r2, _negative_integral(alpha, lambda t: np.exp(t) / -np.expm1(t))),
    ]
    return sum(k * v for k, (v, _) in parts), sum(k * e for k, (_, e) in parts)


# -- prime sums ----------------------------------------------------------------

class InsufficientPrimeBound(ValueError):
    pass


def required_prime_bound(alpha):
    return int(math.floor(math.exp(alpha.reach))) + 1


def _check_bound(alpha, prime_bound):
    if prime_bound < math.exp(alpha.reach):
        raise InsufficientPrimeBound(
            f"prime bound {prime_bound} below e^{alpha.reach:.4f}; prime powers in the support would be missed")


def _prime_power_terms(alpha, prime_bound):
    """Yield (p, k, log p) with k log p inside the positive or negative support, k >= 1."""
    reach = alpha.reach
    for p in primes_up_to(prime_bound):
        p = int(p)
        lp = math.log(p)
        if lp > reach:
            break
        k = 1
        while k * lp <= reach:
            yield p, k, lp
            k += 1


def prime_sum_ef(alpha, prime_bound):
    _check_bound(alpha, prime_bound)
    total = 0.0
    for p, k, lp in _prime_power_terms(alpha, prime_bound):
        t = k * lp
        total += lp * (float(alpha(t)) + p ** (-k) * float(alpha(-t)))
    return total


def geometric_side_ef(alpha, prime_bound=None):
    prime_bound = prime_bound or required_prime_bound(alpha)
    return prime_sum_ef(alpha, prime_bound) + archimedean_w_infinity(alpha)


def prime_sum_efchi(chi, alpha, prime_bound):
    _check_bound(alpha, prime_bound)
    total = 0j
    m = chi.modulus
    for p, k, lp in _prime_power_terms(alpha, prime_bound):
        if m % p == 0:
            continue
        x = complex(chi(p)) ** k
        t = k * lp
        total += lp * (x * float(alpha(t)) + p ** (-k) / x * float(alpha(-t)))
    return total


def prime_sum_efk(m, alpha, prime_bound):
    """sum over prime ideals P: log N(P) sum_k (alpha(k log NP) + NP^{-k} alpha(-k log NP)); ramified P included."""
    _check_bound(alpha, prime_bound)
    total = 0.0
    reach = alpha.reach
    K = CyclotomicField(m)
    for p in primes_up_to(prime_bound):
        p = int(p)
        lp = math.log(p)
        if lp > reach:
            break
        sp = split_prime(K.m, p)
        ln = sp.f * lp
        k = 1
        while k * ln <= reach:
            total += sp.r * ln * (float(alpha(k * ln)) + p ** (-k * sp.f) * float(alpha(-k * ln)))
            k += 1
    return total


def prime_sum_artin(chi, alpha, prime_bound):
    """sum_p log p sum_k alpha(k log p) Tr(Fr^k | V^I), traces from the decomposition data."""
    _check_bound(alpha, prime_bound)
    total = 0j
    cache = {}
    for p, k, lp in _prime_power_terms(alpha, prime_bound):
        if p not in cache:
            cache[p] = artin_local_data(chi, p)
        data = cache[p]
        if data.invariant_dim == 0:
            continue
        total += lp * float(alpha(k * lp)) * complex(data.frobenius_value) ** k
    return total


# -- spectral sides ------------------------------------------------------------

def _zero_arrays(zeros, T=None):
    T = zeros.height_bound if T is None else T
    entries = [(z, k) for z, k in zeros.entries if abs(z.imag) <= T]
    # conjugate pairs adjacent, increasing height: a fixed summation order
    entries.sort(key=lambda e: (abs(e[0].imag), e[0].imag))
    pts = np.array([z for z, _ in entries], dtype=complex)
    mult = np.array([k for _, k in entries], dtype=float)
    return pts, mult, T


def zero_sum(zeros, alpha, T=None):
    pts, mult, _ = _zero_arrays(zeros, T)
    if pts.size == 0:
        return 0j
    vals = phi_transform(alpha, pts) * mult
    return complex(np.sum(vals))


def _density(t, conductor, degree):
    # zero-counting main term per unit height for |Im| up to t (both signs)
    u = max(t, 1.0) * conductor ** (1.0 / max(degree, 1)) / (2 * math.pi)
    return degree * (u * math.log(max(u, 1.0 + 1e-12)))


def spectral_tail_estimate(alpha, T, conductor=1, degree=1):
    """max |Phi(1/2 + it)| on [T, 2T] times the expected zero count in T < |Im| <= 2T."""
    t = np.linspace(T, 2 * T, 64)
    peak = float(np.max(np.abs(phi_transform(alpha, 0.5 + 1j * t))))
    extra = 2 * max(_density(2 * T, conductor, degree) - _density(T, conductor, degree), 0.0)
    return peak * extra


def spectral_side_ef(zeros, alpha, T=None):
    if zeros.source != "zeta":
        raise ValueError(f"zero list from {zeros.source!r}, expected zeta")
    return phi_transform(alpha, 0.0) + phi_transform(alpha, 1.0) - zero_sum(zeros, alpha, T)


# -- reports -----------------------------------------------------------------

@dataclass
class FormulaReport:
    formula: str
    spectral: complex
    geometric: complex
    T: float
    prime_bound: int
    tail_estimate: float
    bump: TestFunction
    quadrature_error: float = 0.0
    zero_source: str = ""
    zero_count: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def residual(self):
        return abs(self.spectral - self.geometric)

    def to_json(self):
        out = {
            "formula": self.formula,
            "spectral": [self.spectral.real, self.spectral.imag],
            "geometric": [self.geometric.real, self.geometric.imag],
            "residual": self.residual,
            "T": self.T,
            "prime_bound": self.prime_bound,
            "tail_estimate": self.tail_estimate,
            "quadrature_error": self.quadrature_error,
            "bump": self.bump.to_json(),
            "zero_source": self.zero_source,
            "zero_count": self.zero_count,
        }
        out.update(self.extra)
        return out


def _require_no_zero(alpha):
    if alpha.contains_zero():
        raise ValueError("test function support must exclude 0")


def both_sides_ef(zeros, alpha, prime_bound=None, T=None):
    prime_bound = prime_bound or required_prime_bound(alpha)
    T = zeros.height_bound if T is None else T
    w_inf, qerr = archimedean_w_infinity(alpha, with_error=True)
    geo = prime_sum_ef(alpha, prime_bound) + w_inf
    spec = spectral_side_ef(zeros, alpha, T)
    return FormulaReport("EF", complex(spec), complex(geo), T, prime_bound,
                         spectral_tail_estimate(alpha, T), alpha, qerr, zeros.source,
                         int(sum(k for z, k in zeros.entries if abs(z.imag) <= T)),
                         {"pole_terms": True})


def both_sides_efchi(chi, zeros, alpha, prime_bound=None, T=None):
    if chi.is_trivial or not chi.is_primitive:
        raise ValueError("EFCHI needs a primitive nontrivial character")
    _require_no_zero(alpha)
    label = dirichlet_completed(chi).label
    if zeros.source != label:
        raise ValueError(f"zero list from {zeros.source!r}, expected {label!r}")
    prime_bound = prime_bound or required_prime_bound(alpha)
    T = zeros.height_bound if T is None else T
    arch, qerr = archimedean_dirichlet(alpha, chi.parity)
    geo = prime_sum_efchi(chi, alpha, prime_bound) + arch
    spec = -zero_sum(zeros, alpha, T)
    return FormulaReport("EFCHI", complex(spec), complex(geo), T, prime_bound,
                         spectral_tail_estimate(alpha, T, chi.modulus), alpha, qerr, zeros.source,
                         int(sum(k for z, k in zeros.entries if abs(z.imag) <= T)),
                         {"pole_terms": False, "modulus": chi.modulus, "parity": chi.parity})


def geometric_side_efchi(chi, alpha, prime_bound=None):
    prime_bound = prime_bound or required_prime_bound(alpha)
    return prime_sum_efchi(chi, alpha, prime_bound) + archimedean_dirichlet(alpha, chi.parity)[0]


def geometric_side_efk(m, alpha, prime_bound=None):
    _require_no_zero(alpha)
    prime_bound = prime_bound or required_prime_bound(alpha)
    K = CyclotomicField(m)
    return prime_sum_efk(K.m, alpha, prime_bound) + archimedean_dedekind(alpha, K.r1, K.r2)[0]


def both_sides_efk(m, zeros, alpha, prime_bound=None, T=None):
    _require_no_zero(alpha)
    K = CyclotomicField(m)
    if zeros.source != f"dedekind:{K.m}":
        raise ValueError(f"zero list from {zeros.source!r}, expected dedekind:{K.m}")
    prime_bound = prime_bound or required_prime_bound(alpha)
    T = zeros.height_bound if T is None else T
    arch, qerr = archimedean_dedekind(alpha, K.r1, K.r2)
    geo = prime_sum_efk(K.m, alpha, prime_bound) + arch
    spec = phi_transform(alpha, 0.0) + phi_transform(alpha, 1.0) - zero_sum(zeros, alpha, T)
    ramified = [p for p, _ in factorize(K.m)]
    return FormulaReport("EFK", complex(spec), complex(geo), T, prime_bound,
                         spectral_tail_estimate(alpha, T, K.abs_discriminant, K.degree), alpha, qerr,
                         zeros.source, int(sum(k for z, k in zeros.entries if abs(z.imag) <= T)),
                         {"pole_terms": True, "m": K.m, "r1": K.r1, "r2": K.r2,
                          "ramified_primes_included": ramified})


def geometric_side_artin(chi, alpha, prime_bound=None):
    if not alpha.positive_support() or alpha.support[0] <= 0:
        raise ValueError("ARTIN needs a test function supported in (0, inf)")
    prime_bound = prime_bound or required_prime_bound(alpha)
    n_plus, n_minus = archimedean_signature(chi)
    arch, _ = archimedean_artin(alpha, n_plus, n_minus)
    return prime_sum_artin(chi, alpha, prime_bound) + arch


def both_sides_artin(chi, zeros, alpha, prime_bound=None, T=None):
    """chi is any character mod m, viewed as a representation of (Z/mZ)*.

    The zeros are those of Lambda(chi*, s) for the inducing primitive chi*.
    Two spectral forms are computed: the zero-and-pole form (no poles for
    nontrivial chi*) and the pole-free form with d_q the zero multiplicity.
    """
    if alpha.support[0] <= 0:
        raise ValueError("ARTIN needs a test function supported in (0, inf)")
    prim = chi.primitive()
    if prim.is_trivial:
        raise ValueError("ARTIN handles nontrivial characters; the trivial one is EF")
    L = dirichlet_completed(prim)
    if zeros.source != L.label:
        raise ValueError(f"zero list from {zeros.source!r}, expected {L.label!r}")
    prime_bound = prime_bound or required_prime_bound(alpha)
    T = zeros.height_bound if T is None else T
    n_plus, n_minus = archimedean_signature(chi)
    arch, qerr = archimedean_artin(alpha, n_plus, n_minus)
    geo = prime_sum_artin(chi, alpha, prime_bound) + arch

    poles = list(L.poles)
    pole_sum = sum(k * phi_transform(alpha, z) for z, k in poles) if poles else 0j
    standard = pole_sum - zero_sum(zeros, alpha, T)
    # pole-free form: -sum_q d_q int_0^inf alpha(s) e^{s z_q} ds over the distinct zeros
    pts, mult, _ = _zero_arrays(zeros, T)
    distinct = {}
    for z, k in zip(pts, mult):
        key = next((w for w in distinct if abs(w - z) < 1e-9), z)
        distinct[key] = distinct.get(key, 0) + int(k)
    zq = np.array(list(distinct), dtype=complex)
    dq = np.array(list(distinct.values()), dtype=float)
    pole_free = -complex(np.sum(phi_transform(alpha, zq) * dq)) if zq.size else 0j
    if abs(pole_free - standard) > 1e-12 * max(1.0, abs(standard)):
        raise ArithmeticError("the two spectral forms disagree")
    return FormulaReport("ARTIN", complex(standard), complex(geo), T, prime_bound,
                         spectral_tail_estimate(alpha, T, prim.modulus), alpha, qerr, zeros.source,
                         int(mult.sum()),
                         {"pole_terms": bool(poles), "pole_sum_empty": not poles,
                          "spectral_pole_free": [pole_free.real, pole_free.imag],
                          "n_plus": n_plus, "n_minus": n_minus, "modulus": chi.modulus})


# -- moments -------------------------------------------------------------------

def _points(multiset):
    """Accept [(z, k)] pairs or bare points; returns a flat complex array with repetition."""
    out = []
    for item in multiset:
        if isinstance(item, tuple):
            z, k = item
            out.extend([complex(z)] * int(k))
        else:
            out.append(complex(item))
    pts = np.array(out, dtype=complex)
    if pts.size and (np.any(pts.real < 0) or np.any(pts.real > 1)):
        raise ValueError("points must lie in the strip 0 <= Re <= 1")
    return pts


def moment_vector(points, R):
    """[sum 1/(u - 2)^{2 + r}] for r = 0..R, with multiplicity."""
    if R < 0:
        raise ValueError("R must be nonnegative")
    pts = np.sort_complex(_points(points))
    inv = 1.0 / (pts - 2.0)
    base = inv * inv
    out = []
    for _ in range(R + 1):
        out.append(complex(np.sum(base)))
        base = base * inv
    return out


def moments_distinguish(A, B, R, tol=1e-8):
    ma, mb = moment_vector(A, R), moment_vector(B, R)
    return any(abs(x - y) > tol for x, y in zip(ma, mb))
