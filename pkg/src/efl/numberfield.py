"""Cyclotomic fields Q(zeta_m): prime splitting, decomposition and inertia, Artin local data."""
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .arith import crt_pair, euler_phi, multiplicative_order, primes_up_to, valuation
from .characters import enumerate_characters
from .lseries import CompletedLFunction, dirichlet_completed, l_values
from .special import GammaFactorSpec


def canonical_modulus(m):
    """Q(zeta_m) = Q(zeta_{m/2}) when m = 2 mod 4."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    return m // 2 if m % 4 == 2 else m


@dataclass(frozen=True)
class PrimeSplitting:
    m: int
    p: int
    e: int
    f: int
    r: int

    @property
    def norm(self):
        return self.p**self.f

    def to_json(self):
        return {"m": self.m, "p": self.p, "e": self.e, "f": self.f, "r": self.r}


@lru_cache(maxsize=None)
def split_prime(m, p):
    """(e, f, r) of p in Q(zeta_m): e = phi(p^v), f = ord of p mod m/p^v, r = phi(m)/(e f)."""
    v = valuation(m, p)
    rest = m // p**v
    e = euler_phi(p**v)
    f = multiplicative_order(p, rest)
    r, rem = divmod(euler_phi(m), e * f)
    if rem:
        raise ArithmeticError(f"e*f does not divide phi({m}) for p = {p}")
    return PrimeSplitting(m, p, e, f, r)


@dataclass(frozen=True)
class DecompositionData:
    m: int
    p: int
    decomposition_group: tuple
    inertia_group: tuple
    frobenius: int
    exponent_map: dict  # h -> a(h) mod f

    @property
    def f(self):
        return len(self.decomposition_group) // len(self.inertia_group)

    def to_json(self):
        sp = split_prime(self.m, self.p)
        out = sp.to_json()
        out.update(decomposition_order=len(self.decomposition_group),
                   inertia_order=len(self.inertia_group))
        return out


@lru_cache(maxsize=None)
def decomposition_data(m, p):
    """Decomposition and inertia subgroups of (Z/mZ)* at p, with the Frobenius exponents.

    Inertia is the kernel of reduction to (Z/m'Z)*, m' = m/p^v.  The Frobenius
    is the class that is p mod m' and 1 mod p^v; a(h) solves h = Fr^a u with u
    in inertia, i.e. h = p^a mod m'.
    """
    if m < 3:
        raise ValueError("decomposition data needs m >= 3")
    v = valuation(m, p)
    pv = p**v
    rest = m // pv
    units = [a for a in range(1, m) if math.gcd(a, m) == 1]
    inertia = tuple(a for a in units if a % rest == 1 % rest)
    frob = crt_pair(p % rest, rest, 1, pv) if rest > 1 else crt_pair(0, 1, 1, pv)
    f = multiplicative_order(p, rest)
    powers = {pow(p, a, rest) if rest > 1 else 0: a for a in range(f)}
    decomposition = tuple(a for a in units if (a % rest if rest > 1 else 0) in powers)
    emap = {h: powers[h % rest if rest > 1 else 0] for h in decomposition}
    if sorted(set(emap.values())) != list(range(f)):
        raise ArithmeticError("Frobenius exponent map is not onto Z/fZ")
    return DecompositionData(m, p, decomposition, inertia, frob % m, emap)


@dataclass(frozen=True)
class ArtinLocalData:
    p: int
    invariant_dim: int
    frobenius_value: complex  # None when invariant_dim == 0
    n_plus: int
    n_minus: int


def archimedean_signature(chi, m=None):
    """(n+, n-) for a one-dimensional representation at the infinite place."""
    m = chi.modulus if m is None else m
    if m <= 2:
        return (1, 0)
    return (1, 0) if chi.parity == 0 else (0, 1)


def artin_local_data(chi, p):
    """Invariants under inertia at p and the Frobenius eigenvalue, computed in (Z/mZ)*."""
    m = chi.modulus
    n_plus, n_minus = archimedean_signature(chi, m)
    if m < 3:
        return ArtinLocalData(p, 1, 1.0, n_plus, n_minus)
    dd = decomposition_data(m, p)
    unramified = all(chi.exponent_of(u) == 0 for u in dd.inertia_group)
    if not unramified:
        return ArtinLocalData(p, 0, None, n_plus, n_minus)
    return ArtinLocalData(p, 1, chi(dd.frobenius), n_plus, n_minus)


def artin_local_factor(chi, p, x):
    """det(1 - x rho(Fr) | V^I)."""
    data = artin_local_data(chi, p)
    if data.invariant_dim == 0:
        return 1.0 + 0j
    return 1 - data.frobenius_value * x


def frobenius_trace(chi, p, k):
    """Tr(Fr^k | V^I) for a one-dimensional chi."""
    data = artin_local_data(chi, p)
    if data.invariant_dim == 0:
        return 0j
    return complex(data.frobenius_value) ** k


class CyclotomicField:
    def __init__(self, m):
        self.input_modulus = m
        self.m = canonical_modulus(m)

    @property
    def degree(self):
        return euler_phi(self.m)

    @property
    def r1(self):
        return self.degree if self.m <= 2 else 0

    @property
    def r2(self):
        return 0 if self.m <= 2 else self.degree // 2

    @cached_property
    def characters(self):
        return enumerate_characters(self.m)

    @cached_property
    def primitive_characters(self):
        """The inducing primitive character of each character mod m (one per character)."""
        return [c.primitive() for c in self.characters]

    @cached_property
    def abs_discriminant(self):
        """Conductor-discriminant product."""
        return math.prod(c.conductor for c in self.characters)

    def splitting(self, p):
        return split_prime(self.m, p)

    def local_zeta(self, s, prime_bound):
        """prod_{p <= bound} (1 - p^{-f s})^{-r} from the splitting data."""
        total = 0j
        for p in primes_up_to(prime_bound):
            sp = split_prime(self.m, int(p))
            total += -sp.r * np.log1p(-np.exp(-s * sp.f * math.log(p)))
        return complex(np.exp(total))

    def to_json(self):
        return {"m": self.m, "degree": self.degree, "r1": self.r1, "r2": self.r2,
                "abs_discriminant": self.abs_discriminant}


def dedekind_completed(m):
    """|d_K|^{s/2} Gamma_R^{r1} Gamma_C^{r2} zeta_K(s) for K = Q(zeta_m).

    Zeros are those of the completed factors Lambda(chi*, s).
    """
    K = CyclotomicField(m)
    chars = K.primitive_characters
    factors = tuple(dirichlet_completed(c) for c in chars)

    def l_func(s):
        out = np.ones(np.shape(np.atleast_1d(s)), dtype=complex)
        for c in chars:
            out = out * l_values(c, s)
        return out

    gammas = []
    if K.r1:
        gammas.append(GammaFactorSpec("R", 0.0, K.r1))
    if K.r2:
        gammas.append(GammaFactorSpec("C", 0.0, K.r2))
    return CompletedLFunction(
        label=f"dedekind:{K.m}",
        conductor=K.abs_discriminant,
        gamma_factors=tuple(gammas),
        l_func=l_func,
        poles=((0j, 1), (1 + 0j, 1)),
        factors=factors,
    )
