"""Dirichlet characters modulo m, their conductors, parities and Gauss sums.

A character is stored by the exponents of its values on a fixed set of
generators of (Z/mZ)*, so every value is an exact root of unity and the group
law is integer arithmetic.  Complex values are produced only at the edge.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, lcm

import cmath
import math

import numpy as np

from .arith import crt_pair, divisors, euler_phi, factorize, multiplicative_order

TOL = 1e-10


@dataclass(frozen=True)
class UnitGroup:
    """(Z/mZ)* as a product of cyclic factors <g_i> of order n_i."""

    modulus: int
    generators: tuple
    orders: tuple

    @cached_property
    def exponent(self):
        return lcm(*self.orders) if self.orders else 1

    @cached_property
    def dlog(self):
        """residue -> exponent vector on the generators."""
        m = self.modulus
        table = {}
        for ks in product(*(range(n) for n in self.orders)):
            x = 1 % m if m > 1 else 0
            for g, k in zip(self.generators, ks):
                x = x * pow(g, k, m) % m
            table[x] = ks
        return table

    @cached_property
    def elements(self):
        return sorted(self.dlog)

    def __len__(self):
        return len(self.dlog)


def _local_generators(p, e):
    q = p**e
    if p == 2:
        if e == 1:
            return [], []
        if e == 2:
            return [3], [2]
        return [q - 1, 5], [2, 2 ** (e - 2)]
    target = euler_phi(q)
    for g in range(2, q):
        if gcd(g, p) == 1 and multiplicative_order(g, q) == target:
            return [g], [target]
    raise AssertionError("no primitive root")  # unreachable for odd prime powers


@lru_cache(maxsize=None)
def unit_group(m):
    if m < 1:
        raise ValueError("modulus must be >= 1")
    gens, orders = [], []
    for p, e in factorize(m):
        q = p**e
        rest = m // q
        lg, lo = _local_generators(p, e)
        for g, n in zip(lg, lo):
            gens.append(crt_pair(g, q, 1, rest))
            orders.append(n)
    return UnitGroup(m, tuple(gens), tuple(orders))


def _root_of_unity(k, n):
    """exp(2 pi i k / n), exact on quarter turns."""
    k %= n
    if (4 * k) % n == 0:
        return (1, 1j, -1, -1j)[4 * k // n]
    if 2 * k > n:  # so that conjugate characters give bitwise conjugate values
        return _root_of_unity(n - k, n).conjugate()
    return cmath.exp(2j * math.pi * k / n)


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    exponents: tuple  # chi(g_i) = exp(2 pi i exponents[i] / orders[i])

    def __post_init__(self):
        grp = unit_group(self.modulus)
        if len(self.exponents) != len(grp.orders):
            raise ValueError("one exponent per generator required")
        object.__setattr__(self, "exponents",
                           tuple(int(e) % n for e, n in zip(self.exponents, grp.orders)))

    # -- construction -----------------------------------------------------
    @classmethod
    def trivial(cls, m):
        return cls(m, (0,) * len(unit_group(m).orders))

    @classmethod
    def from_angles(cls, m, angle):
        """Build from a function giving chi(a) = exp(2 pi i angle(a)) on units a."""
        grp = unit_group(m)
        exps = []
        for g, n in zip(grp.generators, grp.orders):
            e = Fraction(angle(g)) * n
            if e.denominator != 1:
                raise ValueError("angle function is not a character of (Z/mZ)*")
            exps.append(int(e))
        return cls(m, tuple(exps))

    # -- values -----------------------------------------------------------
    @property
    def group(self):
        return unit_group(self.modulus)

    @property
    def order_bound(self):
        """Exponent E of the unit group; values are E-th roots of unity."""
        return self.group.exponent

    def exponent_of(self, n):
        """k with chi(n) = exp(2 pi i k / E), or None when gcd(n, m) > 1."""
        m = self.modulus
        if gcd(n, m) != 1:
            return None
        ks = self.group.dlog[n % m if m > 1 else 0]
        E = self.order_bound
        return sum(e * k * (E // o) for e, k, o in zip(self.exponents, ks, self.group.orders)) % E

    def angle(self, n):
        k = self.exponent_of(n)
        return None if k is None else Fraction(k, self.order_bound)

    def __call__(self, n):
        k = self.exponent_of(n)
        return 0 if k is None else _root_of_unity(k, self.order_bound)

    @cached_property
    def value_table(self):
        """chi(0), ..., chi(m-1) as a complex array."""
        return np.array([self(a) for a in range(self.modulus)], dtype=complex)

    # -- group structure ----------------------------------------------------
    def __mul__(self, other):
        if self.modulus != other.modulus:
            raise ValueError("characters must share a modulus")
        return DirichletCharacter(self.modulus,
                                  tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def conjugate(self):
        return DirichletCharacter(self.modulus, tuple(-e for e in self.exponents))

    @property
    def is_trivial(self):
        return not any(self.exponents)

    @property
    def is_real(self):
        return self == self.conjugate()

    @cached_property
    def order(self):
        return lcm(*(n // gcd(n, e) for e, n in zip(self.exponents, self.group.orders))) \
            if self.exponents else 1

    @cached_property
    def parity(self):
        """q in {0, 1} with chi(-1) = (-1)^q."""
        k = self.exponent_of(-1)
        return 0 if 2 * k % (2 * self.order_bound) == 0 else 1

    # -- conductor ----------------------------------------------------------
    @cached_property
    def conductor(self):
        """Product over p^v || m of the least p^c with chi trivial on 1 + p^c in the p-part."""
        m = self.modulus
        f = 1
        units = self.group.elements
        for p, v in factorize(m):
            rest = m // p**v
            local = [a for a in units if a % rest == 1 % rest]
            c = 0
            while c < v and any(self.exponent_of(a) for a in local if a % p**c == 1 % p**c):
                c += 1
            f *= p**c
        return f

    @property
    def is_primitive(self):
        return self.conductor == self.modulus

    def primitive(self):
        """The primitive character mod conductor inducing self."""
        f, m = self.conductor, self.modulus
        if f == m:
            return self

        def angle(b):
            a = b
            while gcd(a, m) != 1:
                a += f
            return self.angle(a)

        return DirichletCharacter.from_angles(f, angle)

    def lift(self, M):
        """The character mod M (a multiple of the modulus) induced by self."""
        m = self.modulus
        if M % m:
            raise ValueError("target modulus must be a multiple")
        return DirichletCharacter.from_angles(M, lambda a: self.angle(a % m))

    def to_json(self):
        return {
            "modulus": self.modulus,
            "conductor": self.conductor,
            "parity": self.parity,
            "generators": list(self.group.generators),
            "generator_orders": list(self.group.orders),
            "generator_images": list(self.exponents),
            "primitive": self.is_primitive,
        }

    @classmethod
    def from_json(cls, data):
        chi = cls(int(data["modulus"]), tuple(int(e) for e in data["generator_images"]))
        if "conductor" in data and chi.conductor != data["conductor"]:
            raise ValueError("conductor mismatch in serialized character")
        return chi

    def __repr__(self):
        return f"DirichletCharacter(mod {self.modulus}, exps={self.exponents}, f={self.conductor})"


def enumerate_characters(m):
    """All phi(m) characters mod m; index 0 is the trivial one."""
    grp = unit_group(m)
    return [DirichletCharacter(m, ks) for ks in product(*(range(n) for n in grp.orders))]


def is_primitive_by_criterion(chi):
    """Primitive iff every proper divisor d of m admits a unit a = 1 (d) with chi(a) != 1."""
    m = chi.modulus
    units = chi.group.elements
    for d in divisors(m):
        if d == m:
            continue
        if not any(a % d == 1 % d and chi.exponent_of(a) != 0 for a in units):
            return False
    return True


def gauss_sum(chi):
    """sum_{a mod m} chi(a) exp(2 pi i a / m)."""
    m = chi.modulus
    a = np.arange(m)
    return complex(np.sum(chi.value_table * np.exp(2j * np.pi * a / m)))


def root_number(chi):
    """tau(chi) / (i^q sqrt(m)) for a primitive nontrivial chi."""
    if not chi.is_primitive or chi.is_trivial:
        raise ValueError("root number needs a primitive nontrivial character")
    w = gauss_sum(chi) / (1j**chi.parity * math.sqrt(chi.modulus))
    if abs(abs(w) - 1.0) > TOL:
        raise ArithmeticError(f"|W(chi)| = {abs(w)} deviates from 1")
    return w


def character_by_index(m, idx):
    chars = enumerate_characters(m)
    if not 0 <= idx < len(chars):
        raise IndexError(f"character index {idx} out of range for modulus {m}")
    return chars[idx]


def chi4():
    """The nontrivial character mod 4."""
    return character_by_index(4, 1)
