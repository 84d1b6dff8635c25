import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from efl.arith import euler_phi, primes_up_to
from efl.characters import chi4, enumerate_characters
from efl.lseries import dirichlet_completed, zeta_completed
from efl.numberfield import (CyclotomicField, artin_local_data, artin_local_factor, canonical_modulus,
                             decomposition_data, dedekind_completed, split_prime)

X = sympy.Symbol("x")


def kummer_splitting(m, p):
    """(e, f, r) from factoring the m-th cyclotomic polynomial mod p."""
    _, factors = sympy.factor_list(sympy.cyclotomic_poly(m, X), modulus=p)
    degrees = {sympy.degree(g, X) for g, _ in factors}
    mults = {k for _, k in factors}
    assert len(degrees) == 1 and len(mults) == 1
    return mults.pop(), degrees.pop(), len(factors)


def test_examples():
    assert (split_prime(4, 5).e, split_prime(4, 5).f, split_prime(4, 5).r) == (1, 1, 2)
    assert (split_prime(4, 3).e, split_prime(4, 3).f, split_prime(4, 3).r) == (1, 2, 1)
    assert (split_prime(4, 2).e, split_prime(4, 2).f, split_prime(4, 2).r) == (2, 1, 1)
    assert split_prime(7, 2).norm == 8


@pytest.mark.parametrize("m", [3, 5, 7, 8, 9, 12, 15, 16, 20, 21, 24, 30])
def test_splitting_matches_polynomial_factorization(m):
    for p in primes_up_to(40):
        sp = split_prime(m, int(p))
        assert (sp.e, sp.f, sp.r) == kummer_splitting(m, int(p))


@pytest.mark.parametrize("m", [3, 4, 5, 7, 8, 9, 12])
def test_discriminant_matches_polynomial(m):
    disc = abs(int(sympy.discriminant(sympy.cyclotomic_poly(m, X), X)))
    assert CyclotomicField(m).abs_discriminant == disc


def test_field_invariants():
    K = CyclotomicField(12)
    assert (K.degree, K.r1, K.r2) == (4, 0, 2)
    assert canonical_modulus(6) == 3 and CyclotomicField(6).m == 3
    assert CyclotomicField(1).degree == 1 and CyclotomicField(1).r1 == 1


def test_decomposition_12_3():
    dd = decomposition_data(12, 3)
    assert sorted(dd.decomposition_group) == [1, 5, 7, 11]
    assert sorted(dd.inertia_group) == [1, 5]
    assert dd.f == 2 == split_prime(12, 3).f


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 30), st.sampled_from([2, 3, 5, 7, 11, 13]))
def test_group_orders(m, p):
    dd = decomposition_data(m, p)
    sp = split_prime(m, p)
    assert len(dd.inertia_group) == sp.e
    assert len(dd.decomposition_group) == sp.e * sp.f
    assert sp.e * sp.f * sp.r == euler_phi(m)


@pytest.mark.parametrize("m", [5, 8, 12, 15, 20])
def test_inertia_route_matches_conductor_route(m):
    for chi in enumerate_characters(m):
        prim = chi.primitive()
        for p in (2, 3, 5, 7, 11):
            # group-theoretic factor vs 1 - chi*(p) x from the primitive character
            assert abs(artin_local_factor(chi, p, 0.37) - (1 - prim(p) * 0.37)) <= 1e-14


def test_ramified_character_has_no_invariants():
    data = artin_local_data(chi4(), 2)
    assert data.invariant_dim == 0 and data.frobenius_value is None
    assert artin_local_data(chi4(), 3).frobenius_value == -1


@pytest.mark.parametrize("m", [4, 5, 12])
def test_euler_factor_identity(m):
    chars = enumerate_characters(m)
    for p in (2, 3, 5, 7, 13):
        sp = split_prime(m, p)
        for x in (0.5, -0.3, 0.2j, 0.9, -1.0):
            lhs = np.prod([artin_local_factor(c, p, x) for c in chars])
            assert abs(lhs - (1 - x**sp.f) ** sp.r) <= 1e-12


def test_local_zeta_is_product_of_l_functions():
    K = CyclotomicField(4)
    s = 4.0
    lhs = K.local_zeta(s, 10**4)
    assert abs(lhs - zeta_completed().l_func(np.array([s]))[0]
               * dirichlet_completed(chi4()).l_func(np.array([s]))[0]) <= 1e-10


def test_dedekind_completed_constant():
    import mpmath
    s = 0.3 + 2j
    L = dedekind_completed(4)
    mp_val = complex(4 ** (s / 2) * (2 * mpmath.pi) ** (-s) * mpmath.gamma(s)
                     * mpmath.zeta(s) * mpmath.dirichlet(s, [0, 1, 0, -1]))
    assert abs(L(s) - mp_val) <= 1e-14
    # the completed Dirichlet factors multiply to 2^{r2} pi^{r2/2} times the Dedekind function
    prod = np.prod([f(s) for f in L.factors])
    assert abs(prod - 2 * math.sqrt(math.pi) * mp_val) <= 1e-14


def test_dedekind_symmetry_and_poles():
    D = dedekind_completed(5)
    s = 0.3 + 1j
    assert abs(D(s) - D(1 - s)) <= 1e-12
    assert {z for z, _ in D.poles} == {0j, 1 + 0j}
    assert len(D.factors) == 4
