import cmath
import json
import math
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from efl.arith import divisors, euler_phi, multiplicative_order
from efl.characters import (
    DirichletCharacter,
    chi4,
    enumerate_characters,
    gauss_sum,
    is_primitive_by_criterion,
    root_number,
)


def brute_conductor(chi):
    """Smallest d | m such that chi(a) depends only on a mod d."""
    m = chi.modulus
    us = [a for a in range(1, m + 1) if gcd(a, m) == 1]
    for d in divisors(m):
        if all(chi(a) == chi(b) for a in us for b in us if (a - b) % d == 0):
            return d
    return m


def test_mod4_table():
    chars = enumerate_characters(4)
    assert len(chars) == 2
    assert chars[0].is_trivial
    assert chars[1](3) == -1 and chars[1](1) == 1
    assert chars[1](2) == 0 and chars[1](0) == 0


def test_mod1_and_mod2():
    (triv,) = enumerate_characters(1)
    assert triv.conductor == 1 and triv.parity == 0
    assert gauss_sum(triv) == 1
    assert len(enumerate_characters(2)) == 1


def test_mod5_all_nontrivial_primitive():
    chars = enumerate_characters(5)
    assert len(chars) == 4
    nontriv = [c for c in chars if not c.is_trivial]
    assert len(nontriv) == 3
    assert all(brute_conductor(c) == 5 for c in nontriv)


def test_criterion_examples():
    assert is_primitive_by_criterion(chi4())
    assert not is_primitive_by_criterion(DirichletCharacter.trivial(4))
    lifted = chi4().lift(8)
    assert not is_primitive_by_criterion(lifted)
    assert lifted.conductor == 4
    assert lifted.primitive() == chi4()


def test_gauss_sum_chi4():
    direct = sum([0, 1, 0, -1][a] * cmath.exp(2j * math.pi * a / 4) for a in range(4))
    assert abs(gauss_sum(chi4()) - direct) < 1e-14
    assert abs(gauss_sum(chi4()) - 2j) < 1e-14
    assert abs(root_number(chi4()) - 1) < 1e-14


def test_root_number_mod5_and_rejection():
    for c in enumerate_characters(5)[1:]:
        assert abs(abs(root_number(c)) - 1) < 1e-10
    with pytest.raises(ValueError):
        root_number(chi4().lift(8))
    with pytest.raises(ValueError):
        root_number(DirichletCharacter.trivial(5))


@pytest.mark.parametrize("m", range(1, 51))
def test_criterion_matches_conductor(m):
    for chi in enumerate_characters(m):
        assert is_primitive_by_criterion(chi) == chi.is_primitive
        assert m % chi.conductor == 0


@pytest.mark.parametrize("m", [1, 3, 8, 12, 15, 16, 24, 36, 45])
def test_conductor_brute_force(m):
    for chi in enumerate_characters(m):
        assert chi.conductor == brute_conductor(chi)


@pytest.mark.parametrize("m", range(1, 51))
def test_group_structure(m):
    chars = enumerate_characters(m)
    assert len(chars) == euler_phi(m)
    assert len(set(chars)) == len(chars)
    us = [a for a in range(m) if gcd(a, m) == 1]
    for chi in chars[:6]:
        assert chi(-1) == (-1) ** chi.parity
        assert chi * chi.conjugate() == chars[0]
        for a in us[:8]:
            assert abs(chi.conjugate()(a) - np.conj(chi(a))) < 1e-15
            for b in us[:8]:
                assert abs(chi(a * b) - chi(a) * chi(b)) < 1e-14
        if chi.is_primitive and not chi.is_trivial:
            assert abs(abs(gauss_sum(chi)) ** 2 - m) < 1e-10


@settings(max_examples=60, deadline=None)
@given(m=st.integers(2, 40), p=st.sampled_from([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]),
       x=st.floats(-0.95, 0.95))
def test_euler_factor_product(m, p, x):
    if m % p == 0:
        return
    f = multiplicative_order(p, m)
    lhs = np.prod([1 - chi(p) * x for chi in enumerate_characters(m)])
    rhs = (1 - x**f) ** (euler_phi(m) // f)
    assert abs(lhs - rhs) < 1e-10


def test_json_roundtrip():
    for chi in enumerate_characters(15):
        data = json.loads(json.dumps(chi.to_json()))
        assert DirichletCharacter.from_json(data) == chi
        assert set(data) >= {"modulus", "conductor", "parity", "generator_images", "primitive"}
