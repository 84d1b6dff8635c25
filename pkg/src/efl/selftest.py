"""Randomized invariant suite behind ``efl selftest``."""
import math

import numpy as np

from .arith import euler_phi
from .characters import enumerate_characters, gauss_sum, is_primitive_by_criterion
from .explicit_formula import TestFunction, geometric_side_artin, geometric_side_efchi
from .lefschetz import (averaged_fixed_point_factor, invariant_trace_check, proof_side,
                        random_invariant_instance, random_orbit_model, real_place_comparison,
                        statement_side)
from .lseries import functional_equation_residual, zeta_completed
from .moments import discrimination_trials
from .numberfield import artin_local_factor, split_prime
from .zeros import count_zeros_in_box, find_zeros


def _check(name, worst, tol, **extra):
    out = {"name": name, "worst": float(worst), "tolerance": tol, "passed": bool(worst <= tol)}
    out.update(extra)
    return out


def _primitive(m_max):
    return [c for m in range(1, m_max + 1) for c in enumerate_characters(m)
            if c.is_primitive and not c.is_trivial]


def run_selftest(seed=0, quick=True):
    rng = np.random.default_rng(seed)
    m_max = 30 if quick else 50
    results = []

    bad = sum(is_primitive_by_criterion(c) != c.is_primitive
              for m in range(1, m_max + 1) for c in enumerate_characters(m))
    results.append(_check("primitivity criterion vs conductor", bad, 0, m_max=m_max))
    worst = max(abs(abs(gauss_sum(c)) ** 2 - c.modulus) for c in _primitive(m_max))
    results.append(_check("gauss sum modulus", worst, 1e-10))

    worst = 0.0
    for m in range(1, 31):
        for p in (2, 3, 5, 7, 11, 13, 97):
            sp = split_prime(m, p)
            if sp.e * sp.f * sp.r != euler_phi(m):
                worst = math.inf
            if m >= 3:
                for x in (-0.7, 0.3j, 0.5):
                    lhs = np.prod([artin_local_factor(c, p, x) for c in enumerate_characters(m)])
                    worst = max(worst, abs(lhs - (1 - x**sp.f) ** sp.r))
    results.append(_check("splitting and Euler factors", worst, 1e-10))

    chars = _primitive(12)
    pts = [complex(rng.uniform(0, 1), rng.uniform(-30, 30)) for _ in range(3 if quick else 20)]
    worst = max(functional_equation_residual(c, s) for c in chars for s in pts)
    results.append(_check("functional equation", worst, 1e-7, points=len(pts)))

    worst = 0.0
    for c in chars:
        a = TestFunction(float(rng.uniform(0.8, 2.5)), float(rng.uniform(0.1, 0.6)))
        worst = max(worst, abs(geometric_side_artin(c, a) - geometric_side_efchi(c, a)))
    results.append(_check("artin vs dirichlet geometric sides", worst, 1e-12))

    worst = 0.0
    for _ in range(40 if quick else 200):
        model, rep = random_orbit_model(rng)
        c = float(rng.uniform(-3, 3))
        w = float(rng.uniform(0.1, 1.0))
        if abs(c) <= w:
            c = math.copysign(w + 0.05, c if c != 0 else 1.0)
        a = TestFunction(c, w)
        worst = max(worst, abs(statement_side(model, rep, a) - proof_side(model, rep, a)))
    results.append(_check("ramified trace formula", worst, 1e-12))

    worst = 0.0
    flagged = 0
    for t in np.linspace(-3, 3, 101):
        if t == 0:
            continue
        cmp_ = real_place_comparison(float(t))
        worst = max(worst, abs(cmp_["averaged"] - cmp_["dedekind_weight"]))
        flagged += t < 0 and not cmp_["raw_matches"]
        if t > 0:
            worst = max(worst, abs(averaged_fixed_point_factor(float(t), -1)
                                   - math.exp(-t) / -math.expm1(-2 * t)))
    results.append(_check("averaged fixed-point factors", worst, 1e-14, negative_t_mismatches=int(flagged)))

    worst = 0.0
    for i in range(20 if quick else 50):
        W, theta, z, t = random_invariant_instance(rng, force_no_invariants=(i % 4 == 0))
        worst = max(worst, invariant_trace_check(W, theta, z, t)[1])
    results.append(_check("invariant trace identity", worst, 1e-10))

    stats = discrimination_trials(100 if quick else 500, seed=seed)
    results.append(_check("moment discrimination", stats["missed"] + stats["false_alarms"], 0, **stats))

    Z = zeta_completed()
    zl = find_zeros(Z, 50)
    box = count_zeros_in_box(Z, -zl.height_bound, zl.height_bound)
    results.append(_check("zeta zero certification", abs(zl.total() - box), 0,
                          located=zl.total(), line_deviation=zl.max_line_deviation()))
    return results
