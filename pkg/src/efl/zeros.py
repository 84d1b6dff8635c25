"""Zeros of completed L-functions: argument-principle counts and critical-line location."""
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

TWO_PI = 2 * math.pi
BOX_LEFT, BOX_RIGHT = -0.1, 1.1
SCAN_STEP = 0.05
WINDOW = 20.0


class BoundaryTooCloseError(RuntimeError):
    pass


class CompletenessError(RuntimeError):
    pass


def worker_count():
    try:
        return max(1, int(os.environ.get("EFL_THREADS", "1")))
    except ValueError:
        return 1


@dataclass
class ZeroList:
    entries: list  # [(complex location, multiplicity)], sorted by Im
    height_bound: float
    source: str
    verified_count: int
    details: dict = field(default_factory=dict)

    def locations(self):
        return np.array([z for z, _ in self.entries], dtype=complex)

    def multiplicities(self):
        return np.array([k for _, k in self.entries], dtype=int)

    def total(self):
        return int(sum(k for _, k in self.entries))

    def truncate(self, T):
        kept = [(z, k) for z, k in self.entries if abs(z.imag) <= T]
        return ZeroList(kept, T, self.source, sum(k for _, k in kept), dict(self.details))

    def max_line_deviation(self):
        if not self.entries:
            return 0.0
        return float(max(abs(z.real - 0.5) for z, _ in self.entries))

    def to_csv(self):
        rows = ["re,im,multiplicity"]
        for z, k in self.entries:
            rows.append(f"{z.real:.12f},{z.imag:.12f},{k}")
        return "\n".join(rows) + "\n"


# -- argument principle ------------------------------------------------------

def _wrap(x):
    return (x + math.pi) % TWO_PI - math.pi


def _phase_data(L, pts):
    lf = L.log_factor(pts)
    lv = L.l_func(pts)
    return lf.imag, lv


def _edge_winding(L, a, b, max_step, max_rounds=40):
    """Accumulated argument change of Lambda along the segment a -> b (radians).

    Returns (change, min |L| on the samples).
    """
    n = max(2, int(math.ceil(abs(b - a) / max_step)) + 1)
    u = np.linspace(0.0, 1.0, n)
    pts = a + (b - a) * u
    ph, lv = _phase_data(L, pts)
    for _ in range(max_rounds):
        d = _wrap(np.diff(ph)) + np.angle(lv[1:] / lv[:-1])
        bad = np.flatnonzero(np.abs(d) > 0.5)
        if bad.size == 0:
            break
        mids = 0.5 * (u[bad] + u[bad + 1])
        mpts = a + (b - a) * mids
        mph, mlv = _phase_data(L, mpts)
        u = np.insert(u, bad + 1, mids)
        ph = np.insert(ph, bad + 1, mph)
        lv = np.insert(lv, bad + 1, mlv)
    d = _wrap(np.diff(ph)) + np.angle(lv[1:] / lv[:-1])
    return float(np.sum(d)), float(np.min(np.abs(lv)))


def _box_winding(L, lo, hi, step):
    corners = [complex(BOX_LEFT, lo), complex(BOX_RIGHT, lo), complex(BOX_RIGHT, hi), complex(BOX_LEFT, hi)]
    total, min_mod = 0.0, math.inf
    for a, b in zip(corners, corners[1:] + corners[:1]):
        w, mm = _edge_winding(L, a, b, step)
        total += w
        min_mod = min(min_mod, mm)
    return total / TWO_PI, min_mod


def _poles_inside(L, lo, hi):
    return sum(k for z, k in L.poles if BOX_LEFT < z.real < BOX_RIGHT and lo < z.imag < hi)


def count_zeros_in_box(L, lo, hi, step=SCAN_STEP, min_modulus=1e-6, return_box=False, perturb=True):
    """Zeros of L inside [-0.1, 1.1] x [lo, hi] by the argument principle.

    The boundary sampling is halved until the winding is stable to 0.01
    turns.  If |L| gets small on the boundary the horizontal edges are
    nudged outwards; after 5 attempts with |L| < 1e-12 an error is raised.
    Poles of the completed function inside the box are added back.
    """
    min_mod = math.inf
    for attempt in range(6):
        h = step
        turns, min_mod = _box_winding(L, lo, hi, h)
        for _ in range(6):
            h /= 2
            finer, mm = _box_winding(L, lo, hi, h)
            min_mod = min(min_mod, mm)
            stable = abs(turns - finer) < 0.01 and abs(finer - round(finer)) < 0.01
            turns = finer
            if stable:
                break
        if stable and (min_mod >= min_modulus or not perturb):
            if min_mod < 1e-12:
                break
            n = int(round(turns)) + _poles_inside(L, lo, hi)
            return (n, (lo, hi)) if return_box else n
        if not perturb:
            break
        shift = 0.0173 * (attempt + 1)
        lo, hi = lo - shift, hi + shift
    raise BoundaryTooCloseError(
        f"{L.label}: winding over [{lo}, {hi}] not certified (min |L| on boundary {min_mod:.2e})")


# -- critical-line location ----------------------------------------------------

def rotated_values(L, t):
    """exp(i Im logfactor) L(1/2 + it) / sqrt(W): real for every primitive source."""
    t = np.atleast_1d(np.asarray(t, dtype=float))
    s = 0.5 + 1j * t
    z = np.exp(1j * L.log_factor(s).imag) * L.l_func(s) / np.sqrt(complex(L.root_number))
    return z


def _real_rotated(L, t):
    z = rotated_values(L, t)
    scale = np.maximum(np.abs(z), 1e-300)
    if np.any(np.abs(z.imag) > 1e-6 * np.maximum(scale, 1.0)):
        raise ArithmeticError(f"rotated function of {L.label} is not real")
    return z.real


def _sign_changes(L, lo, hi, step, xtol):
    n = max(2, int(math.ceil((hi - lo) / step)) + 1)
    t = np.linspace(lo, hi, n)
    v = _real_rotated(L, t)
    roots = []
    for i in np.flatnonzero(v[:-1] * v[1:] <= 0):
        if v[i] == 0:
            roots.append(float(t[i]))
            continue
        if v[i + 1] == 0:
            continue
        f = lambda x: float(_real_rotated(L, [x])[0])
        roots.append(brentq(f, t[i], t[i + 1], xtol=xtol, rtol=4 * np.finfo(float).eps))
    return roots


def _edge_ok(L, t):
    return abs(_real_rotated(L, [t])[0]) > 1e-6


def _nudge(L, t, upward_only=False):
    for k in range(20):
        for cand in ((t + 0.011 * k,) if upward_only else (t + 0.011 * k, t - 0.011 * k)):
            if _edge_ok(L, cand):
                return cand
    return t


def _window_zeros(L, lo, hi, xtol):
    """Critical-line zeros in (lo, hi], certified against the box count."""
    expected = count_zeros_in_box(L, lo, hi, perturb=False)
    blo, bhi = lo, hi
    step = SCAN_STEP
    for _ in range(8):
        roots = [r for r in _sign_changes(L, blo, bhi, step, xtol) if blo < r <= bhi]
        if len(roots) >= expected:
            break
        step /= 2
    return roots, expected, (blo, bhi)


def find_zeros(L, T, xtol=1e-11):
    """All zeros of L with |Im| <= T located on the critical line and certified.

    For self-dual sources the positive heights are mirrored; otherwise both
    half-lines are scanned (the list is then not closed under conjugation).
    """
    if T <= 0:
        raise ValueError("T must be positive")
    if T > 400:
        raise ValueError("heights above 400 are outside the validated range")
    if L.factors:
        return _union(L, T, xtol)
    top = _nudge(L, T, upward_only=True)
    first = min(WINDOW, top)
    edges = [first]
    while edges[-1] < top:
        edges.append(min(edges[-1] + WINDOW, top))
    edges = [_nudge(L, e) if e != top else top for e in edges]
    windows = [(-edges[0], edges[0])]
    windows += list(zip(edges[:-1], edges[1:]))
    if not L.self_dual:
        windows += [(-b, -a) for a, b in zip(edges[:-1], edges[1:])]

    with ThreadPoolExecutor(max_workers=worker_count()) as pool:
        results = list(pool.map(lambda w: _window_zeros(L, w[0], w[1], xtol), windows))

    heights, expected_total = [], 0
    mismatches = []
    for (roots, expected, box), window in zip(results, windows):
        if len(roots) != expected:
            mismatches.append({"window": list(box), "located": len(roots), "box_count": expected})
        heights.extend(roots)
        expected_total += expected if window[0] < 0 < window[1] or not L.self_dual else 2 * expected
    if mismatches:
        raise CompletenessError(f"{L.label}: located zeros disagree with box counts: {mismatches}")

    if L.self_dual:
        pos = sorted(h for h in heights if h > xtol)
        centre = [0.0] if any(abs(h) <= xtol for h in heights) else []
        heights = [-h for h in reversed(pos)] + centre + pos
    else:
        heights = sorted(heights)
    entries = [(_polish(L, h), 1) for h in heights]
    real_top = max(w[1] for w in windows)
    zl = ZeroList(entries, real_top, L.label, expected_total)
    if zl.total() != zl.verified_count:
        raise CompletenessError(f"{L.label}: {zl.total()} located vs {zl.verified_count} counted")
    zl.details = {"windows": len(windows), "scan_step": SCAN_STEP,
                  "max_line_deviation": zl.max_line_deviation()}
    return zl


def _polish(L, h, iters=6):
    """Free complex secant iteration on L from 1/2 + ih; the real part is measured, not imposed."""
    s0, s1 = complex(0.5, h), complex(0.5 + 1e-7, h + 1e-7)
    f0, f1 = (complex(v) for v in L.l_func(np.array([s0, s1])))
    for _ in range(iters):
        if f1 == f0:
            break
        s2 = s1 - f1 * (s1 - s0) / (f1 - f0)
        if abs(s2 - s1) > 1e-6:  # secant wandered off; keep the bracketed root
            return complex(0.5, h)
        s0, f0 = s1, f1
        s1, f1 = s2, complex(L.l_func(np.array([s2]))[0])
        if abs(s1 - s0) < 1e-14:
            break
    return s1


def _union(L, T, xtol):
    lists = [find_zeros(f, T, xtol) for f in L.factors]
    merged = {}
    for zl in lists:
        for z, k in zl.entries:
            key = next((w for w in merged if abs(w - z) < 1e-7), z)
            merged[key] = merged.get(key, 0) + k
    entries = sorted(merged.items(), key=lambda e: e[0].imag)
    zl = ZeroList(entries, max(sub.height_bound for sub in lists), L.label,
                  sum(sub.verified_count for sub in lists))
    zl.details = {"factors": [sub.source for sub in lists],
                  "factor_bounds": [sub.height_bound for sub in lists],
                  "max_line_deviation": zl.max_line_deviation()}
    return zl
