"""Compare finite multisets of critical-strip points through the moments sum 1/(u-2)^{2+r}."""
from dataclasses import dataclass

import numpy as np

from .explicit_formula import moment_vector

MAX_SIZE = 12


@dataclass(frozen=True)
class StripMultiset:
    points: tuple  # ((complex, multiplicity), ...)
    label: str = ""

    def __post_init__(self):
        merged = {}
        for z, k in self.points:
            z = complex(z)
            if not 0 <= z.real <= 1:
                raise ValueError(f"{z} lies outside the strip 0 <= Re <= 1")
            if int(k) < 1:
                raise ValueError("multiplicities must be >= 1")
            merged[z] = merged.get(z, 0) + int(k)
        object.__setattr__(self, "points", tuple(sorted(merged.items(), key=lambda e: (e[0].imag, e[0].real))))

    @classmethod
    def of(cls, pts, label=""):
        return cls(tuple((complex(z), 1) for z in pts), label)

    @property
    def size(self):
        return sum(k for _, k in self.points)

    def flat(self):
        return [z for z, k in self.points for _ in range(k)]


def greedy_bijection(A, B):
    """Pair each point of A with the nearest unused point of B, closest pairs first."""
    a, b = A.flat(), B.flat()
    if len(a) != len(b):
        return None, float("inf")
    d = np.abs(np.subtract.outer(np.array(a), np.array(b))) if a else np.zeros((0, 0))
    pairs, used_a, used_b = [], set(), set()
    for idx in np.argsort(d, axis=None, kind="stable"):
        i, j = divmod(int(idx), len(b))
        if i in used_a or j in used_b:
            continue
        used_a.add(i)
        used_b.add(j)
        pairs.append((i, j))
    worst = max((d[i, j] for i, j in pairs), default=0.0)
    return [(a[i], b[j]) for i, j in sorted(pairs)], float(worst)


def compare(A, B, R=None, tol=1e-8):
    """Moment comparison report; when all moments agree, an explicit matching is attempted and checked."""
    if A.size > MAX_SIZE or B.size > MAX_SIZE:
        raise ValueError(f"multisets are limited to {MAX_SIZE} points")
    R = 2 * max(A.size, B.size) if R is None else R
    ma, mb = moment_vector(A.points, R), moment_vector(B.points, R)
    diffs = [abs(x - y) for x, y in zip(ma, mb)]
    first = next((r for r, d in enumerate(diffs) if d > tol), None)
    report = {"R": R, "tol": tol, "size_a": A.size, "size_b": B.size,
              "equal": first is None, "first_differing_moment": first,
              "max_moment_difference": max(diffs) if diffs else 0.0,
              "bijection": None, "inconsistent": False}
    if first is None:
        pairing, worst = greedy_bijection(A, B)
        ok = pairing is not None and worst <= 10 * tol
        report["bijection"] = [[[z.real, z.imag], [w.real, w.imag]] for z, w in pairing] if ok else None
        report["bijection_max_distance"] = worst
        report["inconsistent"] = not ok
    return report


def random_point_set(rng, n, sep=0.1, re_range=(0.0, 1.0), im_range=(-2.0, 2.0)):
    pts = []
    while len(pts) < n:
        z = complex(rng.uniform(*re_range), rng.uniform(*im_range))
        if all(abs(z - w) >= sep for w in pts):
            pts.append(z)
    return pts


def random_distinct_pair(rng, max_size=6, sep=0.1, max_mult=2):
    """Two different multisets drawn from a common pool of well-separated points."""
    while True:
        pool = random_point_set(rng, 2 * max_size, sep)

        def draw():
            n = int(rng.integers(1, max_size + 1))
            idx = rng.choice(len(pool), size=n, replace=False)
            out, total = [], 0
            for i in idx:
                k = int(rng.integers(1, max_mult + 1))
                k = min(k, max_size - total)
                if k < 1:
                    break
                out.append((pool[i], k))
                total += k
            return StripMultiset(tuple(out))

        A, B = draw(), draw()
        if A.points != B.points:
            return A, B


def discrimination_trials(trials, seed=0, R=12, tol=1e-8, max_size=6):
    """Counts of (distinct pairs distinguished, equal pairs wrongly distinguished)."""
    rng = np.random.default_rng(seed)
    missed, false_alarm = [], 0
    for _ in range(trials):
        A, B = random_distinct_pair(rng, max_size)
        if compare(A, B, R, tol)["equal"]:
            missed.append((A, B))
        if not compare(A, A, R, tol)["equal"]:
            false_alarm += 1
    return {"trials": trials, "missed": len(missed), "false_alarms": false_alarm, "seed": seed}
