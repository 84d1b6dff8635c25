"""Finite orbit model of a flow on a Galois cover: both sides of the ramified trace formula,
fixed-point factors, and the averaged invariant-trace identity.

Nothing geometric is simulated.  A model carries, for each primitive closed
orbit, its length, the stabilizer H of a base lift, the holonomy h0 (the
group element with h0^{-1} phi^{T0} x0 = x0) and a sign rule.
"""
import itertools
import json
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np
from scipy.linalg import expm

TOL = 1e-12


# -- finite groups -------------------------------------------------------------

class FiniteGroup:
    """Elements are 0..n-1 with a multiplication table; validated on construction."""

    def __init__(self, table, names=None, label="table"):
        t = np.asarray(table, dtype=int)
        n = t.shape[0]
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise ValueError("multiplication table must be an n x n table on 0..n-1")
        self.table = t
        self.order = n
        self.names = list(names) if names is not None else [str(i) for i in range(n)]
        self.label = label
        idents = [e for e in range(n) if all(t[e, g] == g and t[g, e] == g for g in range(n))]
        if len(idents) != 1:
            raise ValueError("no two-sided identity")
        self.identity = idents[0]
        inv = []
        for g in range(n):
            cands = [h for h in range(n) if t[g, h] == self.identity and t[h, g] == self.identity]
            if not cands:
                raise ValueError(f"element {g} has no inverse")
            inv.append(cands[0])
        self._inv = inv
        # associativity, exhaustively
        left = t[t, :]            # (a b) c  -> left[a, b, c] = t[t[a, b], c]
        right = t[:, t]           # a (b c)  -> right[a, b, c] = t[a, t[b, c]]
        if not np.array_equal(left, right):
            raise ValueError("multiplication table is not associative")

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return int(self.table[a, b])

    def inv(self, a):
        return self._inv[a]

    def power(self, g, k):
        if k < 0:
            g, k = self.inv(g), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def conj(self, l, h):
        """l h l^{-1}"""
        return self.mul(self.mul(l, h), self.inv(l))

    def is_subgroup(self, H):
        H = set(H)
        return (self.identity in H and all(self.mul(a, self.inv(b)) in H for a in H for b in H))

    def generated(self, gens):
        out = {self.identity}
        frontier = list(out)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in out:
                    out.add(y)
                    frontier.append(y)
        return tuple(sorted(out))

    def subgroups(self):
        subs = {self.generated([a, b]) for a in self.elements for b in self.elements}
        return sorted(subs, key=lambda h: (len(h), h))

    def normalizes(self, g, H):
        H = set(H)
        return {self.conj(g, h) for h in H} == H

    def normalizer(self, H):
        return [g for g in self.elements if self.normalizes(g, H)]

    def left_cosets(self, H):
        seen, reps = set(), []
        for g in self.elements:
            if g in seen:
                continue
            coset = {self.mul(g, h) for h in H}
            seen |= coset
            reps.append(min(coset))
        return reps

    def element_order(self, g):
        k, x = 1, g
        while x != self.identity:
            x = self.mul(x, g)
            k += 1
        return k

    def to_json(self):
        if self.label.startswith("cyclic:"):
            return {"kind": "cyclic", "data": int(self.label.split(":")[1])}
        return {"kind": "table", "data": {"elements": self.names, "table": self.table.tolist()}}

    @classmethod
    def from_json(cls, data):
        if data["kind"] == "cyclic":
            return cyclic_group(int(data["data"]))
        if data["kind"] == "table":
            return cls(data["data"]["table"], data["data"].get("elements"))
        raise ValueError(f"unknown group kind {data['kind']!r}")


def cyclic_group(n):
    t = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(t, label=f"cyclic:{n}")


def product_group(G, H):
    pairs = list(itertools.product(G.elements, H.elements))
    index = {p: i for i, p in enumerate(pairs)}
    t = [[index[(G.mul(a[0], b[0]), H.mul(a[1], b[1]))] for b in pairs] for a in pairs]
    names = [f"({G.names[a]},{H.names[b]})" for a, b in pairs]
    return FiniteGroup(t, names, label=f"product:{G.label}x{H.label}")


def units_group(m):
    """(Z/mZ)*; element i is the i-th unit in increasing order."""
    us = [a for a in range(1, m + 1) if math.gcd(a, m) == 1] if m > 1 else [0]
    index = {u % m if m > 1 else 0: i for i, u in enumerate(us)}
    t = [[index[(a * b) % m if m > 1 else 0] for b in us] for a in us]
    G = FiniteGroup(t, [str(u) for u in us], label=f"units:{m}")
    G.residues = us
    G.residue_index = index
    return G


def symmetric_group(n):
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    t = [[index[tuple(a[b[i]] for i in range(n))] for b in perms] for a in perms]
    G = FiniteGroup(t, ["".join(map(str, p)) for p in perms], label=f"symmetric:{n}")
    G.perms = perms
    return G


# -- representations -------------------------------------------------------------

class FiniteRep:
    """Unitary representation given by one matrix per group element.

    One-dimensional representations may also carry exact data: ``exponents``
    with rho(g) = exp(2 pi i exponents[g] / root_order).
    """

    def __init__(self, group, matrices, exponents=None, root_order=None, label="rep"):
        self.group = group
        self.matrices = [np.asarray(M, dtype=complex) for M in matrices]
        self.dim = self.matrices[0].shape[0]
        self.exponents = exponents
        self.root_order = root_order
        self.label = label
        G = group
        eye = np.eye(self.dim)
        for g in G.elements:
            M = self.matrices[g]
            if np.max(np.abs(M.conj().T @ M - eye)) > TOL:
                raise ValueError(f"rho({G.names[g]}) is not unitary")
            for h in G.elements:
                if np.max(np.abs(M @ self.matrices[h] - self.matrices[G.mul(g, h)])) > TOL:
                    raise ValueError("not a homomorphism")

    def __call__(self, g):
        return self.matrices[g]

    def trace(self, g):
        return complex(np.trace(self.matrices[g]))

    def direct_sum(self, other):
        mats = []
        for a, b in zip(self.matrices, other.matrices):
            M = np.zeros((a.shape[0] + b.shape[0],) * 2, dtype=complex)
            M[:a.shape[0], :a.shape[0]] = a
            M[a.shape[0]:, a.shape[0]:] = b
            mats.append(M)
        return FiniteRep(self.group, mats, label=f"{self.label}+{other.label}")


def _root(k, n):
    k %= n
    if (4 * k) % n == 0:
        return (1, 1j, -1, -1j)[4 * k // n]
    return np.exp(2j * np.pi * k / n)


def one_dim_rep(group, exponents, root_order, label="char"):
    mats = [np.array([[_root(exponents[g], root_order)]]) for g in group.elements]
    return FiniteRep(group, mats, list(exponents), root_order, label)


def trivial_rep(group, dim=1):
    if dim == 1:
        return one_dim_rep(group, [0] * group.order, 1, "trivial")
    return FiniteRep(group, [np.eye(dim)] * group.order, label=f"trivial^{dim}")


def cyclic_character(group, j):
    """g -> exp(2 pi i j g / n) on cyclic:n."""
    n = group.order
    return one_dim_rep(group, [(j * g) % n for g in group.elements], n, f"char:{j}")


def abelian_characters(group):
    """All one-dimensional characters of an abelian group, found by brute force over root exponents."""
    n = group.order
    exps = math.lcm(*(group.element_order(g) for g in group.elements))
    gens = []
    current = (group.identity,)
    for g in group.elements:
        if g not in current:
            gens.append(g)
            current = group.generated(gens)
    chars = []
    for choice in itertools.product(*(range(exps) for _ in gens)):
        vals = {group.identity: 0}
        ok = True
        frontier = [group.identity]
        while frontier and ok:
            x = frontier.pop()
            for g, c in zip(gens, choice):
                y = group.mul(x, g)
                v = (vals[x] + c) % exps
                if y in vals:
                    ok = ok and vals[y] == v
                else:
                    vals[y] = v
                    frontier.append(y)
        if ok and len(vals) == n:
            chars.append(one_dim_rep(group, [vals[g] for g in group.elements], exps, f"char{choice}"))
    return chars


def sign_rep(group):
    perms = group.perms
    def parity(p):
        inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
        return inv % 2
    return one_dim_rep(group, [parity(p) for p in perms], 2, "sign")


def standard_rep_s3(group):
    """The 2-dimensional irreducible representation of S3, in an orthonormal basis."""
    basis = np.array([[1, -1, 0], [1, 1, -2]], dtype=float)
    basis = basis / np.linalg.norm(basis, axis=1)[:, None]
    mats = []
    for p in group.perms:
        P = np.zeros((3, 3))
        for i, j in enumerate(p):
            P[j, i] = 1.0
        mats.append(basis @ P @ basis.T)
    return FiniteRep(group, mats, label="standard")


def regular_rep(group):
    n = group.order
    mats = []
    for g in group.elements:
        M = np.zeros((n, n))
        for h in group.elements:
            M[group.mul(g, h), h] = 1.0
        mats.append(M)
    return FiniteRep(group, mats, label="regular")


# -- exact cancellation over subgroups --------------------------------------------

def _poly_divmod(num, den):
    num = list(num)
    out = [0] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] // den[-1]
        out[shift] = c
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        while num and num[-1] == 0:
            num.pop()
    return out, num


def cyclotomic_poly(n):
    """Integer coefficients (low to high) of the n-th cyclotomic polynomial."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_poly(d))
            assert not any(rem)
    while num and num[-1] == 0:
        num.pop()
    return num


def root_sum_is_zero(exponents, n):
    """Exactly decide sum_k exp(2 pi i e_k / n) == 0 (divisibility by the n-th cyclotomic polynomial)."""
    coeffs = [0] * n
    for e in exponents:
        coeffs[e % n] += 1
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if not coeffs:
        return True
    _, rem = _poly_divmod(coeffs, cyclotomic_poly(n))
    return not any(rem)


def inertia_sum_vanishes(rep, H):
    """sum_{s in H} rho(s) == 0, exactly for exponent-backed 1-dim reps."""
    if rep.exponents is not None:
        return root_sum_is_zero([rep.exponents[h] for h in H], rep.root_order)
    return bool(np.max(np.abs(sum(rep(h) for h in H))) < TOL)


def inertia_projector(rep, H):
    """P = (1/|H|) sum_{u in H} rho(u); checks P^2 = P and commutation with the normalizer."""
    G = rep.group
    if not G.is_subgroup(H):
        raise ValueError("H is not a subgroup")
    P = sum(rep(u) for u in H) / len(H)
    if np.max(np.abs(P @ P - P)) > TOL:
        raise ArithmeticError("averaging operator is not idempotent")
    for g in G.normalizer(H):
        M = rep(g)
        if np.max(np.abs(P @ M - M @ P)) > TOL:
            raise ArithmeticError("projector does not commute with the normalizer")
    return P


# -- orbit models -------------------------------------------------------------------

@dataclass(frozen=True)
class PrimitiveOrbit:
    length: float
    holonomy: int
    stabilizer: tuple
    signs: object = "all_plus"  # or {k: {element: +-1}}

    @property
    def ramified(self):
        return len(self.stabilizer) > 1

    def sign(self, k, l):
        if self.signs == "all_plus":
            return 1
        return int(self.signs[k][l])


@dataclass(frozen=True)
class FixedPointDatum:
    place_type: str
    involution: object = None
    leafwise_rotation: bool = True

    def __post_init__(self):
        if self.place_type not in ("real", "complex"):
            raise ValueError("place_type must be 'real' or 'complex'")
        if self.place_type == "real" and self.involution is not None:
            raise ValueError("only complex places carry an involution")


@dataclass
class OrbitModel:
    group: FiniteGroup
    orbits: list
    fixed_points: list = field(default_factory=list)
    name: str = "model"
    flags: list = field(default_factory=list)

    def __post_init__(self):
        G = self.group
        for i, o in enumerate(self.orbits):
            if not o.length > 0:
                raise ValueError(f"orbit {i}: length must be positive")
            if not G.is_subgroup(o.stabilizer):
                raise ValueError(f"orbit {i}: stabilizer is not a subgroup")
            if not G.normalizes(o.holonomy, o.stabilizer):
                raise ValueError(f"orbit {i}: holonomy does not normalize the stabilizer")
            if o.signs != "all_plus":
                self._check_signs(i, o)
        for fp in self.fixed_points:
            if fp.involution is not None:
                if G.mul(fp.involution, fp.involution) != G.identity:
                    raise ValueError("fixed-point involution must square to the identity")

    def _check_signs(self, i, o):
        G = self.group
        ks = sorted(o.signs)
        for k in ks:
            if -k not in o.signs:
                raise ValueError(f"orbit {i}: sign table must cover k = {k} and k = {-k}")
            table = o.signs[k]
            vals = {int(table[l]) for l in G.elements}
            if not vals <= {1, -1}:
                raise ValueError(f"orbit {i}: signs must be +1 or -1")
            # constant on each coset lH (translates by inertia) and across cosets
            for l in G.elements:
                for u in o.stabilizer:
                    if table[G.mul(l, u)] != table[l]:
                        raise ValueError(f"orbit {i}: sign not constant on the coset of {l}")
            if len(vals) > 1:
                raise ValueError(f"orbit {i}: sign differs between lifts at k = {k}")
            if k > 0 and table[G.identity] != o.signs[-k][G.identity]:
                self.flags.append({"orbit": i, "k": k, "asymmetric_sign": True})

    def max_k(self, orbit, alpha):
        return int(math.floor(alpha.reach / orbit.length))

    def to_json(self):
        orbits = []
        for o in self.orbits:
            signs = o.signs if o.signs == "all_plus" else {
                str(k): {str(l): v for l, v in tab.items()} for k, tab in o.signs.items()}
            orbits.append({"length": o.length, "holonomy": o.holonomy,
                           "stabilizer": list(o.stabilizer), "signs": signs})
        return {"name": self.name, "group": self.group.to_json(), "orbits": orbits,
                "fixed_points": [{"place_type": f.place_type, "involution": f.involution}
                                 for f in self.fixed_points]}

    @classmethod
    def from_json(cls, data):
        G = FiniteGroup.from_json(data["group"])
        orbits = []
        for o in data["orbits"]:
            signs = o.get("signs", "all_plus")
            if signs != "all_plus":
                signs = {int(k): {int(l): int(v) for l, v in tab.items()} for k, tab in signs.items()}
            orbits.append(PrimitiveOrbit(float(o["length"]), int(o["holonomy"]),
                                         tuple(sorted(int(x) for x in o["stabilizer"])), signs))
        fps = [FixedPointDatum(f["place_type"], f.get("involution")) for f in data.get("fixed_points", [])]
        return cls(G, orbits, fps, data.get("name", "model"))


def bundled_model(name):
    fname = name if name.endswith(".json") else f"{name}.json"
    text = resources.files("efl").joinpath("data", fname).read_text()
    return OrbitModel.from_json(json.loads(text))


def load_model(path_or_name):
    try:
        with open(path_or_name) as fh:
            return OrbitModel.from_json(json.load(fh))
    except FileNotFoundError:
        return bundled_model(path_or_name)


def _require_no_zero(alpha):
    if alpha.contains_zero():
        raise ValueError("test function support must exclude 0")


def statement_side(model, rep, alpha):
    """Sum over unramified primitive orbits of l * (eps_{-k} Tr rho(h0^{-k}) alpha(-kl) + eps_k Tr rho(h0^k) alpha(kl))."""
    _require_no_zero(alpha)
    G = model.group
    total = 0j
    for o in model.orbits:
        if o.ramified:
            if not inertia_sum_vanishes(rep, o.stabilizer):
                raise ValueError("representation has invariants under a ramified stabilizer")
            continue
        for k in range(1, model.max_k(o, alpha) + 1):
            t = k * o.length
            plus = o.sign(k, G.identity) * rep.trace(G.power(o.holonomy, k)) * float(alpha(t))
            minus = o.sign(-k, G.identity) * rep.trace(G.power(o.holonomy, -k)) * float(alpha(-t))
            total += o.length * (plus + minus)
    return total


def proof_side(model, rep, alpha, with_terms=False):
    """(1/|G|) sum_h sum over closed curves of h^{-1} phi^t of length * sign * Tr rho(h) * alpha(t).

    For an orbit with stabilizer H the lifts are the cosets lH; the curve
    through l x0 closes at time k T0 under h^{-1} phi exactly when
    l^{-1} h l lies in h0^k H.
    """
    _require_no_zero(alpha)
    G = model.group
    total = 0j
    signs_used = []
    for o in model.orbits:
        reps = G.left_cosets(o.stabilizer)
        K = model.max_k(o, alpha)
        for k in itertools.chain(range(-K, 0), range(1, K + 1)):
            target = {G.mul(G.power(o.holonomy, k), u) for u in o.stabilizer}
            a = float(alpha(k * o.length))
            if a == 0.0:
                continue
            for h in G.elements:
                for l in reps:
                    if G.conj(G.inv(l), h) in target:
                        eps = o.sign(k, l)
                        signs_used.append(eps)
                        total += o.length * eps * rep.trace(h) * a
    total /= G.order
    return (total, signs_used) if with_terms else total


# -- fixed-point factors ---------------------------------------------------------------

def gs_fixed_point_factor(place, t):
    """Local Guillemin-Sternberg weight 1/|det(1 - D phi_t)| on the transverse directions."""
    if t == 0:
        raise ValueError("t = 0 is not transversal")
    kind = place.place_type if isinstance(place, FixedPointDatum) else place
    if kind == "real":
        return 1.0 / abs(1.0 - math.exp(-2 * t))
    if kind == "complex":
        return 1.0 / abs(1.0 - math.exp(-t))
    raise ValueError("place must be real or complex")


def averaged_fixed_point_factor(t, eps):
    """Average of the complex-place weight over the involution, twisted by eps."""
    if t == 0:
        raise ValueError("t = 0 is not transversal")
    if t > 0:
        u = math.exp(-t)
        return 0.5 * (1 / (1 - u) + eps / (1 + u))
    u = math.exp(t)
    return 0.5 * (u / (1 - u) + eps * u / (1 + u))


def dedekind_real_weight(t):
    """Real-place density of the Dedekind explicit formula."""
    if t > 0:
        return 1.0 / -math.expm1(-2 * t)
    return math.exp(t) / -math.expm1(2 * t)


def real_place_comparison(t):
    """Raw fixed-point factor versus the Dedekind real-place weight, and the averaged factor."""
    raw = gs_fixed_point_factor("real", t)
    target = dedekind_real_weight(t)
    avg = averaged_fixed_point_factor(t, 1)
    return {"t": t, "raw": raw, "dedekind_weight": target, "averaged": avg,
            "raw_matches": abs(raw - target) <= 1e-14 * max(1.0, abs(target)),
            "averaged_matches": abs(avg - target) <= 1e-14 * max(1.0, abs(target))}


# -- invariant trace identity ---------------------------------------------------------------

def invariant_trace_check(rep, theta, z, t):
    """(dim W^G, |Tr(e^{t theta} on W^G) - dim e^{tz}|) for theta commuting with the action."""
    G = rep.group
    theta = np.asarray(theta, dtype=complex)
    n = theta.shape[0]
    scale = max(1.0, np.max(np.abs(theta)))
    for g in G.elements:
        M = rep(g)
        if np.max(np.abs(M @ theta - theta @ M)) > 1e-10 * scale:
            raise ValueError("theta does not commute with the group action")
    P = sum(rep(g) for g in G.elements) / G.order
    vals, vecs = np.linalg.eigh(0.5 * (P + P.conj().T))
    Q = vecs[:, vals > 0.5]
    dim = Q.shape[1]
    if dim == 0:
        return 0, 0.0
    B = Q.conj().T @ theta @ Q
    N = B - z * np.eye(dim)
    if np.max(np.abs(np.linalg.matrix_power(N, n))) > 1e-9 * scale**n:
        raise ValueError("theta - z is not nilpotent on the invariants")
    tr = complex(np.trace(expm(t * B)))
    return dim, abs(tr - dim * np.exp(t * z))


def dirac_jacobian_factor(A):
    """delta_0(A x) = delta_0(x) / |det A|."""
    A = np.asarray(A, dtype=float)
    d = np.linalg.det(A)
    if abs(d) <= 1e-14 * max(1.0, np.linalg.norm(A)) ** A.shape[0]:
        raise ValueError("matrix is singular")
    return 1.0 / abs(d)


# -- model builders ---------------------------------------------------------------------

def cyclotomic_orbit_model(m, prime_bound):
    """One orbit per prime p <= bound for the cover with group (Z/mZ)*.

    Length log p, stabilizer the inertia group at p, holonomy the Frobenius.
    """
    from .arith import primes_up_to
    from .numberfield import decomposition_data

    G = units_group(m)
    orbits = []
    for p in primes_up_to(prime_bound):
        p = int(p)
        dd = decomposition_data(m, p)
        H = tuple(sorted(G.residue_index[u] for u in dd.inertia_group))
        orbits.append(PrimitiveOrbit(math.log(p), G.residue_index[dd.frobenius], H))
    fps = [FixedPointDatum("complex", G.residue_index[m - 1])] if m >= 3 else []
    return OrbitModel(G, orbits, fps, f"cyclotomic:{m}")


def character_rep(G, chi):
    """A Dirichlet character as a one-dimensional representation of units_group(m)."""
    E = chi.order_bound
    return one_dim_rep(G, [chi.exponent_of(u) for u in G.residues], E, f"chi{chi.exponents}")


def random_orbit_model(rng, max_order=8, max_orbits=4):
    """A random model and a one-dimensional rep nontrivial on every nontrivial stabilizer."""
    groups = [cyclic_group(n) for n in range(2, max_order + 1)]
    groups += [product_group(cyclic_group(2), cyclic_group(2)),
               product_group(cyclic_group(2), cyclic_group(4)),
               product_group(cyclic_group(2), product_group(cyclic_group(2), cyclic_group(2)))]
    while True:
        G = groups[rng.integers(len(groups))]
        chars = [c for c in abelian_characters(G) if any(c.exponents)]
        rep = chars[rng.integers(len(chars))]
        allowed = [H for H in G.subgroups()
                   if len(H) == 1 or not all(rep.exponents[h] == 0 for h in H)]
        orbits = []
        for _ in range(rng.integers(1, max_orbits + 1)):
            H = allowed[rng.integers(len(allowed))]
            norm = G.normalizer(H)
            h0 = int(norm[rng.integers(len(norm))])
            orbits.append(PrimitiveOrbit(float(rng.uniform(0.3, 1.5)), h0, H))
        return OrbitModel(G, orbits, name=f"random:{G.label}"), rep


def _random_unitary(rng, n):
    z = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_invariant_instance(rng, force_no_invariants=False):
    """(rep on W = V (x) C^k, theta = z + 1 (x) J, z, t) with J nilpotent, in a random basis of V."""
    G = cyclic_group(int(rng.integers(1, 7))) if rng.random() < 0.7 else symmetric_group(3)
    if G.label.startswith("symmetric"):
        pool = [trivial_rep(G), sign_rep(G), standard_rep_s3(G)]
    else:
        pool = [cyclic_character(G, j) for j in range(G.order)]
    if force_no_invariants:
        pool = [r for r in pool if r.label != "trivial" and r.label != "char:0"] or pool
    parts = [pool[int(rng.integers(len(pool)))] for _ in range(int(rng.integers(1, 4)))]
    V = parts[0]
    for r in parts[1:]:
        V = V.direct_sum(r)
    U = _random_unitary(rng, V.dim)
    k = int(rng.integers(1, 4))
    mats = [np.kron(U @ V(g) @ U.conj().T, np.eye(k)) for g in G.elements]
    W = FiniteRep(G, mats, label=f"({V.label})x{k}")
    J = np.triu(rng.normal(size=(k, k)) + 1j * rng.normal(size=(k, k)), 1)
    z = complex(rng.normal(), rng.normal())
    theta = z * np.eye(V.dim * k) + np.kron(np.eye(V.dim), J)
    t = float(rng.uniform(-2, 2))
    return W, theta, z, t
