"""Brute-force oracles, written independently of the package code paths."""

from __future__ import annotations

import functools
import random
from fractions import Fraction
from itertools import combinations, product
from math import gcd

from toric_motives import Fan


# --------------------------------------------------------------- 2D helpers

def cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _half(v):
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angular_cmp(a, b):
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = cross2(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def angular_sort(vs):
    return sorted(vs, key=functools.cmp_to_key(angular_cmp))


def random_primitive(rng, bound, dim=2):
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(dim))
        if any(v) and functools.reduce(gcd, v) == 1:
            return v


def random_complete_fan(rng, max_rays=8, bound=10) -> Fan:
    """Complete rank-2 fan: rays in angular order, consecutive pairs strictly convex."""
    while True:
        r = rng.randint(3, max_rays)
        vs = set()
        while len(vs) < r:
            vs.add(random_primitive(rng, bound))
        vs = angular_sort(vs)
        if all(cross2(vs[i], vs[(i + 1) % r]) > 0 for i in range(r)):
            rng.shuffle(order := list(range(r)))
            rays = [vs[i] for i in order]
            pos = {v: k for k, v in enumerate(rays)}
            return Fan.from_data(2, rays, [(pos[vs[i]], pos[vs[(i + 1) % r]]) for i in range(r)])


def random_gl2(rng, max_len=5):
    gens = [((0, -1), (1, 0)), ((0, 1), (-1, 0)), ((1, 1), (0, 1)), ((1, -1), (0, 1)), ((-1, 0), (0, 1))]
    m = ((1, 0), (0, 1))
    for _ in range(rng.randint(0, max_len)):
        g = rng.choice(gens)
        m = tuple(tuple(sum(m[i][k] * g[k][j] for k in range(2)) for j in range(2)) for i in range(2))
    return m


# ------------------------------------------------------ gcd of maximal minors

def det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([row[:j] + row[j + 1 :] for row in m[1:]]) for j in range(n))


def gcd_of_minors(rows, k):
    """gcd of all k x k minors of the matrix whose rows are ``rows``."""
    cols = len(rows[0])
    g = 0
    for rs in combinations(range(len(rows)), k):
        for cs in combinations(range(cols), k):
            g = gcd(g, det([[rows[r][c] for c in cs] for r in rs]))
    return g


# ---------------------------------------------------------------- HJ oracle

def hj_boundary_points(u1, u2):
    """Lattice points on the compact boundary of conv(Cone(u1,u2) ∩ Z^2 minus 0),
    u1 and u2 excluded, found by brute force inside the triangle (0, u1, u2)."""
    if cross2(u1, u2) < 0:
        u1, u2 = u2, u1
    d = cross2(u1, u2)
    b = max(map(abs, u1 + u2))
    pts = []
    for x in product(range(-b, b + 1), repeat=2):
        if x == (0, 0):
            continue
        # x = a u1 + c u2 with a, c >= 0 and a + c <= 1
        a, c = Fraction(cross2(x, u2), d), Fraction(cross2(u1, x), d)
        if a >= 0 and c >= 0 and a + c <= 1:
            pts.append(x)
    # monotone-chain hull with collinear points kept, then the chain facing 0.
    # Pieces of the far segment u1-u2 belong to that chain only when no point
    # lies strictly nearer the origin.
    def weight(x):
        return Fraction(cross2(x, u2), d) + Fraction(cross2(u1, x), d)

    near = any(weight(p) < 1 for p in pts)
    hull = _hull_keep_collinear(pts)
    n = len(hull)
    edges = [(hull[i], hull[(i + 1) % n]) for i in range(n)]
    edges = [(a, b) for a, b in edges if not (near and weight(a) == 1 and weight(b) == 1)]
    return {p for p in pts if p not in (u1, u2) and any(_on_segment(p, a, b) for a, b in edges)}


def _hull_keep_collinear(pts):
    pts = sorted(set(pts))
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) < 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) < 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b):
    return (
        _turn(a, b, p) == 0
        and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


# ------------------------------------------------------------ Hilbert bases

def in_cone(ineqs, eqs, x):
    return all(sum(a * b for a, b in zip(n, x)) >= 0 for n in ineqs) and all(
        sum(a * b for a, b in zip(e, x)) == 0 for e in eqs
    )


def cone_inequalities(gens, dim):
    """Facet normals of a full-dimensional cone (dim 2 or 3), from scratch."""
    gens = [tuple(g) for g in gens]
    cands = set()
    if dim == 2:
        for g in gens:
            cands.add((-g[1], g[0]))
    else:
        for a, b in combinations(gens, 2):
            c = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
            if any(c):
                cands.add(c)
    out = set()
    for n in cands:
        k = functools.reduce(gcd, n)
        n = tuple(x // k for x in n)
        vals = [sum(x * y for x, y in zip(n, g)) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(n)
        if all(v <= 0 for v in vals):
            out.add(tuple(-x for x in n))
    return sorted(out)


def hilbert_oracle_ok(basis, gens, dim, bound):
    """Irreducibility and completeness of ``basis`` over the box [-bound, bound]^dim."""
    ineqs = cone_inequalities(gens, dim)

    def inside(x):
        return in_cone(ineqs, (), x)

    pts = [x for x in product(range(-bound, bound + 1), repeat=dim) if any(x) and inside(x)]
    basis = [tuple(b) for b in basis]
    if not all(inside(b) for b in basis):
        return False, "element outside the cone"
    for b in basis:
        for g in pts:
            rest = tuple(x - y for x, y in zip(b, g))
            if any(rest) and rest != b and inside(rest):
                return False, f"{b} = {g} + {rest} is reducible"

    @functools.lru_cache(maxsize=None)
    def reachable(x):
        if not any(x):
            return True
        for b in basis:
            y = tuple(a - c for a, c in zip(x, b))
            if inside(y) and reachable(y):
                return True
        return False

    for x in pts:
        if not reachable(x):
            return False, f"{x} is not a combination of the basis"
    return True, ""


# ------------------------------------------------------------ union-find

def cycle_rank(vertices, edges):
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    comps = len(parent)
    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            comps -= 1
    return len(edges) - len(parent) + comps


# --------------------------------------------------------- completeness MC

def monte_carlo_complete(fan: Fan, samples=10_000, seed=0):
    """False as soon as a random direction misses every full-dimensional cone.

    Lower-dimensional cones have measure zero, so this is a sound refutation
    of completeness and a probabilistic confirmation otherwise.
    """
    rng = random.Random(seed)
    full = [
        cone_inequalities(fan.generators(c), fan.rank)
        for c in fan.maximal_cones
        if len(c) >= fan.rank
    ]
    full = [ineqs for ineqs in full if len(ineqs) >= fan.rank]
    for _ in range(samples):
        x = tuple(rng.randint(-10**6, 10**6) for _ in range(fan.rank))
        if any(x) and not any(in_cone(ineqs, (), x) for ineqs in full):
            return False
    return True


def cf_value(coeffs):
    val = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        val = a - 1 / val
    return val
