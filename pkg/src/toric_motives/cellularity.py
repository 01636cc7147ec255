"""
Cellularity certificates for smooth fans via a one-parameter subgroup.

A lattice vector ``u`` certifies cellularity of a smooth quasiprojective
toric variety when

a) the support is star-shaped around ``u`` (|Σ| + u ⊆ |Σ|), and
b) ``<m, u> != 0`` for every Hilbert-basis covector ``m`` of the dual of
   every maximal cone.

Condition a) is conic: |Σ| + u ⊆ |Σ| iff Cone(σ ∪ {u}) ⊆ |Σ| for every
maximal σ, so it is decided exactly with the containment test of
:mod:`toric_motives.polyhedral`.

The module also builds the orbit graph of the singular locus of a rank-3
fan, whose first Betti number obstructs any cellular resolution.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations, product
from typing import Optional, Sequence

import networkx as nx

from .errors import UnboundedLineality, UnsupportedSingularStratum
from .fan import (
    Fan,
    dual_cone,
    has_convex_support,
    is_complete,
    is_smooth_fan,
    minimal_singular_cones,
    support_contains,
    validate_fan,
)
from .lattice import (
    adjugate,
    determinant,
    Vector,
    complete_basis,
    cross,
    dot,
    format_vector,
    kernel_basis,
    matrix_rank,
    neg,
    primitive,
    solve_rational,
    span_basis,
)
from .polyhedral import HRep, cone_hrep, cone_in_union, extreme_rays

DEFAULT_SEARCH_BOUND = 16
SEARCH_BOUND_ENV = "TORIC_MOTIVES_SEARCH_BOUND"


def search_bound() -> int:
    return int(os.environ.get(SEARCH_BOUND_ENV, DEFAULT_SEARCH_BOUND))


class Status(str, Enum):
    CELLULAR = "cellular"
    NOT_CERTIFIED = "not_certified"
    OBSTRUCTED = "obstructed"


class QuasiprojectiveSource(str, Enum):
    USER_FLAG = "user_flag"
    COMPLETE_RANK2 = "complete_rank2"
    CONVEX_SUPPORT_POLYHEDRAL = "convex_support_polyhedral"
    REFINEMENT_OF_QUASIPROJECTIVE = "refinement_of_quasiprojective"


@dataclass(frozen=True)
class CellularityCertificate:
    status: Status
    u: Optional[Vector] = None
    reason: Optional[str] = None
    quasiprojective_source: Optional[QuasiprojectiveSource] = None

    @property
    def is_cellular(self) -> bool:
        return self.status is Status.CELLULAR

    def __str__(self):
        src = self.quasiprojective_source.value if self.quasiprojective_source else "none"
        if self.is_cellular:
            return f"cellular: u = {self.u} (quasiprojective: {src})"
        return f"{self.status.value}: {self.reason} (quasiprojective: {src})"


# ---------------------------------------------------------------- Hilbert bases


def _simplicial_pieces(rays: list[Vector], dim: int) -> list[list[Vector]]:
    """Triangulate a full-dimensional pointed cone in Z^dim (dim <= 3)."""
    if len(rays) == dim:
        return [rays]
    if dim != 3:
        raise ValueError("a pointed full-dimensional cone in rank <= 2 is simplicial")
    h = cone_hrep(rays, 3)
    apex = rays[0]
    pieces = []
    for n in h.inequalities:
        if dot(n, apex) == 0:
            continue
        facet = [r for r in rays if dot(n, r) == 0]
        pieces.append([apex] + facet)
    return pieces


def _parallelepiped_points(gens: list[Vector]) -> list[Vector]:
    """Nonzero lattice points Σ λ_i g_i with 0 <= λ_i < 1."""
    dim = len(gens)
    cols = [[g[i] for g in gens] for i in range(dim)]
    det = determinant(cols)
    adj = adjugate(cols)
    if det < 0:
        det, adj = -det, [[-x for x in row] for row in adj]
    if det == 1:
        return []
    lo = [sum(min(0, g[j]) for g in gens) for j in range(dim)]
    hi = [sum(max(0, g[j]) for g in gens) for j in range(dim)]
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        # λ = adj·x / det
        if all(0 <= dot(row, x) < det for row in adj) and any(x):
            out.append(tuple(x))
    return out


def _pointed_hilbert_basis(rays: list[Vector], dim: int) -> list[Vector]:
    """Hilbert basis of a full-dimensional pointed cone in Z^dim."""
    h = cone_hrep(rays, dim)
    ext = extreme_rays(rays, dim)
    cands = set(ext)
    for piece in _simplicial_pieces(ext, dim):
        cands.update(_parallelepiped_points(piece))
    basis = []
    for x in cands:
        reducible = any(
            g != x and h.contains(tuple(a - b for a, b in zip(x, g))) for g in cands
        )
        if not reducible:
            basis.append(x)
    return sorted(basis)


def hilbert_basis(
    gens: Sequence[Sequence[int]], rank: int, lineality: Sequence[Sequence[int]] = (), allow_lineality: bool = False
) -> list[Vector]:
    """Minimal generating set of the semigroup Cone(gens) ∩ Z^rank.

    ``lineality`` adds extra linear directions to the cone. A cone with
    nonzero lineality space contributes ± a lattice basis of that space;
    this requires ``allow_lineality``.

    >>> hilbert_basis([(1, 0), (1, 2)], 2)
    [(1, 0), (1, 1), (1, 2)]
    """
    gens = [tuple(g) for g in gens if any(g)]
    lineality = [tuple(v) for v in lineality if any(v)]
    all_gens = gens + lineality + [neg(v) for v in lineality]
    if not all_gens:
        return []
    h = cone_hrep(all_gens, rank)
    if not h.is_pointed:
        if not allow_lineality:
            raise UnboundedLineality(f"Cone({gens}) contains a line")
        lin = kernel_basis(list(h.equations) + list(h.inequalities), rank)
        basis = complete_basis(lin, rank)
        k = len(lin)
        quotient = []
        for g in all_gens:
            coords = solve_rational(basis, g)
            quotient.append(tuple(int(c) for c in coords[k:]))
        pointed = hilbert_basis(quotient, rank - k) if any(map(any, quotient)) else []
        lifts = [
            tuple(sum(c * basis[k + i][j] for i, c in enumerate(q)) for j in range(rank))
            for q in pointed
        ]
        return sorted(set(lifts) | set(lin) | {neg(v) for v in lin})
    span = span_basis(all_gens, rank)
    k = len(span)
    if k == rank:
        return _pointed_hilbert_basis([primitive(g) for g in all_gens], rank)
    basis = complete_basis(span, rank)
    local = []
    for g in all_gens:
        coords = solve_rational(basis, g)
        local.append(primitive(tuple(int(c) for c in coords[:k])))
    hb = _pointed_hilbert_basis(sorted(set(local)), k)
    return sorted(
        tuple(sum(c * span[i][j] for i, c in enumerate(x)) for j in range(rank)) for x in hb
    )


@lru_cache(maxsize=4096)
def _cone_covectors(gens: tuple[Vector, ...], rank: int) -> tuple[Vector, ...]:
    dual = dual_cone(gens, rank)
    return tuple(hilbert_basis(dual.rays, rank, lineality=dual.lineality, allow_lineality=True))


def regularity_covectors(fan: Fan) -> list[Vector]:
    """Hilbert-basis covectors of the duals of all maximal cones (deduplicated)."""
    out = set()
    for c in fan.maximal_cones:
        out.update(_cone_covectors(tuple(fan.generators(c)), fan.rank))
    return sorted(out)


# ---------------------------------------------------------- star-shaped support


def star_shaped_test(fan: Fan, u: Sequence[int]) -> bool:
    """Exact test of |Σ| + u ⊆ |Σ|."""
    u = tuple(u)
    if not any(u):
        return True
    if not support_contains(fan, u):
        return False
    if is_complete(fan):
        return True
    union = [fan.hrep(c) for c in fan.maximal_cones]
    for c in fan.maximal_cones:
        swept = cone_hrep(fan.generators(c) + [u], fan.rank)
        if not cone_in_union(swept, union):
            return False
    return True


def _candidate_directions(fan: Fan) -> list[Vector]:
    """Rays of the central arrangement where the star-shaped set can have edges.

    The set of u with |Σ| + u ⊆ |Σ| is a closed convex cone that is a union of
    cells of the arrangement of the planes spanned by pairs of rays (lines
    spanned by rays in rank 2), so it is generated by the one-dimensional
    cells it contains.
    """
    dirs = set()
    for r in fan.rays:
        dirs.add(r)
        dirs.add(neg(r))
    if fan.rank == 3:
        normals = set()
        for a, b in combinations(fan.rays, 2):
            n = cross(a, b)
            if any(n):
                n = primitive(n)
                normals.add(max(n, neg(n)))
        for n1, n2 in combinations(sorted(normals), 2):
            line = cross(n1, n2)
            if any(line):
                line = primitive(line)
                dirs.add(line)
                dirs.add(neg(line))
    return sorted(dirs)


@dataclass(frozen=True)
class StarShapedSet:
    """The cone of all u with |Σ| + u ⊆ |Σ|, given by generators."""

    generators: tuple[Vector, ...]
    dim: int
    rank: int

    @property
    def hrep(self) -> HRep:
        return cone_hrep(self.generators, self.rank)

    def contains(self, u) -> bool:
        return self.hrep.contains(tuple(u))


def star_shaping_set(fan: Fan) -> StarShapedSet:
    if is_complete(fan):
        gens = [tuple(s * int(i == j) for j in range(fan.rank)) for i in range(fan.rank) for s in (1, -1)]
    elif has_convex_support(fan):
        gens = list(fan.rays)
    else:
        gens = [d for d in _candidate_directions(fan) if star_shaped_test(fan, d)]
    gens = sorted(set(gens))
    h = cone_hrep(gens, fan.rank) if gens else None
    if h is not None and h.is_pointed:
        gens = extreme_rays(gens, fan.rank)
    dim = matrix_rank(gens) if gens else 0
    return StarShapedSet(generators=tuple(gens), dim=dim, rank=fan.rank)


def _shell(radius: int, rank: int):
    for v in product(range(-radius, radius + 1), repeat=rank):
        if max(abs(x) for x in v) == radius:
            yield v


def verify_regular_vector(fan: Fan, u: Sequence[int]) -> bool:
    """Re-check both conditions for ``u`` directly."""
    u = tuple(u)
    covectors = regularity_covectors(fan)
    return all(dot(m, u) != 0 for m in covectors) and star_shaped_test(fan, u)


@dataclass(frozen=True)
class SearchResult:
    u: Optional[Vector]
    reason: Optional[str] = None


def regular_vector_search(fan: Fan, bound: Optional[int] = None) -> SearchResult:
    """Find u satisfying conditions a) and b), or explain why none exists."""
    bound = search_bound() if bound is None else bound
    covectors = regularity_covectors(fan)
    star = star_shaping_set(fan)
    if star.dim == 0:
        return SearchResult(None, "condition a fails for every nonzero u")
    for m in covectors:
        if all(dot(m, g) == 0 for g in star.generators):
            cone = ", ".join(format_vector(g) for g in star.generators)
            return SearchResult(None, f"condition b fails on Cone({cone})")
    for radius in range(1, bound + 1):
        for u in _shell(radius, fan.rank):
            if star.contains(u) and all(dot(m, u) != 0 for m in covectors) and star_shaped_test(fan, u):
                return SearchResult(tuple(u))
    return SearchResult(None, f"bound exhausted: no regular vector with |u|_inf <= {bound}")


def quasiprojective_source(fan: Fan, flag: Optional[bool] = None) -> Optional[QuasiprojectiveSource]:
    """Why X_Σ is quasiprojective, or None when that is not established.

    A user flag wins. Otherwise: complete rank-2 fans are projective, affine
    fans and rank-2 fans with convex support come from a polyhedron, and any
    other rank-2 fan extends to a complete one, so its variety is open in a
    projective surface. Nothing is derived in rank 3.
    """
    if flag is not None:
        return QuasiprojectiveSource.USER_FLAG if flag else None
    if fan.rank == 2 and is_complete(fan):
        return QuasiprojectiveSource.COMPLETE_RANK2
    if len(fan.maximal_cones) == 1 or (fan.rank == 2 and has_convex_support(fan)):
        return QuasiprojectiveSource.CONVEX_SUPPORT_POLYHEDRAL
    if fan.rank == 2:
        return QuasiprojectiveSource.COMPLETE_RANK2
    return None


def certify_cellular(
    fan: Fan,
    quasiprojective: Optional[bool] = None,
    refinement_of_quasiprojective: bool = False,
    bound: Optional[int] = None,
) -> CellularityCertificate:
    """Certificate that the smooth toric variety of ``fan`` is cellular.

    ``quasiprojective`` is a user assertion about ``fan``; ``None`` means
    derive it when possible. ``refinement_of_quasiprojective`` records that
    ``fan`` refines a fan already known to be quasiprojective.
    """
    validate_fan(fan)
    if not is_smooth_fan(fan):
        return CellularityCertificate(Status.OBSTRUCTED, reason="fan is not smooth")
    if quasiprojective is False:
        return CellularityCertificate(Status.NOT_CERTIFIED, reason="fan flagged as not quasiprojective")
    if refinement_of_quasiprojective and quasiprojective is None:
        source = QuasiprojectiveSource.REFINEMENT_OF_QUASIPROJECTIVE
    else:
        source = quasiprojective_source(fan, quasiprojective)
    if source is None:
        return CellularityCertificate(
            Status.NOT_CERTIFIED, reason="quasiprojectivity not established; supply the quasiprojective flag"
        )
    for c in fan.maximal_cones:
        if fan.dim(c) < fan.rank:
            return CellularityCertificate(
                Status.NOT_CERTIFIED,
                reason=f"maximal cone {c} is not full-dimensional, so torus-fixed points are not finite",
                quasiprojective_source=source,
            )
    found = regular_vector_search(fan, bound)
    if found.u is None:
        return CellularityCertificate(Status.NOT_CERTIFIED, reason=found.reason, quasiprojective_source=source)
    return CellularityCertificate(Status.CELLULAR, u=found.u, quasiprojective_source=source)


# ------------------------------------------------------------ singular locus


@dataclass(frozen=True)
class OrbitGraph:
    """Orbit closures of the singular locus of a rank-3 fan.

    Vertices are torus-fixed points (maximal cones). Each minimal singular
    2-face gives an edge joining the fixed points on its orbit closure: two
    for a projective line, one for an affine line.
    """

    vertices: tuple
    edges: tuple
    component_count: int
    first_betti: int

    @property
    def closed_edges(self):
        return [e for e in self.edges if len(e[1]) == 2]

    def intersection_points(self) -> list:
        """Fixed points lying on at least two singular curves."""
        deg = {}
        for _, ends in self.edges:
            for v in ends:
                deg[v] = deg.get(v, 0) + 1
        return sorted(v for v, k in deg.items() if k >= 2)


def singular_locus_graph(fan: Fan) -> OrbitGraph:
    if fan.rank != 3:
        raise ValueError("the orbit graph is defined for rank-3 fans")
    validate_fan(fan)
    full = [c for c in fan.maximal_cones if fan.dim(c) == 3]
    vertices = set()
    edges = []
    g = nx.MultiGraph()
    for tau in minimal_singular_cones(fan):
        dim = fan.dim(tau)
        if dim == 3:
            vertices.add(tau)
            g.add_node(tau)
            continue
        if tau in fan.maximal_cones:
            raise UnsupportedSingularStratum(
                f"singular 2-cone {tau} is maximal; its orbit is a punctured line"
            )
        ends = tuple(sorted(c for c in full if set(tau) <= set(c)))
        edges.append((tau, ends))
        for v in ends:
            vertices.add(v)
            g.add_node(v)
        if len(ends) == 2:
            g.add_edge(*ends, key=tau)
    components = nx.number_connected_components(g) if g.number_of_nodes() else 0
    closed = sum(1 for _, e in edges if len(e) == 2)
    return OrbitGraph(
        vertices=tuple(sorted(vertices)),
        edges=tuple(edges),
        component_count=components,
        first_betti=closed - len(vertices) + components,
    )
