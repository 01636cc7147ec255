"""
Fans in rank 2 and 3: validation, face enumeration and the combinatorial
invariants (face counts, span dimension, completeness, index) that the
homology formulas consume.

A fan is stored as a ray table plus cones given by sorted ray indices.
Nothing is assumed about the input: :func:`validate_fan` checks primitivity,
strong convexity, extremality of the listed rays and that cones meet along
common faces, all in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache, reduce
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .errors import (
    BadFaceIntersection,
    DuplicateRay,
    EmptyFan,
    FanError,
    NonPrimitiveRay,
    NotStronglyConvex,
    RankMismatch,
    RedundantRay,
    UnusedRay,
    WrongDimension,
)
from .lattice import Vector, det2, dot, is_primitive, matrix_rank, smith_normal_form
from .polyhedral import HRep, cone_hrep, cone_in_union, cone_subset

Cone = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple[Vector, ...]
    cones: tuple[Cone, ...]

    @classmethod
    def from_data(cls, rank: int, rays: Iterable[Sequence[int]], cones: Iterable[Iterable[int]]) -> "Fan":
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        seen, out = set(), []
        for c in cones:
            key = tuple(sorted(int(i) for i in c))
            if key not in seen:
                seen.add(key)
                out.append(key)
        return cls(rank=int(rank), rays=rays, cones=tuple(out))

    def generators(self, cone: Iterable[int]) -> list[Vector]:
        return [self.rays[i] for i in cone]

    def hrep(self, cone: Iterable[int]) -> HRep:
        return cone_hrep(self.generators(cone), self.rank)

    def dim(self, cone: Iterable[int]) -> int:
        gens = self.generators(cone)
        return matrix_rank(gens) if gens else 0

    @cached_property
    def maximal_cones(self) -> tuple[Cone, ...]:
        sets = [set(c) for c in self.cones]
        return tuple(
            c for c, s in zip(self.cones, sets) if not any(s < t for t in sets)
        )

    @cached_property
    def faces(self) -> frozenset[Cone]:
        """All faces of all cones, the zero cone included as ``()``."""
        out = {()}
        for c in self.maximal_cones:
            out |= _cone_faces(self, c)
        return frozenset(out)

    def faces_by_dim(self) -> dict[int, list[Cone]]:
        res: dict[int, list[Cone]] = {}
        for f in self.faces:
            res.setdefault(self.dim(f), []).append(f)
        return {k: sorted(v) for k, v in sorted(res.items())}

    def transformed(self, matrix: Sequence[Sequence[int]]) -> "Fan":
        """Apply an integer change of basis to every ray."""
        rays = [tuple(dot(row, r) for row in matrix) for r in self.rays]
        return Fan(rank=self.rank, rays=tuple(rays), cones=self.cones)

    def __str__(self):
        cones = ", ".join("(" + ",".join(map(str, c)) + ")" for c in self.cones)
        return f"Fan(rank={self.rank}, rays={list(self.rays)}, cones=[{cones}])"


@dataclass(frozen=True)
class FanProfile:
    """Face counts ``d`` (d[0] = 1 counts the zero cone), span dimension ``s``,
    completeness and, for non-degenerate rank-2 fans, the index ``m``."""

    rank: int
    d: tuple[int, ...]
    span_dim: int
    is_complete: bool
    index_m: Optional[int] = None
    num_rays: int = field(default=0)

    @property
    def degenerate(self) -> bool:
        return self.span_dim < self.rank


def _cone_faces(fan: Fan, cone: Cone) -> frozenset[Cone]:
    return _faces_of(tuple(fan.rays[i] for i in cone), tuple(cone), fan.rank)


@lru_cache(maxsize=65536)
def _faces_of(gens: tuple[Vector, ...], cone: Cone, rank: int) -> frozenset[Cone]:
    h = cone_hrep(gens, rank)
    ray = dict(zip(cone, gens))
    zero_sets = [
        frozenset(i for i in cone if dot(n, ray[i]) == 0) for n in h.inequalities
    ]
    start = frozenset(cone)
    seen = {start}
    todo = [start]
    while todo:
        f = todo.pop()
        for z in zero_sets:
            g = f & z
            if g != f and g not in seen:
                seen.add(g)
                todo.append(g)
    return frozenset(tuple(sorted(f)) for f in seen)


def _check_rays(fan: Fan) -> None:
    if not fan.rays or not fan.cones:
        raise EmptyFan("a fan needs at least one ray and one cone")
    if fan.rank not in (2, 3):
        raise RankMismatch(f"only rank 2 and 3 fans are supported, got rank {fan.rank}")
    seen = {}
    for i, r in enumerate(fan.rays):
        if len(r) != fan.rank:
            raise RankMismatch(f"ray {i} = {r} does not have length {fan.rank}")
        if not any(r) or not is_primitive(r):
            raise NonPrimitiveRay(f"ray {i} = {r} is not a primitive nonzero vector")
        if r in seen:
            raise DuplicateRay(f"rays {seen[r]} and {i} coincide: {r}")
        seen[r] = i


def _check_cone(fan: Fan, cone: Cone) -> None:
    if not cone:
        raise FanError("cones must contain at least one ray")
    if any(not 0 <= i < len(fan.rays) for i in cone):
        raise FanError(f"cone {cone} refers to a missing ray")
    h = fan.hrep(cone)
    if not h.is_pointed:
        raise NotStronglyConvex(f"cone {cone} with rays {fan.generators(cone)} contains a line")
    for i in cone:
        others = [fan.rays[j] for j in cone if j != i]
        if others and cone_hrep(others, fan.rank).contains(fan.rays[i]):
            raise RedundantRay(f"ray {i} = {fan.rays[i]} is not extreme in cone {cone}")


def _proper_intersection(fan: Fan, a: Cone, b: Cone) -> bool:
    shared = tuple(sorted(set(a) & set(b)))
    if shared not in _cone_faces(fan, a) | {()} or shared not in _cone_faces(fan, b) | {()}:
        return False
    ha, hb = fan.hrep(a), fan.hrep(b)
    # fast path: a facet hyperplane separating the two cones
    for n in list(ha.inequalities) + [tuple(-x for x in m) for m in hb.inequalities]:
        if all(dot(n, fan.rays[i]) >= 0 for i in a) and all(dot(n, fan.rays[i]) <= 0 for i in b):
            on_a = tuple(i for i in a if dot(n, fan.rays[i]) == 0)
            on_b = tuple(i for i in b if dot(n, fan.rays[i]) == 0)
            if on_a == shared or on_b == shared:
                return True
    both = HRep(fan.rank, ha.equations + hb.equations, ha.inequalities + hb.inequalities)
    return cone_subset(both, fan.hrep(shared))


def validate_fan(fan: Fan) -> FanProfile:
    """Check every fan axiom exactly and return the face-count profile.

    Results are cached per fan; failures are not.

    >>> validate_fan(Fan.from_data(2, [(-1, 0), (0, 1), (2, -1)], [(0, 1), (1, 2), (0, 2)])).d
    (1, 3, 3)
    """
    return _validated(fan)


@lru_cache(maxsize=4096)
def _validated(fan: Fan) -> FanProfile:
    _check_rays(fan)
    for c in fan.cones:
        _check_cone(fan, c)
    used = set().union(*fan.cones)
    for i in range(len(fan.rays)):
        if i not in used:
            raise UnusedRay(f"ray {i} = {fan.rays[i]} lies in no cone")
    cones = fan.maximal_cones
    for a, b in combinations(cones, 2):
        if not _proper_intersection(fan, a, b):
            raise BadFaceIntersection(f"cones {a} and {b} do not meet along a common face")
    return fan_profile(fan)


def fan_profile(fan: Fan) -> FanProfile:
    by_dim = fan.faces_by_dim()
    d = tuple(len(by_dim.get(i, [])) for i in range(fan.rank + 1))
    s = matrix_rank(list(fan.rays))
    index = fan_index(fan) if fan.rank == 2 and s == 2 else None
    return FanProfile(
        rank=fan.rank,
        d=d,
        span_dim=s,
        is_complete=is_complete(fan),
        index_m=index,
        num_rays=len(fan.rays),
    )


def fan_index(fan: Fan) -> int:
    """gcd of all maximal minors of the ray matrix (index of the ray lattice)."""
    snf = smith_normal_form(list(fan.rays))
    if snf.rank < fan.rank:
        raise WrongDimension("the index is only defined for fans whose rays span the space")
    return reduce(lambda x, y: x * y, snf.nonzero, 1)


def support_contains_cone(fan: Fan, cone: HRep) -> bool:
    """Is the polyhedral cone ``cone`` contained in the support of ``fan``?"""
    return cone_in_union(cone, [fan.hrep(c) for c in fan.maximal_cones])


def support_contains(fan: Fan, x: Sequence[int]) -> bool:
    return any(fan.hrep(c).contains(x) for c in fan.maximal_cones)


@lru_cache(maxsize=4096)
def is_complete(fan: Fan) -> bool:
    return support_contains_cone(fan, HRep(fan.rank, (), ()))


def has_convex_support(fan: Fan) -> bool:
    return support_contains_cone(fan, cone_hrep(fan.rays, fan.rank))


def cone_multiplicity(fan: Fan, cone: Cone) -> int:
    """|det| of the two generators of a 2-dimensional cone (any rank).

    >>> cone_multiplicity(Fan.from_data(2, [(0, 1), (2, -1)], [(0, 1)]), (0, 1))
    2
    """
    gens = fan.generators(cone)
    if len(gens) != 2 or matrix_rank(gens) != 2:
        raise WrongDimension(f"cone {cone} is not 2-dimensional")
    if fan.rank == 2:
        return abs(det2(*gens))
    return reduce(lambda x, y: x * y, smith_normal_form(gens).nonzero, 1)


def is_smooth_cone(fan: Fan, cone: Iterable[int]) -> bool:
    gens = fan.generators(cone)
    return generators_smooth(gens)


def generators_smooth(gens: Sequence[Sequence[int]]) -> bool:
    """True iff ``gens`` extend to a basis of the lattice."""
    if not gens:
        return True
    snf = smith_normal_form(gens)
    return snf.rank == len(gens) and all(x == 1 for x in snf.nonzero)


def is_smooth_fan(fan: Fan) -> bool:
    return all(is_smooth_cone(fan, c) for c in fan.maximal_cones)


def minimal_singular_cones(fan: Fan) -> list[Cone]:
    """Singular faces all of whose proper faces are smooth, sorted by (dim, rays)."""
    faces = sorted(fan.faces, key=lambda f: (fan.dim(f), f))
    singular = [f for f in faces if len(f) >= 2 and not is_smooth_cone(fan, f)]
    out = []
    for f in singular:
        if not any(set(g) < set(f) for g in singular):
            out.append(f)
    return out


@dataclass(frozen=True)
class DualCone:
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]


def dual_cone(gens: Sequence[Sequence[int]], rank: int) -> DualCone:
    """Extreme covectors of the dual cone, plus a basis of its lineality space.

    >>> dual_cone([(0, 1), (2, -1)], 2).rays
    ((1, 0), (1, 2))
    """
    h = cone_hrep(gens, rank)
    return DualCone(rays=tuple(sorted(h.inequalities)), lineality=tuple(h.equations))


def refines(fine: Fan, coarse: Fan) -> bool:
    """Every cone of ``fine`` lies in a cone of ``coarse`` and the supports agree."""
    for c in fine.maximal_cones:
        h = fine.hrep(c)
        if not any(cone_subset(h, coarse.hrep(d)) for d in coarse.maximal_cones):
            return False
    for d in coarse.maximal_cones:
        if not support_contains_cone(fine, coarse.hrep(d)):
            return False
    return True


def standard_basis(n: int) -> list[Vector]:
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]
