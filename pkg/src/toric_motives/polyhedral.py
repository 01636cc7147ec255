"""
Exact polyhedral cones in dimension at most 3.

A cone is handled through its H-representation: integer equations (a basis
of the orthogonal complement of its span) and integer facet inequalities
``n·x >= 0``. Feasibility questions are answered by Fourier-Motzkin
elimination on integer rows, which is exact and cheap in three variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .lattice import Vector, dot, kernel_basis, matrix_rank, neg, primitive

# a row (coeffs, rhs) encodes coeffs·x >= rhs
Row = tuple[tuple[int, ...], int]


@dataclass(frozen=True)
class HRep:
    dim: int
    equations: tuple[Vector, ...]
    inequalities: tuple[Vector, ...]

    def contains(self, x: Sequence[int]) -> bool:
        return all(dot(e, x) == 0 for e in self.equations) and all(
            dot(n, x) >= 0 for n in self.inequalities
        )

    def rows(self) -> list[Row]:
        out = [(n, 0) for n in self.inequalities]
        for e in self.equations:
            out.append((e, 0))
            out.append((neg(e), 0))
        return out

    @property
    def span_dim(self) -> int:
        return self.dim - len(self.equations)

    @property
    def lineality_dim(self) -> int:
        return self.dim - matrix_rank(list(self.equations) + list(self.inequalities))

    @property
    def is_pointed(self) -> bool:
        return self.lineality_dim == 0


@lru_cache(maxsize=65536)
def _hrep_cached(gens: tuple[Vector, ...], dim: int) -> HRep:
    gens = tuple(sorted({primitive(g) for g in gens if any(g)}))
    equations = tuple(primitive(e) for e in kernel_basis(gens, dim)) if gens else tuple(
        tuple(int(i == j) for j in range(dim)) for i in range(dim)
    )
    d = dim - len(equations)
    facets = set()
    if d:
        for sub in combinations(gens, d - 1):
            if sub and matrix_rank(list(sub)) != d - 1:
                continue
            ker = kernel_basis(list(sub) + list(equations), dim)
            if len(ker) != 1:
                continue
            n = primitive(ker[0])
            vals = [dot(n, g) for g in gens]
            if all(v >= 0 for v in vals):
                facets.add(n)
            elif all(v <= 0 for v in vals):
                facets.add(neg(n))
    return HRep(dim=dim, equations=equations, inequalities=tuple(sorted(facets)))


def cone_hrep(gens: Iterable[Sequence[int]], dim: int) -> HRep:
    """H-representation of Cone(gens) in R^dim. Empty ``gens`` gives {0}."""
    return _hrep_cached(tuple(tuple(g) for g in gens), dim)


def _canon(row: Row) -> Row:
    coeffs, rhs = row
    g = reduce(gcd, coeffs, abs(rhs))
    if g > 1:
        return tuple(c // g for c in coeffs), rhs // g
    return row


def feasible(rows: Iterable[Row], dim: int) -> bool:
    """Is {x in Q^dim : coeffs·x >= rhs for every row} nonempty?"""
    system = {_canon(r) for r in rows}
    for var in range(dim):
        pos, negs, rest = [], [], []
        for coeffs, rhs in system:
            c = coeffs[var]
            if c > 0:
                pos.append((coeffs, rhs))
            elif c < 0:
                negs.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        new = set(rest)
        for pc, pr in pos:
            a = pc[var]
            for nc, nr in negs:
                b = -nc[var]
                coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
                new.add(_canon((coeffs, b * pr + a * nr)))
        system = new
        if any(not any(c) and r > 0 for c, r in system):
            return False
    return all(r <= 0 for _, r in system)


def strictly_violates(n: Sequence[int]) -> Row:
    """Row for n·x < 0, scaled to n·x <= -1 (valid for homogeneous systems)."""
    return neg(n), 1


def cone_subset(inner: HRep, outer: HRep) -> bool:
    """inner ⊆ outer, decided exactly."""
    base = inner.rows()
    for n in outer.inequalities:
        if feasible(base + [strictly_violates(n)], inner.dim):
            return False
    for e in outer.equations:
        if feasible(base + [strictly_violates(e)], inner.dim):
            return False
        if feasible(base + [strictly_violates(neg(e))], inner.dim):
            return False
    return True


def _escape_options(cone: HRep) -> list[list[Row]]:
    """Disjoint pieces whose union is the complement of ``cone``.

    Piece i keeps the first i-1 conditions and strictly violates the i-th.
    """
    conds = list(cone.inequalities)
    for e in cone.equations:
        conds.append(e)
        conds.append(neg(e))
    pieces, kept = [], []
    for n in conds:
        pieces.append(kept + [strictly_violates(n)])
        kept = kept + [(tuple(n), 0)]
    return pieces


def cone_in_union(cone: HRep, union: Sequence[HRep]) -> bool:
    """cone ⊆ ∪ union, decided by searching for a point escaping every cone."""
    dim = cone.dim
    for other in union:
        if cone_subset(cone, other):
            return True

    def escapes(rows: list[Row], idx: int) -> bool:
        if idx == len(union):
            return True
        other = union[idx]
        if not feasible(rows + other.rows(), dim):
            # region already misses this cone entirely
            return escapes(rows, idx + 1)
        for piece in _escape_options(other):
            cand = rows + piece
            if feasible(cand, dim) and escapes(cand, idx + 1):
                return True
        return False

    return not escapes(cone.rows(), 0)


def extreme_rays(gens: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    """Primitive extreme rays of a pointed cone, sorted."""
    gens = sorted({primitive(g) for g in gens if any(g)})
    out = []
    for g in gens:
        others = [h for h in gens if h != g]
        if not cone_hrep(others, dim).contains(g):
            out.append(g)
    return out
