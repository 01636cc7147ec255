"""
Finitely generated abelian groups, graded Borel-Moore homology, and the
closed forms available in low dimension.

>>> str(normalize_group(0, [4, 6]))
'Z/2 + Z/12'
>>> surface_bm_homology(FanProfile(rank=2, d=(1, 3, 3), span_dim=2, is_complete=True, index_m=2))
GradedGroups(top_degree=4, by_degree={0: Z, 2: Z + Z/2, 4: Z})
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import NegativeRank, WrongDimension
from .fan import FanProfile
from .lattice import invariant_factors
from .resolution import ExceptionalModel


@dataclass(frozen=True, order=True)
class FGAbelianGroup:
    """Z^free_rank ⊕ Z/t_1 ⊕ ... with t_1 | t_2 | ... and every t_i >= 2."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise NegativeRank(f"free rank {self.free_rank} < 0")
        t = tuple(self.torsion)
        if any(x < 2 for x in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"{t} is not an invariant-factor chain; use normalize_group")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_free(self) -> bool:
        return not self.torsion

    def __add__(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        return normalize_group(self.free_rank + other.free_rank, self.torsion + other.torsion)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    __repr__ = __str__


ZERO = FGAbelianGroup()
Z = FGAbelianGroup(1)


def normalize_group(free_rank: int, divisors: Iterable[int] = ()) -> FGAbelianGroup:
    """Z^free_rank ⊕ (⊕ Z/d) in invariant-factor form."""
    divisors = list(divisors)
    if any(d <= 0 for d in divisors):
        raise ValueError(f"torsion divisors must be positive, got {divisors}")
    return FGAbelianGroup(free_rank, invariant_factors(divisors))


@dataclass(frozen=True)
class GradedGroups:
    """Sparse graded group: degrees missing from ``by_degree`` are zero."""

    top_degree: int
    by_degree: Mapping[int, FGAbelianGroup] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for n, g in sorted(self.by_degree.items()):
            if n < 0 or n > self.top_degree:
                raise WrongDimension(f"degree {n} outside 0..{self.top_degree}")
            if not g.is_zero:
                clean[int(n)] = g
        object.__setattr__(self, "by_degree", clean)

    @classmethod
    def from_ranks(cls, top_degree: int, groups: Mapping[int, FGAbelianGroup]) -> "GradedGroups":
        return cls(top_degree, dict(groups))

    def __getitem__(self, n: int) -> FGAbelianGroup:
        return self.by_degree.get(n, ZERO)

    def __eq__(self, other):
        if not isinstance(other, GradedGroups):
            return NotImplemented
        return self.top_degree == other.top_degree and self.by_degree == other.by_degree

    def __hash__(self):
        return hash((self.top_degree, tuple(self.by_degree.items())))

    def ranks(self) -> list[int]:
        return [self[n].free_rank for n in range(self.top_degree + 1)]

    def as_list(self) -> list[FGAbelianGroup]:
        return [self[n] for n in range(self.top_degree + 1)]

    @property
    def only_even_free(self) -> bool:
        return all(n % 2 == 0 and g.is_free for n, g in self.by_degree.items())

    def __repr__(self):
        return f"GradedGroups(top_degree={self.top_degree}, by_degree={self.by_degree})"


def surface_bm_homology(p: FanProfile) -> GradedGroups:
    """Borel-Moore homology of a toric surface from its fan profile."""
    if p.rank != 2:
        raise WrongDimension("closed forms exist only for rank-2 fans")
    d0, d1, d2 = p.d
    s = p.span_dim
    h1 = 0 if p.is_complete else -d2 + d1 - d0
    h2 = d1 - s
    h3 = 2 - s
    for name, v in (("H1", h1), ("H2", h2), ("H3", h3)):
        if v < 0:
            raise NegativeRank(f"{name} rank {v} < 0 for profile {p}")
    # torsion Z/m only when the rays span the plane; trivial for degenerate fans
    torsion = [p.index_m] if s == 2 and p.index_m else []
    return GradedGroups(
        4,
        {
            0: Z if p.is_complete else ZERO,
            1: FGAbelianGroup(h1),
            2: normalize_group(h2, torsion),
            3: FGAbelianGroup(h3),
            4: Z,
        },
    )


def cellular_bm_homology(cell_counts: Sequence[int]) -> GradedGroups:
    """H_{2i} = Z^{a_i}, zero in odd degrees."""
    if any(a < 0 for a in cell_counts):
        raise NegativeRank(f"cell counts must be >= 0, got {list(cell_counts)}")
    top = 2 * (len(cell_counts) - 1) if cell_counts else 0
    return GradedGroups(top, {2 * i: FGAbelianGroup(a) for i, a in enumerate(cell_counts)})


def tree_exceptional_homology(e: ExceptionalModel) -> GradedGroups:
    """One point per chain in degree 0, one class per line in degree 2."""
    return GradedGroups(2, {0: FGAbelianGroup(e.num_components), 2: FGAbelianGroup(e.total_lines)})
