"""
Motives as canonical direct sums of A{i}[j], and the assembly rules that turn
Borel-Moore homology of a variety with a cellular resolution into its motive
with compact support.

>>> str(curve_motive([2, 2, 2]))
'Z + Z^3[1] + Z{1}'
>>> str(assemble_motive(GradedGroups(4, {2: normalize_group(0, [5]), 4: Z})))
'Z/5{1} + Z{2}'
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .cellularity import CellularityCertificate, certify_cellular, quasiprojective_source
from .errors import (
    BadBranchCount,
    CellularityNotCertified,
    FormatError,
    HypothesisViolated,
    NonCellularInput,
    WrongDimension,
)
from .fan import Fan, FanProfile, validate_fan
from .homology import (
    FGAbelianGroup,
    GradedGroups,
    Z,
    normalize_group,
    surface_bm_homology,
    tree_exceptional_homology,
)
from .resolution import ExceptionalModel, ResolutionResult, resolve_fan_2d


@dataclass(frozen=True, order=True)
class MotiveSummand:
    twist: int
    shift: int
    group: FGAbelianGroup

    def __post_init__(self):
        if self.twist < 0:
            raise ValueError(f"negative twist {self.twist}")
        if self.shift not in (0, 1):
            raise ValueError(f"shift must be 0 or 1, got {self.shift}")
        if self.group.is_zero:
            raise ValueError("summands are nontrivial")

    def terms(self) -> list[str]:
        suffix = (f"{{{self.twist}}}" if self.twist else "") + ("[1]" if self.shift else "")
        out = []
        if self.group.free_rank:
            base = "Z" if self.group.free_rank == 1 else f"Z^{self.group.free_rank}"
            out.append(base + suffix)
        out += [f"Z/{t}{suffix}" for t in self.group.torsion]
        return out


class Motive:
    """Direct sum of summands with at most one group per (twist, shift) slot."""

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[MotiveSummand] = ()):
        slots: dict[tuple[int, int], FGAbelianGroup] = {}
        for s in summands:
            key = (s.twist, s.shift)
            slots[key] = slots[key] + s.group if key in slots else s.group
        self.summands = tuple(
            MotiveSummand(t, j, g) for (t, j), g in sorted(slots.items()) if not g.is_zero
        )

    @classmethod
    def of(cls, *parts: tuple) -> "Motive":
        """Build from (group, twist[, shift]) tuples."""
        out = []
        for p in parts:
            g, twist, shift = (*p, 0)[:3]
            if not g.is_zero:
                out.append(MotiveSummand(twist, shift, g))
        return cls(out)

    def __add__(self, other: "Motive") -> "Motive":
        return Motive(self.summands + other.summands)

    def __eq__(self, other):
        return isinstance(other, Motive) and self.summands == other.summands

    def __hash__(self):
        return hash(self.summands)

    def __bool__(self):
        return bool(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def group(self, twist: int, shift: int = 0) -> FGAbelianGroup:
        for s in self.summands:
            if (s.twist, s.shift) == (twist, shift):
                return s.group
        return FGAbelianGroup()

    def __str__(self):
        terms = [t for s in self.summands for t in s.terms()]
        return " + ".join(terms) or "0"

    def __repr__(self):
        return f"Motive({str(self)!r})"

    def to_records(self) -> list[dict]:
        return [
            {"twist": s.twist, "shift": s.shift, "free_rank": s.group.free_rank, "torsion": list(s.group.torsion)}
            for s in self.summands
        ]

    @classmethod
    def from_records(cls, records: Sequence[dict]) -> "Motive":
        out = []
        for r in records:
            g = normalize_group(r["free_rank"], r.get("torsion", []))
            if not g.is_zero:
                out.append(MotiveSummand(r["twist"], r["shift"], g))
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "Motive":
        text = text.strip()
        if text == "0":
            return cls()
        out = []
        for term in text.split("+"):
            m = _TERM.fullmatch(term.strip())
            if not m:
                raise FormatError(f"cannot parse motive term {term.strip()!r}")
            free, tors, twist, shift = m.groups()
            g = normalize_group(0, [int(tors)]) if tors else FGAbelianGroup(int(free or 1))
            if g.is_zero:
                continue
            out.append(MotiveSummand(int(twist or 0), 1 if shift else 0, g))
        return cls(out)


_TERM = re.compile(r"Z(?:\^(\d+)|/(\d+))?(?:\{(\d+)\})?(\[1\])?")


def is_pure_tate(m: Motive) -> bool:
    return all(s.shift == 0 and s.group.is_free for s in m.summands)


def check_hypothesis(h: GradedGroups) -> None:
    for i in range(h.top_degree // 2 + 1):
        if not h[2 * i].is_free and not h[2 * i + 1].is_zero:
            raise HypothesisViolated(i)


def assemble_motive(h: GradedGroups) -> Motive:
    """⊕ H_{2i}{i} ⊕ H_{2i+1}{i}[1], valid when each H_{2i} is free or H_{2i+1} = 0."""
    check_hypothesis(h)
    out = []
    for n, g in h.by_degree.items():
        out.append(MotiveSummand(n // 2, n % 2, g))
    return Motive(out)


def cellular_motive(cell_counts: Sequence[int]) -> Motive:
    if any(a < 0 for a in cell_counts):
        raise ValueError(f"cell counts must be >= 0, got {list(cell_counts)}")
    return Motive(MotiveSummand(i, 0, FGAbelianGroup(a)) for i, a in enumerate(cell_counts) if a)


def exceptional_motive(e: ExceptionalModel) -> Motive:
    return Motive.of((FGAbelianGroup(e.num_components), 0), (FGAbelianGroup(e.total_lines), 1))


def curve_motive(branch_counts: Sequence[int]) -> Motive:
    """Motive of a rational projective curve with one singular point per entry,
    each entry being the number of branches through that point."""
    if any(int(b) < 1 for b in branch_counts):
        raise BadBranchCount(f"branch counts must be >= 1, got {list(branch_counts)}")
    n = len(branch_counts)
    m = sum(int(b) for b in branch_counts)
    return Motive.of((Z, 0), (FGAbelianGroup(m - n), 0, 1), (Z, 1))


# ---------------------------------------------------------------- cofiber


@dataclass(frozen=True)
class DegreeConstraint:
    degree: int
    source_rank: int
    target_rank: int
    min_rank: int
    max_rank: int

    @property
    def forced(self) -> bool:
        return self.min_rank == self.max_rank


@dataclass(frozen=True)
class CofiberReport:
    """Pure objects of the cofiber presentation of M^c(X), with rank bounds for
    the unknown map between them."""

    source: Motive
    target: Motive
    constraints: tuple[DegreeConstraint, ...]
    status: str = "presented, not resolved"
    note: str = "the map source -> target is not determined by the fan; only its ranks are constrained"

    def lines(self) -> list[str]:
        out = [f"source: {self.source}", f"target: {self.target}"]
        for c in self.constraints:
            rng = str(c.min_rank) if c.forced else f"{c.min_rank}..{c.max_rank}"
            out.append(
                f"degree {c.degree}: rank Z^{c.source_rank} -> Z^{c.target_rank} is {rng}"
            )
        out.append(f"status: {self.status}")
        return out


def _require_cellular(name: str, h: GradedGroups) -> None:
    if not h.only_even_free:
        raise NonCellularInput(f"{name} has odd-degree or torsion homology")


def cofiber_diagnostic(
    e: GradedGroups, z: GradedGroups, xt: GradedGroups, x: Optional[GradedGroups] = None
) -> CofiberReport:
    """Source ⊕ H_{2i}(E){i} and target ⊕ (H_{2i}(Z) ⊕ H_{2i}(X̃)){i}.

    With all three cellular, the long exact sequence splits into
    0 -> H_{2i+1}(X) -> H_{2i}(E) -> H_{2i}(Z) ⊕ H_{2i}(X̃) -> H_{2i}(X) -> 0
    (ranks only), which pins the rank of the map when H(X) is supplied.
    """
    for name, h in (("E", e), ("Z", z), ("X~", xt)):
        _require_cellular(name, h)
    top = max(e.top_degree, z.top_degree, xt.top_degree)
    src = Motive(MotiveSummand(n // 2, 0, g) for n, g in e.by_degree.items())
    tgt = Motive(
        MotiveSummand(n // 2, 0, g)
        for h in (z, xt)
        for n, g in h.by_degree.items()
    )
    constraints = []
    for n in range(0, top + 1, 2):
        a = e[n].free_rank
        b = z[n].free_rank + xt[n].free_rank
        if not a and not b:
            continue
        lo, hi = 0, min(a, b)
        if x is not None:
            lo = hi = a - x[n + 1].free_rank
            if lo != b - x[n].free_rank or not 0 <= lo <= min(a, b):
                raise ValueError(f"supplied H(X) is inconsistent with the sequence in degree {n}")
        constraints.append(DegreeConstraint(n, a, b, lo, hi))
    return CofiberReport(source=src, target=tgt, constraints=tuple(constraints))


# ------------------------------------------------------------ surfaces


@dataclass(frozen=True)
class SurfaceMotiveReport:
    motive: Motive
    compact_support: bool
    pure_tate: bool
    degenerate: bool
    profile: FanProfile
    homology: GradedGroups
    resolution: ResolutionResult
    certificate: CellularityCertificate
    annotations: tuple[str, ...] = field(default=())

    @property
    def label(self) -> str:
        return "Mc" if self.compact_support else "M"


def certify_resolution(
    fan: Fan, refined: Fan, flag: Optional[bool], bound: Optional[int] = None
) -> CellularityCertificate:
    """Certify ``refined``; it inherits quasiprojectivity from ``fan`` when it adds rays."""
    if refined == fan:
        return certify_cellular(fan, quasiprojective=flag, bound=bound)
    inherited = quasiprojective_source(fan, flag) is not None
    return certify_cellular(
        refined,
        quasiprojective=None if inherited else False,
        refinement_of_quasiprojective=inherited,
        bound=bound,
    )


def toric_surface_report(fan: Fan, quasiprojective: Optional[bool] = None) -> SurfaceMotiveReport:
    """Resolve, certify the resolution cellular, compute H^BM and assemble."""
    if fan.rank != 2:
        raise WrongDimension("toric_surface_motive needs a rank-2 fan")
    profile = validate_fan(fan)
    res = resolve_fan_2d(fan)
    cert = certify_resolution(fan, res.refined_fan, quasiprojective)
    if not cert.is_cellular:
        raise CellularityNotCertified(cert)
    h = surface_bm_homology(profile)
    m = assemble_motive(h)
    notes = ["complete: M = Mc" if profile.is_complete else "compact support"]
    pure = is_pure_tate(m)
    notes.append("pure Tate" if pure else "not pure Tate")
    if profile.degenerate:
        notes.append("degenerate fan: rays do not span the plane, torsion term taken trivial")
    return SurfaceMotiveReport(
        motive=m,
        compact_support=not profile.is_complete,
        pure_tate=pure,
        degenerate=profile.degenerate,
        profile=profile,
        homology=h,
        resolution=res,
        certificate=cert,
        annotations=tuple(notes),
    )


def toric_surface_motive(fan: Fan, quasiprojective: Optional[bool] = None) -> Motive:
    """M(X) for complete fans, M^c(X) otherwise."""
    return toric_surface_report(fan, quasiprojective).motive


def surface_closed_form(num_rays: int, index_m: int) -> Motive:
    """Z ⊕ Z^{r-2}{1} ⊕ Z/m{1} ⊕ Z{2} for a complete fan with r rays and index m."""
    return Motive.of((Z, 0), (normalize_group(num_rays - 2, [index_m]), 1), (Z, 2))


def surface_cofiber(fan: Fan) -> CofiberReport:
    """Cofiber presentation for a rank-2 fan from its HJ resolution."""
    profile = validate_fan(fan)
    res = resolve_fan_2d(fan)
    ex = res.exceptional
    e = tree_exceptional_homology(ex)
    z = GradedGroups(0, {0: FGAbelianGroup(ex.num_components)})
    refined = validate_fan(res.refined_fan)
    xt = surface_bm_homology(refined)
    x = surface_bm_homology(profile)
    return cofiber_diagnostic(e, z, xt, x)


__all__ = [
    "Motive",
    "MotiveSummand",
    "CofiberReport",
    "DegreeConstraint",
    "SurfaceMotiveReport",
    "assemble_motive",
    "cellular_motive",
    "check_hypothesis",
    "cofiber_diagnostic",
    "curve_motive",
    "exceptional_motive",
    "is_pure_tate",
    "surface_closed_form",
    "surface_cofiber",
    "toric_surface_motive",
    "toric_surface_report",
]
