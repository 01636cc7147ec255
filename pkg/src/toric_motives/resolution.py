"""
Hirzebruch-Jung resolution of rank-2 fans.

Each singular 2-cone is moved by an SL2(Z) map to Cone((0,1), (d,-k)) with
0 < k < d, the rays (0,1) = w0, (1,0) = w1, w_{i+1} = a_i w_i - w_{i-1} are
inserted for the continued fraction d/k = [a_1, ..., a_l], and the result is
mapped back. Over one singular point the exceptional curves form a chain of
``l`` projective lines.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import WrongDimension
from .fan import Fan, cone_multiplicity, is_smooth_cone, validate_fan
from .lattice import Vector, add, det2, hj_expand, scale


@dataclass(frozen=True)
class ResolutionResult:
    refined_fan: Fan
    added_rays: tuple[Vector, ...]
    # maps each singular maximal cone of the input to the number of rays inserted into it
    per_cone_chains: dict

    @property
    def exceptional(self) -> "ExceptionalModel":
        chains = [n for n in self.per_cone_chains.values() if n]
        return ExceptionalModel(
            num_components=len(chains), total_lines=sum(chains), chain_lengths=tuple(chains)
        )


@dataclass(frozen=True)
class ExceptionalModel:
    """Disjoint union of chains of projective lines, one chain per singular cone."""

    num_components: int
    total_lines: int
    chain_lengths: tuple[int, ...]

    def __post_init__(self):
        if sum(self.chain_lengths) != self.total_lines or len(self.chain_lengths) != self.num_components:
            raise ValueError("inconsistent exceptional model")
        if any(c < 1 for c in self.chain_lengths):
            raise ValueError("chains have at least one line")

    @classmethod
    def from_chains(cls, chains) -> "ExceptionalModel":
        chains = tuple(int(c) for c in chains)
        return cls(num_components=len(chains), total_lines=sum(chains), chain_lengths=chains)


def _normal_form(u1: Vector, u2: Vector):
    """Return (d, k, w) with det(u1, u2) = -d < 0 and u2 = d*w - k*u1, 0 <= k < d.

    The basis (w, u1) of Z^2 has det(w, u1) = 1, so (x, y) -> x*w + y*u1 maps
    Cone((0,1), (d,-k)) onto Cone(u1, u2).
    """
    d = -det2(u1, u2)
    # extended gcd for w with w0*u1[1] - w1*u1[0] = 1
    a, b = u1[1], -u1[0]
    old_r, r, old_s, s, old_t, t = a, b, 1, 0, 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    w = (old_s, old_t)
    # u2 = d*w + b2*u1; shift w by multiples of u1 so that b2 = -k with 0 <= k < d
    b2 = det2(w, u2)
    k = (-b2) % d
    t_shift = (b2 + k) // d
    w = add(w, scale(t_shift, u1))
    return d, k, w


def resolve_cone_2d(u1, u2) -> list[Vector]:
    """Rays to insert into Cone(u1, u2), listed in angular order from u1 to u2.

    >>> resolve_cone_2d((0, 1), (2, -1))
    [(1, 0)]
    """
    u1, u2 = tuple(u1), tuple(u2)
    if len(u1) != 2 or len(u2) != 2 or det2(u1, u2) == 0:
        raise WrongDimension(f"Cone({u1}, {u2}) is not 2-dimensional")
    if det2(u1, u2) > 0:
        return resolve_cone_2d(u2, u1)[::-1]
    d, k, w = _normal_form(u1, u2)
    if d == 1:
        return []
    coeffs = hj_expand(d, k)
    chain = [(0, 1), (1, 0)]
    for a in coeffs[:-1]:
        chain.append(add(scale(a, chain[-1]), scale(-1, chain[-2])))
    inserted = chain[1:]
    return [add(scale(x, w), scale(y, u1)) for x, y in inserted]


def resolve_fan_2d(fan: Fan) -> ResolutionResult:
    """Smooth refinement of a rank-2 fan by HJ subdivision of its singular cones.

    Input rays keep their indices; inserted rays are appended cone by cone.
    """
    if fan.rank != 2:
        raise WrongDimension("resolve_fan_2d needs a rank-2 fan")
    validate_fan(fan)
    rays = list(fan.rays)
    cones = []
    added: list[Vector] = []
    chains = {}
    for c in fan.maximal_cones:
        if len(c) < 2 or is_smooth_cone(fan, c):
            cones.append(c)
            continue
        i, j = c
        new = resolve_cone_2d(fan.rays[i], fan.rays[j])
        chains[c] = len(new)
        idx = [i]
        for r in new:
            rays.append(r)
            added.append(r)
            idx.append(len(rays) - 1)
        idx.append(j)
        cones.extend(tuple(sorted(p)) for p in zip(idx, idx[1:]))
    refined = Fan.from_data(2, rays, cones)
    validate_fan(refined)
    assert all(
        len(c) < 2 or cone_multiplicity(refined, c) == 1 for c in refined.maximal_cones
    ), "HJ subdivision left a singular cone"
    return ResolutionResult(refined_fan=refined, added_rays=tuple(added), per_cone_chains=chains)
