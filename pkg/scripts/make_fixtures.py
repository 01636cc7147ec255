"""Regenerate fixtures/ : every worked example as a fan file, plus supplied homology.

    python3 scripts/make_fixtures.py [outdir]
"""

import json
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

OUT = Path(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parents[1] / "fixtures")


def dump(name, obj):
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / name).write_text(json.dumps(obj, indent=1) + "\n")


def homology(top, groups, **extra):
    return {"top_degree": top, "groups": [[d, f, list(t)] for d, f, t in groups], **extra}


def fan(rank, rays, cones, refinement=None, **flags):
    obj = {"rank": rank, "rays": [list(r) for r in rays], "cones": [list(c) for c in cones]}
    if flags:
        obj["flags"] = flags
    if refinement:
        obj["refinement"] = {"rays": [list(r) for r in refinement[0]], "cones": [list(c) for c in refinement[1]]}
    return obj


def tri(rays, cones):
    return [tuple(sorted(c)) for c in cones]


# weighted projective planes P(1,1,k)
for k in (2, 3, 5):
    dump(f"p11{k}.json", fan(2, [(-1, 0), (0, 1), (k, -1)], [(0, 1), (1, 2), (0, 2)], complete_hint=True))

dump("index2.json", fan(2, [(0, 1), (-2, -1), (2, -1)], [(0, 1), (1, 2), (0, 2)], complete_hint=True))
dump("affine_cone_7.json", fan(2, [(0, 1), (7, -1)], [(0, 1)], complete_hint=False))
dump("rational_normal_cone_3.json", fan(2, [(3, -1), (0, 1)], [(0, 1)]))
for k, d in ((2, 2), (4, 6), (3, 5)):
    dump(f"quasiproj_k{k}_d{d}.json", fan(2, [(k, 1), (0, 1), (-d, 1)], [(0, 1), (1, 2)], quasiprojective=True))

dump("cond_item3.json", fan(2, [(1, 0), (-1, 1), (-1, -1)], [(0, 1), (0, 2)]))
dump("cond_item4.json", fan(2, [(1, 0), (0, 1), (-1, 0), (0, -1)], [(0, 1), (2, 3)]))
dump("cond_item5.json", fan(3, [(-1, 1, 1), (-1, -1, 1), (0, 0, 1), (1, 1, 1), (1, -1, 1)], [(0, 1, 2), (2, 3, 4)], quasiprojective=True))

# quadric cone: split along Cone(e1, e2+e3)
q_rays = [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)]
dump("quadric.json", fan(3, q_rays, [(0, 1, 2, 3)], refinement=(q_rays, [(0, 1, 3), (0, 2, 3)])))
dump("quadric_homology.json", homology(6, [(3, 1, ()), (4, 1, ()), (6, 1, ())]))

# product of the multiplicity-2 plane cone with a ray; refine by adding e2
p_rays = [(1, 1, 0), (-1, 1, 0), (0, 0, 1)]
dump("product.json", fan(3, p_rays, [(0, 1, 2)], refinement=(p_rays + [(0, 1, 0)], [(0, 2, 3), (1, 2, 3)])))
dump("product_homology.json", homology(6, [(4, 0, (2,)), (6, 1, ())]))

# cube fan, written in a basis of the lattice generated by the vertices
basis = [(1, 1, 1), (1, 1, -1), (1, -1, 1)]


def coords(v):
    # solve v = sum c_i basis_i exactly
    a = [[Fraction(basis[j][i]) for j in range(3)] + [Fraction(v[i])] for i in range(3)]
    for c in range(3):
        p = next(r for r in range(c, 3) if a[r][c])
        a[c], a[p] = a[p], a[c]
        a[c] = [x / a[c][c] for x in a[c]]
        for r in range(3):
            if r != c:
                a[r] = [x - a[r][c] * y for x, y in zip(a[r], a[c])]
    out = tuple(a[i][3] for i in range(3))
    assert all(x.denominator == 1 for x in out)
    return tuple(int(x) for x in out)


verts = list(product((1, -1), repeat=3))
faces, split = [], []
for axis in range(3):
    for sign in (1, -1):
        face = [i for i, v in enumerate(verts) if v[axis] == sign]
        faces.append(face)
        # cyclic order around the face, then cut along one diagonal
        o = [a for a in range(3) if a != axis]
        ring = sorted(face, key=lambda i: {(1, 1): 0, (1, -1): 1, (-1, -1): 2, (-1, 1): 3}[(verts[i][o[0]], verts[i][o[1]])])
        split += [(ring[0], ring[1], ring[2]), (ring[0], ring[2], ring[3])]
c_rays = [coords(v) for v in verts]
dump("cube.json", fan(3, c_rays, faces, refinement=(c_rays, split), quasiprojective=True, complete_hint=True))
dump("cube_homology.json", homology(6, [(0, 1, ()), (2, 1, ()), (3, 2, ()), (4, 5, ()), (6, 1, ())]))

# P(1,1,1,k): rays e1, e2, e3, -e1-e2-k e3; resolution adds -e3
for k in (2, 3):
    w = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -k)]
    cones = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    ref = [(0, 1, 2), (0, 1, 4), (0, 3, 4), (1, 3, 4), (0, 2, 3), (1, 2, 3)]
    dump(f"wp111{k}.json", fan(3, w, cones, refinement=(w + [(0, 0, -1)], ref), quasiprojective=True, complete_hint=True))
dump("p3_homology.json", homology(6, [(0, 1, ()), (2, 1, ()), (4, 1, ()), (6, 1, ())]))

# complete threefold whose singular locus is a cycle of projective lines
v = [(1, 1, 1), (-1, 1, 1), (0, -1, 1)]
v += [(a, b, c - 2) for a, b, c in v]
dump("singular_cycle.json", fan(3, v, [(0, 1, 2), (0, 1, 4, 3), (1, 2, 5, 4), (2, 0, 3, 5), (3, 4, 5)], quasiprojective=True, complete_hint=True))
dump(
    "singular_cycle_homology.json",
    homology(
        6,
        [(0, 1, ()), (2, 1, (2,)), (3, 1, ()), (6, 1, ())],
        comment="only degrees 0, 2, 3, 6 are recorded; the motive check needs H_2 and H_3",
    ),
)

# cofiber inputs for the index-2 surface: E (3 chains, 5 lines), Z (3 points), resolution (8 rays)
dump("index2_E_homology.json", homology(2, [(0, 3, ()), (2, 5, ())]))
dump("index2_Z_homology.json", homology(0, [(0, 3, ())]))
dump("index2_Xt_homology.json", homology(4, [(0, 1, ()), (2, 6, ()), (4, 1, ())]))
dump("index2_X_homology.json", homology(4, [(0, 1, ()), (2, 1, (2,)), (4, 1, ())]))

# one-line exceptional locus over one point, Hirzebruch resolution
dump("hirzebruch_E_homology.json", homology(2, [(0, 1, ()), (2, 1, ())]))
dump("hirzebruch_Z_homology.json", homology(0, [(0, 1, ())]))
dump("hirzebruch_Xt_homology.json", homology(4, [(0, 1, ()), (2, 2, ()), (4, 1, ())]))

# invalid input for negative-path checks
dump("bad_line_cone.json", fan(2, [(1, 0), (-1, 0)], [(0, 1)]))
print(f"wrote {len(list(OUT.glob('*.json')))} files to {OUT}")
