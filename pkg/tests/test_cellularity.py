import random
from itertools import product
from math import gcd

import pytest

from oracles import cone_inequalities, cycle_rank, hilbert_oracle_ok, in_cone, random_complete_fan
from toric_motives.cellularity import (
    QuasiprojectiveSource,
    Status,
    certify_cellular,
    hilbert_basis,
    regular_vector_search,
    singular_locus_graph,
    star_shaped_test,
    star_shaping_set,
    verify_regular_vector,
)
from toric_motives.errors import UnboundedLineality, UnsupportedSingularStratum
from toric_motives.fan import Fan, dual_cone, minimal_singular_cones

DUALS_2D = [
    ((0, 1), (d, -k)) for d in range(1, 11) for k in range(0, d) if gcd(d, k) == 1
]


@pytest.mark.parametrize("u1,u2", DUALS_2D)
def test_hilbert_basis_2d_duals(u1, u2):
    dual = dual_cone([u1, u2], 2).rays
    hb = hilbert_basis(dual, 2)
    ok, why = hilbert_oracle_ok(hb, dual, 2, 12)
    assert ok, why


def _fixture_cones_3d(fixture_fan):
    cones = []
    for name in ("quadric", "product", "cond_item5", "singular_cycle", "cube", "wp1112"):
        ff = fixture_fan(f"{name}.json")
        for fan in filter(None, (ff.fan, ff.refinement)):
            for c in fan.maximal_cones:
                gens = fan.generators(c)
                if fan.dim(c) == 3:
                    cones.append(tuple(map(tuple, gens)))
    return sorted(set(cones))


def test_hilbert_basis_3d_fixture_cones(fixture_fan):
    cones = _fixture_cones_3d(fixture_fan)
    assert len(cones) > 10
    for gens in cones:
        ok, why = hilbert_oracle_ok(hilbert_basis(gens, 3), gens, 3, 3)
        assert ok, (gens, why)
        dual = dual_cone(gens, 3).rays
        ok, why = hilbert_oracle_ok(hilbert_basis(dual, 3), dual, 3, 3)
        assert ok, (dual, why)


def test_hilbert_basis_lineality_and_lower_dim():
    with pytest.raises(UnboundedLineality):
        hilbert_basis([(1, 0), (-1, 0)], 2)
    hb = hilbert_basis([(1, 0, 0)], 3, lineality=[(0, 1, 0)], allow_lineality=True)
    assert set(hb) == {(1, 0, 0), (0, 1, 0), (0, -1, 0)}
    assert hilbert_basis([(1, 0, 0), (1, 2, 0)], 3) == [(1, 0, 0), (1, 1, 0), (1, 2, 0)]


def _star_oracle(fan, u, box=6):
    """Look for x in |Σ| with x + u outside |Σ|, over a box."""
    full = [cone_inequalities(fan.generators(c), fan.rank) for c in fan.maximal_cones]

    def inside(x):
        return any(in_cone(q, (), x) for q in full)

    return all(
        inside(tuple(a + b for a, b in zip(x, u)))
        for x in product(range(-box, box + 1), repeat=fan.rank)
        if inside(x)
    )


def test_item3_star_shaped_set(fixture_fan):
    fan = fixture_fan("cond_item3.json").fan
    s = star_shaping_set(fan)
    assert s.contains((1, 0)) and not s.contains((0, 1))
    for u in product(range(-3, 4), repeat=2):
        assert s.contains(u) == star_shaped_test(fan, u) == _star_oracle(fan, u)


def test_item4_has_no_star_shaping_vector(fixture_fan):
    fan = fixture_fan("cond_item4.json").fan
    for u in product(range(-8, 9), repeat=2):
        if any(u):
            assert not star_shaped_test(fan, u)
            assert not _star_oracle(fan, u, box=max(map(abs, u)) + 1)
    assert star_shaping_set(fan).dim == 0
    res = regular_vector_search(fan)
    assert res.u is None and res.reason == "condition a fails for every nonzero u"
    cert = certify_cellular(fan)
    assert cert.status is Status.NOT_CERTIFIED


def test_item5_reason(fixture_fan):
    ff = fixture_fan("cond_item5.json")
    res = regular_vector_search(ff.fan)
    assert res.u is None and res.reason == "condition b fails on Cone(e3)"
    # the cones have multiplicity 2, so certification stops before the search
    assert certify_cellular(ff.fan, ff.quasiprojective).status is Status.OBSTRUCTED


def test_quadric_refinement_vector(fixture_fan):
    ff = fixture_fan("quadric.json")
    assert verify_regular_vector(ff.refinement, (1, 2, 1))
    cert = certify_cellular(ff.refinement, refinement_of_quasiprojective=True)
    assert cert.is_cellular
    assert cert.quasiprojective_source is QuasiprojectiveSource.REFINEMENT_OF_QUASIPROJECTIVE
    assert verify_regular_vector(ff.refinement, cert.u)


def test_star_shaped_additive_on_random_fans():
    rng = random.Random(9)
    item3 = Fan.from_data(2, [(1, 0), (-1, 1), (-1, -1)], [(0, 1), (0, 2)])
    s = star_shaping_set(item3)
    for _ in range(50):
        u = (rng.randint(-4, 4), rng.randint(-4, 4))
        v = (rng.randint(-4, 4), rng.randint(-4, 4))
        if s.contains(u) and s.contains(v):
            assert star_shaped_test(item3, (u[0] + v[0], u[1] + v[1]))
    for _ in range(10):
        f = random_complete_fan(rng)
        assert star_shaped_test(f, (rng.randint(-5, 5), rng.randint(-5, 5)))


def test_certificates_for_complete_and_singular():
    p2 = Fan.from_data(2, [(1, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
    cert = certify_cellular(p2)
    assert cert.is_cellular and cert.quasiprojective_source is QuasiprojectiveSource.COMPLETE_RANK2
    assert verify_regular_vector(p2, cert.u)
    sing = Fan.from_data(2, [(0, 1), (2, -1)], [(0, 1)])
    assert certify_cellular(sing).status is Status.OBSTRUCTED
    assert certify_cellular(p2, quasiprojective=False).status is Status.NOT_CERTIFIED


def test_search_results_verify_on_random_smooth_fans():
    from toric_motives.resolution import resolve_fan_2d

    rng = random.Random(12)
    for _ in range(15):
        f = resolve_fan_2d(random_complete_fan(rng, 6, 6)).refined_fan
        res = regular_vector_search(f)
        assert res.u is not None and verify_regular_vector(f, res.u)


def test_orbit_graph_singular_cycle(fixture_fan):
    fan = fixture_fan("singular_cycle.json").fan
    g = singular_locus_graph(fan)
    assert g.first_betti == 1 and len(g.vertices) == 5
    assert len(g.closed_edges) == 5
    assert g.first_betti == cycle_rank(g.vertices, [e for _, e in g.closed_edges])


def test_orbit_graph_open_edge(fixture_fan):
    fan = fixture_fan("product.json").fan
    g = singular_locus_graph(fan)
    assert g.first_betti == 0 and len(g.edges) == 1 and not g.closed_edges
    quad = fixture_fan("quadric.json").fan
    g = singular_locus_graph(quad)
    assert g.vertices == ((0, 1, 2, 3),) and not g.edges


def test_orbit_graph_rejects_maximal_singular_2cone():
    f = Fan.from_data(3, [(1, 1, 0), (-1, 1, 0)], [(0, 1)])
    assert minimal_singular_cones(f) == [(0, 1)]
    with pytest.raises(UnsupportedSingularStratum):
        singular_locus_graph(f)
