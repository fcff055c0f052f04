"""Root enumeration and one-parameter orbit connections."""

import pytest

import toricstrata as ts

from oracles import brute_force_roots


A1 = ts.build_cone(2, [(1, 0), (1, 2)])
RANK3 = ts.build_cone(3, [(1, 0, 0), (1, 2, 0), (0, 1, 2)])


def quadrant(n):
    return ts.build_cone(
        n, [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    )


def face(cone, ray_indices):
    return ts.face_from_ray_indices(cone, ray_indices)


# ---------------------------------------------------------------------------
# individual roots


def test_demazure_root_validates_the_definition():
    root = ts.demazure_root(A1, (-1, 1), 0)
    assert root.vector == (-1, 1) and root.distinguished_ray == 0
    with pytest.raises(ts.InputError):
        ts.demazure_root(A1, (-1, 0), 0)  # pairs to -1 with both rays
    with pytest.raises(ts.InputError):
        ts.demazure_root(A1, (1, 0), 0)  # pairs to +1 with the ray
    with pytest.raises(ts.InputError):
        ts.demazure_root(A1, (-2, 1), 0)  # pairs to -2, not -1
    with pytest.raises(ts.InputError):
        ts.demazure_root(A1, (-1, 1), 1)  # wrong distinguished ray
    with pytest.raises(ts.InputError):
        ts.demazure_root(A1, (-1, 1), 5)  # ray index out of range


def test_default_box_bound_scales_with_the_rays():
    assert ts.default_box_bound(quadrant(2)) == 10
    assert ts.default_box_bound(RANK3) == 20


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_roots_on_the_quadrant_counts():
    for n in (2, 3):
        cone = quadrant(n)
        for bound in (1, 2, 3):
            per_ray = ts.enumerate_roots(cone, bound)
            assert len(per_ray) == n
            for roots in per_ray:
                assert len(roots) == (bound + 1) ** (n - 1)


def test_enumerate_roots_matches_brute_force_scan():
    for cone, bound in ((A1, 2), (RANK3, 3), (quadrant(3), 2)):
        per_ray = ts.enumerate_roots(cone, bound)
        expected = brute_force_roots(cone, bound)
        for i, roots in enumerate(per_ray):
            assert [r.vector for r in roots] == expected[i]
            for r in roots:
                assert r.distinguished_ray == i


def test_enumerate_roots_a1_reference_values():
    per_ray = ts.enumerate_roots(A1, 2)
    assert [r.vector for r in per_ray[0]] == [(-1, 1), (-1, 2)]
    assert [r.vector for r in per_ray[1]] == [(1, -1)]


def test_every_ray_keeps_producing_roots_as_the_box_grows():
    # root sets here are infinite: each larger box yields strictly more
    for cone in (A1, RANK3):
        for i in range(cone.nrays):
            small = len(ts.enumerate_roots(cone, 4)[i])
            large = len(ts.enumerate_roots(cone, 8)[i])
            assert 0 < small < large


# ---------------------------------------------------------------------------
# connections


def test_connection_yes_on_the_quadric_cone():
    for ray in (0, 1):
        verdict = ts.connection_exists(A1, face(A1, []), face(A1, [ray]))
        assert verdict.status == "yes"
        assert verdict.witness.distinguished_ray == ray
        # the witness vanishes against no ray of the source face (it is the
        # apex) and pairs -1 against the distinguished ray
        ts.demazure_root(A1, verdict.witness.vector, ray)


def test_connection_certified_no_on_the_quadric_cone():
    for ray in (0, 1):
        verdict = ts.connection_exists(A1, face(A1, [ray]), face(A1, [0, 1]))
        assert verdict.status == "no"
        assert verdict.certificate == "integral-equalities"


def test_connection_no_is_combinatorial_for_distant_faces():
    verdict = ts.connection_exists(RANK3, face(RANK3, []), face(RANK3, [0, 1]))
    assert verdict.status == "no" and verdict.certificate == "combinatorial"
    verdict = ts.connection_exists(RANK3, face(RANK3, [0]), face(RANK3, [1, 2]))
    assert verdict.status == "no" and verdict.certificate == "combinatorial"


def test_connection_rejects_foreign_faces():
    square = ts.build_cone(3, [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)])
    full = ts.face_from_ray_indices(square, [0, 1, 2, 3])
    with pytest.raises(ts.InputError):
        ts.connection_exists(RANK3, face(RANK3, [0, 1, 2]), full)


def test_connection_inconclusive_at_zero_box_bound():
    verdict = ts.connection_exists(A1, face(A1, []), face(A1, [0]), box_bound=0)
    assert verdict.status == "inconclusive"
    assert verdict.bound_used == 0


def test_connection_graph_of_the_cyclic_example():
    graph = ts.connection_graph(RANK3)
    assert len(graph.verdicts) == 12
    by_pair = {
        (graph.faces[i1].ray_indices, graph.faces[i2].ray_indices): v
        for i1, i2, v in graph.verdicts
    }
    # the three impossible transitions, certified by integral equalities
    for pair in (
        ((0, 1), (0, 1, 2)),
        ((0,), (0, 1)),
        ((1,), (0, 1)),
    ):
        assert by_pair[pair].status == "no"
        assert by_pair[pair].certificate == "integral-equalities"
    statuses = [v.status for v in by_pair.values()]
    assert statuses.count("yes") == 7
    assert statuses.count("no") == 5
    assert statuses.count("inconclusive") == 0


def test_connection_graph_components_split_off_the_singular_faces():
    graph = ts.connection_graph(RANK3)
    components = ts.graph_components(graph)
    as_rays = sorted(
        tuple(sorted(graph.faces[i].ray_indices for i in comp))
        for comp in components
    )
    assert as_rays == [
        ((), (0,), (0, 2), (1,), (1, 2), (2,)),
        ((0, 1),),
        ((0, 1, 2),),
    ]


def test_isolated_faces_of_the_cyclic_example_are_fully_certified():
    graph = ts.connection_graph(RANK3)
    isolated = ts.isolated_faces(graph)
    assert {f.face.ray_indices for f in isolated} == {(0, 1), (0, 1, 2)}
    assert all(f.fully_certified for f in isolated)


def test_quadrant_connection_graph_is_fully_connected():
    graph = ts.connection_graph(quadrant(3))
    assert all(v.status == "yes" for _, _, v in graph.verdicts)
    assert len(ts.graph_components(graph)) == 1
    assert ts.isolated_faces(graph) == ()


def test_connection_witnesses_always_revalidate():
    for cone in (A1, RANK3, quadrant(2), quadrant(3)):
        graph = ts.connection_graph(cone)
        for i1, i2, verdict in graph.verdicts:
            if not verdict.is_yes():
                continue
            root = verdict.witness
            tau = root.distinguished_ray
            # tau is the one extra ray of the target face
            extra = set(graph.faces[i2].ray_indices) - set(
                graph.faces[i1].ray_indices
            )
            assert extra == {tau}
            # the root restricts to zero on the source face's rays
            for i in graph.faces[i1].ray_indices:
                pairing = sum(
                    a * b for a, b in zip(cone.rays[i], root.vector)
                )
                assert pairing == 0
