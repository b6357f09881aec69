import pytest
from hypothesis import given, settings

from fraclocdim.families import family, lollipop, path, petersen, star
from fraclocdim.graph import CeilingError
from fraclocdim.symmetry import (
    exists_automorphism_mapping, find_automorphism, is_automorphism, is_vertex_transitive, orbits,
)

from strategies import connected_graphs


@pytest.mark.parametrize("spec", [
    "cycle(9)", "petersen", "hypercube(3)", "complete(5)", "multipartite(3,3)",
    "cartesian(complete(4),complete(4))", "cartesian(complete(2),petersen)",
    "strong(petersen,cycle(5))",
])
def test_transitive(spec):
    assert is_vertex_transitive(family(spec))


@pytest.mark.parametrize("spec", [
    "fan(4)", "star(3)", "lollipop(4,2)", "cartesian(path(3),path(3))", "multipartite(2,3)",
])
def test_not_transitive(spec):
    assert not is_vertex_transitive(family(spec))


def test_degree_mismatch_short_circuits():
    assert find_automorphism(path(3), 0, 1) is None
    assert exists_automorphism_mapping(petersen(), 0, 7)


def test_star_orbits():
    part = orbits(star(3))
    assert part.classes() == [[0], [1, 2, 3]]
    assert not part.transitive


def test_lollipop_orbits_respect_degree():
    g = lollipop(4, 2)
    for cls in orbits(g).classes():
        assert len({g.degree(v) for v in cls}) == 1
    assert orbits(g).classes() == [[0, 1, 2], [3], [4], [5]]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(2, 8))
def test_found_maps_are_automorphisms(g):
    for v in range(g.n):
        perm = find_automorphism(g, 0, v)
        if perm is not None:
            assert perm[0] == v
            assert is_automorphism(g, perm)
    assert exists_automorphism_mapping(g, g.n - 1, g.n - 1)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(2, 7))
def test_orbit_relation_is_symmetric(g):
    for u in range(g.n):
        for v in range(g.n):
            assert exists_automorphism_mapping(g, u, v) == exists_automorphism_mapping(g, v, u)


def test_is_automorphism_rejects_non_permutations():
    assert not is_automorphism(path(3), [0, 0, 1])
    assert not is_automorphism(path(3), [1, 0, 2])
    assert is_automorphism(path(3), [2, 1, 0])


def test_ceiling():
    with pytest.raises(CeilingError):
        orbits(family("cycle(65)"))
