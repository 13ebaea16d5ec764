from __future__ import annotations

import pytest

from altcert import (
    CAGES, GenusNegative, HasFixedPoint, NotConnected, NotInvolution, NotPermutation, build_map, cube, cycle, dual,
    euler_characteristic, face_adjacency, faces, genus_two_k5, genus_two_octagon, is_cellular_on, k4, medial,
    medial_face_face, medial_vertex_face, torus_grid
)


def test_k4_counts() -> None:
    smap = k4()

    assert (smap.V, smap.E, smap.F) == (4, 6, 4)
    assert smap.genus == 0
    assert all(smap.degree(v) == 3 for v in smap.vertices)


def test_torus_grid_counts() -> None:
    smap = torus_grid(3, 4)

    assert (smap.V, smap.E, smap.F) == (12, 24, 12)
    assert smap.genus == smap.declared_genus == 1


@pytest.mark.parametrize('smap', [genus_two_octagon(), genus_two_k5()])
def test_genus_two_cages(smap) -> None:
    assert smap.genus == 2
    assert smap.euler == -2


def test_cellular_on_declared_surface() -> None:
    smap = k4()

    assert is_cellular_on(smap)
    assert euler_characteristic(smap) == 2
    assert not is_cellular_on(smap.with_genus(1))
    assert is_cellular_on(torus_grid(3, 3))
    assert euler_characteristic(torus_grid(3, 3)) == 0


def test_face_and_vertex_ids_are_orbit_minima() -> None:
    smap = cube()

    for f, walk in smap.faces.items():
        assert f == min(walk)
        assert all(smap.face_of[d] == f for d in walk)
        assert all(smap.phi(walk[i]) == walk[(i + 1) % len(walk)] for i in range(len(walk)))

    for v, cycle_ in smap.vertices.items():
        assert v == min(cycle_)


def test_faces_partition_the_darts() -> None:
    smap = torus_grid(3, 3)

    assert sorted(d for walk in faces(smap) for d in walk) == list(range(smap.n_darts))


def test_relabel_keeps_the_surface() -> None:
    smap = k4()
    n = smap.n_darts
    relabeled = smap.relabel([(d + 5) % n for d in range(n)])

    assert (relabeled.V, relabeled.E, relabeled.F) == (smap.V, smap.E, smap.F)


@pytest.mark.parametrize('name', sorted(CAGES))
def test_medial_is_four_valent(name: str) -> None:
    smap = CAGES[name]()
    med = medial(smap)

    assert med.V == smap.E
    assert med.F == smap.V + smap.F
    assert med.genus == smap.genus
    assert all(len(c) == 4 for c in med.vertices.values())


def test_medial_faces_match_vertices_and_faces() -> None:
    smap = k4()
    med = medial(smap)

    vertex_faces = {medial_vertex_face(smap, med, v) for v in smap.vertices}
    face_faces = {medial_face_face(smap, med, f) for f in smap.faces}

    assert len(vertex_faces) == smap.V
    assert len(face_faces) == smap.F
    assert vertex_faces.isdisjoint(face_faces)

    for v in smap.vertices:
        assert len(med.faces[medial_vertex_face(smap, med, v)]) == smap.degree(v)


def test_dual_swaps_vertices_and_faces() -> None:
    smap = cube()
    d = dual(smap)

    assert (d.V, d.E, d.F) == (smap.F, smap.E, smap.V)
    assert d.genus == 0


def test_face_adjacency_is_keyed_by_edge() -> None:
    smap = cycle(4)
    graph = face_adjacency(smap)

    assert graph.number_of_nodes() == 2
    assert graph.number_of_edges() == 4
    assert sorted(key for _, _, key in graph.edges(keys=True)) == list(smap.edges)


def test_empty_map() -> None:
    smap = build_map([], [])

    assert smap.n_darts == 0
    assert smap.euler == 2


def test_rejects_non_permutation() -> None:
    with pytest.raises(NotPermutation):
        build_map([0, 0], [1, 0])


def test_rejects_fixed_point() -> None:
    with pytest.raises(HasFixedPoint):
        build_map([1, 0], [0, 1])


def test_rejects_non_involution() -> None:
    with pytest.raises(NotInvolution):
        build_map([0, 1, 2], [1, 2, 0])


def test_rejects_disconnected() -> None:
    with pytest.raises(NotConnected):
        build_map([0, 1, 2, 3], [1, 0, 3, 2])


def test_rejects_negative_genus() -> None:
    with pytest.raises(GenusNegative):
        build_map([1, 0], [1, 0], declared_genus=-1)
