from __future__ import annotations

import networkx as nx
import pytest

from altcert import (
    DIAGRAMS, InvalidCurve, InvalidParameter, LinkDiagram, RepeatedCorner, SurfaceMap, TransverseCurve, Verdict,
    add_kink, bounds_disk, build_map, canonical_exits, check_curve, chords_interleave, cut_along, enumerate_curves,
    figure_eight, genus_two_octagon, granny, grid_medial, is_obviously_prime, is_reduced, k4, kinked_trefoil,
    one_intersection_circle_exists, six_two, torus_grid, torus_one_crossing, trefoil, validate_curve, z2_class
)

MAPS = {
    'figure-eight': lambda: figure_eight().smap,
    '6_2': lambda: six_two().smap,
    'k4': k4,
    'grid-medial': lambda: grid_medial().smap,
    'torus-one-crossing': lambda: torus_one_crossing().smap,
    'torus-3x3': lambda: torus_grid(3, 3),
    'genus2-octagon': genus_two_octagon,
}


def _brute_force_two(smap: SurfaceMap) -> set[tuple[int, ...]]:
    found = set[tuple[int, ...]]()

    for x in range(smap.n_darts):
        for y in range(smap.n_darts):
            if smap.edge_of(x) == smap.edge_of(y):
                continue

            if validate_curve(smap, curve := TransverseCurve((x, y))):
                found.add(canonical_exits(smap, curve.exits))

    return found


@pytest.mark.parametrize('name', sorted(MAPS))
def test_two_curves_match_brute_force(name: str) -> None:
    smap = MAPS[name]()
    listed = {curve.exits for curve in enumerate_curves(smap, 2) if curve.intersections == 2}

    assert listed == _brute_force_two(smap)


@pytest.mark.parametrize('name', sorted(MAPS))
def test_enumerated_curves_are_embedded(name: str) -> None:
    smap = MAPS[name]()
    curves = enumerate_curves(smap, 2)

    assert len(curves) == len(set(curves))

    for curve in curves:
        check_curve(smap, curve)

        if curve.exits:
            assert canonical_exits(smap, curve.exits) == curve.exits

    assert sum(curve.intersections == 0 for curve in curves) == smap.F


@pytest.mark.parametrize('name', sorted(MAPS))
def test_separating_iff_trivial_class(name: str) -> None:
    smap = MAPS[name]()

    for curve in enumerate_curves(smap, 2):
        result = cut_along(smap, curve)

        assert sum(piece.euler_char for piece in result.pieces) == smap.euler
        assert len(result.pieces) == (2 if result.separating else 1)
        assert result.separating == (not any(z2_class(smap, curve)))


def test_loop_in_a_face_cuts_off_a_disk() -> None:
    smap = k4()
    curve = TransverseCurve(face=smap.face_of[0])
    result = cut_along(smap, curve)

    assert result.separating
    assert result.pieces[0].is_disk
    assert not result.pieces[0].crossings
    assert bounds_disk(smap, curve) == 0


def test_sphere_curves_always_separate() -> None:
    smap = figure_eight().smap

    for curve in enumerate_curves(smap, 2):
        assert cut_along(smap, curve).separating
        assert bounds_disk(smap, curve) is not None


def test_chords_interleave() -> None:
    assert chords_interleave((0, 2), (1, 3))
    assert chords_interleave((2, 0), (3, 1))
    assert not chords_interleave((0, 1), (2, 3))
    assert not chords_interleave((0, 2), (2, 3))


def test_curve_through_one_edge_twice_repeats_a_corner() -> None:
    smap = k4()

    with pytest.raises(RepeatedCorner):
        check_curve(smap, TransverseCurve((0, smap.alpha[0])))


def test_curve_rejects_unknown_darts_and_faces() -> None:
    smap = k4()

    with pytest.raises(InvalidCurve):
        check_curve(smap, TransverseCurve((0, smap.n_darts)))

    with pytest.raises(InvalidCurve):
        check_curve(smap, TransverseCurve(face=smap.n_darts + 1))


def test_enumeration_limit() -> None:
    with pytest.raises(InvalidParameter):
        enumerate_curves(k4(), 3)


def test_bridge_has_one_intersection_circle() -> None:
    smap = build_map([0, 1], [1, 0])
    curve = one_intersection_circle_exists(smap)

    assert curve is not None
    assert curve.intersections == 1


def test_torus_one_intersection_circles_do_not_bound_disks() -> None:
    smap = torus_one_crossing().smap

    assert one_intersection_circle_exists(smap) is None
    assert any(curve.intersections == 1 for curve in enumerate_curves(smap, 1))
    assert one_intersection_circle_exists(k4()) is None


def test_reduced() -> None:
    assert is_reduced(trefoil()).verdict is Verdict.PASS
    assert is_reduced(figure_eight()).verdict is Verdict.PASS

    result = is_reduced(kinked_trefoil())

    assert result.verdict is Verdict.FAIL
    assert result.witness is not None
    assert result.witness['crossing'] == 12
    assert result.witness['edge'] == 13


@pytest.mark.parametrize('over', [False, True])
def test_kink_on_the_torus_is_not_reduced(over: bool) -> None:
    base = grid_medial()
    kinked = add_kink(base, 0, over)

    assert kinked.genus == 1

    result = is_reduced(kinked)

    assert not result.passed
    assert result.witness is not None
    assert result.witness['crossing'] == base.smap.n_darts


def test_obviously_prime() -> None:
    assert is_obviously_prime(figure_eight()).passed
    assert is_obviously_prime(six_two()).passed

    result = is_obviously_prime(granny())

    assert not result.passed
    assert result.witness is not None
    assert result.witness['crossings'] in ([0, 4, 8], [12, 16, 20])


def _inside(p: int, a: int, b: int, n: int) -> bool:
    return 0 < (p - a) % n < (b - a) % n


def _embedded_pair(smap: SurfaceMap, x: int, y: int) -> bool:
    alpha, face_of = smap.alpha, smap.face_of

    if smap.edge_of(x) == smap.edge_of(y):
        return False

    if face_of[alpha[x]] != face_of[y] or face_of[alpha[y]] != face_of[x]:
        return False

    if face_of[x] != face_of[y]:
        return True

    walk = smap.faces[face_of[x]]
    pos = {d: i for i, d in enumerate(walk)}
    a, b, c, d = pos[alpha[y]], pos[x], pos[alpha[x]], pos[y]

    return _inside(c, a, b, len(walk)) == _inside(d, a, b, len(walk))


def _sides(smap: SurfaceMap, x: int, y: int) -> list[tuple[int, frozenset[int]]] | None:
    """Euler characteristic and crossings of both sides of the curve through ``x`` then ``y``, None if one side."""

    alpha = smap.alpha
    cut = {x, alpha[x], y, alpha[y]}
    chords = [(alpha[y], x), (alpha[x], y)]

    def strips(darts: list[int]) -> nx.Graph:
        graph = nx.Graph()
        for d in darts:
            graph.add_edge((d, 1), (smap.phi(d), 0))
            if d not in cut:
                graph.add_edge((d, 0), (d, 1))
        for a, b in chords:
            if a in darts:
                graph.add_edge((a, 1), (b, 0))
                graph.add_edge((b, 1), (a, 0))
        return graph

    surface = strips(list(range(smap.n_darts)))
    surface.add_edges_from(((d, 0), (alpha[d], 1)) for d in range(smap.n_darts))
    components = list(nx.connected_components(surface))

    if len(components) != 2:
        return None

    regions = [
        next(iter(region)) for walk in smap.faces.values()
        for region in nx.connected_components(strips(list(walk)))
    ]

    result = list[tuple[int, frozenset[int]]]()

    for side in components:
        crossings = frozenset(smap.vertex_of[d] for d in range(smap.n_darts) if (d, 0) in side)
        edges = sum((e, 0) in side for e in smap.edges if e not in cut)
        halves = sum((d, end) in side for d in (x, y) for end in (0, 1))
        faces = sum(node in side for node in regions)
        result.append(((len(crossings) + 2) - (edges + halves + 2) + faces, crossings))

    return result


def _two_curves(smap: SurfaceMap) -> list[tuple[int, int]]:
    return [
        (x, y) for x in range(smap.n_darts) for y in range(smap.n_darts) if _embedded_pair(smap, x, y)
    ]


def _reduced_by_hand(diagram: LinkDiagram) -> bool:
    smap = diagram.smap

    if any(smap.alpha[d] == smap.sigma[d] for d in range(smap.n_darts)):
        return False

    for x, y in _two_curves(smap):
        crossed = {smap.edge_of(x), smap.edge_of(y)}

        for d in range(smap.n_darts):
            if {smap.edge_of(d), smap.edge_of(smap.sigma[d])} != crossed:
                continue

            c = smap.vertex_of[d]
            sides = _sides(smap, x, y)

            if sides and any(chi == 1 and c not in crossings for chi, crossings in sides):
                return False

    return True


def _prime_by_hand(diagram: LinkDiagram) -> bool:
    smap = diagram.smap

    for x, y in _two_curves(smap):
        if not (sides := _sides(smap, x, y)):
            continue

        for (chi, crossings), (other_chi, other) in zip(sides, sides[::-1]):
            if chi == 1 and crossings and not (other_chi == 1 and not other):
                return False

    return True


ORACLE_DIAGRAMS = {
    **{name: make for name, make in DIAGRAMS.items() if make().n_crossings <= 8},
    'kinked-figure-eight': lambda: add_kink(figure_eight(), 0),
    'kinked-grid-medial': lambda: add_kink(grid_medial(), 0, over=True),
}


@pytest.mark.parametrize('name', sorted(ORACLE_DIAGRAMS))
def test_verdicts_match_hand_computation(name: str) -> None:
    diagram = ORACLE_DIAGRAMS[name]()

    assert is_reduced(diagram).passed == _reduced_by_hand(diagram)
    assert is_obviously_prime(diagram).passed == _prime_by_hand(diagram)
