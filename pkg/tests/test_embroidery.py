from __future__ import annotations

from dataclasses import replace
from itertools import combinations

import pytest

from altcert import (
    AugmentedDiagram, BoundaryOrderError, Embroidery, EndpointParityViolation, InvalidParameter, NotAlternating,
    ParityUnsolvable, ParseError, Tangle, TooFewEndpoints, Travel, Verdict, certify_hyperbolic, check_tangle,
    embroider, embroider_annulus, embroider_disk, is_alternating, non_bigon_faces, random_tangle, six_two,
    stub_successor, sub_tangle
)
from altcert.embroidery import _embroider_boundary, _solve_parity


def _assert_arcs_cross_once(embroidery: Embroidery) -> None:
    for first, second in combinations(embroidery.arcs, 2):
        if first.boundary == second.boundary:
            assert len(set(first.crossings) & set(second.crossings)) == 1


def test_stub_successor_walks_the_boundary_backwards(path_tangle: Tangle) -> None:
    boundary = path_tangle.boundaries[0]

    for i, stub in enumerate(boundary):
        assert stub_successor(path_tangle, stub) == boundary[i - 1]


def test_path_tangle_embroidery(path_tangle: Tangle) -> None:
    result = embroider(path_tangle)
    diagram = result.diagram

    assert diagram.n_crossings == 9
    assert result.new_crossings() == (12, 16, 20, 24, 28, 32)
    assert diagram.over[:3] == path_tangle.over
    assert diagram.over[3:] == (False, True, False, False, True, True)
    assert is_alternating(diagram)
    assert diagram.genus == 0

    assert [arc.index for arc in result.arcs] == [1, 2, 3, 4]
    assert [arc.travel for arc in result.arcs] == [Travel.FWD, Travel.BWD, Travel.FWD, Travel.BWD]
    assert all(len(arc.crossings) == 3 for arc in result.arcs)
    _assert_arcs_cross_once(result)

    assert result.central_faces == (25,)


def test_path_tangle_certifies(path_tangle: Tangle) -> None:
    certificate = certify_hyperbolic(AugmentedDiagram(embroider_disk(path_tangle)))

    assert certificate.verdict is Verdict.PASS, certificate.failed


def test_ring_annulus(ring_tangle: Tangle) -> None:
    result = embroider(ring_tangle)

    assert result.diagram.n_crossings == 20
    assert len(result.new_crossings(0)) == len(result.new_crossings(1)) == 6
    assert result.central_faces == (45, 69)
    assert sorted(non_bigon_faces(result, 1)) == [56, 60, 69]
    _assert_arcs_cross_once(result)


def test_ring_annulus_core_augmentation(ring_tangle: Tangle) -> None:
    augmented = embroider_annulus(ring_tangle)

    assert len(augmented.augs) == 1
    assert augmented.augs[0].end_faces(augmented.base) == (69, 45)
    assert 'inner embroidery has 3 non-bigon regions' in augmented.notes

    certificate = certify_hyperbolic(augmented)

    assert certificate.verdict is Verdict.PASS, certificate.failed


def test_boundary_count_must_match(path_tangle: Tangle, ring_tangle: Tangle) -> None:
    with pytest.raises(InvalidParameter):
        embroider_disk(ring_tangle)

    with pytest.raises(InvalidParameter):
        embroider_annulus(path_tangle)


def test_sub_tangle_of_six_two() -> None:
    tangle = sub_tangle(six_two(), [0, 4, 8, 12])

    assert len(tangle.over) == 4
    assert len(tangle.stubs) == 8

    check_tangle(tangle)

    result = embroider(tangle)

    assert result.diagram.n_crossings == 10
    assert is_alternating(result.diagram)


def test_sub_tangle_needs_endpoints() -> None:
    diagram = six_two()

    with pytest.raises(InvalidParameter):
        sub_tangle(diagram, diagram.crossings)


def test_too_few_endpoints() -> None:
    tangle = sub_tangle(six_two(), [0])

    assert len(tangle.stubs) == 4

    with pytest.raises(TooFewEndpoints):
        embroider(tangle)


def test_reversed_boundary_is_rejected(path_tangle: Tangle) -> None:
    tangle = replace(path_tangle, boundaries=(tuple(reversed(path_tangle.boundaries[0])),))

    with pytest.raises(BoundaryOrderError):
        check_tangle(tangle)


def test_endpoints_must_alternate(path_tangle: Tangle) -> None:
    tangle = replace(path_tangle, boundaries=((1, 5, 8, 9, 11, 7, 3, 2),))

    with pytest.raises(EndpointParityViolation):
        check_tangle(tangle)


def test_interior_must_alternate(path_tangle: Tangle) -> None:
    with pytest.raises(NotAlternating):
        check_tangle(replace(path_tangle, over=(True, True, True)))


def test_boundary_must_list_every_stub(path_tangle: Tangle) -> None:
    with pytest.raises(ParseError):
        check_tangle(replace(path_tangle, boundaries=((1, 5, 9, 8, 11, 7, 3),)))


@pytest.mark.parametrize('seed', range(20))
def test_random_tangles(seed: int) -> None:
    tangle = random_tangle(seed)
    n = len(tangle.stubs) // 2

    assert 8 <= 2 * n <= 16

    result = embroider(tangle)

    assert len(result.new_crossings()) == n * (n - 1) // 2
    assert is_alternating(result.diagram)
    _assert_arcs_cross_once(result)

    certificate = certify_hyperbolic(AugmentedDiagram(result.diagram))

    assert certificate.verdict is Verdict.PASS, certificate.failed


def test_random_tangle_is_seeded() -> None:
    assert random_tangle(3) == random_tangle(3)


def test_flipped_stubs_leave_the_parity_unsolvable(path_tangle: Tangle) -> None:
    flipped = replace(path_tangle, over=(not path_tangle.over[0],) + path_tangle.over[1:])
    sigma, alpha = list(flipped.sigma), list(flipped.alpha)
    _embroider_boundary(sigma, alpha, list(flipped.boundaries[0]), 0)

    with pytest.raises(ParityUnsolvable) as e:
        _solve_parity(flipped, sigma, alpha)

    assert e.value.cycle
    assert all(c >= flipped.n_darts for c in e.value.cycle)
