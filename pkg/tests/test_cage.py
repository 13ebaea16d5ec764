from __future__ import annotations

import logging

import pytest

from altcert import (
    CAGES, V_OCT, V_TET, BoundsCase, CageGraph, CageOptions, InvalidCage, Verdict, as_cage, bounds_for, build_map,
    certify_hyperbolic, cycle, derived_augmented, genus_two_octagon, is_fully_augmented, k4, random_cage,
    rubber_band_link, theta, torus_grid, twist_regions, validate_cage, volume_bounds
)


@pytest.mark.parametrize('name', sorted(CAGES))
def test_catalog_cages_certify(name: str) -> None:
    cage = as_cage(CAGES[name]())
    augmented = derived_augmented(cage)
    certificate = certify_hyperbolic(augmented)

    assert certificate.verdict is Verdict.PASS, certificate.failed
    assert len(augmented.augs) == cage.epsilon
    assert is_fully_augmented(augmented)


@pytest.mark.parametrize('name', ['k4', 'torus-3x3', 'genus2-k5'])
def test_mirror_assignment_certifies(name: str) -> None:
    augmented = derived_augmented(as_cage(CAGES[name]()), CageOptions(mirror=True))

    assert certify_hyperbolic(augmented).verdict is Verdict.PASS


def test_cycle_gets_the_two_braid_patch() -> None:
    augmented = derived_augmented(as_cage(cycle(3)))

    assert augmented.base.n_crossings == 4
    assert any('2-braid patch' in note for note in augmented.notes)


def test_k4_needs_no_patch() -> None:
    augmented = derived_augmented(as_cage(k4()))

    assert augmented.base.n_crossings == 6
    assert not augmented.notes


@pytest.mark.parametrize('name', ['k4', 'cube', 'octahedron', 'w5', 'torus-3x3', 'torus-4x4'])
def test_twist_number_counts_edges(name: str) -> None:
    cage = as_cage(CAGES[name]())

    assert twist_regions(derived_augmented(cage).base).t == cage.epsilon


def test_rubber_band_link_components() -> None:
    link = rubber_band_link(CageGraph(k4()))

    assert len(link.vertex_components) == 4
    assert len(link.edge_components) == 6
    assert all(f1 != f2 for _, f1, f2 in link.edge_components)


def test_parallel_edges_are_rejected() -> None:
    result = validate_cage(theta())

    assert result.verdict is Verdict.FAIL
    assert result.witness is not None
    assert result.witness['rule'] == 'parallel_edges'

    with pytest.raises(InvalidCage):
        as_cage(theta())


def test_bridge_is_rejected() -> None:
    result = validate_cage(build_map([0, 1], [1, 0]))

    assert result.witness is not None
    assert result.witness['rule'] == 'one_intersection_circle'


def test_empty_map_is_rejected() -> None:
    assert not validate_cage(build_map([], [])).passed


def test_degree_two_vertices_warn(caplog: pytest.LogCaptureFixture) -> None:
    with caplog.at_level(logging.WARNING, logger='altcert'):
        assert validate_cage(cycle(4)).passed

    assert 'degree-2' in caplog.text


def test_sphere_bounds() -> None:
    bounds = volume_bounds(as_cage(k4()))

    assert bounds.case is BoundsCase.SPHERE
    assert not bounds.lower_strict
    assert bounds.lower == pytest.approx(36.6386, rel=1e-4)
    assert bounds.upper == pytest.approx(50.745, rel=1e-4)


def test_torus_bounds() -> None:
    bounds = volume_bounds(as_cage(torus_grid(3, 3)))

    assert bounds.case is BoundsCase.TORUS
    assert bounds.lower == pytest.approx(131.8968, rel=1e-4)
    assert bounds.upper == pytest.approx(182.682, rel=1e-4)


def test_higher_genus_bounds() -> None:
    bounds = volume_bounds(as_cage(genus_two_octagon()))

    assert bounds.case is BoundsCase.HYPERBOLIC
    assert bounds.chi == -2
    assert bounds.lower_strict
    assert bounds.lower == pytest.approx(25.6466, rel=1e-4)
    assert bounds.upper == pytest.approx(175.86, rel=1e-4)


def test_bounds_formulas() -> None:
    assert bounds_for(3, 2).lower == pytest.approx(4 * V_OCT)
    assert bounds_for(3, 2).upper == pytest.approx(20 * V_TET)
    assert bounds_for(5, 0).lower == pytest.approx(10 * V_OCT)
    assert bounds_for(5, -4).lower == pytest.approx(V_OCT / 2 * 17)
    assert bounds_for(5, -4).upper == pytest.approx(30 * V_OCT)


@pytest.mark.parametrize('chi', [2, 0, -2, -4])
def test_bounds_grow_with_edges(chi: int) -> None:
    series = [bounds_for(epsilon, chi) for epsilon in range(6, 12)]

    assert all(a.lower < b.lower and a.upper < b.upper for a, b in zip(series, series[1:]))


def test_random_cages_are_valid_with_ordered_bounds() -> None:
    for seed in range(1000):
        smap = random_cage(seed)

        assert validate_cage(smap).passed, seed

        bounds = bounds_for(smap.E, smap.euler)

        assert bounds.lower < bounds.upper, seed


def test_random_cage_is_seeded() -> None:
    assert random_cage(7) == random_cage(7)
