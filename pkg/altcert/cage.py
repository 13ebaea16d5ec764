from __future__ import annotations

import logging
from dataclasses import dataclass

from .augment import Augmentation, AugmentedDiagram, insert_half_twists
from .certificate import CheckResult, VolumeBounds
from .curves import TransversePath, curve_segments, one_intersection_circle_exists, segments_witness
from .diagram import LinkDiagram, alternating_assignment, build_diagram, checkerboard_coloring, is_two_braid
from .exceptions import InvalidCage
from .surface_map import SurfaceMap, connected_components, is_cellular_on, medial, medial_vertex_face
from .types import BoundsCase, Dart, EdgeId, FaceId, VertexId

__all__ = [
    'V_OCT', 'V_TET',

    'CageGraph', 'CageOptions', 'RubberBandLink',

    'validate_cage', 'as_cage',
    'rubber_band_link',
    'derived_augmented',
    'volume_bounds', 'bounds_for'
]

logger = logging.getLogger(__name__)

V_OCT = 3.663862376708876
"""Volume of the regular ideal octahedron"""

V_TET = 1.0149416064096536
"""Volume of the regular ideal tetrahedron"""


@dataclass(frozen=True)
class CageGraph:
    smap: SurfaceMap

    @property
    def m(self) -> int:
        return self.smap.V

    @property
    def epsilon(self) -> int:
        return self.smap.E

    @property
    def genus(self) -> int:
        return self.smap.genus

    @property
    def chi(self) -> int:
        return self.smap.euler


@dataclass
class CageOptions:
    mirror: bool = False
    """Use the mirror alternating assignment, over-strands seeing face-faces"""

    patch_twists: int = 1
    """Half twists added to the designated edge when the medial is a 2-braid"""


@dataclass(frozen=True)
class RubberBandLink:
    vertex_components: tuple[VertexId, ...]
    edge_components: tuple[tuple[EdgeId, FaceId, FaceId], ...]
    """Cage edge with the medial vertex-faces of its two endpoints"""


def _cage_failure(rule: str, witness: dict[str, object], detail: str) -> CheckResult:
    return CheckResult.fail('cage', {'rule': rule, **witness}, detail)


def validate_cage(smap: SurfaceMap) -> CheckResult:
    """Connected, simple, cellular, and no disk-bounding curve meets the graph exactly once."""

    if not smap.n_darts:
        return _cage_failure('empty', {}, 'a cage graph has at least one edge')

    if len(comps := connected_components(smap.sigma, smap.alpha)) != 1:
        return _cage_failure('not_connected', {'components': len(comps)}, 'the graph is not connected')

    ends = dict[frozenset[VertexId], EdgeId]()

    for e in smap.edges:
        u, v = smap.endpoints(e)

        if u == v:
            return _cage_failure('loop', {'edge': e, 'vertex': u}, f'edge {e} is a loop at vertex {u}')

        if (pair := frozenset((u, v))) in ends:
            return _cage_failure(
                'parallel_edges', {'edges': [ends[pair], e], 'vertices': sorted(pair)},
                f'edges {ends[pair]} and {e} join the same vertices'
            )

        ends[pair] = e

    if not is_cellular_on(smap):
        return _cage_failure(
            'not_cellular', {'derived_genus': smap.genus, 'declared_genus': smap.declared_genus},
            'the embedding is not cellular on the declared surface'
        )

    if (curve := one_intersection_circle_exists(smap)) is not None:
        return _cage_failure(
            'one_intersection_circle',
            {'curve': segments_witness(curve_segments(smap, curve)), 'edge': smap.edge_of(curve.exits[0])},
            'a disk-bounding circle meets the graph once'
        )

    if degree_two := [v for v in smap.vertices if smap.degree(v) == 2]:
        logger.warning('cage has degree-2 vertices %s, twist number may be below the edge count', degree_two)

    return CheckResult.ok('cage')


def as_cage(smap: SurfaceMap) -> CageGraph:
    if not (result := validate_cage(smap)).passed:
        assert result.witness
        raise InvalidCage(str(result.witness['rule']), as_cage)

    return CageGraph(smap)


def rubber_band_link(cage: CageGraph) -> RubberBandLink:
    smap = cage.smap
    med = medial(smap)

    return RubberBandLink(
        tuple(smap.vertices),
        tuple(
            (e, *(medial_vertex_face(smap, med, v) for v in smap.endpoints(e)))  # type: ignore[misc]
            for e in smap.edges
        )
    )


def _route(smap: SurfaceMap, x: Dart, side: int) -> TransversePath:
    """
    Medial path from the vertex-face of ``vertex(x)`` to the one of ``vertex(alpha(x))``.

    It crosses two arcs at the crossing of ``x``: the ones next to ``x`` and ``sigma(x)`` on side 1,
    the ones next to ``sigma^-1(x)`` and ``x`` on side 2.
    """

    y = smap.alpha[x]

    if side == 1:
        return TransversePath((2 * smap.sigma[x], 2 * smap.sigma_inv[y] + 1))

    return TransversePath((2 * x, 2 * y + 1))


def derived_augmented(cage: CageGraph, options: CageOptions | None = None) -> AugmentedDiagram:
    """
    The fully augmented alternating link of the rubber band link of ``cage``.

    The base is the medial diagram, alternating with the over-strands seeing vertex-faces counterclockwise.
    Every cage edge gets one augmentation through the arcs next to its crossing. On the sphere, when the base
    is a 2-braid, the minimum edge gets its half twist doubled first.
    """

    options = options or CageOptions()
    smap = cage.smap
    med = medial(smap)

    colors = checkerboard_coloring(med)
    assert colors is not None, 'medial maps are always checkerboard colourable'

    vertex_color = colors[medial_vertex_face(smap, med, smap.vertex_of[0])]
    over_faces = {f for f, c in colors.items() if c == vertex_color}

    if options.mirror:
        over_faces = set(colors) - over_faces

    base: LinkDiagram = build_diagram(med, alternating_assignment(med, over_faces))
    augmented = AugmentedDiagram(base)

    sides = {e: (e, 1) for e in smap.edges}

    if smap.genus == 0 and is_two_braid(base):
        d = smap.edges[0]
        temporary = AugmentedDiagram(base, (Augmentation(_route(smap, d, 1)),))
        augmented = insert_half_twists(temporary, 0, options.patch_twists)

        # arcs next to the twisted crossing now belong to the new crossings
        sides[d] = (d, 2)
        sides[smap.edge_of(smap.sigma[d])] = (smap.sigma[d], 1)
        z = smap.sigma_inv[smap.alpha[d]]
        sides[smap.edge_of(z)] = (z, 2)

        note = f'2-braid patch: replaced the half twist of edge {d} with a full twist'
        augmented = AugmentedDiagram(augmented.base, (), augmented.notes + (note,), augmented.flags)

        logger.info(note)

    result = augmented.with_augs(Augmentation(_route(smap, x, side)) for x, side in sides.values())

    logger.debug(
        'derived %d-crossing base with %d augmentations from a cage with %d edges',
        result.base.n_crossings, len(result.augs), smap.E
    )

    return result


def bounds_for(epsilon: int, chi: int) -> VolumeBounds:
    """Volume bounds of a rubber band link complement from the edge count and the Euler characteristic."""

    if chi == 2:
        return VolumeBounds(
            case=BoundsCase.SPHERE, epsilon=epsilon, chi=chi,
            lower=2 * (epsilon - 1) * V_OCT, lower_strict=False, upper=10 * (epsilon - 1) * V_TET
        )

    if chi == 0:
        return VolumeBounds(
            case=BoundsCase.TORUS, epsilon=epsilon, chi=chi,
            lower=2 * epsilon * V_OCT, lower_strict=False, upper=10 * epsilon * V_TET
        )

    return VolumeBounds(
        case=BoundsCase.HYPERBOLIC, epsilon=epsilon, chi=chi,
        lower=V_OCT / 2 * (epsilon - 3 * chi), lower_strict=True, upper=6 * epsilon * V_OCT
    )


def volume_bounds(cage: CageGraph) -> VolumeBounds:
    return bounds_for(cage.epsilon, cage.chi)
