from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx

from .exceptions import GenusNegative, HasFixedPoint, NotConnected, NotInvolution, NotPermutation
from .types import Dart, EdgeId, FaceId, VertexId
from .utils import cyclic_orbits

__all__ = [
    'SurfaceMap',

    'build_map',
    'is_cellular_on',
    'faces', 'face_adjacency',
    'medial', 'medial_vertex_face', 'medial_face_face',
    'dual',
    'euler_characteristic',
    'connected_components'
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurfaceMap:
    """
    A graph cellularly embedded in a closed orientable surface, stored as a rotation system.

    Darts are the integers ``0..D-1``. ``sigma[d]`` is the next dart counterclockwise around the vertex of ``d``,
    ``alpha[d]`` is the other end of the edge of ``d``. Faces are the orbits of ``phi = sigma . alpha``, so the
    face of ``d`` lies to the right of ``d`` and contains the corner between ``sigma^-1(d)`` and ``d``.

    Vertex, edge and face ids are the minimum dart of the corresponding orbit.
    Instances are immutable and hashable; derived data is computed lazily and cached on the instance.
    Use :py:func:`build_map` to get a validated instance.
    """

    sigma: tuple[Dart, ...]
    alpha: tuple[Dart, ...]
    declared_genus: int = 0

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    def phi(self, d: Dart) -> Dart:
        return self.sigma[self.alpha[d]]

    @cached_property
    def sigma_inv(self) -> tuple[Dart, ...]:
        inv = [0] * self.n_darts

        for d, s in enumerate(self.sigma):
            inv[s] = d

        return tuple(inv)

    @cached_property
    def vertices(self) -> dict[VertexId, tuple[Dart, ...]]:
        """Vertex id to the counterclockwise dart cycle starting at the id."""

        return {orbit[0]: tuple(orbit) for orbit in cyclic_orbits(self.sigma)}

    @cached_property
    def faces(self) -> dict[FaceId, tuple[Dart, ...]]:
        """Face id to its boundary walk, the phi-orbit starting at the id."""

        return {orbit[0]: tuple(orbit) for orbit in cyclic_orbits([self.phi(d) for d in range(self.n_darts)])}

    @cached_property
    def edges(self) -> tuple[EdgeId, ...]:
        return tuple(d for d in range(self.n_darts) if d < self.alpha[d])

    @cached_property
    def vertex_of(self) -> tuple[VertexId, ...]:
        return self._orbit_index(self.vertices)

    @cached_property
    def face_of(self) -> tuple[FaceId, ...]:
        return self._orbit_index(self.faces)

    @cached_property
    def slot(self) -> tuple[int, ...]:
        """Index of each dart in its vertex cycle."""

        return self._position_index(self.vertices)

    @cached_property
    def position(self) -> tuple[int, ...]:
        """Index of each dart in its face walk."""

        return self._position_index(self.faces)

    def edge_of(self, d: Dart) -> EdgeId:
        return min(d, self.alpha[d])

    def degree(self, v: VertexId) -> int:
        return len(self.vertices[v])

    def endpoints(self, e: EdgeId) -> tuple[VertexId, VertexId]:
        return self.vertex_of[e], self.vertex_of[self.alpha[e]]

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)

    @property
    def F(self) -> int:
        return len(self.faces)

    @property
    def euler(self) -> int:
        # the empty map stands for a crossingless circle on the sphere
        if not self.n_darts:
            return 2

        return self.V - self.E + self.F

    @property
    def genus(self) -> int:
        return (2 - self.euler) // 2

    def relabel(self, perm: Sequence[Dart]) -> SurfaceMap:
        """Rename every dart ``d`` to ``perm[d]``."""

        sigma, alpha = [0] * self.n_darts, [0] * self.n_darts

        for d in range(self.n_darts):
            sigma[perm[d]] = perm[self.sigma[d]]
            alpha[perm[d]] = perm[self.alpha[d]]

        return SurfaceMap(tuple(sigma), tuple(alpha), self.declared_genus)

    def with_genus(self, declared_genus: int) -> SurfaceMap:
        return SurfaceMap(self.sigma, self.alpha, declared_genus)

    def _orbit_index(self, orbits: dict[int, tuple[Dart, ...]]) -> tuple[int, ...]:
        index = [0] * self.n_darts

        for oid, orbit in orbits.items():
            for d in orbit:
                index[d] = oid

        return tuple(index)

    def _position_index(self, orbits: dict[int, tuple[Dart, ...]]) -> tuple[int, ...]:
        index = [0] * self.n_darts

        for orbit in orbits.values():
            for i, d in enumerate(orbit):
                index[d] = i

        return tuple(index)


def _check_permutation(name: str, perm: Sequence[int], n: int) -> None:
    if len(perm) != n or sorted(perm) != list(range(n)):
        raise NotPermutation(name, build_map)


def connected_components(sigma: Sequence[Dart], alpha: Sequence[Dart]) -> list[list[Dart]]:
    """Dart sets of the orbits of the group generated by sigma and alpha."""

    graph = nx.Graph()
    graph.add_nodes_from(range(len(sigma)))
    graph.add_edges_from((d, sigma[d]) for d in range(len(sigma)))
    graph.add_edges_from((d, alpha[d]) for d in range(len(alpha)))

    return sorted((sorted(comp) for comp in nx.connected_components(graph)), key=lambda c: c[0])


def build_map(sigma: Iterable[Dart], alpha: Iterable[Dart], declared_genus: int = 0) -> SurfaceMap:
    """
    Validate a rotation system and return the map it describes.

    :param sigma:           Counterclockwise successor of every dart around its vertex.
    :param alpha:           Other end of the edge of every dart.
    :param declared_genus:  Genus of the surface the embedding is intended for.

    :raises NotPermutation: sigma or alpha is not a permutation of a contiguous dart set.
    :raises HasFixedPoint:  alpha fixes a dart.
    :raises NotInvolution:  alpha is not an involution.
    :raises NotConnected:   the map has several components.
    :raises GenusNegative:  V - E + F is odd or larger than 2.
    """

    sigma, alpha = tuple(sigma), tuple(alpha)
    n = len(sigma)

    _check_permutation('sigma', sigma, n)
    _check_permutation('alpha', alpha, n)

    for d in range(n):
        if alpha[d] == d:
            raise HasFixedPoint(d, build_map)
        if alpha[alpha[d]] != d:
            raise NotInvolution(d, build_map)

    if n and len(comps := connected_components(sigma, alpha)) != 1:
        raise NotConnected(len(comps), build_map)

    if declared_genus < 0:
        raise GenusNegative(2 - 2 * declared_genus, build_map)

    smap = SurfaceMap(sigma, alpha, declared_genus)

    if smap.euler > 2 or smap.euler % 2:
        raise GenusNegative(smap.euler, build_map)

    logger.debug('built map V=%d E=%d F=%d genus=%d', smap.V, smap.E, smap.F, smap.genus)

    return smap


def is_cellular_on(smap: SurfaceMap) -> bool:
    return smap.genus == smap.declared_genus


def euler_characteristic(smap: SurfaceMap) -> int:
    return smap.euler


def faces(smap: SurfaceMap) -> list[tuple[Dart, ...]]:
    return list(smap.faces.values())


def face_adjacency(smap: SurfaceMap) -> nx.MultiGraph:
    """Face multigraph with one link per edge, keyed by edge id. Self-links mark faces touching themselves."""

    graph = nx.MultiGraph()
    graph.add_nodes_from(smap.faces)

    for e in smap.edges:
        graph.add_edge(smap.face_of[e], smap.face_of[smap.alpha[e]], key=e)

    return graph


def medial(smap: SurfaceMap) -> SurfaceMap:
    """
    One 4-valent vertex per edge, each edge of ``smap`` bisecting its crossing.

    Input dart ``x`` yields the medial darts ``2x`` and ``2x + 1``. The crossing of the edge ``{d, d'}`` reads
    ``2d + 1, 2d, 2d' + 1, 2d'`` counterclockwise; even darts walk around vertex-faces, odd darts point into
    face-faces. Dart 0 therefore lies on a vertex-face.
    """

    n = smap.n_darts
    sigma, alpha = [0] * (2 * n), [0] * (2 * n)

    for x in range(n):
        sigma[2 * x + 1] = 2 * x
        sigma[2 * x] = 2 * smap.alpha[x] + 1

        alpha[2 * x + 1] = 2 * smap.sigma[x]
        alpha[2 * smap.sigma[x]] = 2 * x + 1

    result = SurfaceMap(tuple(sigma), tuple(alpha), smap.declared_genus)

    assert result.genus == smap.genus

    return result


def medial_vertex_face(smap: SurfaceMap, medial_map: SurfaceMap, v: VertexId) -> FaceId:
    """Face of ``medial(smap)`` surrounding the input vertex ``v``."""

    return medial_map.face_of[2 * v]


def medial_face_face(smap: SurfaceMap, medial_map: SurfaceMap, f: FaceId) -> FaceId:
    """Face of ``medial(smap)`` sitting inside the input face ``f``."""

    return medial_map.face_of[2 * smap.alpha[f] + 1]


def dual(smap: SurfaceMap) -> SurfaceMap:
    """Vertices and faces swapped; the dart set and the edges are kept."""

    return SurfaceMap(tuple(smap.phi(d) for d in range(smap.n_darts)), smap.alpha, smap.declared_genus)
