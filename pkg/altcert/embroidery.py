from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, MutableSequence

import networkx as nx

from .augment import Augmentation, AugmentedDiagram
from .curves import TransversePath
from .diagram import LinkDiagram, build_diagram
from .exceptions import (
    BoundaryOrderError, EndpointParityViolation, HasFixedPoint, InvalidParameter, NotAlternating, NotConnected,
    NotFourValent, NotInvolution, NotPermutation, ParityUnsolvable, ParseError, TooFewEndpoints
)
from .surface_map import build_map, connected_components, face_adjacency
from .types import Dart, FaceId, Travel, VertexId
from .utils import cyclic_orbits

__all__ = [
    'Tangle', 'EmbroideryArc', 'Embroidery',

    'check_tangle', 'stub_successor', 'sub_tangle',

    'embroider', 'embroider_disk', 'embroider_annulus',
    'non_bigon_faces'
]

logger = logging.getLogger(__name__)

MIN_ENDPOINTS = 8

_GROUND = -1


@dataclass(frozen=True)
class Tangle:
    """
    Crossings inside a disk or an annulus, the edges leaving it cut open into stubs.

    Stubs have no ``alpha`` image. Every boundary lists its stubs clockwise, the outer boundary first.
    """

    sigma: tuple[Dart, ...]
    alpha: tuple[Dart | None, ...]
    over: tuple[bool, ...]
    boundaries: tuple[tuple[Dart, ...], ...]

    @cached_property
    def crossings(self) -> tuple[tuple[Dart, ...], ...]:
        return tuple(tuple(cycle) for cycle in cyclic_orbits(self.sigma))

    @cached_property
    def _slots(self) -> dict[Dart, tuple[int, int]]:
        return {d: (i, s) for i, cycle in enumerate(self.crossings) for s, d in enumerate(cycle)}

    @property
    def n_darts(self) -> int:
        return len(self.sigma)

    @property
    def stubs(self) -> tuple[Dart, ...]:
        return tuple(d for d, a in enumerate(self.alpha) if a is None)

    def is_over(self, d: Dart) -> bool:
        i, s = self._slots[d]

        return (s % 2 == 0) == self.over[i]


@dataclass(frozen=True)
class EmbroideryArc:
    boundary: int
    index: int
    """Joins endpoint ``index`` to endpoint ``n + index``, counted from 1"""

    travel: Travel
    """FWD (clockwise) for odd indices, BWD for even ones"""

    crossings: tuple[VertexId, ...]
    """New crossings in travel order"""


@dataclass(frozen=True)
class Embroidery:
    diagram: LinkDiagram
    arcs: tuple[EmbroideryArc, ...]
    central_faces: tuple[FaceId, ...]
    """Per boundary, the new region farthest from the tangle"""

    def new_crossings(self, boundary: int | None = None) -> tuple[VertexId, ...]:
        return tuple(sorted({
            c for arc in self.arcs if boundary is None or arc.boundary == boundary for c in arc.crossings
        }))


def stub_successor(tangle: Tangle, stub: Dart) -> Dart:
    """
    Next stub along the region between the tangle and the boundary circle of ``stub``.

    That is the counterclockwise neighbour on the outer boundary and the clockwise one on an inner boundary.
    """

    x = tangle.sigma[stub]

    while (a := tangle.alpha[x]) is not None:
        x = tangle.sigma[a]

    return x


def check_tangle(tangle: Tangle) -> None:
    """
    :raises NotPermutation:             sigma is not a permutation, or alpha leaves the dart set.
    :raises NotFourValent:              a crossing does not have four darts.
    :raises HasFixedPoint:              alpha fixes a dart.
    :raises NotInvolution:              alpha is not an involution off the stubs.
    :raises ParseError:                 flags or boundary lists do not match the crossings and stubs.
    :raises NotConnected:               the interior has several components.
    :raises NotAlternating:             an interior edge joins two over or two under ends.
    :raises TooFewEndpoints:            a boundary carries fewer than eight stubs.
    :raises EndpointParityViolation:    successive stubs on a boundary do not alternate over and under.
    :raises BoundaryOrderError:         a boundary is not listed clockwise.
    """

    n = tangle.n_darts
    sigma, alpha = tangle.sigma, tangle.alpha

    if len(alpha) != n or sorted(sigma) != list(range(n)):
        raise NotPermutation('sigma', check_tangle)

    for cycle in tangle.crossings:
        if len(cycle) != 4:
            raise NotFourValent(cycle[0], len(cycle), check_tangle)

    if len(tangle.over) != len(tangle.crossings):
        raise ParseError(f'{len(tangle.over)} over flags given for {len(tangle.crossings)} crossings', check_tangle)

    for d, a in enumerate(alpha):
        if a is None:
            continue
        if not 0 <= a < n:
            raise NotPermutation('alpha', check_tangle)
        if a == d:
            raise HasFixedPoint(d, check_tangle)
        if alpha[a] != d:
            raise NotInvolution(d, check_tangle)

    if not 1 <= len(tangle.boundaries) <= 2:
        raise ParseError(f'a tangle has one or two boundaries, got {len(tangle.boundaries)}', check_tangle)

    if sorted(d for stubs in tangle.boundaries for d in stubs) != list(tangle.stubs):
        raise ParseError('the boundaries must list every stub exactly once', check_tangle)

    closed = [d if a is None else a for d, a in enumerate(alpha)]

    if n and len(comps := connected_components(sigma, closed)) != 1:
        raise NotConnected(len(comps), check_tangle)

    for d, a in enumerate(alpha):
        if a is not None and d < a and tangle.is_over(d) == tangle.is_over(a):
            raise NotAlternating(d, check_tangle)

    for b, stubs in enumerate(tangle.boundaries):
        if len(stubs) < MIN_ENDPOINTS:
            raise TooFewEndpoints(len(stubs), check_tangle)

        # an odd count always breaks somewhere
        for i, s in enumerate(stubs):
            if tangle.is_over(s) == tangle.is_over(stubs[(i + 1) % len(stubs)]):
                raise EndpointParityViolation(i, check_tangle)

        for i, s in enumerate(stubs):
            neighbour = stubs[i - 1] if b == 0 else stubs[(i + 1) % len(stubs)]

            if stub_successor(tangle, s) != neighbour:
                raise BoundaryOrderError(b, check_tangle)


def sub_tangle(diagram: LinkDiagram, crossings: Iterable[VertexId]) -> Tangle:
    """
    Cut the given crossings out of ``diagram`` as a disk tangle.

    Darts are renumbered in increasing order, so crossings keep their relative order and slots.

    :raises InvalidParameter:   the crossings leave no stub, or their stubs lie on several boundary circles.
    """

    smap = diagram.smap
    keep = set(crossings)

    darts = [d for d in range(smap.n_darts) if smap.vertex_of[d] in keep]
    index = {d: i for i, d in enumerate(darts)}

    sigma = tuple(index[smap.sigma[d]] for d in darts)
    alpha = tuple(index.get(smap.alpha[d]) for d in darts)
    over = tuple(flag for v, flag in zip(diagram.crossings, diagram.over) if v in keep)

    partial = Tangle(sigma, alpha, over, ())

    if not (stubs := partial.stubs):
        raise InvalidParameter('crossings', sorted(keep), sub_tangle, message='{value} leave no endpoint!')

    walk = [stubs[0]]

    while (s := stub_successor(partial, walk[-1])) != walk[0]:
        walk.append(s)

    if len(walk) != len(stubs):
        raise InvalidParameter(
            'crossings', sorted(keep), sub_tangle, message='the complement of {value} is not a disk!'
        )

    return Tangle(sigma, alpha, over, (tuple(reversed(walk)),))


def _spans(n: int) -> list[list[int]]:
    """Endpoint positions passed by the level of every arc, in travel order."""

    return [
        [(i + t) % (2 * n) if i % 2 == 0 else (i - t) % (2 * n) for t in range(1, n)]
        for i in range(n)
    ]


def _embroider_boundary(
    sigma: MutableSequence[Dart], alpha: MutableSequence[Dart | None], endpoints: list[Dart], boundary: int
) -> tuple[list[EmbroideryArc], Dart]:
    """
    Append the crossings of the arcs joining positions ``i`` and ``n + i`` of ``endpoints``.

    Arc ``i`` leaves radially up to level ``i``, runs along it and comes back radially. Its level meets the
    radials of the higher arcs standing in its span, its radials meet the lower levels spanning them.
    Returns the arcs and a dart of the region beyond the highest level.
    """

    n = len(endpoints) // 2
    spans = _spans(n)
    passed = [set(span) for span in spans]
    bases = dict[tuple[int, int], Dart]()

    def crossing(key: tuple[int, int]) -> Dart:
        if key not in bases:
            bases[key] = base = len(sigma)
            sigma.extend(base + (r + 1) % 4 for r in range(4))
            alpha.extend([None] * 4)

        return bases[key]

    def link(a: Dart, b: Dart) -> None:
        alpha[a], alpha[b] = b, a

    arcs = list[EmbroideryArc]()
    central = -1

    for i in range(n):
        travel = Travel.FWD if i % 2 == 0 else Travel.BWD
        back = Travel.BWD if travel is Travel.FWD else Travel.FWD

        outgoing = [((i, j), Travel.TOWARD, Travel.AWAY) for j in range(i) if i in passed[j]]
        along = [((pos % n, i), back, travel) for pos in spans[i] if pos % n > i]
        incoming = [((i, j), Travel.AWAY, Travel.TOWARD) for j in reversed(range(i)) if n + i in passed[j]]

        prev = endpoints[i]
        visited = list[VertexId]()

        for key, enter, leave in outgoing + along + incoming:
            base = crossing(key)
            link(prev, base + enter)
            prev = base + leave
            visited.append(base)

        link(prev, endpoints[n + i])

        arcs.append(EmbroideryArc(boundary, i + 1, travel, tuple(visited)))

        if i == n - 1:
            radial = incoming[0] if travel is Travel.FWD else outgoing[-1]
            central = bases[radial[0]] + Travel.AWAY

    return arcs, central


def _solve_parity(tangle: Tangle, sigma: list[Dart], alpha: list[Dart | None]) -> list[bool]:
    """
    Over flags of the new crossings making every new edge join an over-end to an under-end.

    Each edge fixes the sum of two flags, or one flag when its other end is a stub of the tangle.
    """

    first = tangle.n_darts
    graph = nx.MultiGraph()
    graph.add_node(_GROUND)
    graph.add_nodes_from(range(first, len(sigma), 4))

    for a in range(first, len(sigma)):
        b = alpha[a]
        assert b is not None

        if b < first:
            graph.add_edge(_GROUND, a - a % 4, parity=(a % 2 == 0) != tangle.is_over(b))
        elif a < b:
            graph.add_edge(a - a % 4, b - b % 4, parity=(a % 2) == (b % 2))

    value = dict[int, bool]()
    tree = nx.Graph()

    for root in graph:
        if root in value:
            continue

        value[root] = False
        tree.add_node(root)
        queue = deque([root])

        while queue:
            u = queue.popleft()

            for _, v, parity in graph.edges(u, data='parity'):
                if v not in value:
                    value[v] = value[u] != parity
                    tree.add_edge(u, v)
                    queue.append(v)
                elif value[v] != (value[u] != parity):
                    cycle = [c for c in nx.shortest_path(tree, u, v) if c != _GROUND]
                    raise ParityUnsolvable(cycle, embroider)

    return [value[c] for c in range(first, len(sigma), 4)]


def embroider(tangle: Tangle) -> Embroidery:
    """
    Close every boundary of ``tangle`` with nested arcs, each arc crossing every other arc once.

    An inner boundary is closed through the disk it bounds. Interior crossings keep their flags.
    """

    check_tangle(tangle)

    sigma, alpha = list(tangle.sigma), list(tangle.alpha)
    arcs, central = list[EmbroideryArc](), list[Dart]()

    for b, stubs in enumerate(tangle.boundaries):
        endpoints = list(stubs) if b == 0 else list(reversed(stubs))
        new_arcs, dart = _embroider_boundary(sigma, alpha, endpoints, b)

        arcs.extend(new_arcs)
        central.append(dart)

        logger.debug('boundary %d: %d endpoints, %d arcs', b, len(stubs), len(new_arcs))

    flags = _solve_parity(tangle, sigma, alpha)
    smap = build_map(sigma, alpha)  # type: ignore[arg-type]

    if smap.genus != 0:
        raise ParseError('the tangle does not sit in a planar disk or annulus', embroider)

    diagram = build_diagram(smap, tangle.over + tuple(flags))

    logger.info(
        'embroidered %d crossings onto a %d-crossing tangle', len(flags), len(tangle.over)
    )

    return Embroidery(diagram, tuple(arcs), tuple(smap.face_of[d] for d in central))


def embroider_disk(tangle: Tangle) -> LinkDiagram:
    if len(tangle.boundaries) != 1:
        raise InvalidParameter('boundaries', len(tangle.boundaries), embroider_disk)

    return embroider(tangle).diagram


def non_bigon_faces(embroidery: Embroidery, boundary: int) -> list[FaceId]:
    """Faces bounded by the new crossings of one boundary alone that are not bigons."""

    smap = embroidery.diagram.smap
    mine = set(embroidery.new_crossings(boundary))

    return [
        f for f, walk in smap.faces.items()
        if len(walk) != 2 and all(smap.vertex_of[d] in mine for d in walk)
    ]


def embroider_annulus(tangle: Tangle) -> AugmentedDiagram:
    """
    Embroider both boundaries of an annular tangle, then augment through the hole.

    The core augmentation follows a shortest route of faces from the innermost region to the outer face.
    """

    if len(tangle.boundaries) != 2:
        raise InvalidParameter('boundaries', len(tangle.boundaries), embroider_annulus)

    result = embroider(tangle)
    smap = result.diagram.smap
    outer, inner = result.central_faces

    graph = face_adjacency(smap)
    route = nx.shortest_path(graph, inner, outer)
    exits = list[Dart]()

    for f, g in zip(route, route[1:]):
        e = min(graph[f][g])
        exits.append(e if smap.face_of[e] == f else smap.alpha[e])

    regions = non_bigon_faces(result, 1)
    notes = (
        f'core augmentation from region {inner} to the outer region {outer} across {len(exits)} strands',
        f'inner embroidery has {len(regions)} non-bigon region{"s" if len(regions) != 1 else ""}',
    )

    for note in notes:
        logger.info(note)

    return AugmentedDiagram(result.diagram, (Augmentation(TransversePath(tuple(exits))),), notes)
