from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx
from networkx.utils import UnionFind

from .exceptions import NotAlternating, NotConnected, NotFourValent, ParseError
from .surface_map import SurfaceMap, build_map, connected_components, face_adjacency
from .types import Dart, FaceId, VertexId

__all__ = [
    'LinkDiagram', 'Strand', 'TwistRegionPartition',

    'build_diagram', 'from_pd', 'canonical', 'mirror',

    'strands', 'alternates_along_strands', 'is_alternating',
    'checkerboard_coloring', 'alternating_assignment', 'tait_graph',
    'is_two_braid', 'twist_regions',

    'export_pd', 'parse_pd'
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkDiagram:
    """
    A 4-valent map with crossing information.

    ``over[i]`` belongs to the i-th crossing in vertex-id order. True means the darts at slots 0 and 2 of
    that crossing (counted along sigma from its minimum dart) form the over-strand, False means slots 1 and 3.
    """

    smap: SurfaceMap
    over: tuple[bool, ...]

    @cached_property
    def crossings(self) -> tuple[VertexId, ...]:
        return tuple(self.smap.vertices)

    @cached_property
    def crossing_index(self) -> dict[VertexId, int]:
        return {v: i for i, v in enumerate(self.crossings)}

    @property
    def n_crossings(self) -> int:
        return len(self.over)

    @property
    def genus(self) -> int:
        return self.smap.genus

    def is_over(self, d: Dart) -> bool:
        return (self.smap.slot[d] % 2 == 0) == self.over[self.crossing_index[self.smap.vertex_of[d]]]

    def through(self, d: Dart) -> Dart:
        """Exit dart of the next crossing along the strand leaving through ``d``."""

        sigma = self.smap.sigma

        return sigma[sigma[self.smap.alpha[d]]]


@dataclass(frozen=True)
class Strand:
    darts: tuple[Dart, ...]
    """Exit darts in travel order, starting at the minimum one"""

    @property
    def passages(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class TwistRegionPartition:
    regions: tuple[tuple[VertexId, ...], ...]

    @property
    def t(self) -> int:
        return len(self.regions)


def build_diagram(smap: SurfaceMap, over: Iterable[bool]) -> LinkDiagram:
    over = tuple(bool(o) for o in over)

    for v, cycle in smap.vertices.items():
        if len(cycle) != 4:
            raise NotFourValent(v, len(cycle), build_diagram)

    if len(over) != smap.V:
        raise ParseError(f'{len(over)} over flags given for {smap.V} crossings', build_diagram)

    return LinkDiagram(smap, over)


def from_pd(code: Sequence[Sequence[int]], genus: int = 0, over: Sequence[bool] | None = None) -> LinkDiagram:
    """
    Build a diagram from a planar diagram code.

    Crossing ``i`` gets the darts ``4i..4i+3`` in the listed counterclockwise order; darts sharing a label are
    the two ends of one edge. Without ``over`` the first listed strand is the incoming under-strand.
    """

    n = len(code)
    ends = dict[int, list[Dart]]()

    for i, crossing in enumerate(code):
        if len(crossing) != 4:
            raise ParseError(f'crossing {i} lists {len(crossing)} labels', from_pd)

        for s, label in enumerate(crossing):
            ends.setdefault(label, []).append(4 * i + s)

    alpha = [0] * (4 * n)

    for label, darts in ends.items():
        if len(darts) != 2:
            raise ParseError(f'label {label} appears {len(darts)} times', from_pd)

        a, b = darts
        alpha[a], alpha[b] = b, a

    sigma = [4 * (d // 4) + (d + 1) % 4 for d in range(4 * n)]

    return build_diagram(build_map(sigma, alpha, genus), over if over is not None else [False] * n)


def canonical(diagram: LinkDiagram) -> LinkDiagram:
    """Relabel darts to ``4 * crossing index + slot``."""

    smap = diagram.smap
    perm = [4 * diagram.crossing_index[smap.vertex_of[d]] + smap.slot[d] for d in range(smap.n_darts)]

    return LinkDiagram(smap.relabel(perm), diagram.over)


def mirror(diagram: LinkDiagram) -> LinkDiagram:
    return LinkDiagram(diagram.smap, tuple(not o for o in diagram.over))


def strands(diagram: LinkDiagram) -> list[Strand]:
    """Orbits of the through-map, one per link component, ordered by minimum dart."""

    n = diagram.smap.n_darts
    taken = [False] * n
    result = list[Strand]()

    for start in range(n):
        if taken[start]:
            continue

        orbit = list[Dart]()
        d = start

        while not taken[d]:
            taken[d] = True
            orbit.append(d)
            d = diagram.through(d)

        # the reverse orbit runs through the alpha images
        d = diagram.smap.alpha[start]
        while not taken[d]:
            taken[d] = True
            d = diagram.through(d)

        result.append(Strand(tuple(orbit)))

    return result


def alternates_along_strands(diagram: LinkDiagram) -> bool:
    """Walk every strand and check that consecutive passages switch between over and under."""

    for strand in strands(diagram):
        flags = [diagram.is_over(d) for d in strand.darts]

        if any(a == b for a, b in zip(flags, flags[1:] + flags[:1])):
            return False

    return True


def _first_non_alternating_edge(diagram: LinkDiagram) -> int | None:
    alpha = diagram.smap.alpha

    return next((e for e in diagram.smap.edges if diagram.is_over(e) == diagram.is_over(alpha[e])), None)


def is_alternating(diagram: LinkDiagram) -> bool:
    return _first_non_alternating_edge(diagram) is None


def checkerboard_coloring(diagram: LinkDiagram | SurfaceMap) -> dict[FaceId, bool] | None:
    """
    Two-colour the faces so that every edge separates black (True) from white (False).

    The face containing dart 0 is black. Returns None when no such colouring exists.
    """

    smap = diagram.smap if isinstance(diagram, LinkDiagram) else diagram
    graph = face_adjacency(smap)

    if nx.number_of_selfloops(graph):
        return None

    try:
        colors = nx.bipartite.color(graph)
    except nx.NetworkXError:
        return None

    if not colors:
        return {}

    black = colors[smap.face_of[0]]

    return {f: colors[f] == black for f in smap.faces}


def alternating_assignment(smap: SurfaceMap, black: Iterable[FaceId]) -> tuple[bool, ...]:
    """
    Over flags making the over-strand of every crossing see a black face on its counterclockwise side.

    With a checkerboard colouring this is alternating; pass the white faces for the mirror image.
    """

    black = set(black)

    return tuple(smap.face_of[smap.sigma[v]] in black for v in smap.vertices)


def tait_graph(diagram: LinkDiagram, black: bool = True) -> nx.MultiGraph:
    """Graph on the faces of one colour with one edge per crossing, keyed by crossing id."""

    colors = checkerboard_coloring(diagram)

    if colors is None:
        raise NotAlternating(-1, tait_graph, message='the diagram has no checkerboard colouring!')

    smap = diagram.smap
    graph = nx.MultiGraph()
    graph.add_nodes_from(f for f, c in colors.items() if c == black)

    for v, cycle in smap.vertices.items():
        corners = [smap.face_of[smap.sigma[d]] for d in cycle]
        ends = [f for f in corners if colors[f] == black]
        graph.add_edge(ends[0], ends[1], key=v)

    return graph


def is_two_braid(diagram: LinkDiagram) -> bool:
    """
    Whether an alternating connected diagram is the standard diagram of a (2, n) torus link.

    On the sphere this holds iff the Tait graph is an n-cycle or a dipole with n parallel edges.
    """

    if (edge := _first_non_alternating_edge(diagram)) is not None:
        raise NotAlternating(edge, is_two_braid)

    smap = diagram.smap

    if smap.n_darts and len(comps := connected_components(smap.sigma, smap.alpha)) != 1:
        raise NotConnected(len(comps), is_two_braid)

    n = diagram.n_crossings

    if smap.declared_genus != 0 or smap.genus != 0 or n < 2:
        return False

    graph = tait_graph(diagram)

    if nx.number_of_selfloops(graph) or not nx.is_connected(graph):
        return False

    if graph.number_of_nodes() == 2:
        return graph.number_of_edges() == n

    return (
        graph.number_of_nodes() == n
        and all(deg == 2 for _, deg in graph.degree())
        and nx.number_of_edges(nx.Graph(graph)) == n
    )


def twist_regions(diagram: LinkDiagram) -> TwistRegionPartition:
    """Crossings chained end to end by bigon faces share a region."""

    smap = diagram.smap
    regions = UnionFind(diagram.crossings)

    for walk in smap.faces.values():
        if len(walk) == 2:
            regions.union(smap.vertex_of[walk[0]], smap.vertex_of[walk[1]])

    return TwistRegionPartition(tuple(sorted(tuple(sorted(r)) for r in regions.to_sets())))


def export_pd(diagram: LinkDiagram) -> str:
    """
    Text planar diagram code: a ``genus g`` header, then ``X[a,b,c,d] over=02|13`` per crossing.

    Edge labels run from 1 in edge-id order, darts are listed counterclockwise from the crossing id.
    """

    smap = diagram.smap
    label = {e: i + 1 for i, e in enumerate(smap.edges)}
    lines = [f'genus {smap.declared_genus}']

    for i, (v, cycle) in enumerate(smap.vertices.items()):
        labels = ','.join(str(label[smap.edge_of(d)]) for d in cycle)
        lines.append(f'X[{labels}] over={"02" if diagram.over[i] else "13"}')

    return '\n'.join(lines) + '\n'


_pd_line = re.compile(r'^X\[(-?\d+),(-?\d+),(-?\d+),(-?\d+)\]\s+over=(02|13)$')


def parse_pd(text: str) -> LinkDiagram:
    lines = [line.strip() for line in text.splitlines() if line.strip()]

    if not lines or not (header := re.fullmatch(r'genus\s+(\d+)', lines[0])):
        raise ParseError('line 1: expected "genus <g>"', parse_pd)

    code, over = list[list[int]](), list[bool]()

    for lineno, line in enumerate(lines[1:], 2):
        if not (match := _pd_line.match(line)):
            raise ParseError(f'line {lineno}: expected "X[a,b,c,d] over=02|13", got {line!r}', parse_pd)

        code.append([int(x) for x in match.groups()[:4]])
        over.append(match.group(5) == '02')

    return from_pd(code, int(header.group(1)), over)
