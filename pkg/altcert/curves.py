from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterator

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from .certificate import CheckResult
from .diagram import LinkDiagram
from .exceptions import InterleavedSegments, InvalidCurve, InvalidParameter, NotConnected, RepeatedCorner
from .surface_map import SurfaceMap, connected_components
from .types import CurveRule, Dart, EdgeId, FaceId, VertexId

__all__ = [
    'Segment', 'TransverseCurve', 'TransversePath', 'Piece', 'CutResult',

    'curve_segments', 'path_segments', 'segments_witness',
    'check_curve', 'validate_curve', 'check_path', 'chords_interleave',

    'cut_along', 'bounds_disk',
    'enumerate_curves', 'canonical_exits',
    'is_reduced', 'is_obviously_prime', 'one_intersection_circle_exists',
    'z2_class'
]

logger = logging.getLogger(__name__)

MapLike = LinkDiagram | SurfaceMap


def _smap(obj: MapLike) -> SurfaceMap:
    return obj.smap if isinstance(obj, LinkDiagram) else obj


@dataclass(frozen=True)
class Segment:
    """Part of a curve inside one face, between two corner positions of the face walk."""

    face: FaceId
    entry: int | None
    exit: int | None

    def as_dict(self) -> dict[str, int | None]:
        return {'face': self.face, 'entry': self.entry, 'exit': self.exit}


@dataclass(frozen=True)
class TransverseCurve:
    """
    A simple closed curve transverse to a map, stored as the cyclic list of darts it leaves faces through.

    Leaving through ``x`` crosses the edge of ``x`` from ``face(x)`` into ``face(alpha(x))``.
    A curve without intersections is a loop inside ``face``.
    """

    exits: tuple[Dart, ...] = ()
    face: FaceId | None = None

    @property
    def intersections(self) -> int:
        return len(self.exits)

    def edges(self, smap: SurfaceMap) -> tuple[EdgeId, ...]:
        return tuple(smap.edge_of(x) for x in self.exits)


@dataclass(frozen=True)
class TransversePath:
    """An open transverse arc; starts inside ``face(exits[0])`` and ends inside ``face(alpha(exits[-1]))``."""

    exits: tuple[Dart, ...]

    def start_face(self, smap: SurfaceMap) -> FaceId:
        return smap.face_of[self.exits[0]]

    def end_face(self, smap: SurfaceMap) -> FaceId:
        return smap.face_of[smap.alpha[self.exits[-1]]]

    def punctures(self, smap: SurfaceMap) -> tuple[EdgeId, ...]:
        return tuple(smap.edge_of(x) for x in self.exits)


@dataclass(frozen=True)
class Piece:
    euler_char: int
    boundary_circles: int
    crossings: frozenset[VertexId]

    @property
    def is_disk(self) -> bool:
        return self.euler_char == 1 and self.boundary_circles == 1


@dataclass(frozen=True)
class CutResult:
    """Pieces of the surface cut along a curve. When separating, the first piece holds the left copy."""

    pieces: tuple[Piece, ...]
    separating: bool


def curve_segments(obj: MapLike, curve: TransverseCurve) -> list[Segment]:
    smap = _smap(obj)

    if not curve.exits:
        return [Segment(curve.face if curve.face is not None else -1, None, None)]

    return [
        Segment(smap.face_of[x], smap.position[smap.alpha[curve.exits[i - 1]]], smap.position[x])
        for i, x in enumerate(curve.exits)
    ]


def path_segments(obj: MapLike, path: TransversePath) -> list[Segment]:
    smap = _smap(obj)
    exits = path.exits

    return [
        Segment(smap.face_of[exits[0]], None, smap.position[exits[0]]),
        *(
            Segment(smap.face_of[exits[i]], smap.position[smap.alpha[exits[i - 1]]], smap.position[exits[i]])
            for i in range(1, len(exits))
        ),
        Segment(smap.face_of[smap.alpha[exits[-1]]], smap.position[smap.alpha[exits[-1]]], None)
    ]


def segments_witness(segments: list[Segment]) -> list[dict[str, int | None]]:
    return [segment.as_dict() for segment in segments]


def _between(p: int, a: int, b: int) -> bool:
    if a < b:
        return a < p < b

    return p > a or p < b


def chords_interleave(first: tuple[int, int], second: tuple[int, int]) -> bool:
    """Whether two chords of one face cross; chords sharing an endpoint never do."""

    (a1, b1), (a2, b2) = first, second

    if len({a1, b1, a2, b2}) < 4:
        return False

    return _between(a2, a1, b1) != _between(b2, a1, b1)


def _check_darts(smap: SurfaceMap, exits: tuple[Dart, ...], func: Any) -> None:
    for x in exits:
        if not 0 <= x < smap.n_darts:
            raise InvalidCurve(CurveRule.OUT_OF_RANGE, func, detail=f'dart {x} does not exist')


def _check_chords(segments: list[Segment], func: Any) -> None:
    used = set[tuple[FaceId, int]]()
    chords = defaultdict[FaceId, list[tuple[int, tuple[int, int]]]](list)

    for i, segment in enumerate(segments):
        for pos in (segment.entry, segment.exit):
            if pos is None:
                continue

            if (segment.face, pos) in used:
                raise RepeatedCorner(segment.face, pos, func)

            used.add((segment.face, pos))

        if segment.entry is not None and segment.exit is not None:
            chords[segment.face].append((i, (segment.entry, segment.exit)))

    for face, face_chords in chords.items():
        for j, (i1, c1) in enumerate(face_chords):
            for i2, c2 in face_chords[j + 1:]:
                if chords_interleave(c1, c2):
                    raise InterleavedSegments(face, i1, i2, func)


def check_curve(obj: MapLike, curve: TransverseCurve) -> None:
    """
    Raise when ``curve`` is not an embedded transverse curve of the map.

    :raises InvalidCurve:           Unknown face or dart, or consecutive exits not sharing a face.
    :raises RepeatedCorner:         A corner position is used twice, including entry equal to exit.
    :raises InterleavedSegments:    Two segments of one face cross.
    """

    smap = _smap(obj)

    if not curve.exits:
        if curve.face not in smap.faces:
            raise InvalidCurve(CurveRule.OUT_OF_RANGE, check_curve, detail=f'face {curve.face} does not exist')
        return

    _check_darts(smap, curve.exits, check_curve)

    for i, x in enumerate(curve.exits):
        if smap.face_of[smap.alpha[curve.exits[i - 1]]] != smap.face_of[x]:
            raise InvalidCurve(
                CurveRule.INCONSISTENT, check_curve, detail=f'exit {i} does not leave the face entered before it'
            )

    _check_chords(curve_segments(smap, curve), check_curve)


def validate_curve(obj: MapLike, curve: TransverseCurve) -> bool:
    try:
        check_curve(obj, curve)
    except InvalidCurve as e:
        logger.debug('invalid curve %s: %s', curve.exits, e)
        return False

    return True


def check_path(obj: MapLike, path: TransversePath) -> None:
    smap = _smap(obj)

    if not path.exits:
        raise InvalidCurve(CurveRule.INCONSISTENT, check_path, detail='a path crosses at least one edge')

    _check_darts(smap, path.exits, check_path)

    for i in range(1, len(path.exits)):
        if smap.face_of[smap.alpha[path.exits[i - 1]]] != smap.face_of[path.exits[i]]:
            raise InvalidCurve(
                CurveRule.INCONSISTENT, check_path, detail=f'exit {i} does not leave the face entered before it'
            )

    _check_chords(path_segments(smap, path), check_path)


@lru_cache
def _cut(smap: SurfaceMap, exits: tuple[Dart, ...], loop_face: FaceId | None) -> CutResult:
    if not exits:
        rest = Piece(smap.euler - 1, 1, frozenset(smap.vertices))
        return CutResult((Piece(1, 1, frozenset()), rest), True)

    alpha = smap.alpha
    cut_edges = {smap.edge_of(x) for x in exits}
    cells = UnionFind()

    for d in range(smap.n_darts):
        v = ('v', smap.vertex_of[d])

        if smap.edge_of(d) in cut_edges:
            cells.union(v, ('h', d))
        else:
            cells.union(v, ('e', smap.edge_of(d)))

    chords = defaultdict[FaceId, list[tuple[int, int]]](list)
    segments = curve_segments(smap, TransverseCurve(exits))

    for segment in segments:
        assert segment.entry is not None and segment.exit is not None
        chords[segment.face].append((segment.entry, segment.exit))

    region_of = dict[tuple[FaceId, int], tuple[str, FaceId, int]]()
    gap_of = dict[FaceId, dict[int, int]]()
    regions = set[tuple[str, FaceId, int]]()

    for f, walk in smap.faces.items():
        size = len(walk)

        if f not in chords:
            region = ('r', f, 0)
            regions.add(region)

            for d in walk:
                cells.union(region, ('v', smap.vertex_of[d]), ('e', smap.edge_of(d)))
            continue

        cuts = sorted(p for chord in chords[f] for p in chord)
        gap = gap_of[f] = {p: j for j, p in enumerate(cuts)}
        k = len(cuts)

        # a chord joins the gap after each end to the gap before the other
        gaps = UnionFind(range(k))
        for a, b in chords[f]:
            gaps.union(gap[a], (gap[b] - 1) % k)
            gaps.union(gap[b], (gap[a] - 1) % k)

        for j in range(k):
            region = region_of[f, j] = ('r', f, gaps[j])
            regions.add(region)

            p0, p1 = cuts[j], cuts[(j + 1) % k]
            steps = (p1 - p0) % size or size

            cells.union(region, ('h', alpha[walk[p0]]), ('h', walk[p1]))

            for t in range(1, steps + 1):
                p = (p0 + t) % size
                cells.union(region, ('v', smap.vertex_of[walk[p]]))

                if t < steps:
                    cells.union(region, ('e', smap.edge_of(walk[p])))

    # vertices, edges, faces and boundary circles of every piece
    counts = defaultdict[Any, list[int]](lambda: [0, 0, 0, 0])
    crossings = defaultdict[Any, set[VertexId]](set)

    for v in smap.vertices:
        root = cells[('v', v)]
        counts[root][0] += 1
        crossings[root].add(v)

    for e in smap.edges:
        if e not in cut_edges:
            counts[cells[('e', e)]][1] += 1
            continue

        for d in (e, alpha[e]):
            half = counts[cells[('h', d)]]
            half[0] += 1
            half[1] += 1

    for region in regions:
        counts[cells[region]][2] += 1

    sides = list[tuple[Any, Any]]()

    for segment in segments:
        assert segment.entry is not None and segment.exit is not None
        left = cells[region_of[segment.face, gap_of[segment.face][segment.entry]]]
        right = cells[region_of[segment.face, gap_of[segment.face][segment.exit]]]
        counts[left][1] += 1
        counts[right][1] += 1
        sides.append((left, right))

    left, right = sides[0]
    counts[left][3] += 1
    counts[right][3] += 1

    roots = [left] + sorted(
        (r for r in counts if r != left), key=lambda r: (r != right, min(crossings[r], default=-1))
    )

    assert len(roots) <= 2 and all(s == (left, right) for s in sides)

    pieces = tuple(
        Piece(counts[r][0] - counts[r][1] + counts[r][2], counts[r][3], frozenset(crossings[r])) for r in roots
    )

    assert sum(p.euler_char for p in pieces) == smap.euler

    return CutResult(pieces, left != right)


def cut_along(obj: MapLike, curve: TransverseCurve) -> CutResult:
    """
    Cut the surface along ``curve`` and describe the pieces.

    Euler characteristics are those of the cut pieces with their boundary circles left open,
    so they always sum to the Euler characteristic of the surface.
    """

    smap = _smap(obj)

    check_curve(smap, curve)

    return _cut(smap, curve.exits, curve.face)


def bounds_disk(obj: MapLike, curve: TransverseCurve) -> int | None:
    """
    Index in the cut pieces of a disk bounded by ``curve``, or None.

    On the sphere both sides are disks; the one with fewer crossings is reported, the left one on ties.
    """

    result = cut_along(obj, curve)

    if not result.separating:
        return None

    disks = [i for i, piece in enumerate(result.pieces) if piece.is_disk]

    if not disks:
        return None

    return min(disks, key=lambda i: (len(result.pieces[i].crossings), i))


def canonical_exits(smap: SurfaceMap, exits: tuple[Dart, ...]) -> tuple[Dart, ...]:
    """Smallest rotation of the exits or of the reversed curve, which leaves through the alpha images."""

    reverse = tuple(smap.alpha[x] for x in reversed(exits))

    return min(
        seq[i:] + seq[:i] for seq in (exits, reverse) for i in range(len(seq))
    )


def _candidate_curves(smap: SurfaceMap, intersections: int) -> Iterator[TransverseCurve]:
    alpha, face_of = smap.alpha, smap.face_of

    if intersections == 0:
        yield from (TransverseCurve(face=f) for f in smap.faces)
    elif intersections == 1:
        yield from (TransverseCurve((x,)) for x in range(smap.n_darts) if face_of[x] == face_of[alpha[x]])
    elif intersections == 2:
        sides = defaultdict[tuple[FaceId, FaceId], list[Dart]](list)

        for x in range(smap.n_darts):
            sides[face_of[x], face_of[alpha[x]]].append(x)

        for x in range(smap.n_darts):
            for y in sides[face_of[alpha[x]], face_of[x]]:
                if smap.edge_of(x) != smap.edge_of(y):
                    yield TransverseCurve((x, y))


def enumerate_curves(obj: MapLike, max_intersections: int = 2) -> list[TransverseCurve]:
    """
    Every embedded transverse curve meeting the map at most ``max_intersections`` times, each edge at most once.

    Curves are listed once per rotation and reversal class, sorted by intersection count then canonical exits.
    """

    if not 0 <= max_intersections <= 2:
        raise InvalidParameter('max_intersections', max_intersections, enumerate_curves)

    smap = _smap(obj)
    found = dict[tuple[int, tuple[Dart, ...], FaceId | None], TransverseCurve]()

    for n in range(max_intersections + 1):
        for curve in _candidate_curves(smap, n):
            if not validate_curve(smap, curve):
                continue

            exits = canonical_exits(smap, curve.exits) if curve.exits else ()
            found.setdefault((n, exits, curve.face), TransverseCurve(exits, curve.face))

    logger.debug('enumerated %d curves with at most %d intersections', len(found), max_intersections)

    return [found[key] for key in sorted(found, key=lambda k: (k[0], k[1], -1 if k[2] is None else k[2]))]


def _curve_witness(smap: SurfaceMap, curve: TransverseCurve, **extra: Any) -> dict[str, Any]:
    return {'curve': segments_witness(curve_segments(smap, curve)), 'exits': list(curve.exits), **extra}


def is_reduced(diagram: LinkDiagram) -> CheckResult:
    """
    Fail when a curve meeting the diagram twice, on the two edges of sigma-adjacent darts at a crossing,
    bounds a disk avoiding that crossing.

    A loop edge joining two sigma-adjacent darts bounds a monogon face; such a kink fails on any surface.
    """

    smap = diagram.smap

    for c, cycle in smap.vertices.items():
        for d in cycle:
            if smap.alpha[d] == smap.sigma[d]:
                return CheckResult.fail(
                    'reduced', {'crossing': c, 'monogon': smap.face_of[smap.sigma[d]], 'edge': smap.edge_of(d)},
                    'a loop edge bounds a monogon next to its crossing'
                )

    for curve in enumerate_curves(diagram, 2):
        if curve.intersections != 2:
            continue

        crossed = set(curve.edges(smap))

        for c, cycle in smap.vertices.items():
            for d in cycle:
                pair = {smap.edge_of(d), smap.edge_of(smap.sigma[d])}

                if len(pair) != 2 or pair != crossed:
                    continue

                result = _cut(smap, curve.exits, None)

                if not result.separating:
                    continue

                if any(piece.is_disk and c not in piece.crossings for piece in result.pieces):
                    return CheckResult.fail('reduced', _curve_witness(smap, curve, crossing=c))

    return CheckResult.ok('reduced')


def is_obviously_prime(diagram: LinkDiagram) -> CheckResult:
    """Fail when a curve meeting the diagram twice bounds a disk with crossings on one side and not on the other."""

    smap = diagram.smap

    if smap.n_darts and len(comps := connected_components(smap.sigma, smap.alpha)) != 1:
        raise NotConnected(len(comps), is_obviously_prime)

    for curve in enumerate_curves(diagram, 2):
        if curve.intersections != 2:
            continue

        result = _cut(smap, curve.exits, None)

        if not result.separating:
            continue

        for piece, other in zip(result.pieces, result.pieces[::-1]):
            if piece.is_disk and piece.crossings and not (other.is_disk and not other.crossings):
                return CheckResult.fail(
                    'obviously_prime', _curve_witness(smap, curve, crossings=sorted(piece.crossings))
                )

    return CheckResult.ok('obviously_prime')


def one_intersection_circle_exists(smap: SurfaceMap) -> TransverseCurve | None:
    """A disk-bounding curve meeting the graph exactly once, if there is one."""

    for curve in enumerate_curves(smap, 1):
        if curve.intersections == 1 and bounds_disk(smap, curve) is not None:
            return curve

    return None


def _cycle_basis(smap: SurfaceMap) -> list[set[EdgeId]]:
    graph = nx.MultiGraph()
    graph.add_nodes_from(smap.vertices)
    graph.add_edges_from((*smap.endpoints(e), e) for e in smap.edges)

    tree_keys = {key for _, _, key in nx.minimum_spanning_edges(graph, keys=True, data=False)}
    tree = nx.Graph()
    tree.add_nodes_from(smap.vertices)
    tree.add_edges_from((*smap.endpoints(e), {'key': e}) for e in tree_keys)

    basis = list[set[EdgeId]]()

    for e in smap.edges:
        if e in tree_keys:
            continue

        path = nx.shortest_path(tree, *smap.endpoints(e))
        basis.append({e} | {tree.edges[u, v]['key'] for u, v in zip(path, path[1:])})

    return basis


def z2_class(obj: MapLike, curve: TransverseCurve) -> tuple[int, ...]:
    """Intersection parities of ``curve`` with the fundamental cycles of a spanning tree, in edge-id order."""

    smap = _smap(obj)

    check_curve(smap, curve)

    index = {e: i for i, e in enumerate(smap.edges)}
    basis = _cycle_basis(smap)

    matrix = np.zeros((len(basis), len(index)), dtype=np.uint8)
    for row, cycle in enumerate(basis):
        matrix[row, [index[e] for e in cycle]] = 1

    crossed = np.zeros(len(index), dtype=np.uint8)
    for e in curve.edges(smap):
        crossed[index[e]] ^= 1

    return tuple(int(x) for x in (matrix.astype(np.int64) @ crossed) % 2)
