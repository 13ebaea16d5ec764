from __future__ import annotations

import logging
import math
import random
from collections import defaultdict
from typing import Callable, Sequence

from .augment import Augmentation, AugmentedDiagram, insert_half_twists
from .curves import TransversePath, is_obviously_prime, is_reduced
from .diagram import LinkDiagram, alternating_assignment, build_diagram, checkerboard_coloring, from_pd
from .embroidery import Tangle, sub_tangle
from .exceptions import InvalidParameter
from .surface_map import SurfaceMap, build_map, medial
from .types import Dart, VertexId

__all__ = [
    'unknot', 'hopf', 'two_braid', 'trefoil', 'figure_eight', 'six_two', 'granny', 'kinked_trefoil', 'add_kink',
    'torus_one_crossing', 'grid_medial',

    'planar_map',
    'cycle', 'theta', 'k4', 'wheel', 'prism', 'cube', 'octahedron', 'torus_grid', 'genus_two_octagon',
    'genus_two_k5',

    'CAGES', 'DIAGRAMS',

    'random_alternating', 'random_tangle', 'random_cage'
]

logger = logging.getLogger(__name__)

_MAX_TRIES = 1000


def unknot() -> LinkDiagram:
    return build_diagram(build_map([], []), [])


def hopf() -> LinkDiagram:
    return from_pd([[4, 1, 3, 2], [2, 3, 1, 4]])


def two_braid(n: int) -> LinkDiagram:
    """Standard diagram of the (2, n) torus link: a chain of ``n`` crossings joined by bigons."""

    if n < 2:
        raise InvalidParameter('n', n, two_braid)

    sigma, alpha = list[int](), list[int]()

    for j in range(n):
        pv, nx = (j - 1) % n, (j + 1) % n
        sigma.extend(4 * j + (s + 1) % 4 for s in range(4))
        alpha.extend((4 * pv + 3, 4 * pv + 2, 4 * nx + 1, 4 * nx))

    return build_diagram(build_map(sigma, alpha), [False] * n)


def trefoil() -> LinkDiagram:
    return from_pd([[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]])


def figure_eight() -> LinkDiagram:
    return from_pd([[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]])


def six_two() -> LinkDiagram:
    return from_pd([[1, 8, 2, 9], [3, 11, 4, 10], [5, 1, 6, 12], [7, 2, 8, 3], [9, 7, 10, 6], [11, 5, 12, 4]])


def granny() -> LinkDiagram:
    """Connected sum of two trefoils."""

    return from_pd([[1, 5, 2, 4], [3, 7, 4, 6], [5, 3, 6, 2], [7, 11, 8, 10], [9, 1, 10, 12], [11, 9, 12, 8]])


def kinked_trefoil() -> LinkDiagram:
    """Trefoil with a nugatory kink."""

    return from_pd([[1, 5, 2, 4], [3, 7, 4, 6], [5, 3, 6, 2], [7, 8, 8, 1]])


def add_kink(diagram: LinkDiagram, d: Dart, over: bool = False) -> LinkDiagram:
    """Put a nugatory kink on the edge of ``d``: a new last crossing whose loop edge bounds a monogon."""

    smap = diagram.smap
    n, ad = smap.n_darts, smap.alpha[d]

    sigma = list(smap.sigma) + [n + (j + 1) % 4 for j in range(4)]
    alpha = list(smap.alpha) + [d, n + 2, n + 1, ad]
    alpha[d], alpha[ad] = n, n + 3

    return build_diagram(build_map(sigma, alpha, smap.declared_genus), diagram.over + (over,))


def torus_one_crossing() -> LinkDiagram:
    """One crossing on the torus, its single face a square."""

    return build_diagram(build_map([1, 2, 3, 0], [2, 3, 0, 1], 1), [False])


def grid_medial(m: int = 3, n: int = 3) -> LinkDiagram:
    med = medial(torus_grid(m, n))
    colors = checkerboard_coloring(med)
    assert colors is not None

    return build_diagram(med, alternating_assignment(med, (f for f, c in colors.items() if c)))


def planar_map(points: Sequence[tuple[float, float]], edges: Sequence[tuple[int, int]]) -> SurfaceMap:
    """
    Rotation system of a straight-line drawing.

    Edge ``k`` gets the dart ``2k`` at its first end and ``2k + 1`` at its second one.
    """

    ends = [w for edge in edges for w in edge]
    around = defaultdict[int, list[int]](list)

    for d, u in enumerate(ends):
        around[u].append(d)

    sigma = [0] * len(ends)

    for u, darts in around.items():
        x, y = points[u]
        darts.sort(key=lambda d: math.atan2(points[ends[d ^ 1]][1] - y, points[ends[d ^ 1]][0] - x))

        for i, d in enumerate(darts):
            sigma[d] = darts[(i + 1) % len(darts)]

    return build_map(sigma, [d ^ 1 for d in range(len(ends))])


def _polygon(n: int, radius: float = 1.0, phase: float = 0.0) -> list[tuple[float, float]]:
    return [
        (radius * math.cos(2 * math.pi * i / n + phase), radius * math.sin(2 * math.pi * i / n + phase))
        for i in range(n)
    ]


def cycle(n: int) -> SurfaceMap:
    if n < 3:
        raise InvalidParameter('n', n, cycle)

    sigma = [d ^ 1 for d in range(2 * n)]
    alpha = [0] * (2 * n)

    for v in range(n):
        alpha[2 * v] = 2 * ((v + 1) % n) + 1
        alpha[2 * ((v + 1) % n) + 1] = 2 * v

    return build_map(sigma, alpha)


def theta() -> SurfaceMap:
    """Two vertices joined by three parallel edges."""

    return build_map([1, 2, 0, 4, 5, 3], [3, 5, 4, 0, 2, 1])


def k4() -> SurfaceMap:
    return build_map([1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9], [4, 7, 10, 8, 0, 9, 11, 1, 3, 5, 2, 6])


def wheel(n: int) -> SurfaceMap:
    """A hub joined to every vertex of an ``n``-cycle."""

    if n < 3:
        raise InvalidParameter('n', n, wheel)

    rim = [(i + 1, (i + 1) % n + 1) for i in range(n)]
    spokes = [(0, i + 1) for i in range(n)]

    return planar_map([(0.0, 0.0), *_polygon(n)], rim + spokes)


def prism() -> SurfaceMap:
    triangles = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    spokes = [(0, 3), (1, 4), (2, 5)]

    return planar_map(_polygon(3, 2.0) + _polygon(3, 1.0), triangles + spokes)


def cube() -> SurfaceMap:
    points = [(0.0, 0.0), (4.0, 0.0), (4.0, 4.0), (0.0, 4.0), (1.0, 1.0), (3.0, 1.0), (3.0, 3.0), (1.0, 3.0)]
    squares = [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    spokes = [(i, i + 4) for i in range(4)]

    return planar_map(points, squares + spokes)


def octahedron() -> SurfaceMap:
    a, b, c, d, e, f = range(6)
    points = [(0.0, 0.0), (6.0, 0.0), (3.0, 6.0), (3.0, 1.0), (4.0, 3.0), (2.0, 3.0)]
    edges = [(a, b), (b, c), (c, a), (d, e), (e, f), (f, d), (a, d), (b, d), (b, e), (c, e), (c, f), (a, f)]

    return planar_map(points, edges)


def torus_grid(m: int, n: int) -> SurfaceMap:
    """
    The ``m x n`` square grid on the torus.

    Vertex ``(i, j)`` owns the darts ``4 * (i * n + j) + k``, pointing east, north, west and south
    for ``k = 0..3``.
    """

    if m < 3 or n < 3:
        raise InvalidParameter('m, n', (m, n), torus_grid)

    sigma = [4 * (d // 4) + (d + 1) % 4 for d in range(4 * m * n)]
    alpha = [0] * (4 * m * n)

    for i in range(m):
        for j in range(n):
            v = i * n + j
            east, north = 4 * (i * n + (j + 1) % n), 4 * (((i + 1) % m) * n + j)
            alpha[4 * v], alpha[east + 2] = east + 2, 4 * v
            alpha[4 * v + 1], alpha[north + 3] = north + 3, 4 * v + 1

    return build_map(sigma, alpha, 1)


def genus_two_octagon() -> SurfaceMap:
    """Eight edges on the genus-2 surface with a single face."""

    return build_map([4, 12, 0, 14, 2, 13, 8, 1, 10, 3, 6, 5, 7, 15, 9, 11], [d ^ 1 for d in range(16)], 2)


def genus_two_k5() -> SurfaceMap:
    """The complete graph on five vertices embedded on the genus-2 surface."""

    return build_map(
        [4, 8, 6, 9, 2, 11, 0, 19, 12, 16, 1, 15, 10, 7, 3, 18, 14, 13, 5, 17], [d ^ 1 for d in range(20)], 2
    )


CAGES: dict[str, Callable[[], SurfaceMap]] = {
    'c3': lambda: cycle(3),
    'c4': lambda: cycle(4),
    'c5': lambda: cycle(5),
    'k4': k4,
    'w5': lambda: wheel(5),
    'prism': prism,
    'cube': cube,
    'octahedron': octahedron,
    'torus-3x3': lambda: torus_grid(3, 3),
    'torus-3x4': lambda: torus_grid(3, 4),
    'torus-4x4': lambda: torus_grid(4, 4),
    'genus2-octagon': genus_two_octagon,
    'genus2-k5': genus_two_k5,
}
"""Valid cages spanning genus 0, 1 and 2"""

DIAGRAMS: dict[str, Callable[[], LinkDiagram]] = {
    'unknot': unknot,
    'hopf': hopf,
    'trefoil': trefoil,
    'figure-eight': figure_eight,
    '6_2': six_two,
    'granny': granny,
    'kinked-trefoil': kinked_trefoil,
    'torus-one-crossing': torus_one_crossing,
    'grid-medial': grid_medial,
}


def random_alternating(rng: random.Random, crossings: int) -> LinkDiagram:
    """
    Grow a reduced prime alternating diagram from the figure-eight by random crossing insertions.

    Each insertion twists two sides of one face across it; only results that stay reduced and prime are kept.
    """

    diagram = figure_eight()

    for _ in range(_MAX_TRIES):
        if diagram.n_crossings >= crossings:
            break

        smap = diagram.smap
        walk = smap.faces[rng.choice(list(smap.faces))]
        i, j = rng.sample(range(len(walk)), 2)
        p, q = smap.alpha[walk[i]], walk[j]

        if len({smap.face_of[p], smap.face_of[q], smap.face_of[smap.alpha[q]]}) != 3:
            continue

        augmented = AugmentedDiagram(diagram, (Augmentation(TransversePath((p, q))),))
        grown = insert_half_twists(augmented, 0, 1).base

        if is_reduced(grown).passed and is_obviously_prime(grown).passed:
            diagram = grown
    else:
        raise InvalidParameter(
            'crossings', crossings, random_alternating, message='could not grow to {value} crossings!'
        )

    return diagram


def _connected_subset(diagram: LinkDiagram, size: int, rng: random.Random) -> list[VertexId]:
    smap = diagram.smap
    chosen = [rng.choice(diagram.crossings)]
    frontier = list(chosen)

    while len(chosen) < size and frontier:
        v = frontier.pop(rng.randrange(len(frontier)))

        for d in smap.vertices[v]:
            u = smap.vertex_of[smap.alpha[d]]

            if u not in chosen and len(chosen) < size:
                chosen.append(u)
                frontier.append(u)

    return chosen


def random_tangle(seed: int, endpoints: int | None = None) -> Tangle:
    """
    A disk tangle cut out of a random reduced prime alternating diagram.

    Without ``endpoints``, any tangle with 8 to 16 endpoints is accepted.
    """

    rng = random.Random(seed)

    for _ in range(_MAX_TRIES // 20):
        diagram = random_alternating(rng, rng.randint(6, 10))

        for _ in range(20):
            chosen = _connected_subset(diagram, rng.randint(2, diagram.n_crossings - 1), rng)

            try:
                tangle = sub_tangle(diagram, chosen)
            except InvalidParameter:
                continue

            count = len(tangle.stubs)

            if (count == endpoints) if endpoints is not None else 8 <= count <= 16:
                logger.debug('seed %d: tangle of %d crossings with %d endpoints', seed, len(chosen), count)
                return tangle

    raise InvalidParameter('seed', seed, random_tangle, message='no tangle found for seed {value}!')


def _add_chord(smap: SurfaceMap, rng: random.Random) -> SurfaceMap | None:
    """Join two non-adjacent vertices of a random face through that face."""

    walk = smap.faces[rng.choice(list(smap.faces))]

    if len(walk) < 4:
        return None

    x, y = (walk[i] for i in rng.sample(range(len(walk)), 2))
    u, v = smap.vertex_of[x], smap.vertex_of[y]

    if u == v or any({u, v} == set(smap.endpoints(e)) for e in smap.edges):
        return None

    n = smap.n_darts
    sigma, alpha = list(smap.sigma) + [x, y], list(smap.alpha) + [n + 1, n]

    # the corner before a dart belongs to its face
    sigma[smap.sigma_inv[x]], sigma[smap.sigma_inv[y]] = n, n + 1

    return build_map(sigma, alpha, smap.declared_genus)


def random_cage(seed: int) -> SurfaceMap:
    """A random valid cage: a chorded planar cycle, a torus grid or one of the genus-2 cages."""

    rng = random.Random(seed)
    kind = rng.random()

    if kind < 0.2:
        return torus_grid(rng.randint(3, 6), rng.randint(3, 6))

    if kind < 0.3:
        return rng.choice([genus_two_octagon, genus_two_k5])()

    smap = cycle(rng.randint(3, 10))

    for _ in range(rng.randint(0, 10)):
        smap = _add_chord(smap, rng) or smap

    return smap
