from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable

from .certificate import CheckResult, HyperbolicityCertificate
from .curves import (
    TransversePath, check_path, chords_interleave, is_obviously_prime, is_reduced, path_segments
)
from .diagram import LinkDiagram, build_diagram, is_two_braid, tait_graph
from .exceptions import InvalidCurve, InvalidParameter, NoAlternatingParity, NotTwoPunctured
from .surface_map import SurfaceMap, build_map, connected_components, face_adjacency, is_cellular_on
from .types import Dart, EdgeId, FaceId, Verdict

__all__ = [
    'Augmentation', 'AugmentedDiagram',

    'validate_augmentations',
    'certify_hyperbolic',
    'insert_half_twists', 'twist_family',
    'is_fully_augmented'
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Augmentation:
    """An augmenting circle, represented by the arc of its spanning disk below the projection surface."""

    path: TransversePath

    def end_faces(self, diagram: LinkDiagram) -> tuple[FaceId, FaceId]:
        return self.path.start_face(diagram.smap), self.path.end_face(diagram.smap)

    def punctures(self, diagram: LinkDiagram) -> tuple[EdgeId, ...]:
        return self.path.punctures(diagram.smap)


@dataclass(frozen=True)
class AugmentedDiagram:
    base: LinkDiagram
    augs: tuple[Augmentation, ...] = ()
    notes: tuple[str, ...] = ()
    flags: tuple[str, ...] = field(default=(), compare=False)

    def with_augs(self, augs: Iterable[Augmentation]) -> AugmentedDiagram:
        return replace(self, augs=tuple(augs))


def _aug_failure(index: int, rule: str, detail: str, **witness: object) -> CheckResult:
    return CheckResult.fail('augmentations_valid', {'augmentation': index, 'rule': rule, **witness}, detail)


def validate_augmentations(augmented: AugmentedDiagram) -> CheckResult:
    """
    Every augmentation must be an embedded arc between two distinct faces sharing no edge.

    Augmentations must not cross each other inside a face and must join pairwise distinct face pairs.
    """

    base = augmented.base
    smap = base.smap
    adjacency = face_adjacency(smap)
    pairs = dict[frozenset[FaceId], int]()

    for i, aug in enumerate(augmented.augs):
        try:
            check_path(smap, aug.path)
        except InvalidCurve as e:
            return _aug_failure(i, e.rule.value, e.message)

        f1, f2 = aug.end_faces(base)

        if f1 == f2:
            return _aug_failure(i, 'same_face', f'both ends lie in face {f1}', faces=[f1, f2])

        if adjacency.has_edge(f1, f2):
            return _aug_failure(i, 'adjacent', f'faces {f1} and {f2} share an edge', faces=[f1, f2])

        assert len(aug.punctures(base)) >= 2, 'a path between non-adjacent faces crosses two edges'

        if (pair := frozenset((f1, f2))) in pairs:
            return _aug_failure(
                i, 'duplicate_pair', f'same end faces as augmentation {pairs[pair]}', faces=sorted(pair)
            )

        pairs[pair] = i

    chords = [
        [
            (s.face, (s.entry, s.exit)) for s in path_segments(smap, aug.path)
            if s.entry is not None and s.exit is not None
        ]
        for aug in augmented.augs
    ]

    for i, first in enumerate(chords):
        for j in range(i + 1, len(chords)):
            for face, c1 in first:
                for other_face, c2 in chords[j]:
                    if face == other_face and chords_interleave(c1, c2):  # type: ignore[arg-type]
                        return _aug_failure(
                            i, 'intersecting', f'crosses augmentation {j} in face {face}', other=j, face=face
                        )

    return CheckResult.ok('augmentations_valid')


def is_fully_augmented(augmented: AugmentedDiagram) -> bool:
    return all(len(aug.punctures(augmented.base)) == 2 for aug in augmented.augs)


def _two_braid_check(diagram: LinkDiagram, alternating: bool, connected: bool) -> CheckResult:
    name = 'not_excluded_two_braid'

    if diagram.smap.declared_genus != 0:
        return CheckResult.ok(name, 'the exclusion only concerns the sphere')

    if not (alternating and connected):
        return CheckResult(name=name, verdict=Verdict.NOT_APPLICABLE, detail='undecided on a non-alternating base')

    if is_two_braid(diagram):
        shape = 'dipole' if tait_graph(diagram).number_of_nodes() == 2 else 'cycle'
        return CheckResult.fail(
            name, {'crossings': diagram.n_crossings, 'tait_graph': shape}, 'the base is a 2-braid on the sphere'
        )

    return CheckResult.ok(name)


def certify_hyperbolic(augmented: AugmentedDiagram) -> HyperbolicityCertificate:
    """
    Check every combinatorial hypothesis under which the complement of the augmented link is hyperbolic.

    Checks on the base diagram never look at the augmentations.
    """

    base = augmented.base
    smap = base.smap
    checks = list[CheckResult]()

    components = len(connected_components(smap.sigma, smap.alpha)) if smap.n_darts else 1
    connected = components == 1
    checks.append(
        CheckResult.ok('connected') if connected else CheckResult.fail('connected', {'components': components})
    )

    if is_cellular_on(smap):
        checks.append(CheckResult.ok('cellular'))
    else:
        checks.append(CheckResult.fail(
            'cellular', {'derived_genus': smap.genus, 'declared_genus': smap.declared_genus}
        ))

    bad_edges = [e for e in smap.edges if base.is_over(e) == base.is_over(smap.alpha[e])]
    alternating = not bad_edges
    checks.append(
        CheckResult.ok('alternating') if alternating else CheckResult.fail('alternating', {'edge': bad_edges[0]})
    )

    checks.append(is_reduced(base))

    if connected:
        checks.append(is_obviously_prime(base))
    else:
        checks.append(CheckResult(
            name='obviously_prime', verdict=Verdict.NOT_APPLICABLE, detail='defined for connected diagrams'
        ))

    checks.append(_two_braid_check(base, alternating, connected))
    checks.append(validate_augmentations(augmented))

    checks.extend(
        CheckResult(name=name, verdict=Verdict.NOT_APPLICABLE, detail='orientable surfaces only')
        for name in ('projective_plane_two_braid', 'projective_plane_one_crossing_circle')
    )

    certificate = HyperbolicityCertificate.aggregate(checks, list(augmented.notes))

    logger.debug('certificate %s, failed: %s', certificate.verdict, certificate.failed)

    return certificate


def _rethreaded(smap: SurfaceMap, path: TransversePath, moves: dict[Dart, tuple[Dart, Dart]]) -> TransversePath:
    """
    The first rewrite of ``path`` that is a valid path of ``smap``, trying both ends of every split edge.

    :raises InvalidCurve:   no rewrite is valid.
    """

    error: InvalidCurve | None = None

    for exits in product(*(moves.get(x, (x,)) for x in path.exits)):
        candidate = TransversePath(exits)

        try:
            check_path(smap, candidate)
        except InvalidCurve as e:
            error = error or e
            continue

        return candidate

    assert error is not None

    raise error


def insert_half_twists(augmented: AugmentedDiagram, aug_index: int, k: int) -> AugmentedDiagram:
    """
    Replace a twice-punctured augmentation by ``|k|`` crossings twisting its two punctured strands.

    The path leaves its first face through ``p`` and the middle face through ``q``. New crossings read
    ``NE, NW, SW, SE`` counterclockwise; ``p`` and ``q`` attach to the first ``NW`` and ``NE``, the chain
    continues ``SW -> NW`` and ``SE -> NE``, and the last ``SW`` and ``SE`` take over the old partners of
    ``p`` and ``q``. The crossing parity keeps an alternating base alternating when possible, otherwise
    a ``NoAlternatingParity`` flag is recorded. The sign of ``k`` is recorded as handedness.

    Other augmentations crossing the edges of ``p`` or ``q`` keep crossing them, next to whichever end of the
    new chain keeps their path connected.

    :raises InvalidParameter:   ``k`` is zero.
    :raises NotTwoPunctured:    the augmentation does not cross exactly two edges.
    :raises InvalidCurve:       another augmentation cannot be carried over to the twisted diagram.
    """

    if k == 0:
        raise InvalidParameter('k', k, insert_half_twists)

    base = augmented.base
    smap = base.smap

    if not 0 <= aug_index < len(augmented.augs):
        raise InvalidParameter('aug_index', aug_index, insert_half_twists)

    path = augmented.augs[aug_index].path

    if len(path.exits) != 2:
        raise NotTwoPunctured(len(path.exits), insert_half_twists)

    check_path(smap, path)

    p, q = path.exits
    ap, aq = smap.alpha[p], smap.alpha[q]
    n, count = smap.n_darts, abs(k)

    sigma = list(smap.sigma) + [n + 4 * (j // 4) + (j + 1) % 4 for j in range(4 * count)]
    alpha = list(smap.alpha) + [0] * (4 * count)

    def link(a: int, b: int) -> None:
        alpha[a], alpha[b] = b, a

    def dart(j: int, role: int) -> int:
        return n + 4 * j + role

    ne, nw, sw, se = range(4)

    link(p, dart(0, nw))
    link(q, dart(0, ne))

    for j in range(count - 1):
        link(dart(j, sw), dart(j + 1, nw))
        link(dart(j, se), dart(j + 1, ne))

    link(dart(count - 1, sw), ap)
    link(dart(count - 1, se), aq)

    flags = list(augmented.flags)
    p_over, q_over = base.is_over(p), base.is_over(q)

    if p_over != q_over:
        # NW and SE over when p runs under
        new_flag = p_over
        parity = 'B' if p_over else 'A'
    else:
        new_flag, parity = False, 'A'
        flags.append(NoAlternatingParity(insert_half_twists).message)
        logger.warning('no alternating parity for augmentation %d, using type A crossings', aug_index)

    result = build_diagram(build_map(sigma, alpha, smap.declared_genus), base.over + (new_flag,) * count)

    last = count - 1
    moves = {
        p: (p, dart(last, sw)), ap: (ap, dart(0, nw)),
        q: (q, dart(last, se)), aq: (aq, dart(0, ne))
    }
    others = tuple(
        Augmentation(_rethreaded(result.smap, aug.path, moves))
        for i, aug in enumerate(augmented.augs) if i != aug_index
    )

    note = (
        f'inserted {count} {"right" if k > 0 else "left"}-handed half twist{"s" if count > 1 else ""} '
        f'at augmentation {aug_index} (parity {parity})'
    )

    logger.debug(note)

    return AugmentedDiagram(result, others, augmented.notes + (note,), tuple(flags))


def twist_family(augmented: AugmentedDiagram, aug_index: int, ks: Iterable[int]) -> list[AugmentedDiagram]:
    """The diagrams obtained by twisting one augmentation ``k`` times, for every ``k``."""

    return [insert_half_twists(augmented, aug_index, k) for k in ks]
