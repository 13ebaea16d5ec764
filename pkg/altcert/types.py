from __future__ import annotations

from enum import IntEnum, StrEnum
from typing import TypeAlias

__all__ = [
    'Dart', 'VertexId', 'EdgeId', 'FaceId',

    'Verdict',
    'CurveRule',
    'BoundsCase',
    'Travel'
]

Dart: TypeAlias = int
VertexId: TypeAlias = int
EdgeId: TypeAlias = int
FaceId: TypeAlias = int


class Verdict(StrEnum):
    PASS = 'pass'
    """Every hypothesis of the check holds"""

    FAIL = 'fail'
    """The check failed, a witness is attached"""

    NOT_APPLICABLE = 'not_applicable'
    """The check cannot arise on orientable surfaces"""

    def __and__(self, other: object) -> Verdict:
        if not isinstance(other, Verdict):
            return NotImplemented

        if Verdict.FAIL in (self, other):
            return Verdict.FAIL

        return Verdict.PASS


class CurveRule(StrEnum):
    REPEATED_CORNER = 'repeated_corner'
    """A corner position of a face is used by two segment ends"""

    INTERLEAVED_SEGMENTS = 'interleaved_segments'
    """Two segments in the same face cross"""

    INCONSISTENT = 'inconsistent'
    """Consecutive exits do not share a face"""

    OUT_OF_RANGE = 'out_of_range'
    """A face or position index does not exist"""


class BoundsCase(StrEnum):
    SPHERE = 'chi=2'
    TORUS = 'chi=0'
    HYPERBOLIC = 'chi<0'


class Travel(IntEnum):
    """Dart roles at an embroidery crossing, in counterclockwise order."""

    AWAY = 0
    """Radial direction leaving the tangle"""

    BWD = 1
    """Angular direction against the boundary orientation"""

    TOWARD = 2
    """Radial direction into the tangle"""

    FWD = 3
    """Angular direction along the boundary orientation"""
