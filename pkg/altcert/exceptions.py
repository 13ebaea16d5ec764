from __future__ import annotations

from typing import Any, Callable

from .types import CurveRule

__all__ = [
    'FuncExceptT',

    'AltCertError',

    'NotPermutation', 'NotInvolution', 'HasFixedPoint', 'NotConnected', 'GenusNegative',
    'NotFourValent', 'NotAlternating',

    'InvalidCurve', 'RepeatedCorner', 'InterleavedSegments',

    'InvalidParameter', 'NotTwoPunctured', 'NoAlternatingParity', 'InvalidCage',
    'TooFewEndpoints', 'EndpointParityViolation', 'ParityUnsolvable', 'BoundaryOrderError',

    'ParseError'
]

FuncExceptT = Callable[..., Any] | str


class AltCertError(ValueError):
    """
    Base of every error raised by altcert.

    Mirrors ``vstools.CustomValueError``: the message is formatted with the keyword arguments and prefixed
    with the name of the raising function.
    """

    def __init__(self, message: str | None = None, func: FuncExceptT | None = None, **kwargs: Any) -> None:
        self.func = func
        self.kwargs = kwargs

        message = (message or 'An unexpected error occurred!').format(**kwargs)

        if func is not None:
            name = func if isinstance(func, str) else getattr(func, '__name__', repr(func))
            message = f'({name}) {message}'

        self.message = message

        super().__init__(message)


class NotPermutation(AltCertError):
    """Raised when a dart map is not a permutation of 0..D-1."""

    def __init__(
        self, name: str, func: FuncExceptT | None = None,
        message: str = '"{name}" is not a permutation of the dart set!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, name=name, **kwargs)


class NotInvolution(AltCertError):
    """Raised when alpha(alpha(d)) != d for some dart."""

    def __init__(
        self, dart: int, func: FuncExceptT | None = None,
        message: str = 'alpha is not an involution at dart {dart}!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, dart=dart, **kwargs)


class HasFixedPoint(AltCertError):
    """Raised when alpha fixes a dart."""

    def __init__(
        self, dart: int, func: FuncExceptT | None = None,
        message: str = 'alpha fixes dart {dart}!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, dart=dart, **kwargs)


class NotConnected(AltCertError):
    """Raised when sigma and alpha do not act transitively on the darts."""

    def __init__(
        self, components: int, func: FuncExceptT | None = None,
        message: str = 'the map has {components} connected components, expected 1!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, components=components, **kwargs)


class GenusNegative(AltCertError):
    """Raised when the Euler formula gives a negative or fractional genus."""

    def __init__(
        self, euler: int, func: FuncExceptT | None = None,
        message: str = 'Euler characteristic {euler} does not give a non-negative integer genus!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, euler=euler, **kwargs)


class NotFourValent(AltCertError):
    """Raised when a diagram vertex does not have exactly four darts."""

    def __init__(
        self, vertex: int, degree: int, func: FuncExceptT | None = None,
        message: str = 'vertex {vertex} has degree {degree}, crossings must be 4-valent!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, vertex=vertex, degree=degree, **kwargs)


class NotAlternating(AltCertError):
    """Raised when an operation requires an alternating diagram."""

    def __init__(
        self, edge: int, func: FuncExceptT | None = None,
        message: str = 'the diagram is not alternating along edge {edge}!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, edge=edge, **kwargs)


class InvalidCurve(AltCertError):
    """Raised when a transverse curve or path is not embedded or not consistent with the diagram."""

    def __init__(
        self, rule: CurveRule, func: FuncExceptT | None = None,
        message: str = 'curve violates rule "{rule}": {detail}', detail: str = '', **kwargs: Any
    ) -> None:
        self.rule = rule

        super().__init__(message, func, rule=rule.value, detail=detail, **kwargs)


class RepeatedCorner(InvalidCurve):
    """Raised when one corner position is used twice in a face."""

    def __init__(self, face: int, position: int, func: FuncExceptT | None = None, **kwargs: Any) -> None:
        super().__init__(
            CurveRule.REPEATED_CORNER, func, detail=f'position {position} of face {face} is used twice', **kwargs
        )


class InterleavedSegments(InvalidCurve):
    """Raised when two segments in one face cross each other."""

    def __init__(self, face: int, first: int, second: int, func: FuncExceptT | None = None, **kwargs: Any) -> None:
        super().__init__(
            CurveRule.INTERLEAVED_SEGMENTS, func,
            detail=f'segments {first} and {second} interleave in face {face}', **kwargs
        )


class InvalidParameter(AltCertError):
    """Raised on an out of range operation parameter."""

    def __init__(
        self, name: str, value: Any, func: FuncExceptT | None = None,
        message: str = 'invalid value {value!r} for "{name}"!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, name=name, value=value, **kwargs)


class NotTwoPunctured(AltCertError):
    """Raised when a twist fill is requested on a disk not punctured exactly twice."""

    def __init__(
        self, punctures: int, func: FuncExceptT | None = None,
        message: str = 'twist fill defined only for disks punctured exactly twice, got {punctures}!',
        **kwargs: Any
    ) -> None:
        super().__init__(message, func, punctures=punctures, **kwargs)


class NoAlternatingParity(AltCertError):
    """Recorded when no crossing parity keeps a twist splice alternating."""

    def __init__(
        self, func: FuncExceptT | None = None,
        message: str = 'no alternating parity exists for the splice, used the default one!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, **kwargs)


class InvalidCage(AltCertError):
    """Raised when a map is not a cage graph."""

    def __init__(
        self, rule: str, func: FuncExceptT | None = None,
        message: str = 'not a cage graph: {rule}!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, rule=rule, **kwargs)


class TooFewEndpoints(AltCertError):
    """Raised when a tangle boundary carries fewer than eight endpoints."""

    def __init__(
        self, count: int, func: FuncExceptT | None = None,
        message: str = 'embroidery needs at least 8 endpoints on each boundary, got {count}!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, count=count, **kwargs)


class EndpointParityViolation(AltCertError):
    """Raised when boundary endpoints do not alternate between over and under strands."""

    def __init__(
        self, position: int, func: FuncExceptT | None = None,
        message: str = 'boundary endpoints stop alternating at position {position}!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, position=position, **kwargs)


class ParityUnsolvable(AltCertError):
    """Raised when the crossing constraints of an embroidery admit no solution."""

    def __init__(
        self, cycle: list[int], func: FuncExceptT | None = None,
        message: str = 'crossing parity constraints conflict along crossings {cycle}!', **kwargs: Any
    ) -> None:
        self.cycle = cycle

        super().__init__(message, func, cycle=cycle, **kwargs)


class ParseError(AltCertError):
    """Raised on malformed input files."""

    def __init__(
        self, detail: str, func: FuncExceptT | None = None,
        message: str = 'malformed input: {detail}', **kwargs: Any
    ) -> None:
        super().__init__(message, func, detail=detail, **kwargs)


class BoundaryOrderError(AltCertError):
    """Raised when a boundary endpoint order does not match the embedding of the tangle."""

    def __init__(
        self, boundary: int, func: FuncExceptT | None = None,
        message: str = 'endpoints of boundary {boundary} are not listed in clockwise order!', **kwargs: Any
    ) -> None:
        super().__init__(message, func, boundary=boundary, **kwargs)
