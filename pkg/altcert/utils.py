from __future__ import annotations

import hashlib
import json
import logging
import os
from typing import Any, Sequence

__all__ = [
    'get_thread_count',

    'canonical_json', 'digest',

    'cyclic_orbits'
]

THREADS_ENV = 'ALTCERT_THREADS'

logger = logging.getLogger(__name__)


def get_thread_count() -> int:
    default = min(32, (os.cpu_count() or 1) + 4)

    try:
        value = os.environ[THREADS_ENV]
    except KeyError:
        return default

    try:
        return max(1, int(value))
    except ValueError:
        logger.warning('%s=%r is not an integer, using %d threads', THREADS_ENV, value, default)
        return default


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(',', ':'))


def digest(obj: Any) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


def cyclic_orbits(perm: Sequence[int]) -> list[list[int]]:
    """Orbits of a permutation, each started at its minimum element, sorted by that element."""

    seen = [False] * len(perm)
    orbits = list[list[int]]()

    for start in range(len(perm)):
        if seen[start]:
            continue

        orbit = list[int]()
        d = start

        while not seen[d]:
            seen[d] = True
            orbit.append(d)
            d = perm[d]

        orbits.append(orbit)

    return orbits
