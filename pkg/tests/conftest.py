from __future__ import annotations

from pathlib import Path
from typing import Callable

import pytest

from altcert import Tangle


@pytest.fixture
def path_tangle() -> Tangle:
    """Three crossings in a row, eight endpoints on one boundary."""

    return Tangle(
        sigma=(1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8),
        alpha=(6, None, None, None, 10, None, 0, None, None, None, 4, None),
        over=(True, False, True),
        boundaries=((1, 5, 9, 8, 11, 7, 3, 2),)
    )


@pytest.fixture
def ring_tangle() -> Tangle:
    """A closed chain of eight crossings, four endpoints leaving each side of the annulus."""

    sigma = tuple(4 * (d // 4) + (d + 1) % 4 for d in range(32))
    alpha: list[int | None] = [None] * 32

    for j in range(8):
        a, b = 4 * j + 1, 4 * ((j + 1) % 8) + 3
        alpha[a], alpha[b] = b, a

    return Tangle(
        sigma=sigma,
        alpha=tuple(alpha),
        over=tuple(j % 2 == 0 for j in range(8)),
        boundaries=(
            tuple(4 * (-j % 8) for j in range(8)),
            tuple(4 * (-j % 8) + 2 for j in range(8))
        )
    )


@pytest.fixture
def write(tmp_path: Path) -> Callable[[str, str], str]:
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write
