from __future__ import annotations

import pytest

from altcert import canonical_json, cyclic_orbits, get_thread_count
from altcert.utils import THREADS_ENV


def test_thread_count_from_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(THREADS_ENV, '3')
    assert get_thread_count() == 3

    monkeypatch.setenv(THREADS_ENV, '0')
    assert get_thread_count() == 1


def test_thread_count_ignores_garbage(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(THREADS_ENV, raising=False)
    default = get_thread_count()

    monkeypatch.setenv(THREADS_ENV, 'many')
    assert get_thread_count() == default


def test_canonical_json() -> None:
    assert canonical_json({'b': [1, 2], 'a': None}) == '{"a":null,"b":[1,2]}'


def test_cyclic_orbits() -> None:
    assert cyclic_orbits([1, 2, 0, 4, 3, 5]) == [[0, 1, 2], [3, 4], [5]]
