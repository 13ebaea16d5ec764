from __future__ import annotations

import json

import pytest

from altcert import (
    Augmentation, AugmentedDiagram, HasFixedPoint, HyperbolicityCertificate, ParseError, RunReport, Tangle,
    TransversePath, Verdict, as_cage, certify_hyperbolic, dump_diagram, dump_map, dump_tangle, figure_eight,
    input_digest, k4, kinked_trefoil, load_augmentations, load_diagram, load_map, load_tangle, volume_bounds
)


def test_map_file_keeps_the_map() -> None:
    smap = k4()

    assert load_map(dump_map(smap)) == smap


def test_map_file_fields() -> None:
    data = json.loads(dump_map(k4()))

    assert data['darts'] == 12
    assert data['genus'] == 0
    assert len(data['sigma']) == len(data['alpha']) == 12


def test_map_file_lengths_must_match() -> None:
    with pytest.raises(ParseError, match='sigma'):
        load_map('{"darts": 4, "sigma": [1, 0], "alpha": [1, 0, 3, 2]}')


def test_map_file_must_be_json() -> None:
    with pytest.raises(ParseError):
        load_map('{"darts": 2,')


def test_map_file_is_validated() -> None:
    with pytest.raises(HasFixedPoint):
        load_map('{"darts": 2, "sigma": [0, 1], "alpha": [0, 1]}')


def test_diagram_file_carries_augmentations() -> None:
    base = figure_eight()
    path = TransversePath((2, base.smap.sigma[2]))
    text = dump_diagram(AugmentedDiagram(base, (Augmentation(path),), ('note',)))
    loaded = load_diagram(text)

    assert loaded.base == base
    assert loaded.augs == (Augmentation(path),)
    assert loaded.notes == ('note',)


def test_plain_diagram_file() -> None:
    loaded = load_diagram(dump_diagram(figure_eight()))

    assert loaded.augs == ()
    assert loaded.base.n_crossings == 4


def test_diagram_file_needs_flags() -> None:
    data = json.loads(dump_map(figure_eight().smap))

    with pytest.raises(ParseError, match='over'):
        load_diagram(json.dumps(data))


def test_augmentations_file() -> None:
    augs = load_augmentations('{"augmentations": [[2, 3], [5, 6, 7]]}')

    assert [aug.path.exits for aug in augs] == [(2, 3), (5, 6, 7)]


def test_tangle_file(path_tangle: Tangle) -> None:
    text = dump_tangle(path_tangle)

    assert json.loads(text)['alpha'][1] is None
    assert load_tangle(text) == path_tangle


def test_input_digest_ignores_layout() -> None:
    compact = '{"a": 1, "b": [1, 2]}'
    spread = '{\n  "b": [1, 2],\n  "a": 1\n}\n'

    assert input_digest(compact) == input_digest(spread)
    assert input_digest(compact) != input_digest(compact, compact)
    assert len(input_digest(compact)) == 64


def test_input_digest_rejects_malformed_json() -> None:
    with pytest.raises(ParseError):
        input_digest('{"a": ')


def test_certificate_survives_json() -> None:
    certificate = certify_hyperbolic(AugmentedDiagram(kinked_trefoil()))

    assert HyperbolicityCertificate.model_validate_json(certificate.model_dump_json()) == certificate


def test_run_report_survives_json() -> None:
    report = RunReport(
        command='bounds', input_digest='0' * 64, verdict=Verdict.PASS,
        bounds=volume_bounds(as_cage(k4())), outputs={'crossings': 6}, timing=0.25
    )

    assert RunReport.model_validate_json(report.model_dump_json()) == report
    assert 'timing' not in report.payload()
