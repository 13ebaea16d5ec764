from __future__ import annotations

import json
from typing import Any, TypeVar

from pydantic import BaseModel, Field, ValidationError, model_validator

from .augment import Augmentation, AugmentedDiagram
from .curves import TransversePath
from .diagram import LinkDiagram, build_diagram
from .embroidery import Tangle
from .exceptions import ParseError
from .surface_map import SurfaceMap, build_map
from .utils import digest

__all__ = [
    'MapFile', 'DiagramFile', 'AugmentationsFile', 'TangleFile',

    'load_map', 'dump_map',
    'load_diagram', 'dump_diagram',
    'load_augmentations',
    'load_tangle', 'dump_tangle',

    'input_digest'
]

ModelT = TypeVar('ModelT', bound=BaseModel)


class MapFile(BaseModel):
    darts: int = Field(ge=0)
    sigma: list[int]
    alpha: list[int]
    genus: int = 0

    @model_validator(mode='after')
    def _lengths(self) -> MapFile:
        for name in ('sigma', 'alpha'):
            if len(getattr(self, name)) != self.darts:
                raise ValueError(f'"{name}" lists {len(getattr(self, name))} images for {self.darts} darts')

        return self


class DiagramFile(MapFile):
    over: list[bool]
    augmentations: list[list[int]] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)


class AugmentationsFile(BaseModel):
    augmentations: list[list[int]]


class TangleFile(BaseModel):
    darts: int = Field(ge=0)
    sigma: list[int]
    alpha: list[int | None]
    over: list[bool]
    boundary: list[list[int]]

    @model_validator(mode='after')
    def _lengths(self) -> TangleFile:
        if len(self.sigma) != self.darts or len(self.alpha) != self.darts:
            raise ValueError(f'"sigma" and "alpha" must list {self.darts} images each')

        return self


def _parse(model: type[ModelT], text: str, func: Any) -> ModelT:
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        error = e.errors()[0]
        where = '.'.join(str(p) for p in error['loc']) or '<root>'
        raise ParseError(f'{where}: {error["msg"]}', func) from e


def _dump(model: BaseModel) -> str:
    return model.model_dump_json() + '\n'


def load_map(text: str) -> SurfaceMap:
    data = _parse(MapFile, text, load_map)

    return build_map(data.sigma, data.alpha, data.genus)


def dump_map(smap: SurfaceMap) -> str:
    return _dump(MapFile(
        darts=smap.n_darts, sigma=list(smap.sigma), alpha=list(smap.alpha), genus=smap.declared_genus
    ))


def _augmentations(paths: list[list[int]]) -> tuple[Augmentation, ...]:
    return tuple(Augmentation(TransversePath(tuple(path))) for path in paths)


def load_diagram(text: str) -> AugmentedDiagram:
    """A diagram file, with the augmentations it may carry."""

    data = _parse(DiagramFile, text, load_diagram)
    diagram = build_diagram(build_map(data.sigma, data.alpha, data.genus), data.over)

    return AugmentedDiagram(diagram, _augmentations(data.augmentations), tuple(data.notes))


def dump_diagram(diagram: LinkDiagram | AugmentedDiagram) -> str:
    augmented = diagram if isinstance(diagram, AugmentedDiagram) else AugmentedDiagram(diagram)
    smap = augmented.base.smap

    return _dump(DiagramFile(
        darts=smap.n_darts, sigma=list(smap.sigma), alpha=list(smap.alpha), genus=smap.declared_genus,
        over=list(augmented.base.over),
        augmentations=[list(aug.path.exits) for aug in augmented.augs],
        notes=list(augmented.notes)
    ))


def load_augmentations(text: str) -> tuple[Augmentation, ...]:
    return _augmentations(_parse(AugmentationsFile, text, load_augmentations).augmentations)


def load_tangle(text: str) -> Tangle:
    data = _parse(TangleFile, text, load_tangle)

    return Tangle(tuple(data.sigma), tuple(data.alpha), tuple(data.over), tuple(tuple(b) for b in data.boundary))


def dump_tangle(tangle: Tangle) -> str:
    return _dump(TangleFile(
        darts=tangle.n_darts, sigma=list(tangle.sigma), alpha=list(tangle.alpha), over=list(tangle.over),
        boundary=[list(b) for b in tangle.boundaries]
    ))


def input_digest(*texts: str) -> str:
    """SHA-256 over the canonical JSON of the inputs, blind to whitespace and key order."""

    try:
        return digest([json.loads(text) for text in texts])
    except json.JSONDecodeError as e:
        raise ParseError(f'line {e.lineno}, column {e.colno}: {e.msg}', input_digest) from e
