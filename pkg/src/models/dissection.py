from __future__ import annotations

from dataclasses import dataclass, field

from src.conf import messages
from src.exceptions import InvalidInput, ReflectionsUnsupported
from src.models.exactnum import FieldElem
from src.models.geom2d import Polygon, RigidMotion


@dataclass(frozen=True)
class Piece:
    """A polygon cut from ``sources[source_index]``, moved by ``motion`` into ``targets[target_index]``."""

    shape: Polygon
    source_index: int
    motion: RigidMotion
    target_index: int

    __hash__ = None

    @property
    def moved(self) -> Polygon:
        return self.shape.transformed(self.motion)


@dataclass(frozen=True)
class Dissection:
    """
    A scissors-congruence certificate between two polygon lists.

    Only the index structure is checked here; every geometric claim is left to
    the verifier so that broken certificates can still be loaded and reported.
    """

    sources: tuple[Polygon, ...]
    targets: tuple[Polygon, ...]
    pieces: tuple[Piece, ...] = field(default_factory=tuple)
    allow_reflections: bool = False

    __hash__ = None

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "pieces", tuple(self.pieces))
        if self.allow_reflections:
            raise ReflectionsUnsupported()
        for index, piece in enumerate(self.pieces):
            if not 0 <= piece.source_index < len(self.sources):
                raise InvalidInput(
                    messages.BAD_PIECE_INDEX.format(
                        index=index, side="source", ref=piece.source_index
                    )
                )
            if not 0 <= piece.target_index < len(self.targets):
                raise InvalidInput(
                    messages.BAD_PIECE_INDEX.format(
                        index=index, side="target", ref=piece.target_index
                    )
                )

    @classmethod
    def identity(cls, polygons: list[Polygon]) -> Dissection:
        pieces = [
            Piece(poly, i, RigidMotion.identity(), i) for i, poly in enumerate(polygons)
        ]
        return cls(tuple(polygons), tuple(polygons), tuple(pieces))


@dataclass(frozen=True)
class DissectionStats:
    piece_count: int
    max_tower_depth: int
    vertex_count: int
    total_area: FieldElem
