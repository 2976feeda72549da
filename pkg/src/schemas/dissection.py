from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from src.models.dissection import Dissection, Piece
from src.models.geom2d import Point, Polygon, RigidMotion
from src.schemas.exact import ExactValue, from_exact, to_exact


class PolygonSchema(BaseModel):
    vertices: list[tuple[ExactValue, ExactValue]] = Field(min_length=3)

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_domain(cls, polygon: Polygon) -> PolygonSchema:
        return cls(vertices=[(from_exact(p.x), from_exact(p.y)) for p in polygon])

    def to_domain(self) -> Polygon:
        """
        The to_domain function builds the canonical polygon. Orientation is fixed
        and collinear vertices are dropped; a self-intersecting ring is rejected.

        :param self: Represent the instance of the class
        :return: The polygon
        """
        return Polygon(Point(to_exact(x), to_exact(y)) for x, y in self.vertices)


class MotionSchema(BaseModel):
    c: ExactValue
    s: ExactValue
    t: tuple[ExactValue, ExactValue]

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_domain(cls, motion: RigidMotion) -> MotionSchema:
        return cls(
            c=from_exact(motion.c),
            s=from_exact(motion.s),
            t=(from_exact(motion.tx), from_exact(motion.ty)),
        )

    def to_domain(self) -> RigidMotion:
        return RigidMotion(
            to_exact(self.c), to_exact(self.s), to_exact(self.t[0]), to_exact(self.t[1])
        )


class PieceSchema(BaseModel):
    shape: PolygonSchema
    source_index: int = Field(ge=0)
    motion: MotionSchema
    target_index: int = Field(ge=0)

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_domain(cls, piece: Piece) -> PieceSchema:
        return cls(
            shape=PolygonSchema.from_domain(piece.shape),
            source_index=piece.source_index,
            motion=MotionSchema.from_domain(piece.motion),
            target_index=piece.target_index,
        )

    def to_domain(self) -> Piece:
        return Piece(
            self.shape.to_domain(),
            self.source_index,
            self.motion.to_domain(),
            self.target_index,
        )


class DissectionSchema(BaseModel):
    sources: list[PolygonSchema]
    targets: list[PolygonSchema]
    pieces: list[PieceSchema] = []
    allow_reflections: bool = False

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def from_domain(cls, dissection: Dissection) -> DissectionSchema:
        return cls(
            sources=[PolygonSchema.from_domain(p) for p in dissection.sources],
            targets=[PolygonSchema.from_domain(p) for p in dissection.targets],
            pieces=[PieceSchema.from_domain(p) for p in dissection.pieces],
            allow_reflections=dissection.allow_reflections,
        )

    def to_domain(self) -> Dissection:
        """
        The to_domain function rebuilds the dissection. Piece indices are checked
        here; everything geometric is left to the verifier.

        :param self: Represent the instance of the class
        :return: The dissection
        :raises ReflectionsUnsupported: if allow_reflections is set
        """
        return Dissection(
            [p.to_domain() for p in self.sources],
            [p.to_domain() for p in self.targets],
            [p.to_domain() for p in self.pieces],
            allow_reflections=self.allow_reflections,
        )
