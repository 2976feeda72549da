"""
Exact numbers in JSON.

A rational is the string ``"p/q"`` (or ``"p"``); an element of a quadratic
tower is the object ``{"x": ..., "y": ..., "r": ...}`` meaning ``x + y*sqrt(r)``
with the three parts encoded the same way.
"""

from __future__ import annotations

from typing import Annotated, Union

from pydantic import BaseModel, ConfigDict, StringConstraints

from src.models.exactnum import FieldElem, parse_rational

RationalStr = Annotated[str, StringConstraints(pattern=r"^-?\d+(/\d+)?$")]


class RadicalSchema(BaseModel):
    x: ExactValue
    y: ExactValue
    r: ExactValue

    model_config = ConfigDict(extra="forbid")


ExactValue = Union[RationalStr, RadicalSchema]

RadicalSchema.model_rebuild()


def to_exact(value: ExactValue) -> FieldElem:
    """
    The to_exact function turns a parsed JSON number back into a field element.

    :param value: ExactValue: A rational string or a radical object
    :return: The exact value
    """
    if isinstance(value, str):
        return FieldElem(parse_rational(value))
    return to_exact(value.x) + to_exact(value.y) * to_exact(value.r).sqrt()


def from_exact(value: FieldElem) -> ExactValue:
    """
    The from_exact function renders a field element top level first. Rationals
    become plain strings, so no zero terms are ever written.

    :param value: FieldElem: The exact value
    :return: A rational string or a radical object
    """
    if value.is_rational:
        return str(value.as_fraction())
    x, y, r = value.parts()
    return RadicalSchema(x=from_exact(x), y=from_exact(y), r=from_exact(r))
