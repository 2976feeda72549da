"""
JSON files on disk for polygons and dissections.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Generic, TypeVar

from pydantic import BaseModel, ValidationError

from src.conf import messages
from src.exceptions import GeometryError, InvalidInput, TowerLimitExceeded
from src.models.dissection import Dissection
from src.models.geom2d import Polygon
from src.schemas.dissection import DissectionSchema, PolygonSchema

logger = logging.getLogger(__name__)

SchemaT = TypeVar("SchemaT", bound=BaseModel)


class JsonFileRepo(Generic[SchemaT]):
    schema: type[SchemaT]

    def read_schema(self, path: str | Path) -> SchemaT:
        """
        The read_schema function loads and validates one JSON document.

        :param self: Represent the instance of the class
        :param path: str | Path: The file to read
        :return: The validated schema object
        """
        path = Path(path)
        try:
            return self.schema.model_validate_json(path.read_text(encoding="utf-8"))
        except (OSError, ValidationError) as err:
            raise _invalid_file(path, err) from err

    def write_schema(self, path: str | Path, body: SchemaT) -> Path:
        path = Path(path)
        path.write_text(body.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.debug("wrote %s", path)
        return path


def _invalid_file(path: str | Path, err: Exception) -> InvalidInput:
    return InvalidInput(messages.INVALID_FILE.format(path=path, error=err))


class PolygonRepo(JsonFileRepo[PolygonSchema]):
    schema = PolygonSchema

    def load(self, path: str | Path) -> Polygon:
        body = self.read_schema(path)
        try:
            return body.to_domain()
        except TowerLimitExceeded:
            raise
        except GeometryError as err:
            raise _invalid_file(path, err) from err

    def save(self, path: str | Path, polygon: Polygon) -> Path:
        return self.write_schema(path, PolygonSchema.from_domain(polygon))


class DissectionRepo(JsonFileRepo[DissectionSchema]):
    schema = DissectionSchema

    def load(self, path: str | Path) -> Dissection:
        """
        The load function reads a dissection certificate. Malformed JSON, bad
        numbers, degenerate polygons and dangling piece indices all surface as
        InvalidInput; a certificate that merely fails verification loads fine.

        :param self: Represent the instance of the class
        :param path: str | Path: The file to read
        :return: The dissection
        """
        body = self.read_schema(path)
        try:
            return body.to_domain()
        except TowerLimitExceeded:
            raise
        except GeometryError as err:
            raise _invalid_file(path, err) from err

    def save(self, path: str | Path, dissection: Dissection) -> Path:
        return self.write_schema(path, DissectionSchema.from_domain(dissection))
