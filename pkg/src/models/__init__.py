from src.models.dissection import Dissection, DissectionStats, Piece
from src.models.exactnum import FieldElem, make_rational
from src.models.geom2d import Point, Polygon, RigidMotion
from src.models.report import CheckResult, VerificationReport
