"""
The rotation configuration of a right triangle and its exact checks.

Placement: C = (0, 0), A = (b, 0), B = (0, a). The triangle is rotated by
60 degrees counter-clockwise about A and clockwise about B; both rotations
send the other acute vertex to the same point D.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from src.conf import messages
from src.conf.config import config
from src.exceptions import DegenerateInput, InvalidInput
from src.models.exactnum import FieldElem, parse_rational
from src.models.geom2d import Point, Polygon, RigidMotion, dist2
from src.models.report import CheckResult, VerificationReport
from src.services.geometry import EXACT_NGONS, regular_polygon

logger = logging.getLogger(__name__)

COS_60 = Fraction(1, 2)

COINCIDENCE = "COINCIDENCE"
EQUILATERALS = "EQUILATERALS"
CONGRUENCES = "CONGRUENCES"
PENTAGON_IDENTITY = "PENTAGON_IDENTITY"
PARALLELOGRAM = "PARALLELOGRAM"
ANGLES = "ANGLES"
CONCLUSION = "CONCLUSION"

POLYGON_LABELS = {
    "BCA": ("B", "C", "A"),
    "ABD": ("A", "B", "D"),
    "ACC1": ("A", "C", "C1"),
    "BCC2": ("B", "C", "C2"),
    "BC2D": ("B", "C2", "D"),
    "AC1D": ("A", "C1", "D"),
    "ABC2DC1": ("A", "B", "C2", "D", "C1"),
    "C2DC1C": ("C2", "D", "C1", "C"),
}


@dataclass(frozen=True)
class RightTriangleInput:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", parse_rational(self.a))
        object.__setattr__(self, "b", parse_rational(self.b))
        if self.a <= 0 or self.b <= 0:
            raise InvalidInput(messages.NON_POSITIVE_LEG)


def _sin_60() -> FieldElem:
    return FieldElem(3).sqrt() / 2


def rotation_at_a(A: Point, mirrored: bool = False) -> RigidMotion:
    sin = _sin_60()
    return RigidMotion.rotation_about(A, COS_60, -sin if mirrored else sin)


def rotation_at_b(B: Point, mirrored: bool = False) -> RigidMotion:
    sin = _sin_60()
    return RigidMotion.rotation_about(B, COS_60, sin if mirrored else -sin)


@dataclass(frozen=True)
class RotationConfiguration:
    a: Fraction
    b: Fraction
    C: Point
    A: Point
    B: Point
    C1: Point
    C2: Point
    D: Point
    csq: FieldElem
    mirrored: bool = False

    __hash__ = None

    def with_point(self, name: str, point: Point) -> RotationConfiguration:
        return dataclasses.replace(self, **{name: point})

    def labelled_points(self) -> dict[str, Point]:
        return {
            "A": self.A,
            "B": self.B,
            "C": self.C,
            "C₁": self.C1,
            "C₂": self.C2,
            "D": self.D,
        }

    def polygon(self, name: str) -> Polygon:
        return Polygon(getattr(self, label) for label in POLYGON_LABELS[name])

    @functools.cached_property
    def polygons(self) -> dict[str, Polygon]:
        """Named polygons, in the order the argument introduces them."""
        return {name: self.polygon(name) for name in POLYGON_LABELS}


@dataclass(frozen=True)
class NgonResult:
    n: int
    holds: bool
    kappa: tuple[Fraction, Fraction]
    residual: tuple[Fraction, Fraction]
    exact_kappa: FieldElem | None = None
    kappa_consistent: bool = True

    __hash__ = None


class ConstructionService:
    def __init__(self, precision: int = config.NGON_PRECISION):
        """
        The __init__ function stores the working precision, in bits, used for the
        numeric regular-polygon constant.

        :param self: Represent the instance of the class
        :param precision: int: Bits of precision for the numeric cross-check
        :return: Nothing
        """
        self.precision = precision

    def build(self, body: RightTriangleInput, mirrored: bool = False) -> RotationConfiguration:
        """
        The build function places the right triangle and applies the two 60 degree
        rotations. All coordinates are in Q(sqrt 3); c itself is never needed, only
        c^2 = a^2 + b^2.

        :param self: Represent the instance of the class
        :param body: RightTriangleInput: The two cathetus lengths
        :param mirrored: bool: Use the opposite rotation senses
        :return: The configuration
        """
        a, b = body.a, body.b
        C = Point.of(0, 0)
        A = Point.of(b, 0)
        B = Point.of(0, a)
        rot_a = rotation_at_a(A, mirrored)
        rot_b = rotation_at_b(B, mirrored)
        cfg = RotationConfiguration(
            a=a,
            b=b,
            C=C,
            A=A,
            B=B,
            C1=rot_a.apply(C),
            C2=rot_b.apply(C),
            D=rot_a.apply(B),
            csq=FieldElem(a * a + b * b),
            mirrored=mirrored,
        )
        logger.debug("built configuration for a=%s, b=%s: D=%s", a, b, cfg.D)
        return cfg

    def check_coincidence(self, cfg: RotationConfiguration) -> CheckResult:
        """
        The check_coincidence function rotates B about A and A about B independently
        and asserts that both images agree with each other and with the stored D.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The check result
        """
        b1 = rotation_at_a(cfg.A, cfg.mirrored).apply(cfg.B)
        a2 = rotation_at_b(cfg.B, cfg.mirrored).apply(cfg.A)
        passed = b1 == a2 and b1 == cfg.D
        witnesses = {
            "B1.x": b1.x,
            "B1.y": b1.y,
            "A2.x": a2.x,
            "A2.y": a2.y,
            "A2-B1.x": a2.x - b1.x,
            "A2-B1.y": a2.y - b1.y,
            "D-B1.x": cfg.D.x - b1.x,
            "D-B1.y": cfg.D.y - b1.y,
        }
        return CheckResult(COINCIDENCE, passed, witnesses)

    def check_equilaterals(self, cfg: RotationConfiguration) -> CheckResult:
        """
        The check_equilaterals function compares the squared sides of ABD, ACC1 and
        BCC2 with c^2, b^2 and a^2 respectively.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The check result
        """
        a2 = FieldElem(cfg.a * cfg.a)
        b2 = FieldElem(cfg.b * cfg.b)
        expected = {
            "|AB|^2": (dist2(cfg.A, cfg.B), cfg.csq),
            "|AD|^2": (dist2(cfg.A, cfg.D), cfg.csq),
            "|BD|^2": (dist2(cfg.B, cfg.D), cfg.csq),
            "|AC|^2": (dist2(cfg.A, cfg.C), b2),
            "|CC1|^2": (dist2(cfg.C, cfg.C1), b2),
            "|AC1|^2": (dist2(cfg.A, cfg.C1), b2),
            "|BC|^2": (dist2(cfg.B, cfg.C), a2),
            "|CC2|^2": (dist2(cfg.C, cfg.C2), a2),
            "|BC2|^2": (dist2(cfg.B, cfg.C2), a2),
        }
        passed = all(value == target for value, target in expected.values())
        witnesses = {name: value for name, (value, _) in expected.items()}
        return CheckResult(EQUILATERALS, passed, witnesses)

    def check_congruences(self, cfg: RotationConfiguration) -> CheckResult:
        """
        The check_congruences function compares the squared side multisets of
        BC2D and AC1D with that of the right triangle.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The check result
        """
        target = sorted([FieldElem(cfg.a * cfg.a), FieldElem(cfg.b * cfg.b), cfg.csq])
        bc2d = [dist2(cfg.B, cfg.C2), dist2(cfg.C2, cfg.D), dist2(cfg.D, cfg.B)]
        ac1d = [dist2(cfg.A, cfg.C1), dist2(cfg.C1, cfg.D), dist2(cfg.D, cfg.A)]
        passed = sorted(bc2d) == target and sorted(ac1d) == target
        witnesses = {
            "|BC2|^2": bc2d[0],
            "|C2D|^2": bc2d[1],
            "|DB|^2": bc2d[2],
            "|AC1|^2": ac1d[0],
            "|C1D|^2": ac1d[1],
            "|DA|^2": ac1d[2],
        }
        return CheckResult(CONGRUENCES, passed, witnesses)

    def check_pentagon_identity(self, cfg: RotationConfiguration) -> CheckResult:
        """
        The check_pentagon_identity function evaluates both decompositions of the
        pentagon ABC2DC1 with the shoelace formula and compares them exactly.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The check result; a non-simple pentagon is a failure, not an error
        """
        try:
            polys = cfg.polygons
        except DegenerateInput as err:
            return CheckResult(PENTAGON_IDENTITY, False, {}, note=str(err))
        pentagon = polys["ABC2DC1"].area
        first = polys["ABD"].area + polys["BC2D"].area + polys["AC1D"].area
        second = (
            polys["ACC1"].area + polys["BCC2"].area + polys["BCA"].area + polys["C2DC1C"].area
        )
        passed = pentagon == first and pentagon == second
        witnesses = {
            "area(ABC2DC1)": pentagon,
            "ABD+BC2D+AC1D": first,
            "ACC1+BCC2+BCA+C2DC1C": second,
        }
        return CheckResult(PENTAGON_IDENTITY, passed, witnesses)

    def check_parallelogram(self, cfg: RotationConfiguration) -> CheckResult:
        """
        The check_parallelogram function asserts that C2DC1C has equal opposite
        sides and area ab/2. The area is the absolute cross product of two sides,
        no trigonometry involved.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The check result
        """
        c2_d = cfg.D - cfg.C2
        c_c1 = cfg.C1 - cfg.C
        d_c1 = cfg.C1 - cfg.D
        c2_c = cfg.C - cfg.C2
        area = abs(c2_d.cross(c2_c))
        half_ab = FieldElem(cfg.a * cfg.b / 2)
        triangle = abs((cfg.A - cfg.C).cross(cfg.B - cfg.C)) / 2
        passed = c2_d == c_c1 and d_c1 == c2_c and area == half_ab and area == triangle
        witnesses = {
            "C2->D.x": c2_d.x,
            "C2->D.y": c2_d.y,
            "C->C1.x": c_c1.x,
            "C->C1.y": c_c1.y,
            "area(C2DC1C)": area,
            "ab/2": half_ab,
            "area(BCA)": triangle,
        }
        return CheckResult(PARALLELOGRAM, passed, witnesses)

    def check_angles(self, cfg: RotationConfiguration) -> CheckResult:
        """
        The check_angles function encodes each angle as a sign plus a squared cosine:
        30 degrees at C2 and C1 (dot > 0, 4 dot^2 = 3 |u|^2 |v|^2) and 150 degrees
        at C (dot < 0, same identity).

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :return: The check result, annotated with the printed 120 degrees
        """

        def cosine_is(u: Point, v: Point, expected_sign: int) -> tuple[bool, FieldElem]:
            dot = u.dot(v)
            return (
                dot.sign() == expected_sign and 4 * dot * dot == 3 * u.norm2() * v.norm2(),
                dot,
            )

        at_c2, dot_c2 = cosine_is(cfg.C - cfg.C2, cfg.D - cfg.C2, +1)
        at_c1, dot_c1 = cosine_is(cfg.D - cfg.C1, cfg.C - cfg.C1, +1)
        at_c, dot_c = cosine_is(cfg.C1 - cfg.C, cfg.C2 - cfg.C, -1)
        witnesses = {
            "dot(C2->C, C2->D)": dot_c2,
            "dot(C1->D, C1->C)": dot_c1,
            "dot(C->C1, C->C2)": dot_c,
            "|CC1|^2": dist2(cfg.C, cfg.C1),
            "|CC2|^2": dist2(cfg.C, cfg.C2),
        }
        return CheckResult(
            ANGLES, at_c2 and at_c1 and at_c, witnesses, note=messages.ANGLE_AT_C_NOTE
        )

    def conclude_pythagoras(
        self, cfg: RotationConfiguration, premises: Sequence[CheckResult] | None = None
    ) -> CheckResult:
        """
        The conclude_pythagoras function draws the equilateral form of the theorem,
        area(ABD) = area(ACC1) + area(BCC2), together with |AD|^2 = a^2 + b^2.
        The conclusion stands only on its premises: the congruences, the pentagon
        identity and the parallelogram. If any of them fails, so does the conclusion.

        :param self: Represent the instance of the class
        :param cfg: RotationConfiguration: A built configuration
        :param premises: Sequence[CheckResult]: Already computed premise checks, computed here if None
        :return: The check result
        """
        if premises is None:
            premises = (
                self.check_congruences(cfg),
                self.check_pentagon_identity(cfg),
                self.check_parallelogram(cfg),
            )
        failed = [premise.name for premise in premises if not premise.passed]
        abd = cfg.polygon("ABD").area
        acc1 = cfg.polygon("ACC1").area
        bcc2 = cfg.polygon("BCC2").area
        ad2 = dist2(cfg.A, cfg.D)
        residual = abd - acc1 - bcc2
        passed = not failed and residual.sign() == 0 and ad2 == cfg.csq
        witnesses = {
            "area(ABD)": abd,
            "area(ACC1)": acc1,
            "area(BCC2)": bcc2,
            "area(ABD)-area(ACC1)-area(BCC2)": residual,
            "|AD|^2": ad2,
        }
        note = messages.CONCLUSION_PREMISES_FAILED.format(names=", ".join(failed)) if failed else None
        return CheckResult(CONCLUSION, passed, witnesses, note=note)

    def verify(self, body: RightTriangleInput, mirrored: bool = False) -> VerificationReport:
        """
        The verify function builds the configuration and runs every check in the
        order of the argument. With mirrored senses the pentagon and angle checks
        do not describe the figure and are left out.

        :param self: Represent the instance of the class
        :param body: RightTriangleInput: The two cathetus lengths
        :param mirrored: bool: Use the opposite rotation senses
        :return: The verification report
        """
        cfg = self.build(body, mirrored=mirrored)
        return self.verify_configuration(cfg)

    def verify_configuration(self, cfg: RotationConfiguration) -> VerificationReport:
        congruences = self.check_congruences(cfg)
        parallelogram = self.check_parallelogram(cfg)
        if cfg.mirrored:
            conclusion = self.conclude_pythagoras(cfg, (congruences, parallelogram))
            if conclusion.passed:
                conclusion = dataclasses.replace(conclusion, note=messages.MIRRORED_NOTE)
            checks = [
                self.check_coincidence(cfg),
                self.check_equilaterals(cfg),
                congruences,
                parallelogram,
                conclusion,
            ]
        else:
            pentagon = self.check_pentagon_identity(cfg)
            checks = [
                self.check_coincidence(cfg),
                self.check_equilaterals(cfg),
                congruences,
                pentagon,
                parallelogram,
                self.check_angles(cfg),
                self.conclude_pythagoras(cfg, (congruences, pentagon, parallelogram)),
            ]
        report = VerificationReport(tuple(checks))
        logger.info(
            "configuration a=%s b=%s: %s", cfg.a, cfg.b, "pass" if report.verdict else "fail"
        )
        return report

    def kappa_interval(self, n: int) -> tuple[Fraction, Fraction]:
        """
        The kappa_interval function encloses the area of the unit-side regular n-gon,
        n / (4 tan(pi / n)), evaluated with mpmath at the configured precision and
        widened by a margin far above the evaluation error.

        :param self: Represent the instance of the class
        :param n: int: Number of sides
        :return: A (lo, hi) pair of fractions
        """
        with mpmath.workprec(self.precision):
            kappa = mpmath.mpf(n) / (4 * mpmath.tan(mpmath.pi / n))
        man, exp = kappa.man_exp
        value = Fraction(int(man)) * Fraction(2) ** int(exp)
        slack = value / (1 << max(self.precision - 16, 1))
        return value - slack, value + slack

    def ngon_additivity(self, a, b, c, n: int) -> NgonResult:
        """
        The ngon_additivity function decides whether regular n-gons on a and b add up
        to the one on c. Since every regular n-gon has area kappa_n * side^2 with
        kappa_n > 0, the answer is exactly whether a^2 + b^2 = c^2; the numeric
        kappa_n only feeds the residual cross-check.

        :param self: Represent the instance of the class
        :param a: First side, positive rational
        :param b: Second side, positive rational
        :param c: Third side, positive rational
        :param n: int: Number of sides, at least 3
        :return: The verdict, the kappa_n interval and the residual interval
        """
        a, b, c = parse_rational(a), parse_rational(b), parse_rational(c)
        if a <= 0 or b <= 0 or c <= 0:
            raise InvalidInput(messages.NON_POSITIVE_SIDE)
        if n < 3:
            raise InvalidInput(messages.NGON_TOO_SMALL)
        defect = a * a + b * b - c * c
        lo, hi = self.kappa_interval(n)
        residual = tuple(sorted((lo * defect, hi * defect)))
        exact_kappa = None
        consistent = True
        if n in EXACT_NGONS:
            exact_kappa = regular_polygon(n, 1).area
            consistent = lo <= exact_kappa <= hi
        return NgonResult(
            n=n,
            holds=defect == 0,
            kappa=(lo, hi),
            residual=residual,
            exact_kappa=exact_kappa,
            kappa_consistent=consistent,
        )
