"""
Exact scalars.

Rationals are :class:`fractions.Fraction` values (always reduced, positive
denominator, zero as ``0/1``). Everything else is a :class:`FieldElem`: an
element of a tower of real quadratic extensions ``Q(sqrt r1)(sqrt r2)...``.

An element of a tower of depth ``k`` is stored as a *raw* value: a
``Fraction`` when ``k == 0``, otherwise a pair ``(x, y)`` of raws of depth
``k - 1`` meaning ``x + y * sqrt(r_k)``. Radicand ``r_i`` is itself a raw over
the first ``i - 1`` radicands, is positive, and is never a square there, so
the representation of a value in a given tower is unique.
"""

from __future__ import annotations

import functools
import logging
import math
import operator
import re
from fractions import Fraction
from typing import Union

from src.conf import messages
from src.dependencies.limits import get_max_tower_depth
from src.exceptions import (
    DivisionByZero,
    InvalidInput,
    NegativeRadicand,
    TowerLimitExceeded,
    ZeroDenominator,
)

logger = logging.getLogger(__name__)

BigRational = Fraction
Raw = Union[Fraction, tuple]
Tower = tuple

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")
_HALF = Fraction(1, 2)


def make_rational(p: int, q: int = 1) -> Fraction:
    """
    The make_rational function builds a canonical rational p/q.

    >>> make_rational(2, 4)
    Fraction(1, 2)
    >>> make_rational(-3, -6)
    Fraction(1, 2)

    :param p: int: Numerator
    :param q: int: Denominator, must not be zero
    :return: The reduced fraction with a positive denominator
    """
    if q == 0:
        raise ZeroDenominator()
    return Fraction(p, q)


def parse_rational(text: str | int | Fraction) -> Fraction:
    """
    The parse_rational function reads "p/q" or "p" strings (and passes ints and
    fractions through). Decimals are refused: every input is exact.

    :param text: str | int | Fraction: The value to parse
    :return: A canonical Fraction
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if match is None:
        raise InvalidInput(messages.NOT_A_RATIONAL.format(value=text))
    p = int(match.group(1))
    q = int(match.group(2)) if match.group(2) is not None else 1
    return make_rational(p, q)


# -- raw tower arithmetic ---------------------------------------------------


@functools.lru_cache(maxsize=None)
def _zero(depth: int) -> Raw:
    if depth == 0:
        return Fraction(0)
    return (_zero(depth - 1), _zero(depth - 1))


def _rational(q: Fraction, depth: int) -> Raw:
    raw = Fraction(q)
    for d in range(depth):
        raw = (raw, _zero(d))
    return raw


@functools.lru_cache(maxsize=None)
def _generator(depth: int) -> Raw:
    return (_zero(depth - 1), _rational(Fraction(1), depth - 1))


def _embed(raw: Raw, depth_from: int, depth_to: int) -> Raw:
    for d in range(depth_from, depth_to):
        raw = (raw, _zero(d))
    return raw


def _is_zero(a: Raw) -> bool:
    if isinstance(a, tuple):
        return _is_zero(a[1]) and _is_zero(a[0])
    return a == 0


def _add(a: Raw, b: Raw) -> Raw:
    if isinstance(a, tuple):
        return (_add(a[0], b[0]), _add(a[1], b[1]))
    return a + b


def _sub(a: Raw, b: Raw) -> Raw:
    if isinstance(a, tuple):
        return (_sub(a[0], b[0]), _sub(a[1], b[1]))
    return a - b


def _neg(a: Raw) -> Raw:
    if isinstance(a, tuple):
        return (_neg(a[0]), _neg(a[1]))
    return -a


def _scale(a: Raw, q: Fraction) -> Raw:
    if isinstance(a, tuple):
        return (_scale(a[0], q), _scale(a[1], q))
    return a * q


def _mul(tower: Tower, a: Raw, b: Raw) -> Raw:
    if not tower:
        return a * b
    sub = tower[:-1]
    x1, y1 = a
    x2, y2 = b
    y1_zero = _is_zero(y1)
    y2_zero = _is_zero(y2)
    if y1_zero and y2_zero:
        return (_mul(sub, x1, x2), y1)
    if y1_zero:
        return (_mul(sub, x1, x2), _mul(sub, x1, y2))
    if y2_zero:
        return (_mul(sub, x1, x2), _mul(sub, y1, x2))
    xx = _mul(sub, x1, x2)
    yy = _mul(sub, y1, y2)
    return (
        _add(xx, _mul(sub, yy, tower[-1])),
        _add(_mul(sub, x1, y2), _mul(sub, y1, x2)),
    )


def _norm(tower: Tower, a: Raw) -> Raw:
    # x^2 - y^2 r, an element of the subfield
    sub = tower[:-1]
    x, y = a
    return _sub(_mul(sub, x, x), _mul(sub, _mul(sub, y, y), tower[-1]))


def _sign(tower: Tower, a: Raw) -> int:
    if not tower:
        return (a > 0) - (a < 0)
    sub = tower[:-1]
    x, y = a
    sy = _sign(sub, y)
    if sy == 0:
        return _sign(sub, x)
    sx = _sign(sub, x)
    if sx == 0 or sx == sy:
        return sy
    return sx * _sign(sub, _norm(tower, a))


def _inv(tower: Tower, a: Raw) -> Raw:
    if not tower:
        if a == 0:
            raise DivisionByZero()
        return 1 / a
    sub = tower[:-1]
    x, y = a
    if _is_zero(y):
        return (_inv(sub, x), y)
    n_inv = _inv(sub, _norm(tower, a))
    return (_mul(sub, x, n_inv), _neg(_mul(sub, y, n_inv)))


def _sqrt(tower: Tower, a: Raw) -> Raw | None:
    """Non-negative square root of ``a`` inside ``tower``, or None."""
    if not tower:
        if a < 0:
            return None
        n, d = a.numerator, a.denominator
        rn, rd = math.isqrt(n), math.isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None
    if _sign(tower, a) < 0:
        return None
    sub = tower[:-1]
    x, y = a
    if _is_zero(y):
        root = _sqrt(sub, x)
        if root is not None:
            return (root, y)
        # x = q^2 r gives q * sqrt(r)
        root = _sqrt(sub, _mul(sub, x, _inv(sub, tower[-1])))
        if root is not None:
            return (y, root)
        return None
    m = _sqrt(sub, _norm(tower, a))
    if m is None:
        return None
    for candidate in (_scale(_add(x, m), _HALF), _scale(_sub(x, m), _HALF)):
        p = _sqrt(sub, candidate)
        if p is None or _is_zero(p):
            continue
        q = _mul(sub, y, _inv(sub, _scale(p, Fraction(2))))
        root = (p, q)
        if _sign(tower, root) < 0:
            root = _neg(root)
        return root
    return None


def _convert(src: Tower, raw: Raw, dst: Tower, images: tuple) -> Raw:
    if not src:
        return _rational(raw, len(dst))
    sub = src[:-1]
    x = _convert(sub, raw[0], dst, images)
    if _is_zero(raw[1]):
        return x
    y = _convert(sub, raw[1], dst, images)
    return _add(x, _mul(dst, y, images[len(src) - 1]))


@functools.lru_cache(maxsize=4096)
def _unify(t1: Tower, t2: Tower) -> tuple[Tower, tuple]:
    """
    Smallest tower extending ``t1`` that also contains ``t2``, with the images
    of the generators of ``t2`` in it. Radicands of ``t2`` that are already
    squares are not adjoined again.
    """
    n1, n2 = len(t1), len(t2)
    if t1[:n2] == t2:
        return t1, tuple(_embed(_generator(i), i, n1) for i in range(1, n2 + 1))
    tower = t1
    images: list[Raw] = []
    for i, radicand in enumerate(t2):
        converted = _convert(t2[:i], radicand, tower, tuple(images))
        root = _sqrt(tower, converted)
        if root is None:
            depth = len(tower)
            images = [(img, _zero(depth)) for img in images]
            tower = tower + (converted,)
            root = _generator(depth + 1)
        images.append(root)
    return tower, tuple(images)


def _check_depth(depth: int) -> None:
    limit = get_max_tower_depth()
    if depth > limit:
        raise TowerLimitExceeded(depth, limit)


# -- certified intervals ----------------------------------------------------


def _floor_dyadic(q: Fraction, bits: int) -> Fraction:
    return Fraction(math.floor(q * (1 << bits)), 1 << bits)


def _ceil_dyadic(q: Fraction, bits: int) -> Fraction:
    return Fraction(math.ceil(q * (1 << bits)), 1 << bits)


def _sqrt_bounds(lo: Fraction, hi: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    scale = 1 << (2 * bits)
    lower = math.isqrt(math.floor(max(lo, 0) * scale))
    n = math.ceil(max(hi, 0) * scale)
    upper = math.isqrt(n)
    if upper * upper < n:
        upper += 1
    return Fraction(lower, 1 << bits), Fraction(upper, 1 << bits)


def _interval(tower: Tower, raw: Raw, bits: int) -> tuple[Fraction, Fraction]:
    if not tower:
        return raw, raw
    sub = tower[:-1]
    x_lo, x_hi = _interval(sub, raw[0], bits)
    if _is_zero(raw[1]):
        return x_lo, x_hi
    y_lo, y_hi = _interval(sub, raw[1], bits)
    r_lo, r_hi = _interval(sub, tower[-1], bits)
    s_lo, s_hi = _sqrt_bounds(r_lo, r_hi, bits)
    products = (y_lo * s_lo, y_lo * s_hi, y_hi * s_lo, y_hi * s_hi)
    return (
        _floor_dyadic(x_lo + min(products), bits),
        _ceil_dyadic(x_hi + max(products), bits),
    )


# -- public element type ----------------------------------------------------


@functools.total_ordering
class FieldElem:
    """
    An exact real number in a tower of quadratic extensions.

    Values are immutable. Operands living in different towers are moved into
    a common tower first; the top level of a result is dropped when its
    square-root coefficient vanishes, so rationals stay rational.
    """

    __slots__ = ("tower", "raw")

    def __init__(self, value: int | Fraction | str | FieldElem = 0):
        if isinstance(value, FieldElem):
            tower, raw = value.tower, value.raw
        elif isinstance(value, (int, Fraction, str)):
            tower, raw = (), parse_rational(value)
        else:
            raise TypeError(f"Cannot make an exact number from {type(value).__name__}")
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    @classmethod
    def _make(cls, tower: Tower, raw: Raw) -> FieldElem:
        while tower and _is_zero(raw[1]):
            raw = raw[0]
            tower = tower[:-1]
        elem = object.__new__(cls)
        object.__setattr__(elem, "tower", tower)
        object.__setattr__(elem, "raw", raw)
        return elem

    @staticmethod
    def _lift(value) -> FieldElem | None:
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, (int, Fraction)):
            return FieldElem(value)
        return None

    def _pair(self, other: FieldElem) -> tuple[Tower, Raw, Raw]:
        if self.tower == other.tower:
            return self.tower, self.raw, other.raw
        tower, images = _unify(self.tower, other.tower)
        _check_depth(len(tower))
        a = _embed(self.raw, len(self.tower), len(tower))
        if tower[: len(other.tower)] == other.tower:
            b = _embed(other.raw, len(other.tower), len(tower))
        else:
            b = _convert(other.tower, other.raw, tower, images)
        return tower, a, b

    def _binary(self, other, fn, reflected=False):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        left, right = (other, self) if reflected else (self, other)
        tower, a, b = left._pair(right)
        return FieldElem._make(tower, fn(tower, a, b))

    # arithmetic

    def __add__(self, other):
        return self._binary(other, lambda t, a, b: _add(a, b))

    def __radd__(self, other):
        return self._binary(other, lambda t, a, b: _add(a, b), reflected=True)

    def __sub__(self, other):
        return self._binary(other, lambda t, a, b: _sub(a, b))

    def __rsub__(self, other):
        return self._binary(other, lambda t, a, b: _sub(a, b), reflected=True)

    def __mul__(self, other):
        return self._binary(other, _mul)

    def __rmul__(self, other):
        return self._binary(other, _mul, reflected=True)

    def __truediv__(self, other):
        return self._binary(other, lambda t, a, b: _mul(t, a, _inv(t, b)))

    def __rtruediv__(self, other):
        return self._binary(
            other, lambda t, a, b: _mul(t, a, _inv(t, b)), reflected=True
        )

    def __neg__(self):
        return FieldElem._make(self.tower, _neg(self.raw))

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return FieldElem(1) / self ** (-exponent)
        result = FieldElem(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> FieldElem:
        return FieldElem._make(self.tower, _inv(self.tower, self.raw))

    # comparisons

    def sign(self) -> int:
        return _sign(self.tower, self.raw)

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if self.tower == other.tower:
            return self.raw == other.raw
        return (self - other).sign() == 0

    def __lt__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    __hash__ = None

    def __bool__(self):
        return not _is_zero(self.raw)

    # roots and numerics

    def sqrt(self) -> FieldElem:
        """
        The sqrt function returns the non-negative square root, adjoining this
        value to the tower only when it is not already a square there.

        :param self: Represent the instance of the class
        :return: An element whose square is exactly self
        """
        if self.sign() < 0:
            raise NegativeRadicand()
        root = _sqrt(self.tower, self.raw)
        if root is not None:
            return FieldElem._make(self.tower, root)
        depth = len(self.tower) + 1
        _check_depth(depth)
        logger.debug("adjoining sqrt(%s), tower depth %d", self, depth)
        return FieldElem._make(self.tower + (self.raw,), _generator(depth))

    def to_interval(self, eps: Fraction | int | str) -> tuple[Fraction, Fraction]:
        """
        The to_interval function encloses the value in a rational interval of
        width at most eps. Square roots are bracketed by integer square roots at
        dyadic precision, rounded outward, and the precision doubles until the
        width fits.

        :param self: Represent the instance of the class
        :param eps: Fraction: Maximal width, positive
        :return: A (lo, hi) pair of fractions with lo <= self <= hi
        """
        eps = parse_rational(eps)
        if eps <= 0:
            raise InvalidInput("Interval width must be positive")
        if not self.tower:
            return self.raw, self.raw
        bits = max(16, eps.denominator.bit_length() - eps.numerator.bit_length() + 8)
        while True:
            lo, hi = _interval(self.tower, self.raw, bits)
            if hi - lo <= eps:
                return lo, hi
            bits *= 2

    def __float__(self):
        lo, hi = self.to_interval(Fraction(1, 1 << 60))
        return float((lo + hi) / 2)

    @property
    def depth(self) -> int:
        return len(self.tower)

    @property
    def is_rational(self) -> bool:
        return not self.tower

    def as_fraction(self) -> Fraction:
        if self.tower:
            raise InvalidInput(f"{self} is not rational")
        return self.raw

    def parts(self) -> tuple[FieldElem, FieldElem, FieldElem]:
        """Top-level split ``(x, y, r)`` with ``self == x + y * sqrt(r)``."""
        if not self.tower:
            return self, FieldElem(0), FieldElem(0)
        sub = self.tower[:-1]
        return (
            FieldElem._make(sub, self.raw[0]),
            FieldElem._make(sub, self.raw[1]),
            FieldElem._make(sub, self.tower[-1]),
        )

    def __repr__(self):
        return f"FieldElem({self})"

    def __str__(self):
        if not self.tower:
            return str(self.raw)
        x, y, r = self.parts()
        radical = f"√{r}" if r.is_rational else f"√({r})"
        if y == 1:
            term = radical
        elif y == -1:
            term = f"-{radical}"
        elif y.is_rational:
            term = f"{y}·{radical}"
        else:
            term = f"({y})·{radical}"
        if not x:
            return term
        text = f"{x} + {term}"
        return text.replace("+ -", "- ")


ExactLike = Union[FieldElem, Fraction, int]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def exact(value: ExactLike | str) -> FieldElem:
    return value if isinstance(value, FieldElem) else FieldElem(value)


def arith(x: ExactLike, y: ExactLike, op: str) -> FieldElem:
    """
    The arith function applies one of add, sub, mul, div in the common tower of x and y.

    :param x: ExactLike: Left operand
    :param y: ExactLike: Right operand
    :param op: str: One of "add", "sub", "mul", "div"
    :return: The exact result
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise InvalidInput(f"Unknown operation {op!r}")
    return fn(exact(x), exact(y))


def sign(x: ExactLike) -> int:
    """
    The sign function decides the sign of an exact value without any rounding.

    >>> sign(FieldElem(2).sqrt() - Fraction(140, 99))
    1

    :param x: ExactLike: The value
    :return: -1, 0 or 1
    """
    return exact(x).sign()


def sqrt_adjoin(x: ExactLike) -> FieldElem:
    """
    The sqrt_adjoin function takes the exact square root, growing the tower by
    one level unless x is already a square in its own tower.

    :param x: ExactLike: A non-negative value
    :return: The non-negative root
    """
    return exact(x).sqrt()


def to_interval(x: ExactLike, eps: Fraction | int | str) -> tuple[Fraction, Fraction]:
    """Rational enclosure of x no wider than eps, see :meth:`FieldElem.to_interval`."""
    return exact(x).to_interval(eps)


def format_decimal(q: Fraction, places: int, rounding: str = "nearest") -> str:
    """
    The format_decimal function prints a fraction with a fixed number of decimals.
    "floor" and "ceil" round outward for interval ends; "nearest" rounds half to even.

    >>> format_decimal(Fraction(-1, 3), 4, "floor")
    '-0.3334'

    :param q: Fraction: The value
    :param places: int: Digits after the decimal point
    :param rounding: str: "nearest", "floor" or "ceil"
    :return: The decimal string
    """
    scaled = q * 10**places
    if rounding == "floor":
        n = math.floor(scaled)
    elif rounding == "ceil":
        n = math.ceil(scaled)
    else:
        n = round(scaled)
    sign_ = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(places + 1, "0")
    if places == 0:
        return f"{sign_}{digits}"
    return f"{sign_}{digits[:-places]}.{digits[-places:]}"
