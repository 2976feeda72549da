from src.conf import messages


class GeometryError(Exception):
    """Base class for every error raised by the exact kernel and the pipelines."""


class DivisionByZero(GeometryError, ZeroDivisionError):
    def __init__(self, message: str = messages.DIVISION_BY_ZERO):
        super().__init__(message)


class NegativeRadicand(GeometryError, ValueError):
    def __init__(self, message: str = messages.NEGATIVE_RADICAND):
        super().__init__(message)


class TowerLimitExceeded(GeometryError):
    def __init__(self, depth: int, limit: int):
        self.depth = depth
        self.limit = limit
        super().__init__(messages.TOWER_LIMIT_EXCEEDED.format(depth=depth, limit=limit))


class InvalidInput(GeometryError, ValueError):
    pass


class DegenerateInput(InvalidInput):
    pass


class ZeroDenominator(InvalidInput, ZeroDivisionError):
    def __init__(self, message: str = messages.ZERO_DENOMINATOR):
        super().__init__(message)


class NonConvexInput(InvalidInput):
    def __init__(self, message: str = messages.NOT_CONVEX):
        super().__init__(message)


class InvalidWidth(InvalidInput):
    def __init__(self, message: str = messages.INVALID_WIDTH):
        super().__init__(message)


class AreaMismatch(InvalidInput):
    pass


class ReflectionsUnsupported(InvalidInput):
    def __init__(self, message: str = messages.REFLECTIONS_UNSUPPORTED):
        super().__init__(message)


class MidspaceMismatch(GeometryError):
    def __init__(self, message: str = messages.MIDSPACE_MISMATCH):
        super().__init__(message)
