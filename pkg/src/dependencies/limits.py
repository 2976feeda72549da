import contextlib
from contextvars import ContextVar

from src.conf.config import config

_max_tower_depth: ContextVar[int] = ContextVar(
    "max_tower_depth", default=config.MAX_TOWER_DEPTH
)


def get_max_tower_depth() -> int:
    """
    The get_max_tower_depth function returns the tower depth limit of the current context.

    :return: The maximum number of adjoined square roots
    """
    return _max_tower_depth.get()


@contextlib.contextmanager
def tower_depth_limit(depth: int):
    """
    The tower_depth_limit function is a context manager that overrides the maximum
    quadratic tower depth for the code running inside the with block.
    The previous limit is restored on exit, also when an exception escapes.

    :param depth: int: The new limit, at least 1
    :return: A context manager
    """
    if depth < 1:
        raise ValueError("Tower depth limit must be at least 1")
    token = _max_tower_depth.set(depth)
    try:
        yield depth
    finally:
        _max_tower_depth.reset(token)
