"""Enumeration threshold shared by every brute-force scan in the package.

Resolution order: explicit ``limit`` argument, then :func:`set_enum_limit`,
then the ``ABPAIR_MAX_ENUM`` environment variable, then the default.
"""

import os

DEFAULT_MAX_ENUM = 1 << 20
ENV_VAR = "ABPAIR_MAX_ENUM"

_override: int | None = None


class EnumerationLimitError(RuntimeError):
    """An exhaustive scan would exceed the configured threshold."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: {size} exceeds enumeration limit {limit}")
        self.what = what
        self.size = size
        self.limit = limit


def set_enum_limit(limit: int | None) -> None:
    global _override
    if limit is not None and limit < 1:
        raise ValueError("enumeration limit must be positive")
    _override = limit


def enum_limit(limit: int | None = None) -> int:
    if limit is not None:
        return limit
    if _override is not None:
        return _override
    env = os.environ.get(ENV_VAR)
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"{ENV_VAR} must be an integer, got {env!r}") from None
        if value < 1:
            raise ValueError(f"{ENV_VAR} must be positive")
        return value
    return DEFAULT_MAX_ENUM


def check_size(what: str, size: int, limit: int | None = None) -> None:
    bound = enum_limit(limit)
    if size > bound:
        raise EnumerationLimitError(what, size, bound)
