import logging
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass, replace
from typing import Iterator

from .const import (
    DOMAIN,
    DEFAULT_MAX_LENGTH,
    DEFAULT_MAX_EXPONENT,
    DEFAULT_WINDOW,
    DEFAULT_MAX_DEGREE,
    DEFAULT_MAX_ENTRIES,
    DEFAULT_MAX_CANDIDATES,
)

_LOGGER = logging.getLogger(__name__)


class HydraError(Exception):
    """Base class for every error raised by the toolkit"""


class ResourceLimitError(HydraError):
    def __init__(self, what: str, limit: int):
        super().__init__(f"{what} exceeds the configured limit of {limit}")
        self.what = what
        self.limit = limit


class SpecError(HydraError):
    pass


class AlphabetError(SpecError):
    def __init__(self, letter: str, allowed: list[str] | None = None):
        message = f"letter '{letter}' is not in the alphabet"
        if allowed:
            message += f" ({', '.join(allowed)})"
        super().__init__(message)
        self.letter = letter
        self.allowed = allowed or []


class ExpressionSyntaxError(SpecError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotAMemberError(HydraError):
    def __init__(self, result):
        super().__init__(f"element is not certified to be in the subgroup: {result}")
        self.result = result


class CertificateError(HydraError):
    pass


class UnsupportedCaseError(HydraError):
    pass


class NoWitnessError(HydraError):
    pass


class ConsistencyError(HydraError):
    pass


@dataclass(frozen=True)
class Limits:
    max_length: int = DEFAULT_MAX_LENGTH
    max_exponent: int = DEFAULT_MAX_EXPONENT
    window: int = DEFAULT_WINDOW
    max_degree: int = DEFAULT_MAX_DEGREE
    max_entries: int = DEFAULT_MAX_ENTRIES
    max_candidates: int = DEFAULT_MAX_CANDIDATES

    def with_overrides(self, **kwargs) -> "Limits":
        return replace(self, **{key: value for key, value in kwargs.items() if value is not None})


_LIMITS: ContextVar[Limits] = ContextVar(f"{DOMAIN}_limits", default=Limits())


def current_limits() -> Limits:
    return _LIMITS.get()


@contextmanager
def use_limits(limits: Limits) -> Iterator[Limits]:
    """Install resource limits for the current context (thread or task)"""
    token = _LIMITS.set(limits)
    try:
        yield limits
    finally:
        _LIMITS.reset(token)


def checked_exponent(value: int, what: str = "exponent") -> int:
    limit = current_limits().max_exponent
    if abs(value) > limit:
        raise ResourceLimitError(what, limit)
    return value


def checked_length(length: int, what: str = "word length") -> int:
    limit = current_limits().max_length
    if length > limit:
        raise ResourceLimitError(what, limit)
    return length
