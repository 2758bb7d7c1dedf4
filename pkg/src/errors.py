"""
Exception hierarchy for the Nichols toolkit.

Blocked reflections are values (see ``src.cartan.entries.Blocked``), not errors;
everything here signals bad input, bad configuration or misuse.
"""

from typing import Optional, Tuple


class NicholsError(Exception):
    """Base class for all toolkit errors."""


class InvalidArgument(NicholsError, ValueError):
    """An argument violates the documented precondition."""


class ParseError(InvalidArgument):
    """Malformed text for a scalar, diagram, GCM or table record."""

    def __init__(self, message: str, text: str = "", position: Optional[int] = None):
        self.text = text
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}: {text!r}" if text else f"{message}{where}")


class OrderTooSmall(InvalidArgument):
    """A Cartan braiding cannot realise the requested GCM."""

    def __init__(self, pair: Tuple[int, int], expected: int, found: Optional[int]):
        self.pair = pair
        self.expected = expected
        self.found = found
        i, j = pair
        super().__init__(
            f"order too small to realise c[{i + 1}][{j + 1}] = {expected} "
            f"(recomputed {found if found is not None else 'blocked'})"
        )


class PreconditionViolation(NicholsError):
    """Operation called on an object in the wrong state."""


class ConfigurationError(NicholsError):
    """Missing or corrupt data asset, or an invalid configuration value."""
