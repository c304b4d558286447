"""Exception hierarchy shared by the library and the CLI.

The CLI maps these onto exit codes: ``ParseError`` -> 2,
``ValidationError`` -> 3, ``CapExceededError`` -> 4.
"""


class DolloKitError(Exception):
    """Base class for all errors raised by dollokit."""


class ParseError(DolloKitError, ValueError):
    """Malformed input text (Newick syntax, character symbols, JSON)."""


class ValidationError(DolloKitError, ValueError):
    """Well-formed input that violates a semantic constraint."""


class CapExceededError(DolloKitError, ValueError):
    """A brute-force routine was asked for an instance above its size cap."""
