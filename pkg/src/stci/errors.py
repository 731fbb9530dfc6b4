"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside an operation's domain."""


class ParseError(DomainError):
    """A textual descriptor could not be parsed."""


class ContextMismatchError(DomainError):
    """Cycle classes from different blowup contexts were mixed."""
