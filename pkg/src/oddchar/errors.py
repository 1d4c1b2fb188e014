"""Exception hierarchy shared by all modules."""


class OddcharError(Exception):
    """Base class for all library errors."""


class DomainError(OddcharError):
    """An argument violates a documented precondition."""


class TheoremViolationError(OddcharError):
    """A uniqueness/existence guarantee failed; must never fire on valid input."""


class EnumerationCapError(OddcharError):
    """A group closure exceeded the hard element cap; never silently truncated."""
