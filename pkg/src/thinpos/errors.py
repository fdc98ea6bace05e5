"""Exception types shared across the package.

Every violated precondition raises :class:`DomainError` (or a subclass) with a
message that names the failed condition, so callers and the CLI can report the
exact rule instead of a stack trace.
"""

from __future__ import annotations


class DomainError(ValueError):
    """A library operation was called outside its stated preconditions."""


class MultiComponentError(DomainError):
    """A closure that was required to be a knot has several components."""

    def __init__(self, components: int):
        super().__init__(f"closure has {components} components, expected a knot")
        self.components = components


class HypothesisError(DomainError):
    """A theorem-backed prediction was requested with failing hypotheses."""

    def __init__(self, failures: list[str]):
        super().__init__("unsatisfied hypotheses: " + "; ".join(failures))
        self.failures = list(failures)
