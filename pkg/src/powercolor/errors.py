"""Exception hierarchy shared across the package."""


class PowerColorError(Exception):
    """Base class for all library-specific errors."""


class CapacityError(PowerColorError):
    """A product graph would exceed the configured vertex-count bound."""


class BudgetExceededError(PowerColorError):
    """An exhaustive search ran out of its node-expansion budget."""


class ImproperColoringError(PowerColorError):
    """An operation that requires a proper coloring received an improper one."""


class NotACographError(PowerColorError):
    """Cograph-only operation applied to a graph with an induced P4.

    The offending four vertices, when known, are stored in ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotWeaklyCliquedError(PowerColorError):
    """Clique-component decomposition requested for a non-weakly-cliqued graph."""

    def __init__(self, message, uncovered_vertex=None):
        super().__init__(message)
        self.uncovered_vertex = uncovered_vertex


class NontrivialColoringError(PowerColorError):
    """A coordinate-determined structure was requested from a nontrivial coloring."""


class InternalCheckError(PowerColorError):
    """A re-checked theorem-backed guarantee failed; indicates a library bug."""
