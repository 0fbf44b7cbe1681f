class DomainError(ValueError):
    """Raised when an input lies outside an operation's domain."""


class IndeterminateError(RuntimeError):
    """Raised when a bounded search cannot reach a verdict (e.g. renormalization depth overflow)."""


class UndetectedPeriodError(IndeterminateError):
    """No orbit recurrence was found; the raw itinerary prefixes are attached."""

    def __init__(self, message: str, prefixes: tuple[str, str]):
        super().__init__(message)
        self.prefixes = prefixes
