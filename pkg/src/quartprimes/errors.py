class PreconditionError(ValueError):
    """An argument falls outside the bound an operation is defined on.

    ``bound`` names the violated constraint so the CLI can report it verbatim.
    """

    def __init__(self, message: str, bound: str | None = None):
        super().__init__(message)
        self.bound = bound


class TableSizeError(PreconditionError):
    """Requested sieve tables would exceed the configured memory bound."""

    def __init__(self, limit: int, nbytes: int, max_limit: int):
        super().__init__(
            f"tables up to {limit} need {nbytes} bytes; limit capped at {max_limit}",
            bound="limit <= max_table_limit",
        )
        self.limit = limit
        self.nbytes = nbytes


class SearchExhausted(RuntimeError):
    """A bounded search finished without finding a qualifying value."""
