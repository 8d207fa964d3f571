"""Number-theory lab for primes of the form (a^2 + b^4)/c."""

__version__ = "0.1.0"

from .errors import PreconditionError, SearchExhausted, TableSizeError  # noqa: E402

__all__ = ["__version__", "PreconditionError", "SearchExhausted", "TableSizeError"]
