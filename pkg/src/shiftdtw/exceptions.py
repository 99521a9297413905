class ShiftDTWError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ShiftDTWError, ValueError):
    """An argument lies outside the domain of the operation."""


class ParseError(DomainError):
    """An input file could not be parsed.

    ``line`` is 1-based when known.
    """

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        where = ""
        if path is not None:
            where = f"{path}"
            if line is not None:
                where += f":{line}"
            where += ": "
        super().__init__(where + message)


class BudgetExceededError(ShiftDTWError, RuntimeError):
    """A brute-force computation would exceed its cell budget."""
