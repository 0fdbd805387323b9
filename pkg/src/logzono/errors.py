"""Exception types shared across the package."""


class LogzonoError(Exception):
    pass


class DimensionError(LogzonoError):
    """Operands have incompatible lengths or shapes."""


class CapacityError(LogzonoError):
    """An enumeration budget (generator cap or state-space budget) was exceeded."""


class EmptyInputError(LogzonoError):
    """An operation that needs at least one element got none."""


class EvalError(LogzonoError):
    """Expression evaluation hit an unbound variable."""


class UsageError(LogzonoError):
    """API misuse, e.g. comparing reach results with different horizons."""


class SearchFailed(LogzonoError):
    """Key search exhausted all seed combinations without a verified key."""


class ParseError(LogzonoError):
    """Base for DSL parse failures; carries source location."""

    def __init__(self, message, line, col):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class DslSyntaxError(ParseError):
    pass


class UnknownIdentifierError(ParseError):
    pass


class DuplicateRuleError(ParseError):
    pass


class CyclicReferenceError(ParseError):
    """A rule references a next-step value that is not defined yet."""
