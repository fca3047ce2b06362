class ArithDynError(Exception):
    """Base class for every error raised by arith_dyn.

    ``exit_code`` is the status the command-line runner exits with.
    """

    exit_code = 2


class DivisionByZero(ArithDynError, ZeroDivisionError):
    pass


class FieldMismatch(ArithDynError):
    pass


class InvalidPoint(ArithDynError):
    pass


class UnsupportedField(ArithDynError):
    pass


class Unsupported(ArithDynError):
    pass


class Unverified(ArithDynError):
    exit_code = 1


class NotAMorphism(ArithDynError):
    pass


class NotAMorphismAtPoint(ArithDynError):
    exit_code = 1


class BudgetExceeded(ArithDynError):
    """An iteration hit its bit or step budget.

    ``partial`` holds whatever was computed before the budget ran out
    (a HeightValue, an OrbitRecord, ...), so callers can still use it.
    """

    exit_code = 3

    def __init__(self, message, partial=None):
        super(BudgetExceeded, self).__init__(message)
        self.partial = partial


class Unresolvable(ArithDynError):
    pass


class InsufficientGenerators(ArithDynError):
    pass


class InvariantViolation(ArithDynError):
    exit_code = 1


class ConfigError(ArithDynError):
    pass


class ParseError(ArithDynError):
    def __init__(self, message, text=None, line=1, column=0):
        self.text = text
        self.line = line
        self.column = column
        super(ParseError, self).__init__(
            "{} (line {}, column {})".format(message, line, column)
        )


class SingularCurve(ArithDynError):
    pass
