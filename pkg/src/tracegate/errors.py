"""Exception hierarchy.

Every error carries an ``exit_code`` class attribute so the CLI can map
failures onto its exit-code contract without inspecting messages.
"""


class TracegateError(Exception):
    exit_code = 1


class InputError(TracegateError):
    """Bad user input: malformed polynomial, violated precondition."""

    exit_code = 1


class BudgetError(TracegateError):
    """A resource limit was hit before an exact answer was found."""

    exit_code = 2


class TheoremViolation(TracegateError):
    """A checked identity failed. Always an implementation bug."""

    exit_code = 3


class ParseError(InputError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NonMonic(InputError):
    pass


class NotPrime(InputError):
    pass


class BothZero(InputError):
    pass


class SingularMatrix(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class NotCertified(InputError):
    """Irreducibility could not be certified and was not asserted."""


class ZeroIdeal(InputError):
    pass


class NotLinearlyDisjoint(InputError):
    def __init__(self, message, best_degree=None):
        self.best_degree = best_degree
        super().__init__(message)


class InputNotSurjective(InputError):
    pass


class DegreesNotCoprime(InputError):
    pass


class NotSquarefree(InputError):
    pass


class NotOneMod4(InputError):
    pass


class NotDeclaredNormal(InputError):
    pass


class FactorizationBudgetExceeded(BudgetError):
    pass


class TimeBudgetExceeded(BudgetError):
    pass
