"""Exception hierarchy shared by every module of the workbench."""


class WorkbenchError(Exception):
    pass


class InputError(WorkbenchError, ValueError):
    """Malformed or inconsistent user input (maps to CLI exit code 2)."""


class AntisymmetryViolation(InputError):
    def __init__(self, a, b):
        super().__init__(f"order closure relates distinct elements {a} and {b} both ways")
        self.pair = (a, b)


class IndexOutOfRange(InputError):
    pass


class NotAPoset(InputError):
    pass


class PreconditionViolation(WorkbenchError, ValueError):
    pass


class NotSectionallyPC(PreconditionViolation):
    pass


class NotMeetSemilattice(PreconditionViolation):
    pass


class NotJoinSemilattice(PreconditionViolation):
    pass


class MissingOperation(PreconditionViolation):
    pass


class PartialOperationUndefined(PreconditionViolation):
    pass


class AdjunctionRequired(PreconditionViolation):
    pass


class NotIdempotentPocrig(PreconditionViolation):
    pass


class WrongVariant(PreconditionViolation):
    pass


class BoundExceeded(WorkbenchError):
    """A size bound was exceeded (maps to CLI exit code 3)."""


class SearchTimeout(BoundExceeded):
    pass


class LawSyntaxError(InputError):
    def __init__(self, message, column):
        super().__init__(f"column {column}: {message}")
        self.column = column


class StructureSyntaxError(InputError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownName(InputError):
    pass


class BadTableShape(InputError):
    pass


class InconsistentTable(InputError):
    pass
