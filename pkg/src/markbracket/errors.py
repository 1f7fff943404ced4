"""Exception hierarchy shared by all modules."""


class MarkBracketError(Exception):
    pass


class DimensionError(MarkBracketError, ValueError):
    pass


class DivisibilityError(MarkBracketError, ArithmeticError):
    pass


class PreconditionError(MarkBracketError, ValueError):
    pass


class MoveNotApplicable(PreconditionError):
    pass


class CapacityError(MarkBracketError, ValueError):
    pass


class UnknownVertexError(MarkBracketError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]}" if self.args else "unknown vertex"


class ParseError(MarkBracketError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
