class ParseError(ValueError):
    """Malformed algebra, fuzzy-set or audit source text."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class AlgebraError(ValueError):
    """Operation called on an algebra that does not meet its precondition."""


class InconsistencyError(RuntimeError):
    """Two independent computation routes disagreed. Always a bug."""
