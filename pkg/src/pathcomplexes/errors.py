"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A guarded computation exceeded its configured size limit."""


class GraphParseError(ValueError):
    """A graph file violated the line-oriented grammar.

    Carries the 1-based line number of the offending line (0 when the
    problem is the file as a whole, e.g. a missing ``s`` or ``t`` line).
    """

    def __init__(self, message: str, line_no: int = 0):
        super().__init__(f"line {line_no}: {message}" if line_no else message)
        self.line_no = line_no
