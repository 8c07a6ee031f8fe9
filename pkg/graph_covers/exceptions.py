"""
Custom exceptions for the graph_covers package.
"""

class GraphCoverError(Exception):
    """Base exception for all graph_covers errors."""
    pass

class ValidationError(GraphCoverError):
    """Raised when a graph or argument fails validation."""
    pass

class ParseError(GraphCoverError):
    """Raised when parsing .mg or certificate text fails."""
    def __init__(self, message, filename=None, line=None):
        super().__init__(message)
        self.filename = filename
        self.line = line

    def __str__(self):
        details = []
        if self.filename:
            details.append(f"filename: {self.filename}")
        if self.line:
            details.append(f"line: {self.line}")
        if details:
            return f"{super().__str__()} ({', '.join(details)})"
        return super().__str__()

class MalformedProjectionError(GraphCoverError):
    """Raised when a projection's maps are not total or point out of range."""
    pass

class UnsupportedInputError(GraphCoverError):
    """Raised for inputs an operation does not handle (e.g. disconnected targets)."""
    pass

class PreconditionError(GraphCoverError):
    """Raised when a construction or decision precondition is violated."""
    def __init__(self, message, rule=None):
        super().__init__(message)
        self.rule = rule

    def __str__(self):
        if self.rule:
            return f"{super().__str__()} (rule: {self.rule})"
        return super().__str__()

class ConstructionAnomalyError(PreconditionError):
    """Raised when a construction fails its own post-verification."""
    pass

class CapExceededError(GraphCoverError):
    """Raised when an exponential enumeration would exceed its size cap."""
    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap

class UnknownGraphError(GraphCoverError):
    """Raised when a catalog name cannot be resolved."""
    pass
