"""Exception hierarchy shared by every module."""


class EkrError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(EkrError, ValueError):
    pass


class InvalidVertexError(EkrError, IndexError):
    pass


class CapacityError(EkrError):
    """Graph exceeds the fixed bit-vector capacity."""


class PreconditionError(EkrError, ValueError):
    """Input family violates the hypotheses an operator relies on."""


class SolverCapError(EkrError):
    """Too many candidate sets for the exact solver."""

    def __init__(self, n_sets: int, cap: int):
        super().__init__(f"{n_sets} candidate sets exceed solver cap {cap} (set EKR_SOLVER_CAP to override)")
        self.n_sets = n_sets
        self.cap = cap


class GraphParseError(EkrError, ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
