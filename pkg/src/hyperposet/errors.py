"""Exception hierarchy shared by every module of the package."""


class HyperposetError(Exception):
    """Base class for all library errors."""


class InputError(HyperposetError):
    """Malformed input. ``line`` is set when the error comes from a text file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyGroundError(InputError):
    pass


class EdgeShapeError(InputError):
    pass


class InvalidSource(InputError):
    pass


class NotAPermutation(InputError):
    pass


class MismatchedHypergraph(HyperposetError):
    pass


class BudgetExceeded(HyperposetError):
    pass


class SourceNotInEdge(HyperposetError):
    pass


class CycleError(HyperposetError):
    """An orientation that had to be acyclic is not; ``cycle`` lists edge indices."""

    def __init__(self, message, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"{message}: cycle through edges {list(self.cycle)}")


class InputOrientationCyclic(CycleError):
    pass


class PseudoJoinCyclic(CycleError):
    pass


class PseudoMeetCyclic(CycleError):
    pass


class InternalDisagreement(HyperposetError):
    """Two independent computations that must agree did not."""
