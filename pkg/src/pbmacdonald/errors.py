"""Exception types shared across the package."""


class MacdonaldError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(MacdonaldError, ValueError):
    pass


class InexactDivision(MacdonaldError, ArithmeticError):
    pass


class NegativeQUnit(MacdonaldError, ArithmeticError):
    """The q = 0 specialization does not exist (a pole at q = 0)."""


class IndexOutOfRange(MacdonaldError, IndexError):
    pass


class BoxOutsideDiagram(MacdonaldError, ValueError):
    pass


class AttackingFilling(MacdonaldError, ValueError):
    pass


class InvalidArguments(MacdonaldError, ValueError):
    pass


class UnequalColumnHeights(MacdonaldError, ValueError):
    pass


class RowOutOfRange(MacdonaldError, IndexError):
    pass


class PreconditionViolated(MacdonaldError, ValueError):
    pass


class NotAPartition(MacdonaldError, ValueError):
    pass
