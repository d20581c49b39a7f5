"""Exception types raised across the package."""


class QylagError(ValueError):
    pass


class SubstitutionCycle(QylagError):
    pass


class MissingVariable(QylagError):
    pass


class NotAUnit(QylagError):
    pass


class NoTruncation(QylagError):
    pass


class NegativeExponentResidue(QylagError):
    pass


class InvalidRange(QylagError):
    pass


class SingularEvaluationPoint(QylagError):
    pass


class EmptyWord(QylagError):
    pass


class InvalidHistory(QylagError):
    pass


class CellOutsideBoard(QylagError):
    pass


class DegreeTooHigh(QylagError):
    pass
