class MazurError(Exception):
    """Base class for every error raised by the engine."""


class UsageError(MazurError):
    pass


class InvalidBallError(MazurError):
    def __init__(self, report):
        self.report = report
        super().__init__(f"invalid ball: {report}")


class InsufficientPrefixError(MazurError):
    pass


class TransferError(MazurError):
    pass


class MissingParentError(TransferError):
    """No point of the previous union lies within the parent threshold: the input move was illegal."""


class AmbiguousParentError(TransferError):
    """Two candidate parents within the threshold. Unreachable while the 3r-separation invariant holds."""


class DegenerateRadiusError(TransferError):
    pass


class BrokenChainError(MazurError):
    pass


class StrategyFailure(MazurError):
    pass


class GameAborted(MazurError):
    pass


class OracleSizeError(MazurError):
    pass
