class WalkError(Exception):
    """Base class for every error raised by the simulator."""


class InvalidArgumentError(WalkError, ValueError):
    pass


class NoPathError(WalkError):
    pass


class InvalidStateError(WalkError, ValueError):
    """A vector or density matrix that is not a valid quantum state."""


class ConfigError(WalkError):
    """
    Raised while building a scenario. The message always names the offending field.
    :param field: the scenario field that failed validation
    :param message: what is wrong with it
    """

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class NumericDomainError(WalkError, ArithmeticError):
    """Raised when a decay function leaves its allowed range by more than float noise."""


class ExportError(WalkError, OSError):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
