class LatticeStreamException(Exception):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class LatticeError(LatticeStreamException):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class OracleDomainError(LatticeError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class ProblemError(LatticeStreamException):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class InfeasibleError(ProblemError):
    def __init__(self, message: str, constraint: str = None) -> None:
        self.constraint = constraint
        super().__init__(message)


class InstanceTooLargeError(ProblemError):
    def __init__(self, message: str, size: int = None, limit: int = None) -> None:
        self.size = size
        self.limit = limit
        super().__init__(message)


class ConfigError(LatticeStreamException):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class StreamFormatError(LatticeStreamException):
    def __init__(self, message: str, line: int = None) -> None:
        self.line = line
        super().__init__(message)


class GuaranteeViolation(LatticeStreamException):
    def __init__(self, message: str, report: object = None) -> None:
        self.report = report
        super().__init__(message)
