class MagnonGateException(Exception):
    """Base class for every error raised by the magnongate package."""
    def __init__(self, message="Unexpected magnongate error"):
        self.message = message
        super().__init__(self.message)


class DomainException(MagnonGateException):
    """Exception raised when a physical input lies outside the domain of an operation."""
    def __init__(self, message="The input is outside the domain of the operation"):
        super().__init__(message)


class OutOfRangeException(DomainException):
    """Exception raised when a solution exists but falls outside the allowed range."""
    def __init__(self, message="The solution falls outside the allowed range"):
        super().__init__(message)


class SingularityException(DomainException):
    """Exception raised when a formula is singular for the given inputs."""
    def __init__(self, message="The formula is singular for these inputs"):
        super().__init__(message)


class NoSolutionException(DomainException):
    """Exception raised when the requested inversion has no unique solution."""
    def __init__(self, message="There is no unique solution for these inputs"):
        super().__init__(message)


class ConfigurationException(MagnonGateException):
    """Exception raised when a scenario file is missing or malformed."""
    def __init__(self, message="The scenario configuration is invalid"):
        super().__init__(message)
