"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input lies outside an operation's domain (negative index, nonpositive argument, ...)."""


class HypothesisViolationError(ValueError):
    """Arguments do not satisfy the hypothesis a checker assumes."""


class ParameterMismatchError(ValueError):
    """Operands were built over different defining coefficients."""


class DegenerateDiscriminantError(ValueError):
    """Repeated characteristic root where two distinct roots are required."""


class NondegenerateDiscriminantError(ValueError):
    """Distinct characteristic roots where a repeated root is required."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured budget and was abandoned."""
