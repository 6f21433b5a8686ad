"""Exception hierarchy.

Every numerical failure carries a short ``kind`` string; the CLI reports it
in its machine-readable error payload.
"""


class ZetaError(Exception):
    kind = "numerical"


class DomainError(ZetaError, ValueError):
    kind = "domain"


class PoleError(ZetaError):
    kind = "pole"


class SingularError(ZetaError):
    kind = "singular"


class ConvergenceError(ZetaError):
    kind = "convergence"


class ConditioningError(ZetaError):
    kind = "conditioning"


class CapabilityError(ZetaError):
    kind = "capability"


class NotFoundError(ZetaError):
    kind = "not-found"


class AmbiguousBracketError(ZetaError):
    kind = "ambiguous-bracket"


class RefinementError(ZetaError):
    kind = "refinement"

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class DataError(ZetaError):
    kind = "data"
