"""Exception types shared across the package."""


class KdvSymError(Exception):
    """Base class for all package errors."""


class ParseError(KdvSymError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class UnknownIdentifierError(ParseError):
    pass


class DerivativeError(KdvSymError):
    """Explicit derivative of a function w.r.t. a non-dependency."""


class ZeroDivisionExprError(KdvSymError):
    """Division by an expression whose normal form is literally zero."""


class UnboundAtomError(KdvSymError):
    pass


class DomainError(KdvSymError):
    """Numeric evaluation outside a function's domain (ln of non-positive)."""


class OrderOverflowError(KdvSymError):
    """A jet coordinate beyond the space's maximum order was requested."""


class OrientationError(KdvSymError):
    """A derived equation could not be oriented into head = rhs form."""


class ReductionBudgetError(KdvSymError):
    """Fixpoint rewriting exceeded its step budget; indicates a defect,
    not a user error."""


class SplitError(KdvSymError):
    """Residual is not polynomial in the requested splitting coordinates."""


class VariableMismatchError(KdvSymError):
    """Operator and system are defined over different variables."""


class InstanceParameterError(KdvSymError):
    """Invalid parameters for a named equation instance."""
