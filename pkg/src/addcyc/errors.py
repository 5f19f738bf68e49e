"""Exception types shared across the package.

Every precondition failure raises a subclass of ValueError so callers can
catch broadly; the CLI maps them to exit code 2 with the message naming the
violated hypothesis.
"""


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


class NotCoprimeError(ValueError):
    """gcd(n, q) = 1 (semisimple group algebra) or gcd(u, n) = 1 violated."""


class NotASubfieldError(ValueError):
    """Requested embedding between fields without a subfield relation."""


class CoercionError(ValueError):
    """An element expected to lie in a subfield does not."""


class InvalidParameterError(ValueError):
    """Parameter outside the supported range (t odd, t = 1 mod p, ...)."""


class LengthMismatchError(ValueError):
    """Vectors of different lengths fed to a bilinear operation."""


class NotInIdealError(ValueError):
    """Element is not a member of the ideal it was claimed to lie in."""


class NotCyclicError(ValueError):
    """Operation requires a cyclic code."""


class TooLargeError(ValueError):
    """Instance exceeds the configured desk-scale budget."""


class EmptyCodeError(ValueError):
    """Operation requires a nonzero code."""
