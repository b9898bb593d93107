"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all package errors."""


class SingularCurve(Error):
    """The rational curve has vanishing discriminant."""


class BadReduction(Error):
    """Reduction mod p is singular: p divides the discriminant, or p = 2."""

    def __init__(self, p, message=None):
        super().__init__(message or f"bad reduction at p={p}")
        self.p = p


class ZeroInverse(Error):
    """Attempted to invert 0 mod p."""


class NoRoot(Error):
    """Modular square root of a quadratic non-residue was requested."""


class NoAffinePoint(Error):
    """The reduced curve has no affine points (group of order 1)."""


class OracleLimitExceeded(Error):
    """A brute-force enumeration was requested beyond its size guard."""


class AmbiguityUnresolved(Error):
    """Internal: interval order-finding could not isolate a unique group order."""


class NotAnnihilated(Error):
    """Claimed group order does not kill the point; upstream counting bug."""


class ExponentUnresolved(Error):
    """Group-exponent sampling failed to converge; carries diagnostics."""


class BadPrimeFactor(Error):
    """A prime factor of n has bad reduction, so the coefficient is undefined."""

    def __init__(self, p, message=None):
        super().__init__(message or f"bad prime factor {p}")
        self.p = p


class CoefficientOverflow(Error):
    """A series coefficient exceeded the 63-bit magnitude guard."""


class LimitExceeded(Error):
    """A configured size cap was exceeded."""


class CacheFormatError(Error):
    """A prime-data cache line is malformed or violates the Hasse bound."""
