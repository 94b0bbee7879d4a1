"""Exception types shared across the package."""


class FractalTutteError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitExceeded(FractalTutteError):
    """A requested computation would exceed a hard size guard."""


class NonDivisible(FractalTutteError):
    """Exact polynomial division left a nonzero remainder.

    The divisibility of the hub-partition polynomials by powers of (x - 1)
    is a theorem, so this error always indicates an implementation bug in
    the caller, never bad user input.
    """


class ZeroPolynomial(FractalTutteError):
    """An operation that needs a nonzero polynomial received zero."""


class DomainError(FractalTutteError):
    """A numeric argument lies outside its valid domain."""


class NonIntegralExponent(FractalTutteError):
    """A closed-form exponent failed its integrality check."""
