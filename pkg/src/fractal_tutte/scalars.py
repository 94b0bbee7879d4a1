"""Three interchangeable scalar arithmetics for the probability recursions.

The reliability recursions only ever add and multiply positive
quantities, so they can run

* on exact rationals (proves identities),
* on doubles (fast, fails below ~1e-308), or
* on logarithms of the values (log-sum-exp for addition; survives the
  doubly-exponential decay, where R(n) underflows any float long before
  the generation counter gets interesting).

Each mode is an ops object with the same four operations; the recursion
code is written once against this interface.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError


def fraction_ln(fr: Fraction) -> float:
    """ln of a positive rational, safe for huge numerators/denominators.

    math.log accepts arbitrarily large ints, so the value never passes
    through a float that could overflow or underflow.
    """
    if fr <= 0:
        raise DomainError(f"ln of non-positive value {fr}")
    return math.log(fr.numerator) - math.log(fr.denominator)


def logsumexp(*values: float) -> float:
    """ln(sum(exp(v))) without leaving the log domain."""
    m = max(values)
    if m == -math.inf:
        return -math.inf
    return m + math.log(sum(math.exp(v - m) for v in values))


class ExactOps:
    """Arbitrary-precision rational arithmetic."""

    name = "exact"

    @staticmethod
    def embed(fr: Fraction) -> Fraction:
        return Fraction(fr)

    @staticmethod
    def mul(*factors: Fraction) -> Fraction:
        out = Fraction(1)
        for f in factors:
            out *= f
        return out

    @staticmethod
    def add(*terms: Fraction) -> Fraction:
        return sum(terms, Fraction(0))

    @staticmethod
    def scale(k: int, v: Fraction) -> Fraction:
        return k * v

    @staticmethod
    def to_float(v: Fraction) -> float:
        return float(v)

    @staticmethod
    def to_ln(v: Fraction) -> float:
        return fraction_ln(v)


class FloatOps:
    """Plain double precision."""

    name = "float"

    @staticmethod
    def embed(fr: Fraction) -> float:
        return float(fr)

    @staticmethod
    def mul(*factors: float) -> float:
        out = 1.0
        for f in factors:
            out *= f
        return out

    @staticmethod
    def add(*terms: float) -> float:
        return math.fsum(terms)

    @staticmethod
    def scale(k: int, v: float) -> float:
        return k * v

    @staticmethod
    def to_float(v: float) -> float:
        return v

    @staticmethod
    def to_ln(v: float) -> float:
        if v < 0:
            raise DomainError(f"ln of negative value {v}")
        if v == 0:
            # Expected when the true value underflows double precision;
            # the log-domain mode exists to avoid this.
            return -math.inf
        return math.log(v)


class LogOps:
    """Values are natural logarithms of positive quantities."""

    name = "log"

    @staticmethod
    def embed(fr: Fraction) -> float:
        return fraction_ln(fr)

    @staticmethod
    def mul(*factors: float) -> float:
        return sum(factors)

    @staticmethod
    def add(*terms: float) -> float:
        return logsumexp(*terms)

    @staticmethod
    def scale(k: int, v: float) -> float:
        return math.log(k) + v

    @staticmethod
    def to_float(v: float) -> float:
        return math.exp(v)

    @staticmethod
    def to_ln(v: float) -> float:
        return v


_OPS = {"exact": ExactOps(), "float": FloatOps(), "log": LogOps()}

MODES = tuple(_OPS)


def get_ops(mode: str):
    try:
        return _OPS[mode]
    except KeyError:
        raise DomainError(
            f"unknown scalar mode {mode!r}; choose from {', '.join(_OPS)}"
        ) from None
