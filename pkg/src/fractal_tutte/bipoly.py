"""Exact sparse bivariate polynomials over arbitrary-precision integers.

A polynomial is stored as a map from exponent pairs to nonzero integer
coefficients::

    x^2*y + 3  ->  {(2, 1): 1, (0, 0): 3}

The map is canonical (no zero coefficients are ever stored), so two
``BiPoly`` values are equal iff they are equal as polynomials.  All
arithmetic is exact; coefficients are plain Python ints and may grow to
thousands of digits.

Multiplication dispatches between schoolbook convolution (small operands)
and Kronecker substitution (large operands): the polynomial is packed into
a single big integer with coefficients in fixed-width bit slots, multiplied
once using Python's native big-integer multiplication, and unpacked with
balanced-digit recovery to restore signed coefficients.  Both paths produce
identical results; the crossover is purely a speed choice.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping

from .errors import NonDivisible, ZeroPolynomial

try:
    # Optional: GMP multiplies the packed big integers with FFT-class
    # complexity, where CPython tops out at Karatsuba.  Results are
    # identical; this only changes speed at generation >= 5.
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = None

Term = tuple[int, int]

# Pair-count threshold above which multiplication switches to Kronecker
# substitution.  Schoolbook wins below it because packing has fixed overhead.
_KRONECKER_PAIRS = 4096


class BiPoly:
    """An immutable bivariate polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Term, int] | None = None):
        clean: dict[Term, int] = {}
        if terms:
            for (dx, dy), c in terms.items():
                if dx < 0 or dy < 0:
                    raise ValueError(f"negative exponent in term ({dx}, {dy})")
                if c:
                    clean[(dx, dy)] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def x_minus_1(cls) -> "BiPoly":
        return cls({(1, 0): 1, (0, 0): -1})

    @classmethod
    def y_minus_1(cls) -> "BiPoly":
        return cls({(0, 1): 1, (0, 0): -1})

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict[Term, int]:
        """A copy of the canonical term map."""
        return dict(self._terms)

    def coefficient(self, dx: int, dy: int) -> int:
        return self._terms.get((dx, dy), 0)

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Term, int]]:
        return iter(sorted(self._terms.items()))

    def degrees(self) -> tuple[int, int]:
        """(max x-degree, max y-degree); raises ZeroPolynomial on zero."""
        if not self._terms:
            raise ZeroPolynomial("the zero polynomial has no degrees")
        return (max(dx for dx, _ in self._terms),
                max(dy for _, dy in self._terms))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (dx, dy), c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(s for s in (
                f"x^{dx}" if dx > 1 else "x" if dx == 1 else "",
                f"y^{dy}" if dy > 1 else "y" if dy == 1 else "") if s)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append(("- " if c < 0 else "+ " if parts else "") + body)
        return " ".join(parts) if parts[0][0] != "-" else "-" + " ".join(parts)[2:]

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        result = BiPoly.__new__(BiPoly)
        result._terms = out
        return result

    def __neg__(self) -> "BiPoly":
        result = BiPoly.__new__(BiPoly)
        result._terms = {key: -c for key, c in self._terms.items()}
        return result

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            if other == 0:
                return BiPoly.zero()
            result = BiPoly.__new__(BiPoly)
            result._terms = {key: other * c for key, c in self._terms.items()}
            return result
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return BiPoly.zero()
        if len(a) * len(b) <= _KRONECKER_PAIRS:
            out = _mul_schoolbook(a, b)
        else:
            out = _mul_kronecker(a, b)
        result = BiPoly.__new__(BiPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- exact division by (x-1)^k ----------------------------------------

    def div_exact_xminus1(self, k: int) -> "BiPoly":
        """Divide exactly by (x-1)^k; NonDivisible if a remainder appears.

        Runs k rounds of synthetic division in x, treating each coefficient
        as a univariate polynomial in y.  A nonzero remainder means the
        caller violated a proven divisibility property, so it raises rather
        than returning a quotient/remainder pair.
        """
        if k < 1:
            raise ValueError("k must be a positive integer")
        terms = self._terms
        for _ in range(k):
            terms = _synthetic_divide_once(terms)
        result = BiPoly.__new__(BiPoly)
        result._terms = terms
        return result

    # -- evaluation --------------------------------------------------------

    def eval_exact(self, x0: Fraction | int, y0: Fraction | int) -> Fraction:
        """Exact value at a rational point."""
        x0 = Fraction(x0)
        y0 = Fraction(y0)
        if not self._terms:
            return Fraction(0)
        # Group by x-degree and evaluate with cached powers; terms are
        # visited once and powers are built incrementally.
        max_dx, max_dy = self.degrees()
        xpow = _powers(x0, max_dx)
        ypow = _powers(y0, max_dy)
        total = Fraction(0)
        for (dx, dy), c in self._terms.items():
            total += c * xpow[dx] * ypow[dy]
        return total

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """JSON form: terms sorted by (dx, dy), coefficients as strings."""
        return {
            "terms": [
                {"dx": dx, "dy": dy, "coeff": str(c)}
                for (dx, dy), c in sorted(self._terms.items())
            ]
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "BiPoly":
        return cls({(t["dx"], t["dy"]): int(t["coeff"]) for t in data["terms"]})


# -- functional aliases ----------------------------------------------------

def poly_add(a: BiPoly, b: BiPoly) -> BiPoly:
    return a + b


def poly_mul(a: BiPoly, b: BiPoly) -> BiPoly:
    return a * b


def poly_div_exact_xminus1(a: BiPoly, k: int) -> BiPoly:
    return a.div_exact_xminus1(k)


def poly_eval_exact(a: BiPoly, x0: Fraction | int, y0: Fraction | int) -> Fraction:
    return a.eval_exact(x0, y0)


def poly_degrees(a: BiPoly) -> tuple[int, int]:
    return a.degrees()


# -- internals -------------------------------------------------------------

def _powers(base: Fraction, upto: int) -> list[Fraction]:
    out = [Fraction(1)]
    for _ in range(upto):
        out.append(out[-1] * base)
    return out


def _mul_schoolbook(a: dict[Term, int], b: dict[Term, int]) -> dict[Term, int]:
    out: dict[Term, int] = {}
    get = out.get
    for (xa, ya), ca in a.items():
        for (xb, yb), cb in b.items():
            key = (xa + xb, ya + yb)
            s = get(key, 0) + ca * cb
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def _mul_kronecker(a: dict[Term, int], b: dict[Term, int]) -> dict[Term, int]:
    """Multiply by packing both operands into single big integers.

    Exponents (dx, dy) map to slot dx*stride + dy where stride covers the
    full y-degree of the product, so slot arithmetic mirrors exponent
    arithmetic.  Slot width is chosen from a coefficient bound of the
    product; signed coefficients are recovered with balanced digits
    (a digit >= 2^(B-1) is read as digit - 2^B with a carry into the next).
    """
    dxa = max(dx for dx, _ in a)
    dya = max(dy for _, dy in a)
    dxb = max(dx for dx, _ in b)
    dyb = max(dy for _, dy in b)
    stride = dya + dyb + 1
    slots = (dxa + dxb + 1) * stride

    max_a = max(abs(c) for c in a.values())
    max_b = max(abs(c) for c in b.values())
    bound = min(len(a), len(b)) * max_a * max_b
    width = bound.bit_length() + 2
    width += (-width) % 8  # byte-align slots for cheap packing/unpacking
    nbytes = width // 8

    na = _pack(a, stride, slots, nbytes)
    nb = _pack(b, stride, slots, nbytes)
    if _mpz is not None:
        product = int(_mpz(na) * _mpz(nb)) % (1 << (width * (slots + 1)))
    else:
        product = (na * nb) % (1 << (width * (slots + 1)))

    buf = product.to_bytes((slots + 1) * nbytes, "little")
    half = 1 << (width - 1)
    full = 1 << width
    out: dict[Term, int] = {}
    carry = 0
    for i in range(slots):
        raw = int.from_bytes(buf[i * nbytes:(i + 1) * nbytes], "little") + carry
        if raw >= full:
            raw -= full
            carry = 1
        else:
            carry = 0
        if raw >= half:
            raw -= full
            carry += 1
        if raw:
            out[(i // stride, i % stride)] = raw
    return out


def _pack(p: dict[Term, int], stride: int, slots: int, nbytes: int) -> int:
    pos = bytearray(slots * nbytes)
    neg = bytearray(slots * nbytes)
    for (dx, dy), c in p.items():
        off = (dx * stride + dy) * nbytes
        if c > 0:
            pos[off:off + nbytes] = c.to_bytes(nbytes, "little")
        else:
            neg[off:off + nbytes] = (-c).to_bytes(nbytes, "little")
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _synthetic_divide_once(terms: dict[Term, int]) -> dict[Term, int]:
    """One synthetic-division round by (x - 1) over y-polynomial columns."""
    if not terms:
        return {}
    columns: dict[int, dict[int, int]] = {}
    for (dx, dy), c in terms.items():
        columns.setdefault(dx, {})[dy] = c
    top = max(columns)
    out: dict[Term, int] = {}
    carry: dict[int, int] = {}
    for dx in range(top, 0, -1):
        for dy, c in columns.get(dx, {}).items():
            s = carry.get(dy, 0) + c
            if s:
                carry[dy] = s
            else:
                carry.pop(dy, None)
        for dy, c in carry.items():
            out[(dx - 1, dy)] = c
    remainder = dict(carry)
    for dy, c in columns.get(0, {}).items():
        s = remainder.get(dy, 0) + c
        if s:
            remainder[dy] = s
        else:
            remainder.pop(dy, None)
    if remainder:
        raise NonDivisible(
            f"polynomial is not divisible by (x - 1): remainder has "
            f"{len(remainder)} term(s)")
    return out
