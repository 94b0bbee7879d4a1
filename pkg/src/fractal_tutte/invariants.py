"""Numeric invariants of the pseudofractal web via scalar recursion.

The symbolic recursion (module ``recursion``) is exponential in output
size.  Evaluating at a fixed rational point first turns each step into a
handful of big-number multiplications, so counts like T_n(1,1) are
reachable far beyond the symbolic limit.  This module provides

* ``eval_state_at_point``: the (t1, p, q) recursion on exact rationals;
* ``invariant_report``: the classical Tutte evaluations
  (spanning trees, connected spanning subgraphs, spanning forests,
  acyclic orientations, all subgraphs) at one generation;
* ``spanning_trees_closed_form`` / ``spanning_trees_recurrence``: the
  two independent routes to the spanning-tree count;
* ``exponent_sequences``: the integer sequences a_k, b_k, c_k, d_k that
  arise when unrolling the tree-count recurrence, with their closed
  forms cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    FractalTutteError,
    NonIntegralExponent,
    SizeLimitExceeded,
)
from .recursion import STATE_STEP_TERMS

MAX_EVAL_GENERATION = 14
MAX_TREE_COUNT_GENERATION = 20


def eval_state_at_point(
    n: int, x0: Fraction | int, y0: Fraction | int
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (t1, p, q) values at generation n and rational point (x0, y0).

    Runs n scalar steps of the same term tables the symbolic engine uses.
    Values stay in plain integer arithmetic when the point is integral.
    """
    if n < 0:
        raise DomainError(f"generation must be nonnegative, got {n}")
    if n > MAX_EVAL_GENERATION:
        raise SizeLimitExceeded(
            f"exact evaluation limited to n <= {MAX_EVAL_GENERATION} "
            f"(value bit-length grows like 3^n)")
    x0 = Fraction(x0)
    y0 = Fraction(y0)
    if x0.denominator == 1 and y0.denominator == 1:
        # Integer point: run on ints, which is the common case for the
        # classical invariants and noticeably faster at large n.
        xm1, ym1 = x0.numerator - 1, y0.numerator - 1
        t1, p, q = y0.numerator + 2, 1, 1
    else:
        xm1, ym1 = x0 - 1, y0 - 1
        t1, p, q = y0 + 2, Fraction(1), Fraction(1)
    for _ in range(n):
        t1, p, q = _scalar_step(t1, p, q, xm1, ym1)
    return Fraction(t1), Fraction(p), Fraction(q)


def _scalar_step(t1, p, q, xm1, ym1):
    """One recursion step on scalars (int or Fraction, polymorphic)."""
    tp = {1: t1, 2: t1 * t1}
    tp[3] = tp[2] * t1
    pp = {1: p, 2: p * p}
    pp[3] = pp[2] * p
    qp = {1: q, 2: q * q}
    qp[3] = qp[2] * q
    xp = {1: xm1, 2: xm1 * xm1}
    xp[3] = xp[2] * xm1
    out = []
    for name in ("t1", "p", "q"):
        total = 0
        for coeff, a, b, c, d, e in STATE_STEP_TERMS[name]:
            if (d and not xm1) or (e and not ym1):
                continue
            term = coeff
            if a:
                term = term * tp[a]
            if b:
                term = term * pp[b]
            if c:
                term = term * qp[c]
            if d:
                term = term * xp[d]
            if e:
                term = term * ym1
            total = total + term
        out.append(total)
    return tuple(out)


def eval_tutte_at_point(n: int, x0: Fraction | int, y0: Fraction | int) -> Fraction:
    """T_n(x0, y0) = t1 + 3 (x0-1) p + (x0-1)^2 q, exactly."""
    t1, p, q = eval_state_at_point(n, x0, y0)
    xm1 = Fraction(x0) - 1
    return t1 + 3 * xm1 * p + xm1 * xm1 * q


@dataclass(frozen=True)
class InvariantReport:
    """The classical counting evaluations of T_n at one generation."""

    n: int
    spanning_trees: int
    connected_spanning_subgraphs: int
    spanning_forests: int
    acyclic_orientations: int
    all_subgraphs: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "spanning_trees": str(self.spanning_trees),
            "connected_spanning_subgraphs": str(self.connected_spanning_subgraphs),
            "spanning_forests": str(self.spanning_forests),
            "acyclic_orientations": str(self.acyclic_orientations),
            "all_subgraphs": str(self.all_subgraphs),
        }


def invariant_report(n: int) -> InvariantReport:
    """Evaluate T_n at (1,1), (1,2), (2,1), (2,0), (2,2).

    The five values count spanning trees, connected spanning subgraphs,
    spanning forests, acyclic orientations, and all edge subsets.
    """
    values = {}
    for key, (x0, y0) in {
        "spanning_trees": (1, 1),
        "connected_spanning_subgraphs": (1, 2),
        "spanning_forests": (2, 1),
        "acyclic_orientations": (2, 0),
        "all_subgraphs": (2, 2),
    }.items():
        v = eval_tutte_at_point(n, x0, y0)
        if v.denominator != 1:
            raise FractalTutteError(
                f"non-integer count {v} for {key} at n={n}: recursion bug")
        values[key] = int(v)
    return InvariantReport(n=n, **values)


def spanning_trees_closed_form(n: int) -> int:
    """2^((3^(n+1)-2n-3)/4) * 3^((3^(n+1)+2n+1)/4).

    Both exponents are checked to be integers before exponentiation; a
    fractional exponent would mean the formula was transcribed wrong,
    not a property of some n (they are integral for every n >= 0).
    """
    if n < 0:
        raise DomainError(f"generation must be nonnegative, got {n}")
    if n > MAX_TREE_COUNT_GENERATION:
        raise SizeLimitExceeded(
            f"tree counts limited to n <= {MAX_TREE_COUNT_GENERATION}")
    pow3 = 3 ** (n + 1)
    e2 = Fraction(pow3 - 2 * n - 3, 4)
    e3 = Fraction(pow3 + 2 * n + 1, 4)
    for name, e in (("2", e2), ("3", e3)):
        if e.denominator != 1 or e < 0:
            raise NonIntegralExponent(
                f"exponent of {name} is {e} at n={n}; expected a "
                f"nonnegative integer")
    return 2 ** int(e2) * 3 ** int(e3)


def spanning_trees_recurrence(n: int) -> int:
    """Iterate N' = 6 N^2 P, P' = 4 N P^2 from N=3, P=1."""
    if n < 0:
        raise DomainError(f"generation must be nonnegative, got {n}")
    if n > MAX_TREE_COUNT_GENERATION:
        raise SizeLimitExceeded(
            f"tree counts limited to n <= {MAX_TREE_COUNT_GENERATION}")
    trees, p = 3, 1
    for _ in range(n):
        trees, p = 6 * trees * trees * p, 4 * trees * p * p
    return trees


@dataclass(frozen=True)
class ExponentSeq:
    """Row k of the exponent sequences from unrolling the tree recurrence.

    The unrolled form is N_ST(n) = 6^(a_k) 4^(b_k) N_ST(n-k)^(c_k)
    P_(n-k)^(d_k); at k = n it collapses to 6^(a_n) 4^(b_n) 3^(c_n).
    """

    k: int
    a: int
    b: int
    c: int
    d: int


def exponent_sequences(k_max: int) -> list[ExponentSeq]:
    """Rows k = 1 .. k_max, computed by recurrence and verified against
    the closed forms; the two routes must agree exactly.

    Recurrences: a' = a + c, b' = b + d, c' = 2c + d, d' = c + 2d from
    (a, b, c, d) = (1, 0, 2, 1).  Closed forms: c = (3^k+1)/2,
    d = (3^k-1)/2, a = (3^k+2k-1)/4, b = (3^k-2k-1)/4.
    """
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    rows = []
    a, b, c, d = 1, 0, 2, 1
    for k in range(1, k_max + 1):
        closed = _closed_exponents(k)
        if (a, b, c, d) != closed:
            raise FractalTutteError(
                f"exponent sequences disagree at k={k}: "
                f"recurrence {(a, b, c, d)} vs closed form {closed}")
        rows.append(ExponentSeq(k, a, b, c, d))
        a, b, c, d = a + c, b + d, 2 * c + d, c + 2 * d
    return rows


def _closed_exponents(k: int) -> tuple[int, int, int, int]:
    pow3 = 3 ** k
    parts = {
        "a": Fraction(pow3 + 2 * k - 1, 4),
        "b": Fraction(pow3 - 2 * k - 1, 4),
        "c": Fraction(pow3 + 1, 2),
        "d": Fraction(pow3 - 1, 2),
    }
    for name, v in parts.items():
        if v.denominator != 1:
            raise NonIntegralExponent(
                f"closed form for {name}_{k} is non-integral: {v}")
    return tuple(int(v) for v in parts.values())
