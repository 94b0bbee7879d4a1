"""All-terminal reliability of the pseudofractal web and Sierpinski gasket.

With every edge independently operational with probability p, the
self-similar structure of both families turns reliability into a scalar
recursion per generation:

* pseudofractal web, with R = P(everything connected) and
  B = P(exactly two components, hubs A and B in one, hub C in the other)::

      R' = R^3 + 6 R^2 B          B' = 4 R B^2

* Sierpinski gasket, which needs a third scalar
  Ts = P(three components, each hub in its own)::

      Rs' = Rs^3 + 6 Rs^2 Bs
      Bs' = Rs^2 Bs + Rs^2 Ts + 7 Rs Bs^2
      Ts' = 3 Rs Bs^2 + 12 Rs Bs Ts + 14 Bs^3

Initial values: R(0) = Rs(0) = p^2 (3-2p), B(0) = Bs(0) = p (1-p)^2,
Ts(0) = (1-p)^3.  Every right-hand term is a product of positive
quantities for p in (0, 1), so the recursions run unchanged in exact,
float, or log-domain arithmetic (module ``scalars``).

An independent exact route goes through the Tutte polynomial:
R(n) = p^(V-1) (1-p)^(E-V+1) T_1,n(1, 1/(1-p)), with the point evaluator
of module ``invariants``; the two must agree exactly, and a test holds
them to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import DomainError, SizeLimitExceeded
from .graphs import psw_edge_count, psw_vertex_count
from .invariants import eval_state_at_point
from .scalars import get_ops

MAX_VIA_TUTTE_GENERATION = 10


def _as_probability(p) -> Fraction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise DomainError(f"edge probability {p} outside [0, 1]")
    return p


def _require_open_interval(p: Fraction, mode: str) -> None:
    if mode == "log" and not 0 < p < 1:
        raise DomainError(
            f"log mode needs p strictly inside (0, 1), got {p}")


@dataclass(frozen=True)
class RelStatePsw:
    level: int
    r: object
    b: object
    mode: str = "exact"

    @property
    def ln_r(self) -> float:
        return get_ops(self.mode).to_ln(self.r)


@dataclass(frozen=True)
class RelStateSg:
    level: int
    rs: object
    bs: object
    ts: object
    mode: str = "exact"

    @property
    def ln_rs(self) -> float:
        return get_ops(self.mode).to_ln(self.rs)


def psw_rel_init(p, mode: str = "exact") -> RelStatePsw:
    """Level-0 state: R = p^2 (3-2p), B = p (1-p)^2."""
    p = _as_probability(p)
    _require_open_interval(p, mode)
    ops = get_ops(mode)
    return RelStatePsw(
        level=0,
        r=ops.embed(p * p * (3 - 2 * p)),
        b=ops.embed(p * (1 - p) ** 2),
        mode=mode,
    )


def psw_rel_step(s: RelStatePsw) -> RelStatePsw:
    """R' = R^3 + 6 R^2 B;  B' = 4 R B^2."""
    ops = get_ops(s.mode)
    r, b = s.r, s.b
    r2 = ops.mul(r, r)
    return RelStatePsw(
        level=s.level + 1,
        r=ops.add(ops.mul(r2, r), ops.scale(6, ops.mul(r2, b))),
        b=ops.scale(4, ops.mul(r, b, b)),
        mode=s.mode,
    )


def sg_rel_init(p, mode: str = "exact") -> RelStateSg:
    """Level-0 state: Rs = p^2 (3-2p), Bs = p (1-p)^2, Ts = (1-p)^3."""
    p = _as_probability(p)
    _require_open_interval(p, mode)
    ops = get_ops(mode)
    return RelStateSg(
        level=0,
        rs=ops.embed(p * p * (3 - 2 * p)),
        bs=ops.embed(p * (1 - p) ** 2),
        ts=ops.embed((1 - p) ** 3),
        mode=mode,
    )


def sg_rel_step(s: RelStateSg) -> RelStateSg:
    """One gasket generation on (Rs, Bs, Ts)."""
    ops = get_ops(s.mode)
    rs, bs, ts = s.rs, s.bs, s.ts
    rs2 = ops.mul(rs, rs)
    bs2 = ops.mul(bs, bs)
    return RelStateSg(
        level=s.level + 1,
        rs=ops.add(ops.mul(rs2, rs), ops.scale(6, ops.mul(rs2, bs))),
        bs=ops.add(
            ops.mul(rs2, bs),
            ops.mul(rs2, ts),
            ops.scale(7, ops.mul(rs, bs2)),
        ),
        ts=ops.add(
            ops.scale(3, ops.mul(rs, bs2)),
            ops.scale(12, ops.mul(rs, bs, ts)),
            ops.scale(14, ops.mul(bs2, bs)),
        ),
        mode=s.mode,
    )


def psw_reliability(n: int, p, mode: str = "exact") -> RelStatePsw:
    """State after n recursion steps."""
    s = psw_rel_init(p, mode)
    for _ in range(n):
        s = psw_rel_step(s)
    return s


def sg_reliability(n: int, p, mode: str = "exact") -> RelStateSg:
    s = sg_rel_init(p, mode)
    for _ in range(n):
        s = sg_rel_step(s)
    return s


def psw_rel_via_tutte(n: int, p) -> Fraction:
    """R(n) through the Tutte polynomial identity, in exact arithmetic.

    R(n) = p^(V-1) (1-p)^(E-V+1) * T_1,n(1, 1/(1-p)).  Equals the direct
    probability recursion identically; exists as its second witness.
    p = 0 and p = 1 are answered directly (0 and 1) since 1/(1-p) is
    singular at p = 1.
    """
    if n < 0:
        raise DomainError(f"generation must be nonnegative, got {n}")
    if n > MAX_VIA_TUTTE_GENERATION:
        raise SizeLimitExceeded(
            f"exact Tutte-route reliability limited to "
            f"n <= {MAX_VIA_TUTTE_GENERATION}")
    p = _as_probability(p)
    if p == 1:
        return Fraction(1)
    if p == 0:
        return Fraction(0)
    t1, _, _ = eval_state_at_point(n, 1, 1 / (1 - p))
    nv = psw_vertex_count(n)
    ne = psw_edge_count(n)
    return p ** (nv - 1) * (1 - p) ** (ne - nv + 1) * t1


def psw_rel_approx_log(n: int, p: float) -> float:
    """The decay approximation ln R(n) ~ 3^(n-1) * ln(p (2-p)).

    Defined for n >= 1 and p in (0, 1]; at p = 1 the value is exactly 0.
    """
    if n < 1:
        raise DomainError(f"approximation needs n >= 1, got {n}")
    p = float(p)
    if not 0 < p <= 1:
        raise DomainError(f"p must lie in (0, 1], got {p}")
    return 3 ** (n - 1) * math.log(p * (2 - p))


# -- comparison curves and CSV ---------------------------------------------

@dataclass(frozen=True)
class CurvePoint:
    """One grid point of the PSW-vs-gasket comparison."""

    p: float
    mode: str
    r_psw: object
    r_sg: object

    @property
    def ln_r_psw(self) -> float:
        return get_ops(self.mode).to_ln(self.r_psw)

    @property
    def ln_r_sg(self) -> float:
        return get_ops(self.mode).to_ln(self.r_sg)


def compare_curves(n: int, p_grid, mode: str = "exact") -> list[CurvePoint]:
    """Both families' reliability at level n over a probability grid.

    Rows come back sorted by p; every grid value must lie strictly
    inside (0, 1) so that both columns and their logarithms exist in
    every mode.
    """
    points = []
    for p in sorted(p_grid):
        pf = Fraction(p).limit_denominator(10**12) if isinstance(p, float) else Fraction(p)
        if not 0 < pf < 1:
            raise DomainError(f"grid value {p} outside (0, 1)")
        psw = psw_reliability(n, pf, mode)
        sg = sg_reliability(n, pf, mode)
        points.append(
            CurvePoint(p=float(p), mode=mode, r_psw=psw.r, r_sg=sg.rs))
    return points


def format_probability(value, mode: str) -> str:
    """Scientific notation, 12 significant digits, unlimited exponent.

    Exact values go through Decimal so the digits are correctly rounded;
    log-domain values are expanded from their logarithm, which keeps
    quantities like 1e-3000 printable even though no float holds them.
    """
    if mode == "exact":
        with localcontext() as ctx:
            ctx.prec = 12
            d = Decimal(value.numerator) / Decimal(value.denominator)
        mantissa, exp = _decimal_sci(d)
        return _sci(mantissa, exp)
    if mode == "float":
        return f"{value:.11e}"
    if mode == "log":
        return sci_from_ln(value)
    raise DomainError(f"unknown scalar mode {mode!r}")


def _decimal_sci(d: Decimal) -> tuple[str, int]:
    sign, digits, exp = d.as_tuple()
    digits = "".join(map(str, digits)).ljust(12, "0")[:12]
    point_exp = exp + len(d.as_tuple().digits) - 1
    mantissa = f"{digits[0]}.{digits[1:]}"
    if sign:
        mantissa = "-" + mantissa
    return mantissa, point_exp


def sci_from_ln(ln_value: float, sig: int = 12) -> str:
    """12-significant-digit scientific string of exp(ln_value)."""
    if ln_value == -math.inf:
        return _sci("0." + "0" * (sig - 1), 0)
    log10 = ln_value / math.log(10)
    exp = math.floor(log10)
    mantissa = 10.0 ** (log10 - exp)
    text = f"{mantissa:.{sig - 1}f}"
    if text.startswith("10."):
        # Rounding pushed the mantissa to 10; renormalize.
        exp += 1
        text = f"{mantissa / 10:.{sig - 1}f}"
    return _sci(text[: sig + 1], exp)


def _sci(mantissa: str, exp: int) -> str:
    return f"{mantissa}e{exp:+03d}"


def curves_to_csv(points: list[CurvePoint]) -> str:
    """The comparison table in its fixed CSV format.

    p with 4 decimals, probabilities as 12-significant-digit scientific
    notation, logarithms with 6 decimals.
    """
    lines = ["p,R_psw,R_sg,lnR_psw,lnR_sg"]
    for pt in points:
        lines.append(
            ",".join(
                (
                    f"{pt.p:.4f}",
                    format_probability(pt.r_psw, pt.mode),
                    format_probability(pt.r_sg, pt.mode),
                    f"{pt.ln_r_psw:.6f}",
                    f"{pt.ln_r_sg:.6f}",
                )
            )
        )
    return "\n".join(lines) + "\n"
