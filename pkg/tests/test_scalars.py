"""The three scalar arithmetics behind the reliability recursions."""

import math
from fractions import Fraction

import pytest

from fractal_tutte.errors import DomainError
from fractal_tutte.scalars import (
    MODES,
    fraction_ln,
    get_ops,
    logsumexp,
)


def test_modes_registry():
    assert set(MODES) == {"exact", "float", "log"}
    for mode in MODES:
        assert get_ops(mode).name == mode
    with pytest.raises(DomainError):
        get_ops("interval")


def test_fraction_ln_basics():
    assert fraction_ln(Fraction(1)) == 0.0
    assert fraction_ln(Fraction(1, 2)) == pytest.approx(-math.log(2))
    with pytest.raises(DomainError):
        fraction_ln(Fraction(0))
    with pytest.raises(DomainError):
        fraction_ln(Fraction(-1, 3))


def test_fraction_ln_handles_huge_magnitudes():
    # numerator and denominator far beyond float range
    tiny = Fraction(3, 10 ** 400)
    assert fraction_ln(tiny) == pytest.approx(
        math.log(3) - 400 * math.log(10))
    huge = Fraction(10 ** 500, 7)
    assert fraction_ln(huge) == pytest.approx(
        500 * math.log(10) - math.log(7))


def test_logsumexp_matches_direct_sum():
    a, b, c = 0.3, 0.01, 0.69
    got = logsumexp(math.log(a), math.log(b), math.log(c))
    assert got == pytest.approx(math.log(a + b + c), rel=1e-14)


def test_logsumexp_with_extreme_offsets():
    # exp(-2000) underflows, but relative structure must survive
    got = logsumexp(-2000.0, -2000.0)
    assert got == pytest.approx(-2000.0 + math.log(2))
    assert logsumexp(-math.inf, -math.inf) == -math.inf
    assert logsumexp(-math.inf, -5.0) == -5.0


@pytest.mark.parametrize("mode", ["exact", "float", "log"])
def test_ops_agree_on_a_small_computation(mode):
    # 3 * (1/4 * 1/2) + 1/8 = 1/2
    ops = get_ops(mode)
    quarter = ops.embed(Fraction(1, 4))
    half = ops.embed(Fraction(1, 2))
    eighth = ops.embed(Fraction(1, 8))
    value = ops.add(ops.scale(3, ops.mul(quarter, half)), eighth)
    assert ops.to_float(value) == pytest.approx(0.5, rel=1e-12)
    assert ops.to_ln(value) == pytest.approx(math.log(0.5), rel=1e-12)


def test_exact_ops_are_exact():
    ops = get_ops("exact")
    v = ops.add(ops.mul(ops.embed(Fraction(1, 3)), ops.embed(Fraction(3, 7))),
                ops.embed(Fraction(2, 7)))
    assert v == Fraction(3, 7)
    assert isinstance(v, Fraction)


def test_float_ops_to_ln_edge_cases():
    ops = get_ops("float")
    assert ops.to_ln(0.0) == -math.inf  # legitimate underflow result
    with pytest.raises(DomainError):
        ops.to_ln(-0.25)


def test_log_ops_products_are_additions():
    ops = get_ops("log")
    a = ops.embed(Fraction(1, 2))
    assert ops.mul(a, a, a) == pytest.approx(3 * math.log(0.5))
    assert ops.scale(4, a) == pytest.approx(math.log(2))
    assert ops.to_float(ops.embed(Fraction(1, 4))) == pytest.approx(0.25)
