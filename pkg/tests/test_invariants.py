"""Numeric invariants: scalar recursion evaluation, spanning-tree counts
through three independent routes, and the unrolled exponent sequences.
"""

import random
from fractions import Fraction

import pytest

from fractal_tutte.errors import DomainError, SizeLimitExceeded
from fractal_tutte.graphs import build_psw_edge_expansion, psw_edge_count
from fractal_tutte.invariants import (
    MAX_EVAL_GENERATION,
    MAX_TREE_COUNT_GENERATION,
    eval_state_at_point,
    eval_tutte_at_point,
    exponent_sequences,
    invariant_report,
    spanning_trees_closed_form,
    spanning_trees_recurrence,
)
from fractal_tutte.oracle import matrix_tree_count
from fractal_tutte.recursion import state_at, tutte_psw


def test_eval_state_examples():
    assert eval_state_at_point(1, 2, 2) == (350, 45, 27)
    t1, p, _ = eval_state_at_point(1, 1, 1)
    assert (t1, p) == (54, 12)
    x0, y0 = Fraction(5, 7), Fraction(-3, 2)
    assert eval_state_at_point(0, x0, y0) == (y0 + 2, 1, 1)


def test_eval_tutte_known_values():
    assert eval_tutte_at_point(0, 1, 1) == 3
    assert eval_tutte_at_point(1, 1, 1) == 54
    assert eval_tutte_at_point(2, 1, 1) == 209952
    assert eval_tutte_at_point(1, 2, 2) == 512


@pytest.mark.parametrize("n", range(0, 4))
def test_eval_matches_symbolic_at_random_points(n):
    rng = random.Random(1234 + n)
    t = tutte_psw(n)
    for _ in range(20):
        x0 = Fraction(rng.randrange(-40, 41), rng.randrange(1, 12))
        y0 = Fraction(rng.randrange(-40, 41), rng.randrange(1, 12))
        assert eval_tutte_at_point(n, x0, y0) == t.eval_exact(x0, y0)


def test_eval_state_matches_symbolic_components():
    s = state_at(3)
    x0, y0 = Fraction(3, 4), Fraction(-2, 5)
    t1, p, q = eval_state_at_point(3, x0, y0)
    assert t1 == s.t1.eval_exact(x0, y0)
    assert p == s.p.eval_exact(x0, y0)
    assert q == s.q.eval_exact(x0, y0)


def test_invariant_report_generation_zero():
    r = invariant_report(0)
    assert (r.spanning_trees, r.connected_spanning_subgraphs,
            r.spanning_forests, r.acyclic_orientations,
            r.all_subgraphs) == (3, 4, 7, 6, 8)


def test_invariant_report_generation_one():
    r = invariant_report(1)
    assert r.spanning_trees == 54
    assert r.connected_spanning_subgraphs == 160
    assert r.spanning_forests == 279
    assert r.acyclic_orientations == 162
    assert r.all_subgraphs == 512


def test_invariant_report_generation_two():
    r = invariant_report(2)
    assert r.spanning_trees == 209952
    assert r.all_subgraphs == 2 ** 27


@pytest.mark.parametrize("n", range(0, 11))
def test_invariant_inequalities(n):
    r = invariant_report(n)
    assert r.all_subgraphs == 2 ** psw_edge_count(n)
    assert r.spanning_trees <= r.connected_spanning_subgraphs <= r.all_subgraphs
    assert r.spanning_trees <= r.spanning_forests <= r.all_subgraphs
    assert r.acyclic_orientations % 2 == 0  # reversal pairs orientations


def test_report_json_shape():
    d = invariant_report(1).to_json_dict()
    assert d["n"] == 1
    assert d["spanning_trees"] == "54"
    assert set(d) == {"n", "spanning_trees", "connected_spanning_subgraphs",
                      "spanning_forests", "acyclic_orientations",
                      "all_subgraphs"}


# -- spanning trees, three ways --------------------------------------------


@pytest.mark.parametrize("n", range(0, 13))
def test_tree_count_routes_agree(n):
    closed = spanning_trees_closed_form(n)
    assert closed == spanning_trees_recurrence(n)
    assert closed == eval_tutte_at_point(n, 1, 1)


def test_tree_count_anchors():
    assert spanning_trees_closed_form(0) == 3
    assert spanning_trees_closed_form(1) == 54
    assert spanning_trees_closed_form(2) == 209952
    assert spanning_trees_closed_form(3) == 2 ** 18 * 3 ** 22


@pytest.mark.parametrize("n", range(0, 4))
def test_tree_count_matches_matrix_tree(n):
    g = build_psw_edge_expansion(n)
    assert matrix_tree_count(g) == spanning_trees_closed_form(n)


def test_tree_count_guards():
    with pytest.raises(SizeLimitExceeded):
        spanning_trees_closed_form(MAX_TREE_COUNT_GENERATION + 1)
    with pytest.raises(SizeLimitExceeded):
        spanning_trees_recurrence(MAX_TREE_COUNT_GENERATION + 1)
    with pytest.raises(DomainError):
        spanning_trees_closed_form(-2)


def test_eval_guard():
    with pytest.raises(SizeLimitExceeded):
        eval_state_at_point(MAX_EVAL_GENERATION + 1, 1, 1)
    with pytest.raises(DomainError):
        invariant_report(-1)


# -- exponent sequences from unrolling the tree recurrence ------------------


def test_exponent_sequence_first_rows():
    rows = exponent_sequences(2)
    assert (rows[0].k, rows[0].a, rows[0].b, rows[0].c, rows[0].d) == (
        1, 1, 0, 2, 1)
    assert rows[1].k == 2
    assert (rows[1].c, rows[1].d) == (5, 4)


def test_exponent_sequence_structure():
    rows = exponent_sequences(30)
    assert [r.k for r in rows] == list(range(1, 31))
    for r in rows:
        assert r.c + r.d == 3 ** r.k
        assert r.c - r.d == 1
        assert r.a >= r.b >= 0


@pytest.mark.parametrize("n", range(1, 13))
def test_full_unroll_reproduces_closed_form(n):
    row = exponent_sequences(n)[n - 1]
    # at k = n the remaining factors are N_ST(0) = 3 and P_0 = 1
    assert 6 ** row.a * 4 ** row.b * 3 ** row.c == spanning_trees_closed_form(n)


def test_partial_unroll_reproduces_count():
    # unroll k steps, then finish with the exact (N, P) pair at level n-k
    n, k = 6, 2
    trees, p = 3, 1
    for _ in range(n - k):
        trees, p = 6 * trees * trees * p, 4 * trees * p * p
    row = exponent_sequences(k)[k - 1]
    value = 6 ** row.a * 4 ** row.b * trees ** row.c * p ** row.d
    assert value == spanning_trees_closed_form(n)


def test_exponent_sequence_rejects_bad_kmax():
    with pytest.raises(DomainError):
        exponent_sequences(0)
