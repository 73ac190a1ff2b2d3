"""Decomposition, highest-weight formula, reading independence, conjecture."""

import pytest

from queercrystals import (crystal_of_shape, decompose_product,
                           explore_conjecture, strict_successors,
                           tensor_power_graph, vector_crystal,
                           verify_decomposition,
                           verify_highest_weight_formula,
                           verify_reading_independence,
                           verify_unique_highest_weight)
from queercrystals.errors import VerificationError
from queercrystals.tableaux import strict_partitions
from queercrystals.theorems import highest_weight_formula_side


def test_strict_successors():
    assert strict_successors((1,), 3) == [(1, (2,))]
    assert strict_successors((2,), 3) == [(1, (3,)), (2, (2, 1))]
    assert strict_successors((2, 1), 3) == [(1, (3, 1))]
    assert strict_successors((3, 2, 1), 3) == [(1, (4, 2, 1))]
    assert strict_successors((2, 1), 2) == [(1, (3, 1))]


def test_decompose_vector_times_single_box():
    pieces = decompose_product(vector_crystal(3), crystal_of_shape((1,), 3))
    assert [(mu, len(g)) for mu, g in pieces] == [((2,), 9)]


def test_decompose_two_summands():
    pieces = decompose_product(vector_crystal(3), crystal_of_shape((2,), 3))
    assert sorted((mu, len(g)) for mu, g in pieces) == \
        [((2, 1), 8), ((3,), 19)]


def test_decompose_staircases():
    for n, lam in ((2, (2, 1)), (3, (3, 2, 1))):
        pieces = decompose_product(vector_crystal(n),
                                   crystal_of_shape(lam, n))
        expected = sorted(mu for _, mu in strict_successors(lam, n))
        assert sorted(mu for mu, _ in pieces) == expected


def test_decompose_with_the_letter_factor_on_the_right():
    """B(lam) (x) B splits into the same summands as B (x) B(lam)."""
    for n in (2, 3):
        for lam in strict_partitions(4, n):
            pieces = decompose_product(crystal_of_shape(lam, n),
                                       vector_crystal(n))
            expected = sorted(mu for _, mu in strict_successors(lam, n))
            assert sorted(mu for mu, _ in pieces) == expected, (n, lam)


def test_decompose_accepts_disconnected_factors():
    g = tensor_power_graph(2, 2)
    pieces = decompose_product(g, vector_crystal(2))
    assert sorted(mu for mu, _ in pieces) == [(2, 1), (3,)]


def test_decompose_flags_a_component_without_strict_highest_weight():
    from queercrystals.graphs import CrystalGraph
    # an isolated node of weight (1,1) is a legal graph but not a crystal
    # of the theory; its square has highest weight (2,2), which is caught
    fake = CrystalGraph(n=2, kind="word", nodes=(bytes([1, 2]),),
                        weights=((1, 1),), edges=())
    with pytest.raises(VerificationError):
        decompose_product(fake, fake)


def test_highest_weight_formula_examples():
    side = highest_weight_formula_side((1,), 3)
    assert list(side) == [1]
    rep = verify_highest_weight_formula((1,), 3)
    assert rep["passed"] and rep["count_actual"] == 1
    rep = verify_highest_weight_formula((2,), 2)
    assert rep["passed"] and rep["count_actual"] == 2
    rep = verify_highest_weight_formula((2, 1), 2)
    assert rep["passed"] and rep["count_actual"] == 1


def test_unique_highest_weight_small_sweep():
    for n in (2, 3):
        for lam in strict_partitions(5, n):
            rep = verify_unique_highest_weight(lam, n)
            assert rep["passed"], rep


def test_decomposition_small_sweep():
    for n in (2, 3):
        for lam in strict_partitions(4, n):
            rep = verify_decomposition(lam, n)
            assert rep["passed"], rep
            rep = verify_highest_weight_formula(lam, n)
            assert rep["passed"], rep


def test_reading_independence_small_sweep():
    for n in (2, 3):
        for lam in strict_partitions(5, n):
            assert verify_reading_independence(lam, n)["passed"]


def test_conjecture_reports_are_descriptive():
    rep = explore_conjecture((1,), 2)
    assert rep["passed"]
    assert all(v["found"] for v in rep["highest_weight_vectors"])
    rep = explore_conjecture((1,), 3)
    assert len(rep["highest_weight_vectors"]) >= 1


def test_conjecture_with_empty_budget_marks_not_found():
    rep = explore_conjecture((2,), 2, max_depth=0)
    vecs = rep["highest_weight_vectors"]
    assert len(vecs) == 2
    assert sorted(v["found"] for v in vecs) == [False, True]
    full = explore_conjecture((2,), 2)
    assert all(v["found"] for v in full["highest_weight_vectors"])
