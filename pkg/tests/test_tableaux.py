"""Staircase shapes, semistandard fillings, readings, tableau operators."""

import pytest

from queercrystals import (WordOps, b_lambda, closure, crystal_of_shape,
                           enumerate_ssyt, full_ssyt_graph, isomorphic,
                           reading_word, shape_from_partition,
                           tableau_operator, word)
from queercrystals.errors import StructureError
from queercrystals.graphs import ODD, graph_components, highest_weight_nodes
from queercrystals.tableaux import (Tableau, TableauOps,
                                    check_strict_partition, strict_partitions,
                                    tableau_json)


def test_staircase_of_the_big_example():
    shape = shape_from_partition((7, 6, 4, 2))
    assert len(shape.boxes) == 19
    rows = {}
    for r, c in shape.boxes:
        rows.setdefault(r, []).append(c)
    assert {r: (min(cs), len(cs)) for r, cs in rows.items()} == {
        1: (7, 1), 2: (6, 2), 3: (5, 3), 4: (4, 4),
        5: (3, 4), 6: (2, 3), 7: (1, 2),
    }
    # anti-diagonal d carries exactly lam_d boxes
    diag_counts = {}
    for r, c in shape.boxes:
        diag_counts[r + c] = diag_counts.get(r + c, 0) + 1
    assert [diag_counts[7 + d] for d in range(1, 5)] == [7, 6, 4, 2]


def test_staircase_small_shapes():
    assert shape_from_partition((1,)).boxes == ((1, 1),)
    assert shape_from_partition((2,)).boxes == ((1, 2), (2, 1))
    assert shape_from_partition((2, 1)).boxes == ((1, 2), (2, 1), (2, 2))


def test_strict_partition_validation():
    with pytest.raises(ValueError):
        check_strict_partition((2, 2), 3)
    with pytest.raises(ValueError):
        check_strict_partition((0,), 3)
    with pytest.raises(ValueError):
        check_strict_partition((), 3)
    with pytest.raises(ValueError):
        check_strict_partition((3, 2, 1), 2)  # more parts than the rank


def test_enumerate_ssyt_counts():
    assert len(enumerate_ssyt(shape_from_partition((2,)), 2)) == 4
    assert len(enumerate_ssyt(shape_from_partition((2, 1)), 2)) == 2
    for n in (1, 2, 3, 4, 5, 6):
        assert len(enumerate_ssyt(shape_from_partition((1,)), n)) == n


def test_enumeration_is_row_major_lexicographic():
    ts = enumerate_ssyt(shape_from_partition((2, 1)), 3)
    fillings = [t.entries for t in ts]
    assert fillings == sorted(fillings)


def test_readings():
    shape = shape_from_partition((2, 1))
    t = Tableau(shape=shape, entries=(1, 1, 2))  # boxes (1,2),(2,1),(2,2)
    assert reading_word(t, "row") == word([1, 2, 1])
    assert reading_word(t, "col") == word([1, 2, 1])
    shape2 = shape_from_partition((2,))
    t2 = Tableau(shape=shape2, entries=(1, 2))  # (1,2)=1, (2,1)=2
    assert reading_word(t2, "row") == word([1, 2])


def test_tableau_operator_examples():
    shape = shape_from_partition((2,))
    ones = Tableau(shape=shape, entries=(1, 1))
    lowered = tableau_operator("f", 1, ones, 2)
    assert lowered.entries == (2, 1)  # box (1,2) is read first
    odd = tableau_operator("f", ODD, ones, 2)
    assert odd.entries == (1, 2)  # the other box
    assert tableau_operator("e", 1, ones, 2) is None


def test_tableau_operator_rejects_broken_fillings():
    shape = shape_from_partition((2, 1))
    ops = TableauOps(shape, 3)
    with pytest.raises(StructureError):
        ops.decode(word([3, 2, 1]))  # column would not increase


def test_b_lambda_examples():
    t = b_lambda((2,), 2)
    assert t.entries == (1, 1) and t.weight(2) == (2, 0)
    t = b_lambda((2, 1), 3)
    assert t.entries == (1, 1, 2)  # boxes (1,2),(2,1),(2,2) by anti-diagonal
    assert reading_word(t) == word([1, 2, 1])
    assert t.weight(3) == (2, 1, 0)
    t = b_lambda((1,), 4)
    assert t.entries == (1,)


def test_crystal_of_shape_examples():
    g = crystal_of_shape((1,), 3)
    v = closure(WordOps(3), word([1]))
    assert isomorphic(g, v) is not None
    g = crystal_of_shape((2,), 2)
    c = closure(WordOps(2), word([1, 1]))
    assert len(g) == 4 and isomorphic(g, c) is not None
    assert len(crystal_of_shape((2, 1), 2)) == 2


def test_full_filling_set_can_split_but_the_canonical_component_is_clean():
    g = full_ssyt_graph((3,), 2)
    assert len(g) == 8
    comps = graph_components(g)
    assert sorted(len(c) for c in comps) == [2, 6]
    comp = crystal_of_shape((3,), 2)
    assert len(comp) == 6
    assert len(highest_weight_nodes(comp)) == 1


def test_canonical_tableau_is_the_only_hw_of_its_weight_in_the_full_set():
    for n in (2, 3):
        for lam in strict_partitions(5, n):
            g = full_ssyt_graph(lam, n)
            target = tuple(list(lam) + [0] * (n - len(lam)))
            hw = [t for t in highest_weight_nodes(g)
                  if g.weights[g.node_index[t]] == target]
            assert hw == [b_lambda(lam, n)]


def test_operator_stability_never_breaks_semistandardness():
    # decode() raises if an operator ever leaves the filling set
    for n in (2, 3):
        for lam in strict_partitions(5, n):
            full_ssyt_graph(lam, n, "row")
            full_ssyt_graph(lam, n, "col")


def test_tableau_json_schema():
    t = b_lambda((2, 1), 3)
    data = tableau_json(t)
    assert data["shape"] == [2, 1]
    assert {"row": 2, "col": 2, "entry": 2} in data["cells"]
    assert len(data["cells"]) == 3
