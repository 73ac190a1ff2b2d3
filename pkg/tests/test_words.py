"""Word-level operators: examples, inverse pairing, string lengths."""

import pytest

from queercrystals import (all_words, e_even, ebar, ebar1, eps, f_even, fbar,
                           fbar1, is_highest_weight, phi, weight_of, word)
from queercrystals.words import check_word


def W(*letters):
    return word(letters)


def test_weight_of_examples():
    assert weight_of(W(), 3) == (0, 0, 0)
    assert weight_of(W(1, 3), 3) == (1, 0, 1)
    assert weight_of(W(1, 1), 3) == (2, 0, 0)


def test_weight_entries_sum_to_length():
    for w in all_words(3, 4):
        assert sum(weight_of(w, 3)) == len(w)


def test_eps_phi_examples():
    assert eps(2, W(3), 3) == 1
    assert phi(2, W(3), 3) == 0
    assert phi(1, W(1, 1), 3) == 2
    assert eps(1, W(2, 1), 3) == 1
    assert phi(1, W(2, 1), 3) == 1


def test_even_operator_examples():
    assert f_even(1, W(1, 1), 3) == W(2, 1)
    assert f_even(2, W(1, 2), 3) == W(1, 3)
    assert f_even(1, W(2, 2), 3) is None
    assert e_even(1, W(2, 1), 3) == W(1, 1)


def test_eps_phi_count_operator_iterations():
    for n in (2, 3):
        for length in range(0, 5):
            for w in all_words(n, length):
                for i in range(1, n):
                    x, k = w, 0
                    while (x := e_even(i, x, n)) is not None:
                        k += 1
                    assert eps(i, w, n) == k
                    x, k = w, 0
                    while (x := f_even(i, x, n)) is not None:
                        k += 1
                    assert phi(i, w, n) == k


def test_even_partial_inverse_pairing():
    n = 3
    for length in range(0, 5):
        for w in all_words(n, length):
            for i in range(1, n):
                up = e_even(i, w, n)
                if up is not None:
                    assert f_even(i, up, n) == w
                down = f_even(i, w, n)
                if down is not None:
                    assert e_even(i, down, n) == w


def test_fbar1_fast_examples():
    assert fbar1(W(1, 1), 3) == W(1, 2)
    assert fbar1(W(1, 3), 3) == W(2, 3)
    assert fbar1(W(2, 2), 3) is None
    assert fbar1(W(3, 3), 3) is None
    assert fbar1(W(1, 2, 3), 3) is None  # rightmost {1,2}-letter is a 2
    assert ebar1(W(1, 2), 3) == W(1, 1)


def test_odd_partial_inverse_pairing():
    n = 3
    for length in range(0, 5):
        for w in all_words(n, length):
            down = fbar1(w, n)
            if down is not None:
                assert ebar1(down, n) == w
            up = ebar1(w, n)
            if up is not None:
                assert fbar1(up, n) == w


def test_odd_operators_vanish_at_rank_one():
    assert fbar1(W(1, 1, 1), 1) is None
    assert ebar1(W(1), 1) is None


def test_conjugated_odd_example():
    # S_w carries the letter 2 into the {1,2} zone and back
    assert fbar(2, W(2), 3) == W(3)
    assert ebar(2, W(3), 3) == W(2)


def test_conjugated_odd_inverse_pairing_and_weight_shift():
    n = 4
    for length in range(1, 4):
        for w in all_words(n, length):
            for i in range(2, n):
                down = fbar(i, w, n)
                if down is not None:
                    assert ebar(i, down, n) == w
                    delta = [a - b for a, b in
                             zip(weight_of(w, n), weight_of(down, n))]
                    expect = [0] * n
                    expect[i - 1] = 1
                    expect[i] = -1
                    assert delta == expect


def test_highest_weight_examples():
    assert is_highest_weight(W(1, 1), 3)
    assert not is_highest_weight(W(2, 1), 3)
    for length in range(1, 6):
        assert is_highest_weight(W(*([1] * length)), 3)


def test_validation_errors():
    with pytest.raises(ValueError):
        check_word(W(4), 3)
    with pytest.raises(ValueError):
        e_even(3, W(1), 3)
    with pytest.raises(ValueError):
        e_even(0, W(1), 3)
