"""Weyl-group action on words: involution, reduced words, independence."""

import pytest

from queercrystals import all_words, ebar1, weight_of, weyl_S, weyl_s, word
from queercrystals.weyl import conjugating_word, is_reduced, permutation_of


def W(*letters):
    return word(letters)


def test_simple_reflection_examples():
    assert weyl_s(1, W(1, 1), 3) == W(2, 2)
    assert weyl_s(1, W(2, 1), 3) == W(2, 1)
    assert weyl_s(2, W(3), 3) == W(2)


def test_simple_reflection_is_involution_and_swaps_weight():
    n = 3
    for length in range(0, 5):
        for w in all_words(n, length):
            for i in range(1, n):
                sw = weyl_s(i, w, n)
                assert weyl_s(i, sw, n) == w
                wt, swt = weight_of(w, n), weight_of(sw, n)
                expect = list(wt)
                expect[i - 1], expect[i] = expect[i], expect[i - 1]
                assert list(swt) == expect


def test_weyl_S_empty_and_single():
    assert weyl_S((), W(1, 2), 3) == W(1, 2)
    for w in all_words(3, 3):
        assert weyl_S((1,), w, 3) == weyl_s(1, w, 3)


def test_weyl_S_rejects_non_reduced():
    with pytest.raises(ValueError):
        weyl_S((1, 1), W(1, 2), 3)
    with pytest.raises(ValueError):
        weyl_S((1, 2, 1, 2), W(1, 2), 3)


def test_permutation_of_and_length():
    assert permutation_of((2, 3, 1, 2), 4) == (3, 4, 1, 2)
    assert is_reduced((2, 3, 1, 2), 4)
    assert is_reduced((2, 1, 3, 2), 4)
    assert not is_reduced((1, 1), 4)


def test_reduced_word_independence():
    """Words for the same group element act identically."""
    n = 4
    pairs = [((2, 3, 1, 2), (2, 1, 3, 2)),  # s_1 s_3 = s_3 s_1 inside
             ((1, 2, 1), (2, 1, 2))]        # braid relation
    for rw1, rw2 in pairs:
        assert permutation_of(rw1, n) == permutation_of(rw2, n)
        for length in range(0, 5):
            for w in all_words(n, length):
                assert weyl_S(rw1, w, n) == weyl_S(rw2, w, n)


def test_conjugating_word_sends_alpha_i_to_alpha_1():
    for n in (3, 4, 5):
        for i in range(2, n):
            rw = conjugating_word(i)
            assert is_reduced(rw, n)
            perm = permutation_of(rw, n)
            # w(alpha_i) = alpha_1 means w(i) = 1 and w(i+1) = 2
            assert perm[i - 1] == 1 and perm[i] == 2


def test_conjugated_odd_operator_via_explicit_composition():
    """ebar_2 unfolds to S_{w^-1} ebar1 S_w with w = s_2 s_1."""
    from queercrystals import ebar
    n = 3
    rw = conjugating_word(2)
    assert rw == (2, 1)
    for length in range(0, 5):
        for w in all_words(n, length):
            x = weyl_S(rw, w, n)
            x = ebar1(x, n)
            expected = None if x is None else weyl_S(tuple(reversed(rw)), x, n)
            assert ebar(2, w, n) == expected
