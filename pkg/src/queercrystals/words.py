"""Words of the letter crystal and their Kashiwara operators.

A word is an element of B^(x)N for the rank-n letter crystal B whose nodes
are 1..n; it is stored as ``bytes`` with one letter per byte, leftmost
byte = first tensor factor.  All operators are partial: ``None`` encodes
the crystal zero, so graphs never contain a zero node.

The even operators e_i, f_i (i = 1..n-1) are computed by the signature
rule, the primitive odd pair ebar1/fbar1 by its closed form (rightmost
letter in {1,2}), and the remaining odd operators by conjugation with the
Weyl-group action.  ``queercrystals.tensor_rules`` holds the recursive
tensor-rule definitions these closed forms are equivalent to; the
equivalence is checked exhaustively in the test suite.
"""

from . import kernel

Word = bytes


def word(letters) -> Word:
    """Build a word from an iterable of integer letters."""
    return bytes(letters)


def letters(w: Word) -> tuple:
    """Tuple of integer letters of a word."""
    return tuple(w)


def check_word(w: Word, n: int) -> None:
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    for a in w:
        if not 1 <= a <= n:
            raise ValueError(f"letter {a} out of range 1..{n}")


def _check_even_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"even index {i} out of range 1..{n - 1}")


def weight_of(w: Word, n: int) -> tuple:
    """Weight vector: entry j counts occurrences of the letter j."""
    return kernel.weight_of(w, n)


def eps(i: int, w: Word, n: int) -> int:
    """Length of the e_i-string through w."""
    _check_even_index(i, n)
    return kernel.eps_phi(w, i)[0]


def phi(i: int, w: Word, n: int) -> int:
    """Length of the f_i-string through w."""
    _check_even_index(i, n)
    return kernel.eps_phi(w, i)[1]


def e_even(i: int, w: Word, n: int):
    """Even raising operator; None when the result is zero."""
    _check_even_index(i, n)
    return kernel.apply_e(w, i)


def f_even(i: int, w: Word, n: int):
    """Even lowering operator; None when the result is zero."""
    _check_even_index(i, n)
    return kernel.apply_f(w, i)


def ebar1(w: Word, n: int):
    """Primitive odd raising operator (index 1bar); None when zero."""
    if n < 2:
        return None
    return kernel.apply_ebar1(w)


def fbar1(w: Word, n: int):
    """Primitive odd lowering operator (index 1bar); None when zero."""
    if n < 2:
        return None
    return kernel.apply_fbar1(w)


def ebar(i: int, w: Word, n: int):
    """Odd raising operator for any index i in 1..n-1."""
    _check_even_index(i, n)
    if i == 1:
        return ebar1(w, n)
    return kernel.apply_ebar(w, i)


def fbar(i: int, w: Word, n: int):
    """Odd lowering operator for any index i in 1..n-1."""
    _check_even_index(i, n)
    if i == 1:
        return fbar1(w, n)
    return kernel.apply_fbar(w, i)


def is_highest_weight(w: Word, n: int) -> bool:
    """True iff all raising operators e_i and ebar_i (i = 1..n-1) vanish."""
    return kernel.is_q_highest(w, n)


def all_words(n: int, length: int):
    """All words of the given length, in lexicographic order."""
    if length == 0:
        yield b""
        return
    for prefix in all_words(n, length - 1):
        for a in range(1, n + 1):
            yield prefix + bytes([a])
