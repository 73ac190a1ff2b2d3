"""Pure-Python word-operator kernel.

Words are ``bytes`` whose byte values are letters 1..n; the leftmost byte
is the first tensor factor.  This module is the reference implementation
of the hot inner loop; ``queercrystals._fastops`` is a Cython port with
identical semantics, and ``queercrystals.kernel`` selects between them at
import time.

Even operators use the signature rule: each letter contributes "+" when it
equals i and "-" when it equals i+1, adjacent "+-" pairs cancel
iteratively, and the raising operator edits the letter owning the
rightmost surviving "-" while the lowering operator edits the leftmost
surviving "+".
"""

IMPLEMENTATION = "pure"


def weight_of(w: bytes, n: int) -> tuple:
    """Letter-count vector of length n."""
    wt = [0] * n
    for a in w:
        wt[a - 1] += 1
    return tuple(wt)


def _signature(w: bytes, i: int):
    """Surviving plus positions (stack order) and minus positions."""
    plus = []
    minus = []
    j = i + 1
    for pos, a in enumerate(w):
        if a == i:
            plus.append(pos)
        elif a == j:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return plus, minus


def eps_phi(w: bytes, i: int) -> tuple:
    """String lengths (eps_i, phi_i) of a word."""
    plus, minus = _signature(w, i)
    return len(minus), len(plus)


def apply_e(w: bytes, i: int):
    """Raising operator for the even index i, or None."""
    plus, minus = _signature(w, i)
    if not minus:
        return None
    out = bytearray(w)
    out[minus[-1]] = i
    return bytes(out)


def apply_f(w: bytes, i: int):
    """Lowering operator for the even index i, or None."""
    plus, minus = _signature(w, i)
    if not plus:
        return None
    out = bytearray(w)
    out[plus[0]] = i + 1
    return bytes(out)


def apply_fbar1(w: bytes):
    """Odd lowering operator: turn the rightmost letter in {1,2} from 1 to 2."""
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] <= 2:
            if w[pos] == 1:
                out = bytearray(w)
                out[pos] = 2
                return bytes(out)
            return None
    return None


def apply_ebar1(w: bytes):
    """Odd raising operator: turn the rightmost letter in {1,2} from 2 to 1."""
    for pos in range(len(w) - 1, -1, -1):
        if w[pos] <= 2:
            if w[pos] == 2:
                out = bytearray(w)
                out[pos] = 1
                return bytes(out)
            return None
    return None


def weyl_s(w: bytes, i: int) -> bytes:
    """Simple-reflection action: f_i^m if m = #i - #(i+1) >= 0, else e_i^(-m)."""
    m = 0
    for a in w:
        if a == i:
            m += 1
        elif a == i + 1:
            m -= 1
    if m >= 0:
        for _ in range(m):
            w = apply_f(w, i)
    else:
        for _ in range(-m):
            w = apply_e(w, i)
    return w


def _conjugating_word(i: int) -> tuple:
    # shortest Weyl element sending the i-th simple root to the first
    return tuple(range(2, i + 1)) + tuple(range(1, i))


def apply_fbar(w: bytes, i: int):
    """Odd lowering operator for index i >= 2 via Weyl conjugation."""
    rw = _conjugating_word(i)
    for s in reversed(rw):
        w = weyl_s(w, s)
    w = apply_fbar1(w)
    if w is None:
        return None
    for s in rw:
        w = weyl_s(w, s)
    return w


def apply_ebar(w: bytes, i: int):
    """Odd raising operator for index i >= 2 via Weyl conjugation."""
    rw = _conjugating_word(i)
    for s in reversed(rw):
        w = weyl_s(w, s)
    w = apply_ebar1(w)
    if w is None:
        return None
    for s in rw:
        w = weyl_s(w, s)
    return w


def is_gl_highest(w: bytes, n: int) -> bool:
    """True iff every even raising operator vanishes."""
    for i in range(1, n):
        plus = 0
        j = i + 1
        for a in w:
            if a == i:
                plus += 1
            elif a == j:
                if plus:
                    plus -= 1
                else:
                    return False
    return True


def is_q_highest(w: bytes, n: int) -> bool:
    """True iff all 2n-2 raising operators (even and odd) vanish."""
    if not is_gl_highest(w, n):
        return False
    if n >= 2 and apply_ebar1(w) is not None:
        return False
    for i in range(2, n):
        if apply_ebar(w, i) is not None:
            return False
    return True
