# cython: language_level=3, boundscheck=False, wraparound=False
"""Cython word-operator kernel; see _kernel_py for the reference semantics."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

IMPLEMENTATION = "cython"


def weight_of(bytes w, int n):
    cdef const unsigned char* p = w
    cdef Py_ssize_t m = len(w), k
    wt = [0] * n
    for k in range(m):
        wt[p[k] - 1] += 1
    return tuple(wt)


cdef Py_ssize_t _scan(const unsigned char* p, Py_ssize_t m, int i,
                      Py_ssize_t* plus, Py_ssize_t* nplus,
                      Py_ssize_t* last_minus, Py_ssize_t* nminus):
    """Signature scan; fills surviving plus stack and minus statistics."""
    cdef Py_ssize_t k, np_ = 0, nm = 0
    cdef Py_ssize_t lm = -1
    cdef int j = i + 1
    for k in range(m):
        if p[k] == i:
            plus[np_] = k
            np_ += 1
        elif p[k] == j:
            if np_ > 0:
                np_ -= 1
            else:
                nm += 1
                lm = k
    nplus[0] = np_
    nminus[0] = nm
    last_minus[0] = lm
    return 0


def eps_phi(bytes w, int i):
    cdef const unsigned char* p = w
    cdef Py_ssize_t m = len(w)
    cdef Py_ssize_t* plus = <Py_ssize_t*> malloc(m * sizeof(Py_ssize_t)) if m else NULL
    cdef Py_ssize_t np_ = 0, nm = 0, lm = -1
    _scan(p, m, i, plus, &np_, &lm, &nm)
    if plus != NULL:
        free(plus)
    return nm, np_


def apply_e(bytes w, int i):
    cdef const unsigned char* p = w
    cdef Py_ssize_t m = len(w)
    cdef Py_ssize_t* plus = <Py_ssize_t*> malloc(m * sizeof(Py_ssize_t)) if m else NULL
    cdef Py_ssize_t np_ = 0, nm = 0, lm = -1
    _scan(p, m, i, plus, &np_, &lm, &nm)
    if plus != NULL:
        free(plus)
    if nm == 0:
        return None
    out = bytearray(w)
    out[lm] = i
    return bytes(out)


def apply_f(bytes w, int i):
    cdef const unsigned char* p = w
    cdef Py_ssize_t m = len(w)
    cdef Py_ssize_t* plus = <Py_ssize_t*> malloc(m * sizeof(Py_ssize_t)) if m else NULL
    cdef Py_ssize_t np_ = 0, nm = 0, lm = -1
    cdef Py_ssize_t pos
    _scan(p, m, i, plus, &np_, &lm, &nm)
    if np_ == 0:
        if plus != NULL:
            free(plus)
        return None
    pos = plus[0]
    if plus != NULL:
        free(plus)
    out = bytearray(w)
    out[pos] = i + 1
    return bytes(out)


def apply_fbar1(bytes w):
    cdef const unsigned char* p = w
    cdef Py_ssize_t k
    for k in range(len(w) - 1, -1, -1):
        if p[k] <= 2:
            if p[k] == 1:
                out = bytearray(w)
                out[k] = 2
                return bytes(out)
            return None
    return None


def apply_ebar1(bytes w):
    cdef const unsigned char* p = w
    cdef Py_ssize_t k
    for k in range(len(w) - 1, -1, -1):
        if p[k] <= 2:
            if p[k] == 2:
                out = bytearray(w)
                out[k] = 1
                return bytes(out)
            return None
    return None


cdef bytes _weyl_s(bytes w, int i):
    cdef const unsigned char* p = w
    cdef Py_ssize_t k, m = len(w)
    cdef long d = 0
    for k in range(m):
        if p[k] == i:
            d += 1
        elif p[k] == i + 1:
            d -= 1
    if d >= 0:
        for k in range(d):
            w = apply_f(w, i)
    else:
        for k in range(-d):
            w = apply_e(w, i)
    return w


def weyl_s(bytes w, int i):
    return _weyl_s(w, i)


def apply_fbar(bytes w, int i):
    cdef int s
    for s in range(i - 1, 0, -1):
        w = _weyl_s(w, s)
    for s in range(i, 1, -1):
        w = _weyl_s(w, s)
    r = apply_fbar1(w)
    if r is None:
        return None
    w = r
    for s in range(2, i + 1):
        w = _weyl_s(w, s)
    for s in range(1, i):
        w = _weyl_s(w, s)
    return w


def apply_ebar(bytes w, int i):
    cdef int s
    for s in range(i - 1, 0, -1):
        w = _weyl_s(w, s)
    for s in range(i, 1, -1):
        w = _weyl_s(w, s)
    r = apply_ebar1(w)
    if r is None:
        return None
    w = r
    for s in range(2, i + 1):
        w = _weyl_s(w, s)
    for s in range(1, i):
        w = _weyl_s(w, s)
    return w


def is_gl_highest(bytes w, int n):
    cdef const unsigned char* p = w
    cdef Py_ssize_t k, m = len(w)
    cdef int i
    cdef long plus
    for i in range(1, n):
        plus = 0
        for k in range(m):
            if p[k] == i:
                plus += 1
            elif p[k] == i + 1:
                if plus > 0:
                    plus -= 1
                else:
                    return False
    return True


def is_q_highest(bytes w, int n):
    cdef int i
    if not is_gl_highest(w, n):
        return False
    if n >= 2 and apply_ebar1(w) is not None:
        return False
    for i in range(2, n):
        if apply_ebar(w, i) is not None:
            return False
    return True
