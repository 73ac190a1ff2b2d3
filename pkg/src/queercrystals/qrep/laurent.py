"""Exact rational functions in q with integer coefficients.

Scalars live in the field Q(q) of rational functions, which contains every
coefficient arising from the algebra action on finite tensor powers; no
power-series truncation is ever needed.  A fraction is kept in reduced
normal form: numerator and denominator are coprime integer polynomials and
the denominator has a positive leading coefficient, so equality is plain
tuple comparison.

Polynomials are tuples of integer coefficients, lowest degree first, with
no trailing zeros; the zero polynomial is the empty tuple.
"""

from fractions import Fraction
from math import gcd


def pnorm(coeffs) -> tuple:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def padd(a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return pnorm(out)


def pneg(a) -> tuple:
    return tuple(-c for c in a)


def pmul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return pnorm(out)


def pcontent(a) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _qdivmod(a, b):
    """Division with remainder over Q; inputs integer tuples."""
    r = [Fraction(c) for c in a]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    db = len(b) - 1
    lb = Fraction(b[-1])
    while len(r) - 1 >= db:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        k = len(r) - 1 - db
        c = r[-1] / lb
        q[k] = c
        for t, cb in enumerate(b):
            r[k + t] -= c * cb
    while r and r[-1] == 0:
        r.pop()
    return q, r


def pdiv_exact(a, b) -> tuple:
    """Exact quotient a/b; raises if b does not divide a over Z."""
    if not a:
        return ()
    q, r = _qdivmod(a, b)
    if r:
        raise ArithmeticError(f"{b} does not divide {a}")
    if any(c.denominator != 1 for c in q):
        raise ArithmeticError(f"quotient of {a} by {b} is not integral")
    return pnorm(int(c) for c in q)


def pgcd(a, b) -> tuple:
    """Primitive gcd over Z with a positive leading coefficient."""
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, pnorm(r)
        if b:
            # clear denominators and content to keep integer tuples
            lcm = 1
            for c in b:
                lcm = lcm * c.denominator // gcd(lcm, c.denominator)
            ints = [int(c * lcm) for c in b]
            g = pcontent(ints)
            b = tuple(c // g for c in ints)
    if not a:
        return ()
    ints = [int(c) for c in a]
    g = pcontent(ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def poly_str(a, var: str = "q") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            term = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            term = f"{mag}{var}" + (f"^{k}" if k > 1 else "")
        parts.append(("- " if c < 0 else "+ ") + term)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


class RatFunc:
    """A rational function num/den in q over the integers, normalized."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = pnorm(num)
        den = pnorm(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = (1,)
        else:
            g = pgcd(num, den)
            if g != (1,):
                num = pdiv_exact(num, g)
                den = pdiv_exact(den, g)
            c = gcd(pcontent(num), pcontent(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
            if den[-1] < 0:
                num = pneg(num)
                den = pneg(den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def from_int(k: int) -> "RatFunc":
        return RatFunc((k,))

    @staticmethod
    def q_power(k: int) -> "RatFunc":
        if k >= 0:
            return RatFunc((0,) * k + (1,))
        return RatFunc((1,), (0,) * (-k) + (1,))

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return RatFunc((x,))
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(pneg(self.num), self.den)

    def __sub__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(pmul(self.num, other.den), pmul(self.den, other.num))

    def __rtruediv__(self, other):
        other = RatFunc._coerce(other)
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc((1,)) / self ** (-k)
        out = RatFunc((1,))
        for _ in range(k):
            out = out * self
        return out

    def is_regular_at_zero(self) -> bool:
        """No pole at q = 0 (reduced denominator has a constant term)."""
        return self.den[0] != 0

    def at_zero(self) -> Fraction:
        """Value at q = 0; raises on a pole."""
        if not self.is_regular_at_zero():
            raise ZeroDivisionError(f"{self} has a pole at q=0")
        return Fraction(self.num[0] if self.num else 0, self.den[0])

    def __repr__(self):
        if self.den == (1,):
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"


ZERO = RatFunc(())
ONE = RatFunc((1,))
Q = RatFunc((0, 1))


def gauss_int(k: int) -> RatFunc:
    """[k] = (q^k - q^-k)/(q - q^-1)."""
    return (RatFunc.q_power(k) - RatFunc.q_power(-k)) / (Q - RatFunc.q_power(-1))


def gauss_factorial(k: int) -> RatFunc:
    """[k]! = [k][k-1]...[1]."""
    out = ONE
    for j in range(1, k + 1):
        out = out * gauss_int(j)
    return out
