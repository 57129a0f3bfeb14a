"""Exact polynomials in one variable `a` over the integers.

This is the ground ring R = Z[a] of the whole package.  Coefficients are
arbitrary-precision ints stored little-endian (index = exponent of a) with no
trailing zeros, so equal polynomials have equal tuples.  No floating point
anywhere.
"""

from __future__ import annotations

__all__ = ["Poly", "ZERO", "ONE", "A", "DISC"]


def _trim(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class Poly:
    """An element of Z[a]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Poly):
            self.coeffs = coeffs.coeffs
        elif isinstance(coeffs, int):
            self.coeffs = (coeffs,) if coeffs else ()
        else:
            self.coeffs = _trim(tuple(int(c) for c in coeffs))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(n: int) -> "Poly":
        return Poly(n)

    @staticmethod
    def a_power(k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return Poly((0,) * k + (1,))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with degree(0) = -1."""
        return len(self.coeffs) - 1

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    # -- arithmetic --------------------------------------------------------

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        x, y = self.coeffs, other.coeffs
        if len(x) < len(y):
            x, y = y, x
        out = list(x)
        for i, c in enumerate(y):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly(other)
        if not isinstance(other, Poly):
            return NotImplemented
        x, y = self.coeffs, other.coeffs
        if not x or not y:
            return ZERO
        out = [0] * (len(x) + len(y) - 1)
        for i, ci in enumerate(x):
            if ci:
                for j, cj in enumerate(y):
                    out[i + j] += ci * cj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Poly":
        """Multiply by a^k."""
        if not self.coeffs:
            return ZERO
        return Poly((0,) * k + self.coeffs)

    def divmod_monic(self, divisor: "Poly"):
        """Quotient and remainder by a monic divisor; both stay in Z[a]."""
        if divisor.leading() != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree()
        quo = [0] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c:
                quo[i - dd] = c
                for j, dj in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * dj
        return Poly(quo), Poly(rem)

    def divide_exact(self, divisor: "Poly") -> "Poly":
        """Exact division; raises if the divisor does not divide self."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        # Scale to a monic computation when the leading coefficient is +-1,
        # otherwise do fraction-free trial division.
        rem = list(self.coeffs)
        dd = divisor.degree()
        lead = divisor.leading()
        if len(rem) - 1 < dd:
            raise ValueError("not divisible")
        quo = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lead:
                raise ValueError("not divisible")
            q = c // lead
            quo[i - dd] = q
            for j, dj in enumerate(divisor.coeffs):
                rem[i - dd + j] -= q * dj
        if any(rem):
            raise ValueError("not divisible")
        return Poly(quo)

    def divisible_by_int(self, n: int) -> bool:
        return all(c % n == 0 for c in self.coeffs)

    def divide_int_exact(self, n: int) -> "Poly":
        if not self.divisible_by_int(n):
            raise ValueError("coefficients not divisible by %d" % n)
        return Poly(tuple(c // n for c in self.coeffs))

    def evaluate(self, x: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def eval_in(self, x, one):
        """Horner evaluation at an element `x` of any commutative ring.

        `one` is the ring's multiplicative identity (used to embed the
        integer coefficients).
        """
        out = one * 0
        for c in reversed(self.coeffs):
            out = out * x + one * c
        return out

    # -- i/o ---------------------------------------------------------------

    def to_json(self):
        """Little-endian array of decimal strings."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data) -> "Poly":
        return Poly(tuple(int(s) for s in data))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                var = "a" if k == 1 else "a^%d" % k
                body = var if abs(c) == 1 else "%d*%s" % (abs(c), var)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "Poly(%r)" % (self.coeffs,)


ZERO = Poly(())
ONE = Poly(1)
A = Poly((0, 1))
#: The localized discriminant-like element D = a^3 - 27.
DISC = Poly((-27, 0, 0, 1))
