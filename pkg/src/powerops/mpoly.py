"""Multivariate integer polynomials in named commuting variables.

A small exact helper for symbolic matrix work: entries of multiplication
matrices over the cubic extension are polynomials in symbols like q0, q1,
q2 and a, and identities between trace/determinant expressions are checked
by comparing canonical forms here.  Monomials are sorted tuples of
(name, exponent); coefficients are arbitrary integers.
"""

from __future__ import annotations

__all__ = ["MPoly"]


def _clean(pairs):
    return tuple(sorted((n, e) for n, e in pairs if e))


class MPoly:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[_clean(mono)] = c
        self.terms = clean

    @staticmethod
    def var(name: str) -> "MPoly":
        return MPoly({((name, 1),): 1})

    @staticmethod
    def const(n: int) -> "MPoly":
        return MPoly({(): n})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return MPoly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            new = out.get(m, 0) + c
            if new:
                out[m] = new
            else:
                out.pop(m, None)
        return MPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = MPoly.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged = {}
                for n, e in m1:
                    merged[n] = merged.get(n, 0) + e
                for n, e in m2:
                    merged[n] = merged.get(n, 0) + e
                mono = _clean(merged.items())
                new = out.get(mono, 0) + c1 * c2
                if new:
                    out[mono] = new
                else:
                    out.pop(mono, None)
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out, base = MPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def substitute(self, values: dict, one=1):
        """Evaluate with each named variable replaced by values[name].

        `one` supplies the multiplicative unit of the target ring so that
        constant terms and empty products land in it.
        """
        total = None
        for mono, c in self.terms.items():
            prod = one
            for name, e in mono:
                prod = prod * values[name] ** e
            term = c * prod
            total = term if total is None else total + term
        return 0 * one if total is None else total

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e for _, e in m) for m in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        def key(item):
            mono, _ = item
            return (sum(e for _, e in mono), mono)
        parts = []
        for mono, c in sorted(self.terms.items(), key=key):
            body = " ".join(n if e == 1 else "%s^%d" % (n, e)
                            for n, e in mono)
            if not body:
                frag = str(abs(c))
            elif abs(c) == 1:
                frag = body
            else:
                frag = "%d %s" % (abs(c), body)
            parts.append(("- " if c < 0 else "+ ") + frag)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "- " + text[2:]

    __repr__ = __str__
