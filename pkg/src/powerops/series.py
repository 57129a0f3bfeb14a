"""Truncated power series with explicit error order.

A Series knows its coefficients below `order` and nothing above: it stands
for any series agreeing with it mod u^order.  Arithmetic propagates the
truncation honestly; in particular a product is only claimed mod
u^min(O1+v2, O2+v1) where v is the valuation of the other factor, never
beyond what the operands support.

Coefficients can live in any commutative ring whose elements support
+, -, *, ==; `inverse` additionally needs .inv() on the leading coefficient.
"""

from __future__ import annotations

__all__ = ["Series"]


class Series:
    __slots__ = ("coeffs", "order", "zero", "var")

    def __init__(self, coeffs, order: int, zero, var: str = "u"):
        if order < 0:
            order = 0
        coeffs = list(coeffs)[:order]
        while len(coeffs) < order:
            coeffs.append(zero)
        self.coeffs = tuple(coeffs)
        self.order = order
        self.zero = zero
        self.var = var

    @staticmethod
    def from_terms(terms, order, zero, var="u"):
        """Build from {exponent: coeff}."""
        coeffs = [zero] * order
        for k, c in terms.items():
            if 0 <= k < order:
                coeffs[k] = coeffs[k] + c
        return Series(coeffs, order, zero, var)

    def __getitem__(self, k: int):
        if k >= self.order:
            raise IndexError("coefficient %d not known (order %d)"
                             % (k, self.order))
        return self.coeffs[k] if k >= 0 else self.zero

    def valuation(self):
        """Index of first nonzero known coefficient, or self.order if none."""
        for k, c in enumerate(self.coeffs):
            if c != self.zero:
                return k
        return self.order

    def truncate(self, order: int) -> "Series":
        return Series(self.coeffs[:order], min(order, self.order), self.zero,
                      self.var)

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.order, self.zero,
                      self.var)

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return Series([self.coeffs[k] + other.coeffs[k] for k in range(order)],
                      order, self.zero, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        order = min(self.order + other.valuation(),
                    other.order + self.valuation())
        out = [self.zero] * order
        for i, ci in enumerate(self.coeffs):
            if ci == self.zero:
                continue
            for j, cj in enumerate(other.coeffs):
                if i + j >= order:
                    break
                out[i + j] = out[i + j] + ci * cj
        return Series(out, order, self.zero, self.var)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "Series":
        return Series([x * c for x in self.coeffs], self.order, self.zero,
                      self.var)

    def shift(self, k: int) -> "Series":
        """Multiply by u^k (k may be negative if the valuation allows)."""
        if k >= 0:
            return Series((self.zero,) * k + self.coeffs, self.order + k,
                          self.zero, self.var)
        if any(c != self.zero for c in self.coeffs[:-k]):
            raise ValueError("valuation below %d; cannot divide by %s^%d"
                             % (-k, self.var, -k))
        return Series(self.coeffs[-k:], self.order + k, self.zero, self.var)

    def inverse(self) -> "Series":
        """Reciprocal; the constant coefficient must have .inv()."""
        if self.order == 0:
            return self
        c0_inv = self.coeffs[0].inv()
        out = [c0_inv] + [self.zero] * (self.order - 1)
        for n in range(1, self.order):
            acc = self.zero
            for k in range(1, n + 1):
                acc = acc + self.coeffs[k] * out[n - k]
            out[n] = -(c0_inv * acc)
        return Series(out, self.order, self.zero, self.var)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            raise ValueError("series ring has no generic unit; avoid x**0")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def agrees_with(self, other: "Series", order=None) -> bool:
        """Equality of all coefficients known to both (or below `order`)."""
        o = min(self.order, other.order)
        if order is not None:
            o = min(o, order)
        return all(self.coeffs[k] == other.coeffs[k] for k in range(o))

    def __eq__(self, other):
        return (isinstance(other, Series) and self.order == other.order
                and self.coeffs == other.coeffs)

    def to_json(self):
        return {"var": self.var, "order": self.order,
                "coeffs": [c.to_json() for c in self.coeffs]}

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c != self.zero:
                parts.append("(%s)*%s^%d" % (c, self.var, k))
        body = " + ".join(parts) if parts else "0"
        return "%s + O(%s^%d)" % (body, self.var, self.order)

    __repr__ = __str__
