"""Exact matrix algebra over Z, Q[a], and F2[a].

Smith normal form over a Euclidean domain with column-transform tracking,
kernel bases, and the homology of a pair of composable maps.  Matrices
carry explicit shape so zero-dimensional edge cases stay unambiguous.

Ring strategy objects convert entries from integer polynomials (Poly) and
supply the arithmetic; `ZZ` additionally refuses nonconstant entries, which
is how callers detect that an integral Smith form is unavailable.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly

__all__ = ["Matrix", "IntRing", "FieldPolyRing", "ZZ", "QA", "F2A",
           "ring_by_name", "mat_mul", "smith_normal_form",
           "diagonal_invariants", "kernel_basis", "homology"]


class Matrix:
    """Rectangular matrix with explicit shape (entries in one ring)."""

    __slots__ = ("m", "n", "rows")

    def __init__(self, m: int, n: int, rows):
        rows = [list(r) for r in rows]
        if len(rows) != m or any(len(r) != n for r in rows):
            raise ValueError("shape mismatch: want %d x %d" % (m, n))
        self.m = m
        self.n = n
        self.rows = rows

    @classmethod
    def zero(cls, m: int, n: int, ring) -> "Matrix":
        return cls(m, n, [[ring.zero] * n for _ in range(m)])

    @classmethod
    def identity(cls, n: int, ring) -> "Matrix":
        return cls(n, n, [[ring.one if i == j else ring.zero
                           for j in range(n)] for i in range(n)])

    def column(self, j: int):
        return [self.rows[i][j] for i in range(self.m)]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return (self.m, self.n, self.rows) == (other.m, other.n, other.rows)
        return NotImplemented

    def __repr__(self):
        return "Matrix(%d, %d, %r)" % (self.m, self.n, self.rows)


class IntRing:
    """The integers; entries coerced from constant polynomials only."""

    name = "Z"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, Poly):
            if x.degree() > 0:
                raise ValueError("entry %s is not constant" % x)
            return x.constant_term()
        return int(x)

    def is_zero(self, x):
        return x == 0

    def is_one(self, x):
        return x == 1

    def is_unit(self, x):
        return x in (1, -1)

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def divmod_pair(self, x, y):
        return divmod(x, y)

    def size(self, x):
        return abs(x)

    def canon_unit(self, x):
        """Unit u with u*x in canonical form (nonnegative)."""
        return -1 if x < 0 else 1

    def format(self, x):
        return x


class FieldPolyRing:
    """k[a] for k = Q (char 0) or F2; elements are coefficient tuples."""

    def __init__(self, char: int):
        if char not in (0, 2):
            raise ValueError("supported characteristics: 0, 2")
        self.char = char
        self.name = "Q[a]" if char == 0 else "F2[a]"
        self.zero = ()
        self.one = (self._s(1),)

    def _s(self, c):
        return c % 2 if self.char == 2 else Fraction(c)

    def _trim(self, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        return tuple(coeffs)

    def coerce(self, x):
        if isinstance(x, Poly):
            return self._trim(self._s(c) for c in x.coeffs)
        return self._trim((self._s(int(x)),))

    def is_zero(self, x):
        return not x

    def is_one(self, x):
        return x == self.one

    def is_unit(self, x):
        return len(x) == 1

    def add(self, x, y):
        if len(x) < len(y):
            x, y = y, x
        out = list(x)
        for i, c in enumerate(y):
            out[i] = out[i] + c
            if self.char:
                out[i] %= self.char
        return self._trim(out)

    def neg(self, x):
        if self.char:
            return x
        return tuple(-c for c in x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        if not x or not y:
            return ()
        out = [self._s(0)] * (len(x) + len(y) - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    out[i + j] += xi * yj
        if self.char:
            out = [c % self.char for c in out]
        return self._trim(out)

    def divmod_pair(self, x, y):
        if not y:
            raise ZeroDivisionError
        lead_inv = self._inv(y[-1])
        rem = list(x)
        quo = [self._s(0)] * max(len(x) - len(y) + 1, 0)
        while len(rem) >= len(y) and self._trim(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) < len(y):
                break
            c = rem[-1] * lead_inv
            if self.char:
                c %= self.char
            k = len(rem) - len(y)
            quo[k] = c
            for i, yi in enumerate(y):
                rem[k + i] -= c * yi
                if self.char:
                    rem[k + i] %= self.char
            rem.pop()
        return self._trim(quo), self._trim(rem)

    def _inv(self, c):
        if self.char:
            return c          # only 1 is invertible in F2
        return 1 / c

    def size(self, x):
        return len(x)

    def canon_unit(self, x):
        """Unit u with u*x monic."""
        return (self._inv(x[-1]),) if x else self.one

    def format(self, x):
        if not x:
            return "0"
        parts = []
        for k in range(len(x) - 1, -1, -1):
            c = x[k]
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                var = "a" if k == 1 else "a^%d" % k
                body = var if c == 1 else "%s %s" % (c, var)
            parts.append(body)
        return " + ".join(parts)


ZZ = IntRing()
QA = FieldPolyRing(0)
F2A = FieldPolyRing(2)


def ring_by_name(name: str):
    try:
        return {"z": ZZ, "q": QA, "f2": F2A}[name.lower()]
    except KeyError:
        raise ValueError("unknown coefficient ring %r (want z, q, or f2)"
                         % name)


def mat_mul(ring, a: Matrix, b: Matrix) -> Matrix:
    if a.n != b.m:
        raise ValueError("inner dimensions differ: %d vs %d" % (a.n, b.m))
    rows = []
    for i in range(a.m):
        arow = a.rows[i]
        row = []
        for j in range(b.n):
            acc = ring.zero
            for t in range(a.n):
                x = arow[t]
                if not ring.is_zero(x):
                    acc = ring.add(acc, ring.mul(x, b.rows[t][j]))
            row.append(acc)
        rows.append(row)
    return Matrix(a.m, b.n, rows)


def smith_normal_form(ring, mat: Matrix, track: bool = False):
    """Diagonalize U @ mat @ V with unimodular U, V; returns (S, V, Vinv).

    Row transforms are not tracked: kernels only need V, and cokernel
    invariants need no transforms at all.  Diagonal entries form a
    divisibility chain in canonical form (nonnegative over Z, monic over
    the polynomial rings).  V and Vinv are None unless track is set.
    """
    m, n = mat.m, mat.n
    S = [row[:] for row in mat.rows]
    V = [[ring.one if i == j else ring.zero for j in range(n)]
         for i in range(n)] if track else None
    Vinv = [row[:] for row in V] if track else None

    def col_addmul(j, i, c):
        for r in range(m):
            if not ring.is_zero(S[r][i]):
                S[r][j] = ring.add(S[r][j], ring.mul(c, S[r][i]))
        if track:
            for r in range(n):
                if not ring.is_zero(V[r][i]):
                    V[r][j] = ring.add(V[r][j], ring.mul(c, V[r][i]))
            nc = ring.neg(c)
            Vinv[i] = [ring.add(Vinv[i][t], ring.mul(nc, Vinv[j][t]))
                       for t in range(n)]

    def col_swap(i, j):
        for r in range(m):
            S[r][i], S[r][j] = S[r][j], S[r][i]
        if track:
            for r in range(n):
                V[r][i], V[r][j] = V[r][j], V[r][i]
            Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_addmul(i, j, c):
        S[i] = [ring.add(S[i][t], ring.mul(c, S[j][t])) for t in range(n)]

    t = 0
    limit = min(m, n)
    while t < limit:
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = S[i][j]
                if not ring.is_zero(x):
                    sz = ring.size(x)
                    if best is None or sz < best[0]:
                        best = (sz, i, j)
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            S[t], S[bi] = S[bi], S[t]
        if bj != t:
            col_swap(t, bj)
        while True:
            restart = False
            for i in range(t + 1, m):
                if ring.is_zero(S[i][t]):
                    continue
                q, r = ring.divmod_pair(S[i][t], S[t][t])
                if not ring.is_zero(q):
                    row_addmul(i, t, ring.neg(q))
                if not ring.is_zero(r):
                    S[t], S[i] = S[i], S[t]
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, n):
                if ring.is_zero(S[t][j]):
                    continue
                q, r = ring.divmod_pair(S[t][j], S[t][t])
                if not ring.is_zero(q):
                    col_addmul(j, t, ring.neg(q))
                if not ring.is_zero(r):
                    col_swap(t, j)
                    restart = True
                    break
            if restart:
                continue
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    _, r = ring.divmod_pair(S[i][j], S[t][t])
                    if not ring.is_zero(r):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_addmul(t, offender, ring.one)
        u = ring.canon_unit(S[t][t])
        if not ring.is_one(u):
            S[t] = [ring.mul(u, x) for x in S[t]]
        t += 1
    return (Matrix(m, n, S),
            Matrix(n, n, V) if track else None,
            Matrix(n, n, Vinv) if track else None)


def diagonal_invariants(ring, snf: Matrix):
    out = []
    for i in range(min(snf.m, snf.n)):
        x = snf.rows[i][i]
        if ring.is_zero(x):
            break
        out.append(x)
    return out


def kernel_basis(ring, mat: Matrix):
    """Columns of a basis of ker(mat) as lists of ring elements."""
    if mat.n == 0:
        return []
    if mat.m == 0:
        return [Matrix.identity(mat.n, ring).column(j) for j in range(mat.n)]
    snf, v, _ = smith_normal_form(ring, mat, track=True)
    r = len(diagonal_invariants(ring, snf))
    return [v.column(j) for j in range(r, mat.n)]


def homology(ring, d_out: Matrix, d_in: Matrix):
    """ker(d_out)/im(d_in) as (free_rank, nontrivial_divisors).

    d_out maps the position under study outward; d_in maps into it; the
    composite must vanish.  Divisors come back in canonical form with
    units dropped, so a zero module reads (0, []).
    """
    if d_out.n != d_in.m:
        raise ValueError("position dimensions differ: %d vs %d"
                         % (d_out.n, d_in.m))
    n1 = d_out.n
    if n1 == 0:
        return (0, [])
    if d_out.m == 0:
        r = 0
        w = d_in
    else:
        snf, _, vinv = smith_normal_form(ring, d_out, track=True)
        r = len(diagonal_invariants(ring, snf))
        w = mat_mul(ring, vinv, d_in)
    k = n1 - r
    for i in range(r):
        for j in range(d_in.n):
            if not ring.is_zero(w.rows[i][j]):
                raise ValueError("maps do not compose to zero")
    if k == 0:
        return (0, [])
    if d_in.n == 0:
        return (k, [])
    x = Matrix(k, d_in.n, w.rows[r:])
    sx, _, _ = smith_normal_form(ring, x, track=False)
    divs = diagonal_invariants(ring, sx)
    return (k - len(divs), [d for d in divs if not ring.is_unit(d)])
