"""Length-2 Koszul-type resolution of a module over the operation algebra.

The resolution has the shape

    0 -> Gamma (.) K2 (.) M  --d2-->  Gamma (.) K1 (.) M
                             --d1-->  Gamma (.) M  --d0-->  M -> 0

where (.) is tensor over R = Z[a], K1 is free on q0, q1, q2 (one per
generator, with the twisted right a-action q_i a given by the commutation
rules) and K2 is free on r1, r2 (one per straightening relation, central
right action).  The differentials are

    d0(g (.) m)        = g m
    d1(g (.) q_i (.) m) = g (.) Q_i m - g Q_i (.) m
    d2(g (.) r (.) m)   = sum_t g x_t (.) [y_t] (.) m + g (.) [x_t] (.) y_t m

with r corresponding to sum_t x_t y_t = 0 (the relation written with left
coefficients).  Truncating by word degree gives finite free complexes whose
blocks are matrices over Z[a]; homology is read off after base change to a
principal ideal domain (Q[a], F2[a], or Z when a block is constant).
"""

from __future__ import annotations

from .poly import Poly, ZERO, ONE, A
from .opalgebra import Operation, basis_of_degree, push_poly
from .opmodules import (ModulePresentation, omega_power, act,
                        check_well_defined)
from .linalg import (Matrix, ZZ, QA, F2A, ring_by_name, smith_normal_form,
                     diagonal_invariants, kernel_basis, homology, mat_mul)

__all__ = ["RELATIONS", "k1_right_a_matrix", "TruncatedComplex",
           "build_complex", "acyclicity_check", "tor_reduced",
           "tor_gamma_mod_I", "identification_check",
           "truncation_stability_check"]


# Relations sum_t x_t y_t = 0 among the generators, stored as
# (coefficient, i, j) for the summand coefficient * Q_i * Q_j:
#   r1:  Q1 Q0 - 2 Q2 Q1 + 2 Q0 Q2 = 0
#   r2:  Q2 Q0 - Q0 Q1 - a Q0 Q2 + 2 Q1 Q2 = 0
RELATIONS = (
    ((ONE, 1, 0), (Poly(-2), 2, 1), (Poly(2), 0, 2)),
    ((ONE, 2, 0), (Poly(-1), 0, 1), (-A, 0, 2), (Poly(2), 1, 2)),
)


def k1_right_a_matrix():
    """Columns of the right a-action on K1: q_j * a in the left basis."""
    return [push_poly(j, A) for j in range(3)]


def _require_well_defined(module: ModulePresentation):
    rep = check_well_defined(module)
    if not rep["ok"]:
        first = rep["failures"][0]
        raise ValueError("module fails its defining relations "
                         "(basis %s, rule %s)" % (first["basis"], first["rule"]))


def _qkey(i: int):
    return (1, ()) if i == 0 else (0, (i,))


def _mono(key) -> Operation:
    return Operation({key: ONE})


def _poly_mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows = []
    for i in range(a.m):
        arow = a.rows[i]
        row = []
        for j in range(b.n):
            acc = ZERO
            for t in range(a.n):
                x = arow[t]
                if not x.is_zero():
                    acc = acc + x * b.rows[t][j]
            row.append(acc)
        rows.append(row)
    return Matrix(a.m, b.n, rows)


def _poly_mat_is_zero(m: Matrix) -> bool:
    return all(e.is_zero() for row in m.rows for e in row)


class TruncatedComplex:
    """The resolution through word degree k_max, as matrices over Z[a].

    Bases are ordered degree-major, so the cap-j subcomplex (Gamma-degree
    at most j in position 0, j-1 in position 1, j-2 in position 2) is a
    leading principal block of the stored matrices.
    """

    def __init__(self, module: ModulePresentation, k_max: int):
        if k_max < 0:
            raise ValueError("k_max must be nonnegative")
        _require_well_defined(module)
        self.module = module
        self.k_max = k_max
        g = module.rank

        self.p0_basis = [(key, l) for deg in range(k_max + 1)
                         for key in basis_of_degree(deg) for l in range(g)]
        self.p1_basis = [(key, i, l) for deg in range(k_max)
                         for key in basis_of_degree(deg)
                         for i in range(3) for l in range(g)]
        self.p2_basis = [(key, s, l) for deg in range(k_max - 1)
                         for key in basis_of_degree(deg)
                         for s in range(2) for l in range(g)]
        self._p0_index = {b: n for n, b in enumerate(self.p0_basis)}
        self._p1_index = {b: n for n, b in enumerate(self.p1_basis)}

        self.d0 = self._build_d0()
        self.d1 = self._build_d1()
        self.d2 = self._build_d2()

    # -- sizes of the cap-j blocks ------------------------------------------

    def _count(self, max_deg: int, per: int) -> int:
        g = self.module.rank
        return sum((2 ** (d + 1) - 1) * per * g
                   for d in range(max(max_deg, -1) + 1))

    def p0_size(self, cap: int) -> int:
        return self._count(cap, 1)

    def p1_size(self, cap: int) -> int:
        return self._count(cap - 1, 3)

    def p2_size(self, cap: int) -> int:
        return self._count(cap - 2, 2)

    # -- assembly -----------------------------------------------------------

    def _build_d0(self) -> Matrix:
        g = self.module.rank
        cols = []
        for key, l in self.p0_basis:
            cols.append(act(self.module, _mono(key),
                            self.module.basis_vector(l)))
        return Matrix(g, len(cols),
                      [[cols[c][r] for c in range(len(cols))]
                       for r in range(g)])

    def _add_op(self, out, op: Operation, tail, index, scale=None):
        """Accumulate coefficient * (monomial, *tail) for each term of op."""
        for key, coeff in op.terms.items():
            if scale is not None:
                coeff = coeff * scale
            idx = index[(key,) + tail]
            out[idx] = out[idx] + coeff

    def _build_d1(self) -> Matrix:
        n0, n1 = len(self.p0_basis), len(self.p1_basis)
        cols = []
        for key, i, l in self.p1_basis:
            gamma = _mono(key)
            out = [ZERO] * n0
            w = self.module.column(i, l)
            for t, p in enumerate(w):
                if not p.is_zero():
                    self._add_op(out, gamma * p, (t,), self._p0_index)
            minus = gamma * Operation.q(i)
            for mkey, coeff in minus.terms.items():
                idx = self._p0_index[(mkey, l)]
                out[idx] = out[idx] - coeff
            cols.append(out)
        return Matrix(n0, n1, [[cols[c][r] for c in range(n1)]
                               for r in range(n0)])

    def _build_d2(self) -> Matrix:
        n1, n2 = len(self.p1_basis), len(self.p2_basis)
        cols = []
        for key, s, l in self.p2_basis:
            gamma = _mono(key)
            out = [ZERO] * n1
            for c_rel, i, j in RELATIONS[s]:
                left = gamma * Operation({_qkey(i): c_rel})
                self._add_op(out, left, (j, l), self._p1_index)
                w = self.module.column(j, l)
                for t, p in enumerate(w):
                    if p.is_zero():
                        continue
                    for gi, c in enumerate(push_poly(i, p)):
                        if not c.is_zero():
                            self._add_op(out, gamma * (c_rel * c), (gi, t),
                                         self._p1_index)
            cols.append(out)
        return Matrix(n1, n2, [[cols[c][r] for c in range(n2)]
                               for r in range(n1)])

    # -- access -------------------------------------------------------------

    def caps(self, cap: int):
        """(d0, d1, d2) restricted to the degree-cap subcomplex."""
        if cap > self.k_max:
            raise ValueError("cap %d exceeds stored k_max %d"
                             % (cap, self.k_max))
        n0, n1, n2 = self.p0_size(cap), self.p1_size(cap), self.p2_size(cap)
        d0 = Matrix(self.d0.m, n0, [row[:n0] for row in self.d0.rows])
        d1 = Matrix(n0, n1, [row[:n1] for row in self.d1.rows[:n0]])
        d2 = Matrix(n1, n2, [row[:n2] for row in self.d2.rows[:n1]])
        return d0, d1, d2

    def d_squared_checks(self):
        """Exact d0 d1 = 0 and d1 d2 = 0 over Z[a] for the full matrices."""
        return (_poly_mat_is_zero(_poly_mat_mul(self.d0, self.d1)),
                _poly_mat_is_zero(_poly_mat_mul(self.d1, self.d2)))


def build_complex(module: ModulePresentation, k_max: int) -> TruncatedComplex:
    return TruncatedComplex(module, k_max)


def _coerced(ring, mat: Matrix) -> Matrix:
    return Matrix(mat.m, mat.n,
                  [[ring.coerce(e) for e in row] for row in mat.rows])


def _fmt_pair(ring, pair):
    free, divs = pair
    return {"free": free, "divisors": [ring.format(d) for d in divs]}


def acyclicity_check(module: ModulePresentation, k_max: int,
                     field: str = "q") -> dict:
    """Homology of every cap-j subcomplex after base change to field[a].

    Positions 1 and 2 must vanish and position 0 must be free of the
    module's rank (the cokernel of d1 recovers the module itself); the
    report carries each cap so failures are attributable.
    """
    ring = ring_by_name(field)
    cx = build_complex(module, k_max)
    g = module.rank
    caps_report = {}
    ok = True
    for cap in range(1, k_max + 1):
        d0, d1, d2 = cx.caps(cap)
        r1 = _coerced(ring, d1)
        r2 = _coerced(ring, d2)
        h0 = homology(ring, Matrix(0, r1.m, []), r1)
        h1 = homology(ring, r1, r2)
        h2 = homology(ring, r2, Matrix(r2.n, 0, [[] for _ in range(r2.n)]))
        cap_ok = (h1 == (0, []) and h2 == (0, []) and h0 == (g, []))
        ok = ok and cap_ok
        caps_report[cap] = {"h0": _fmt_pair(ring, h0),
                            "h1": _fmt_pair(ring, h1),
                            "h2": _fmt_pair(ring, h2),
                            "ok": cap_ok}
    return {"module_rank": g, "field": ring.name, "k_max": k_max,
            "caps": caps_report, "ok": ok}


def truncation_stability_check(module: ModulePresentation, caps,
                               field: str = "q") -> dict:
    """Positions 1 and 2 must agree across the given degree caps."""
    ring = ring_by_name(field)
    cx = build_complex(module, max(caps))
    seen = []
    for cap in caps:
        _, d1, d2 = cx.caps(cap)
        r1, r2 = _coerced(ring, d1), _coerced(ring, d2)
        h1 = homology(ring, r1, r2)
        h2 = homology(ring, r2, Matrix(r2.n, 0, [[] for _ in range(r2.n)]))
        seen.append((h1, h2))
    stable = all(s == seen[0] for s in seen)
    return {"caps": list(caps), "values": [
        {"h1": _fmt_pair(ring, h1), "h2": _fmt_pair(ring, h2)}
        for h1, h2 in seen], "ok": stable}


# --- the reduced (Tor) complex ---------------------------------------------

def reduced_matrices(module: ModulePresentation):
    """d1bar (g x 3g) and d2bar (3g x 2g) over Z[a].

    Tensoring the resolution with Gamma/I collapses the Gamma factor to R,
    killing every term whose left factor has positive word degree (in
    particular left coefficients a Q_j); what survives of d2 is its
    right-action half, with module coefficients pushed through the twisted
    K1 action.
    """
    g = module.rank
    d1 = Matrix(g, 3 * g,
                [[module.column(i, l)[t] for i in range(3) for l in range(g)]
                 for t in range(g)])
    cols = []
    for s in range(2):
        for l in range(g):
            out = [ZERO] * (3 * g)
            for c_rel, i, j in RELATIONS[s]:
                w = module.column(j, l)
                for t, p in enumerate(w):
                    if p.is_zero():
                        continue
                    for gi, c in enumerate(push_poly(i, p)):
                        if not c.is_zero():
                            idx = gi * g + t
                            out[idx] = out[idx] + c_rel * c
            cols.append(out)
    d2 = Matrix(3 * g, 2 * g, [[cols[c][r] for c in range(2 * g)]
                               for r in range(3 * g)])
    return d1, d2


def tor_reduced(module: ModulePresentation) -> dict:
    """Homology of 0 -> K2 (.) M -> K1 (.) M -> M -> 0 over each PID slice.

    Returns positions 0, 1, 2 over Q[a] and F2[a], and over Z whenever
    every matrix entry is constant (otherwise the Z slice is None).
    """
    _require_well_defined(module)
    d1, d2 = reduced_matrices(module)
    assert _poly_mat_is_zero(_poly_mat_mul(d1, d2))
    report = {"module_rank": module.rank,
              "d1": [[str(e) for e in row] for row in d1.rows],
              "d2": [[str(e) for e in row] for row in d2.rows]}
    for label, ring in (("Z", ZZ), ("Q", QA), ("F2", F2A)):
        try:
            r1, r2 = _coerced(ring, d1), _coerced(ring, d2)
        except ValueError:
            report[label] = None
            continue
        h0 = homology(ring, Matrix(0, r1.m, []), r1)
        h1 = homology(ring, r1, r2)
        h2 = homology(ring, r2, Matrix(r2.n, 0, [[] for _ in range(r2.n)]))
        report[label] = [_fmt_pair(ring, h) for h in (h0, h1, h2)]
    return report


def tor_gamma_mod_I(k: int) -> dict:
    """Tor of the trivial quotient against the k-th tensor power of omega."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = tor_reduced(omega_power(k))
    out["k"] = k
    return out


# --- identification of K2 inside degree 2 -----------------------------------

def _rho_vectors():
    vecs = []
    for terms in RELATIONS:
        v = [ZERO] * 9
        for c, i, j in terms:
            v[3 * i + j] = v[3 * i + j] + c
        vecs.append(v)
    return vecs


def identification_check() -> dict:
    """K2 matches the kernel of multiplication in degree 1 x 1 -> 2.

    Builds the 7 x 9 matrix of Q_i (x) Q_j -> admissible degree-2 basis,
    checks both relation vectors are killed exactly over Z[a], and that
    over Q[a] the kernel has rank 2 and coincides with their span.
    """
    deg2 = basis_of_degree(2)
    idx2 = {key: n for n, key in enumerate(deg2)}
    cols = []
    for i in range(3):
        for j in range(3):
            prod = Operation.q(i) * Operation.q(j)
            col = [ZERO] * len(deg2)
            for key, coeff in prod.terms.items():
                col[idx2[key]] = coeff
            cols.append(col)
    mult = Matrix(len(deg2), 9, [[cols[c][r] for c in range(9)]
                                 for r in range(len(deg2))])
    rhos = _rho_vectors()
    killed = True
    for rho in rhos:
        for r in range(mult.m):
            acc = ZERO
            for t in range(9):
                acc = acc + mult.rows[r][t] * rho[t]
            killed = killed and acc.is_zero()

    def _rank(ring, mat):
        snf, _, _ = smith_normal_form(ring, mat)
        return len(diagonal_invariants(ring, snf))

    q_mult = _coerced(QA, mult)
    kb = kernel_basis(QA, q_mult)
    rho_q = [[QA.coerce(x) for x in rho] for rho in rhos]
    span = Matrix(9, 2, [[rho_q[c][r] for c in range(2)] for r in range(9)])
    both = Matrix(9, 2 + len(kb),
                  [[rho_q[c][r] for c in range(2)] + [k[r] for k in kb]
                   for r in range(9)])
    rank_span = _rank(QA, span)
    rank_both = _rank(QA, both)
    ok = killed and len(kb) == 2 and rank_span == 2 and rank_both == 2
    return {"relations_killed": killed, "kernel_rank": len(kb),
            "relation_span_rank": rank_span,
            "combined_rank": rank_both, "ok": ok}
