"""Trace, norm, and the 2-adic logarithm for the operation action.

For an element x of a ring with the Q-action, write q_i = Q_i x and set

    T x = 3 q0 + 2a q2
    N x = q0^3 + 2a q0^2 q2 - a q0 q1^2 + a^2 q0 q2^2
          - 6 q0 q1 q2 + 2 q1^3 - 2a q1 q2^2 + 4 q2^3
    M x = (x^2 Psi x / N x - 1) / 2
    ell(x) = (1/2) log(1 + 2 M x),  summed 2-adically.

T and N are the trace and norm of multiplication by P(x) = q0 + q1 d +
q2 d^2 on the rank-3 extension S2 = S[d]/(d^3 - a d - 2); this module both
evaluates them and proves the two identifications symbolically.  Three
hosts are supported: R = Z[a] (trace, norm, congruence and linearization
checks), S = R[1/D] (exact unit arithmetic; the assignment x -> P(x) is a
ring homomorphism, which is how Q_i reach denominators), and the completed
ring of 2-adically truncated series (log evaluation at stated precision).
"""

from __future__ import annotations

from .poly import Poly, A, ONE, ZERO, DISC
from .tower import SFrac, S2Elem
from .padic import (PadicElem, PrecisionError, log_half, DEFAULT_PREC2,
                    DEFAULT_PRECA)
from .opalgebra import Operation, psi, push_through
from .opmodules import standard_module, act
from .mpoly import MPoly

__all__ = ["NormContext", "trace_T", "norm_N", "norm_multiplicativity_check",
           "linearization_check", "norm_congruence_check", "log_ell",
           "q_triple_R", "q_triple_S", "q_triple_padic", "p_map",
           "multiplication_matrix_symbolic", "trace_norm_symbolic_check"]

_STD = standard_module()


# --- the Q-action on each host ----------------------------------------------

def q_triple_R(x) -> tuple:
    """(Q0 x, Q1 x, Q2 x) for x in Z[a], through the rank-1 standard action."""
    x = Poly(x)
    return tuple(act(_STD, Operation.q(i), (x,))[0] for i in range(3))


# Image of a under x -> Q0 x + Q1 x d + Q2 x d^2; this is a ring map into
# the rank-3 extension, so it extends to denominators by inverting P(D).
_P_A = S2Elem(A * A, 3, -A)
_P_D = DISC.eval_in(_P_A, S2Elem(1))
_P_D_INV = _P_D.inv()


def p_map(x) -> S2Elem:
    """The ring homomorphism P on S: P(f / D^n) = P(f) P(D)^(-n)."""
    if isinstance(x, (int, Poly)):
        x = SFrac(x)
    if not x.is_in_S():
        raise ValueError("P is defined on S; got a half-integral element")
    out = x.num.eval_in(_P_A, S2Elem(1))
    if x.dpow:
        out = out * _P_D_INV ** x.dpow
    return out


def q_triple_S(x) -> tuple:
    """(Q0 x, Q1 x, Q2 x) for x in S, read off the components of P(x)."""
    img = p_map(x)
    if not img.is_in_S2():
        raise ValueError("P(x) left S2; x is not in the domain")
    return img.c


def q_triple_padic(x: PadicElem) -> tuple:
    """Truncated action on the completed ring.

    An input known mod (2^N, a^Min) determines Q_i(x) mod (2^N, a^Mout)
    with Mout = (Min - 3N - 2) // 2: the monomial weights v(2) = 1,
    v(a) = 2/3 bound the unknown tail's contribution, and the worst
    surviving term trades almost N powers of 2 against a-powers.
    """
    n, m_in = x.prec2, x.precA
    m_out = (m_in - 3 * n - 2) // 2
    if m_out <= 0:
        raise PrecisionError(
            "a-precision %d cannot support the action at 2-precision %d "
            "(needs > %d)" % (m_in, n, 3 * n + 2))
    out = []
    for i in range(3):
        total = [0] * m_out
        for j, c in enumerate(x.res):
            if c:
                f0 = push_through(i, j)[0]
                for k in range(min(m_out, f0.degree() + 1)):
                    total[k] += c * f0[k]
        out.append(PadicElem(total, n, m_out))
    return tuple(out)


# --- hosts ------------------------------------------------------------------

class NormContext:
    """Evaluation host for T, N, M, and ell.

    host is one of "R", "S", "Shat".  R elements are Poly, S elements are
    SFrac (D-power denominators), and Shat accepts either an exact Poly
    (kept exact until the final division) or an already-truncated
    PadicElem (all later steps track its precision).
    """

    def __init__(self, host: str = "R", prec2: int = DEFAULT_PREC2,
                 precA: int = DEFAULT_PRECA):
        if host not in ("R", "S", "Shat"):
            raise ValueError("host must be R, S, or Shat")
        self.host = host
        self.prec2 = prec2
        self.precA = precA

    # -- coercion and primitives ------------------------------------------

    def coerce(self, x):
        if self.host == "R":
            return Poly(x)
        if self.host == "S":
            return x if isinstance(x, SFrac) else SFrac(x)
        if isinstance(x, PadicElem):
            return x
        return Poly(x)

    def _a(self, sample):
        if isinstance(sample, PadicElem):
            return PadicElem.from_poly(A, sample.prec2, sample.precA)
        if isinstance(sample, SFrac):
            return SFrac(A)
        return A

    def q_triple(self, x):
        x = self.coerce(x)
        if isinstance(x, Poly):
            return q_triple_R(x)
        if isinstance(x, SFrac):
            return q_triple_S(x)
        return q_triple_padic(x)

    def psi_value(self, x):
        """Psi x = Q0Q0 x + a Q0Q1 x - 2 Q1Q1 x + a^2 Q0Q2 x - 2a Q1Q2 x
        + 4 Q2Q2 x, computed by composing the host's Q-action."""
        x = self.coerce(x)
        if isinstance(x, Poly):
            return act(_STD, psi(), (x,))[0]
        q = self.q_triple(x)
        qq = [self.q_triple(v) for v in q]
        a = self._a(qq[0][0])
        return (qq[0][0] + a * qq[1][0] - 2 * qq[1][1] + a * a * qq[2][0]
                - 2 * a * qq[2][1] + 4 * qq[2][2])

    # -- the four operators -------------------------------------------------

    def trace_T(self, x):
        q = self.q_triple(x)
        return 3 * q[0] + 2 * self._a(q[0]) * q[2]

    def norm_N(self, x):
        q0, q1, q2 = self.q_triple(x)
        a = self._a(q0)
        return (q0 * q0 * q0 + 2 * a * q0 * q0 * q2 - a * q0 * q1 * q1
                + a * a * q0 * q2 * q2 - 6 * q0 * q1 * q2 + 2 * q1 * q1 * q1
                - 2 * a * q1 * q2 * q2 + 4 * q2 * q2 * q2)

    def m_value(self, x):
        """M x = (x^2 Psi x / N x - 1) / 2; requires x (hence N x) a unit."""
        x = self.coerce(x)
        if self.host == "R":
            raise ValueError("M needs denominators; use host S or Shat")
        if self.host == "S":
            ratio = (x * x * self.psi_value(x)).div(self.norm_N(x))
            m = (ratio - 1).div(SFrac(2))
            if not m.is_in_S():
                raise ValueError("x^2 Psi x / N x is not in 1 + 2S; "
                                 "x is not a unit of S")
            return m
        if isinstance(x, PadicElem):
            n = self.norm_N(x)
            if not n.is_unit():
                raise ValueError("N x is not a unit of the completed ring")
            ratio = x * x * self.psi_value(x) * n.inv()
            return (ratio - 1).halve()
        # exact polynomial viewed inside the completed ring: N x - x^2 Psi x
        # is even (the norm congruence), so M is (x^2 Psi x - N x)/2 / N x.
        n = self.norm_N(x)
        if n.constant_term() % 2 == 0:
            raise ValueError("N x has even constant term; x is not a unit")
        num = x * x * self.psi_value(x) - n
        half = num.divide_int_exact(2)
        n_inv = PadicElem.from_poly(n, self.prec2, self.precA).inv()
        return PadicElem.from_poly(half, self.prec2, self.precA) * n_inv

    def log_ell(self, x) -> PadicElem:
        """ell(x) = (1/2) log(1 + 2 M x) in the completed ring."""
        m = self.m_value(x)
        if isinstance(m, SFrac):
            m = PadicElem.from_sfrac(m, self.prec2, self.precA)
        return log_half(m)


# --- module-level entry points ----------------------------------------------

def trace_T(ctx: NormContext, x):
    return ctx.trace_T(x)


def norm_N(ctx: NormContext, x):
    return ctx.norm_N(x)


def log_ell(ctx: NormContext, x) -> PadicElem:
    return ctx.log_ell(x)


def norm_multiplicativity_check(ctx: NormContext, x, y) -> bool:
    x, y = ctx.coerce(x), ctx.coerce(y)
    return ctx.norm_N(x * y) == ctx.norm_N(x) * ctx.norm_N(y)


def norm_congruence_check(x) -> bool:
    """N x == x^2 Psi x mod 2R, for x in R."""
    x = Poly(x)
    ctx = NormContext("R")
    return (ctx.norm_N(x) - x * x * ctx.psi_value(x)).divisible_by_int(2)


def linearization_check(r) -> bool:
    """N(1 + eps r) = 1 + eps T(r) in R[eps]/(eps^2).

    Dual numbers (value, eps-part) with the Q-action extended eps-linearly;
    the check expands the norm formula to first order.
    """
    ctx = NormContext("R")
    r = Poly(r)
    q = [(v1, vr) for v1, vr in zip(q_triple_R(ONE), q_triple_R(r))]

    def mul(u, v):
        return (u[0] * v[0], u[0] * v[1] + u[1] * v[0])

    def smul(c, u):
        return (c * u[0], c * u[1])

    a = (A, ZERO)
    q0, q1, q2 = q
    total = mul(mul(q0, q0), q0)
    total = _dadd(total, smul(2, mul(mul(a, mul(q0, q0)), q2)))
    total = _dadd(total, smul(-1, mul(mul(a, q0), mul(q1, q1))))
    total = _dadd(total, mul(mul(mul(a, a), q0), mul(q2, q2)))
    total = _dadd(total, smul(-6, mul(q0, mul(q1, q2))))
    total = _dadd(total, smul(2, mul(mul(q1, q1), q1)))
    total = _dadd(total, smul(-2, mul(mul(a, q1), mul(q2, q2))))
    total = _dadd(total, smul(4, mul(mul(q2, q2), q2)))
    return total[0] == ONE and total[1] == ctx.trace_T(r)


def _dadd(u, v):
    return (u[0] + v[0], u[1] + v[1])


# --- symbolic identification of T and N -------------------------------------

def multiplication_matrix_symbolic():
    """Matrix of multiplication by q0 + q1 d + q2 d^2 on the basis (1, d, d^2).

    Entries are integer polynomials in the symbols q0, q1, q2, a; the cubic
    relation d^3 = a d + 2 is applied during assembly.  Returned as rows.
    """
    q = [MPoly.var("q0"), MPoly.var("q1"), MPoly.var("q2")]
    a = MPoly.var("a")
    cols = []
    for j in range(3):
        vec = {i + j: q[i] for i in range(3)}
        for e in (4, 3):
            c = vec.pop(e, None)
            if c is not None:
                vec[e - 2] = vec.get(e - 2, MPoly()) + a * c
                vec[e - 3] = vec.get(e - 3, MPoly()) + 2 * c
        cols.append([vec.get(i, MPoly()) for i in range(3)])
    return [[cols[j][i] for j in range(3)] for i in range(3)]


def trace_norm_symbolic_check():
    """Trace and determinant of the P-multiplication matrix vs the formulas.

    Returns the symbolic trace, the symbolic determinant, and whether each
    matches the displayed T and 8-term N expression exactly.
    """
    m = multiplication_matrix_symbolic()
    tr = m[0][0] + m[1][1] + m[2][2]
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    q0, q1, q2 = MPoly.var("q0"), MPoly.var("q1"), MPoly.var("q2")
    a = MPoly.var("a")
    t_expected = 3 * q0 + 2 * a * q2
    n_expected = (q0 ** 3 + 2 * a * q0 ** 2 * q2 - a * q0 * q1 ** 2
                  + a ** 2 * q0 * q2 ** 2 - 6 * q0 * q1 * q2 + 2 * q1 ** 3
                  - 2 * a * q1 * q2 ** 2 + 4 * q2 ** 3)
    return {"trace": tr, "det": det,
            "trace_matches": tr == t_expected,
            "norm_matches": det == n_expected,
            "ok": tr == t_expected and det == n_expected}
