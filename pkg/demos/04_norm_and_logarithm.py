#!/usr/bin/env python3
"""The trace, the norm, the M-operator, and the 2-adic logarithm.

Packaging the three operations as P(x) = Q0 x + Q1 x d + Q2 x d^2 with
d^3 = a d + 2 turns them into a single ring homomorphism into a rank-3
extension.  Its trace and norm give operators T and N on the base ring;
N is multiplicative and cubes scalars.  For a unit x the ratio
x^2 Psi(x) / N(x) lands in 1 + 2S, so M(x) = (ratio - 1)/2 makes sense
and ell(x) = (1/2) log(1 + 2 M x) defines a 2-adic logarithm that kills
every unit of S, the localization away from D = a^3 - 27.
"""

from powerops.normlog import NormContext, trace_norm_symbolic_check
from powerops.padic import PadicElem
from powerops.poly import A, DISC, Poly
from powerops.tower import SFrac


def section(title):
    print()
    print(title)
    print("-" * len(title))


ctx = NormContext("R")

section("T and N on small elements of Z[a]")
for label, x in [("a", A), ("a - 3", A - 3), ("a^3 - 27", Poly(DISC))]:
    print("T(%-8s) = %s" % (label, ctx.trace_T(x)))
    print("N(%-8s) = %s" % (label, ctx.norm_N(x)))

section("N cubes scalars and is anti-fixed on two special points")
print("N(m) for m = -3..3: %s"
      % [str(ctx.norm_N(Poly(m))) for m in range(-3, 4)])
print("N(a - 3) + (a - 3)^3      = %s"
      % (ctx.norm_N(A - 3) + (A - 3) ** 3))
print("N(a^3 - 27) + (a^3 - 27)^3 = %s"
      % (ctx.norm_N(Poly(DISC)) + Poly(DISC) ** 3))

section("Multiplicativity: N(xy) = N(x) N(y)")
x, y = A + 2, A * A - 3
print("N(x) N(y) - N(xy) = %s"
      % (ctx.norm_N(x) * ctx.norm_N(y) - ctx.norm_N(x * y)))

section("The trace and norm really are trace and determinant")
report = trace_norm_symbolic_check()
print("symbolic 3x3 trace matches T = 3 Q0 + 2 a Q2: %s" % report["ok"])

section("The logarithm kills units")
shat = NormContext("Shat", prec2=20, precA=16)
s = NormContext("S", prec2=20, precA=16)
zero = PadicElem.zero(20, 16)
for label, host, x in [
        ("ell(-1)", shat, Poly(-1)),
        ("ell(D)", shat, Poly(DISC)),
        ("ell(-D^2)", shat, -(DISC ** 2)),
        ("ell(-1/D)", s, SFrac(Poly(-1), 1))]:
    value = host.log_ell(x)
    print("%-10s = 0 to the stated precision: %s"
          % (label, value.agrees_with(zero)))

section("A unit the logarithm does not kill")
print("ell(1 + 2a) = %s" % NormContext("Shat", prec2=10,
                                       precA=8).log_ell(Poly([1, 2])))
