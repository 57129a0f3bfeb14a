#!/usr/bin/env python3
"""The module zoo and the twisted tensor product.

A module is presented by three rank-sized matrices over Z[a] recording
how Q0, Q1, Q2 act on a chosen basis; the action extends to scalar
multiples by pushing coefficients through the commutation rule.  The
tensor product of two modules carries a Cartan-style joint action that
mixes the factors, and the central element Psi is multiplicative for it:
on the n-th tensor power of the line module omega it acts by (-2)^n.
"""

from powerops.opalgebra import Operation, psi
from powerops.opmodules import (act, check_well_defined, omega, omega_power,
                                standard_module, tensor)
from powerops.poly import A, Poly


def section(title):
    print()
    print(title)
    print("-" * len(title))


def show_action(name, m):
    cols = ", ".join(
        "Q%d e0 = (%s)" % (i, ", ".join(str(p) for p in m.column(i, 0)))
        for i in range(3))
    print("%-14s rank %d;  %s" % (name, m.rank, cols))


section("Presentations of the basic modules")
show_action("R (standard)", standard_module())
for n in range(1, 5):
    show_action("omega^%d" % n, omega_power(n))

section("Acting on a scalar multiple pushes a through")
m = standard_module()
vec = (A * A,)
for i in range(3):
    out = act(m, Operation.q(i), vec)
    print("Q%d (a^2 . 1) = (%s)" % (i, ", ".join(str(p) for p in out)))

section("The tensor product and its joint action")
t = tensor(omega(), omega_power(2))
show_action("omega (.) omega^2", t)
report = check_well_defined(t)
print("five defining relations on every basis vector: %s"
      % ("all hold" if report["ok"] else report["failures"][:1]))

section("Psi is multiplicative: (-2)^n on omega^n")
for n in range(7):
    m = omega_power(n)
    out = act(m, psi(), m.basis_vector(0))
    assert out == (Poly((-2) ** n),)
    print("Psi on the omega^%d generator: %s" % (n, out[0]))
