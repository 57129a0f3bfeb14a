#!/usr/bin/env python3
"""The length-2 resolution, acyclicity, and a two-torsion Tor group.

Every module has a resolution 0 -> F2 -> F1 -> F0 -> M -> 0 by free
bimodule terms; its differentials square to zero degree by degree.
After base change to a field the positive positions vanish whenever the
module is free over the base, which is checked here on truncations.
Tensoring down to the trivial quotient instead leaves a small complex of
Z[a]-matrices whose middle homology on the line module omega is pure
two-torsion: Tor = (0, Z/2, 0).
"""

from powerops.koszul import (RELATIONS, acyclicity_check, build_complex,
                             reduced_matrices, tor_gamma_mod_I)
from powerops.opalgebra import Operation
from powerops.opmodules import omega, omega_power, standard_module


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("The two defining relation vectors")
for s, rel in enumerate(RELATIONS):
    terms = " + ".join("(%s) Q%d q%d" % (c, i, j) for c, i, j in rel)
    combo = Operation()
    for c, i, j in rel:
        combo = combo + c * (Operation.q(i) * Operation.q(j))
    print("rho%d = %s;  straightens to %s"
          % (s + 1, terms, combo if not combo.is_zero() else "0"))

section("d^2 = 0 on assembled truncations")
for name, m in [("R", standard_module()), ("omega", omega()),
                ("omega^2", omega_power(2))]:
    cx = build_complex(m, 5)
    ok01, ok12 = cx.d_squared_checks()
    print("%-8s degrees <= 5: d0 d1 = 0: %s, d1 d2 = 0: %s"
          % (name, ok01, ok12))

section("Acyclicity in positive positions after base change")
for field in ("q", "f2"):
    rep = acyclicity_check(omega(), 3, field)
    caps = ", ".join("cap %d: %s" % (cap, "ok" if rep["caps"][cap]["ok"]
                                     else "FAILED")
                     for cap in sorted(rep["caps"]))
    print("over %-6s %s" % ({"q": "Q[a]:", "f2": "F2[a]:"}[field], caps))

section("The reduced complex on omega and its integral homology")
d1, d2 = reduced_matrices(omega())
print("d1 = %s" % [[str(e) for e in row] for row in d1.rows])
print("d2 = %s" % [[str(e) for e in row] for row in d2.rows])
tor = tor_gamma_mod_I(1)
for pos, entry in enumerate(tor["Z"]):
    pieces = (["Z^%d" % entry["free"]] if entry["free"] else []) + \
        ["Z/%s" % d for d in entry["divisors"]]
    print("Tor position %d over Z: %s" % (pos, " + ".join(pieces) or "0"))

section("The same groups after inverting 2, and over F2")
for label in ("Q", "F2"):
    desc = ["free rank %d%s" % (e["free"],
                                " + torsion %s" % e["divisors"]
                                if e["divisors"] else "")
            for e in tor[label]]
    print("over %-5s positions 0, 1, 2: %s" % (label + ":", desc))
print()
print("The middle Z/2 disappears over Q and becomes rank 1 over F2, with")
print("a universal-coefficients echo in position 2: exactly the footprint")
print("of a single 2-torsion class.")
