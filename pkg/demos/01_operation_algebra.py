#!/usr/bin/env python3
"""Straightening and normal forms in the operation algebra.

The algebra is generated over Z[a] by operations Q0, Q1, Q2.  A scalar a
cannot simply slide past an operation; it is pushed through by a twisted
commutation rule, and the composites Q1 Q0 and Q2 Q0 straighten into
combinations of admissible words Q0^j Q_{k1} ... Q_{kr} with k_i in
{1, 2}.  Every element then has a unique normal form, and the degree-k
slice of the algebra is free of rank 2^{k+1} - 1.  The central element
Psi plays the role of a determinant for the whole package.
"""

from powerops.opalgebra import Operation, basis_of_degree, normal_form, psi


def section(title):
    print()
    print(title)
    print("-" * len(title))


section("Pushing the scalar a through each generator")
for i in range(3):
    print("Q%d a  ->  %s" % (i, Operation.q(i) * normal_form("a")))

section("Straightening the two inadmissible composites")
for left, right in ((1, 0), (2, 0)):
    product = Operation.q(left) * Operation.q(right)
    print("Q%d Q%d  ->  %s" % (left, right, product))

section("A longer expression, parsed and straightened")
expr = "Q2 Q1 Q0 - 3 a Q0 Q2 a"
print("%s  ->  %s" % (expr, normal_form(expr)))

section("Ranks of the degree slices")
for k in range(9):
    print("degree %d: rank %3d = 2^%d - 1" % (k, len(basis_of_degree(k)),
                                              k + 1))

section("Psi is central")
print("Psi = %s" % psi())
for label, g in [("a", normal_form("a")), ("Q0", Operation.q(0)),
                 ("Q1", Operation.q(1)), ("Q2", Operation.q(2))]:
    bracket = psi() * g - g * psi()
    print("[Psi, %s] = %s" % (label, bracket if not bracket.is_zero()
                              else "0"))
