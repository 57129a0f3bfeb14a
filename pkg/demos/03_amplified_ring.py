#!/usr/bin/env python3
"""The free amplified ring: theta, its identities, and a continuity limit.

The operation Q0 is congruent to squaring modulo 2, so on torsion-free
rings it splits as Q0 x = x^2 + 2 theta(x) for a unique (nonadditive)
theta.  The free object on one generator x is a polynomial ring on
symbols theta^j Q_w x inside a finite window; all five structural
identities for theta hold there as exact polynomial identities.

The last section documents a genuine limit: the continuity containment
Gamma . a^3 R in 2R + aR holds for the generators Q0, Q1, Q2 but fails
for composite monomials.  The sweep below reports the smallest
counterexample instead of weakening the claim.
"""

import random

from powerops.amplified import AmplifiedRing, scalars_continuity_check


def section(title):
    print()
    print(title)
    print("-" * len(title))


ring = AmplifiedRing(theta_depth=3, word_depth=4)
x = ring.gen()

section("theta measures the failure of Q0 to be squaring")
print("Q0 x          = %s" % ring.q(0, x))
print("theta(x)      = %s" % ring.theta(x))
print("theta(2)      = %s" % ring.theta(ring.const(2)))
print("theta(x + x)  = %s" % ring.theta(x + x))

section("The five structural identities, spot-checked on random inputs")
rng = random.Random(11)


def sample():
    out = ring.zero()
    for _ in range(2):
        j = rng.randrange(2)
        word = tuple(rng.choice((1, 2)) for _ in range(rng.randrange(3)))
        out = out + rng.choice((-2, -1, 1, 2, 3)) * ring.gen(j, word)
    return out


checks = 0
for _ in range(6):
    s, t = sample(), sample()
    assert ring.theta(s + t) == \
        ring.theta(s) + ring.theta(t) - s * t
    assert ring.theta(s * t) == \
        s * s * ring.theta(t) + t * t * ring.theta(s) \
        + 2 * ring.theta(s) * ring.theta(t) \
        + ring.q(1, s) * ring.q(2, t) + ring.q(2, s) * ring.q(1, t)
    checks += 2
print("additivity and multiplicativity defects: %d instances hold" % checks)

section("Frobenius congruence: Q0 x = x^2 mod 2 in the free ring")
small = AmplifiedRing(theta_depth=2, word_depth=3)
rng = random.Random(23)
count = 0
for _ in range(25):
    j = rng.randrange(2)
    word = tuple(rng.choice((1, 2)) for _ in range(rng.randrange(2)))
    p = small.gen(j, word) + small.const(rng.randrange(-3, 4))
    assert small.frobenius_check(p)
    count += 1
print("verified on %d window polynomials" % count)

section("Where continuity genuinely stops")
report = scalars_continuity_check(max_deg=4, max_apow=6)
print("memberships checked: %d, failed: %d" % (report["checked"],
                                               len(report["failures"])))
print("generator level intact: %s" % report["generator_level_ok"])
print("first failing degree: %d" % report["min_failing_degree"])
first = report["failures"][0]
j, word = first["monomial"]
name = " ".join(["Q0"] * j + ["Q%d" % i for i in word])
print("smallest witness: %s applied to %s gives %s,"
      % (name, first["input"], first["output"]))
print("which has odd constant term, hence lies outside %s." % first["needs"])
