import random
from fractions import Fraction

import pytest

from powerops.padic import PadicElem, PrecisionError, log_half
from powerops.poly import Poly, A, DISC
from powerops.tower import SFrac


def test_residues_normalized():
    x = PadicElem([5, -1, 1 << 30], prec2=4, precA=3)
    assert x.res == (5, 15, 0)
    assert x.prec2 == 4 and x.precA == 3


def test_min_precision_propagates():
    x = PadicElem([1, 1], prec2=10, precA=4)
    y = PadicElem([3], prec2=6, precA=8)
    assert (x + y).prec2 == 6 and (x + y).precA == 4
    assert (x * y).prec2 == 6 and (x * y).precA == 4


def test_never_overclaim():
    x = PadicElem([1], prec2=5, precA=2)
    with pytest.raises(PrecisionError):
        x.with_precision(prec2=6)
    with pytest.raises(PrecisionError):
        x.with_precision(precA=3)
    assert x.with_precision(prec2=3).prec2 == 3


def test_ring_axioms():
    rng = random.Random(9)

    def r():
        return PadicElem([rng.randint(-50, 50) for _ in range(5)],
                         prec2=12, precA=5)

    for _ in range(100):
        x, y, z = r(), r(), r()
        assert (x + y) * z == x * z + y * z
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)


def test_div_odd_and_halve():
    x = PadicElem([6, 10], prec2=8, precA=2)
    h = x.halve()
    assert h.res == (3, 5) and h.prec2 == 7
    with pytest.raises(ValueError):
        PadicElem([1], prec2=8, precA=1).halve()
    y = PadicElem([1], prec2=8, precA=1).div_odd(3)
    assert (y * 3).res == (1,)
    with pytest.raises(ValueError):
        y.div_odd(2)


def test_unit_inverse():
    d = PadicElem.from_poly(DISC, prec2=16, precA=10)
    dinv = d.inv()
    assert (d * dinv) == PadicElem.one(16, 10)
    with pytest.raises(ValueError):
        PadicElem.from_poly(A, 16, 10).inv()


def test_from_sfrac():
    x = SFrac(A ** 2 + 1, 1)      # (a^2+1)/D
    emb = PadicElem.from_sfrac(x, prec2=12, precA=8)
    back = emb * PadicElem.from_poly(DISC, 12, 8)
    assert back.agrees_with(PadicElem.from_poly(A ** 2 + 1, 12, 8))
    with pytest.raises(ValueError):
        PadicElem.from_sfrac(SFrac(1, 0, 1), 12, 8)


# --- the logarithm series ---------------------------------------------------

def oracle_log_half_int(x_int, n):
    """Independent oracle: exact Fraction partial sums, then reduce mod 2^n."""
    K = 1
    while K - K.bit_length() < n:
        K += 1
    s = Fraction(0)
    for k in range(1, K + 1):
        s += Fraction((-1) ** (k - 1) * 2 ** (k - 1) * x_int ** k, k)
    assert s.denominator % 2 == 1
    return s.numerator * pow(s.denominator, -1, 1 << n) % (1 << n)


def test_log_half_at_one_frozen():
    # (1/2) log 3 in Z2: frozen from the Fraction oracle
    assert oracle_log_half_int(1, 12) == 1146
    got = log_half(PadicElem.one(prec2=12, precA=1))
    assert got.res[0] == 1146
    got20 = log_half(PadicElem.one(prec2=20, precA=1))
    assert got20.res[0] == 619642


def test_log_half_at_minus_one_is_zero():
    # (1/2) log(-1) = 0 in Z2 (the series telescopes to zero 2-adically)
    got = log_half(PadicElem([-1], prec2=20, precA=1))
    assert got.is_zero()


def test_log_half_random_ints_vs_oracle():
    rng = random.Random(41)
    for _ in range(10):
        m = rng.randint(-20, 20)
        got = log_half(PadicElem([m], prec2=14, precA=1))
        assert got.res[0] == oracle_log_half_int(m, 14)


def test_log_half_additivity():
    # (1+2x)(1+2y) = 1+2(x+y+2xy): log adds
    rng = random.Random(4)
    for _ in range(10):
        x = PadicElem([rng.randint(0, 255) for _ in range(3)], 14, 3)
        y = PadicElem([rng.randint(0, 255) for _ in range(3)], 14, 3)
        z = x + y + 2 * x * y
        assert log_half(z).agrees_with(log_half(x) + log_half(y))


def test_json_roundtrip():
    x = PadicElem([3, 1 << 10], prec2=12, precA=2)
    assert PadicElem.from_json(x.to_json()) == x
