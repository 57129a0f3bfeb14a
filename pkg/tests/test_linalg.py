"""Tests for exact Smith normal form, kernels, and homology.

Random matrices are cross-checked against sympy's invariant factors over
each supported coefficient ring.
"""

import random
from fractions import Fraction

import pytest
import sympy
from sympy import GF, QQ, Matrix as SMatrix
from sympy.matrices.normalforms import invariant_factors

from powerops.poly import Poly, A
from powerops.linalg import (Matrix, ZZ, QA, F2A, ring_by_name, mat_mul,
                             smith_normal_form, diagonal_invariants,
                             kernel_basis, homology)

_a = sympy.symbols("a")


def rand_int_matrix(rng, m, n, lo=-6, hi=6):
    return Matrix(m, n, [[rng.randint(lo, hi) for _ in range(n)]
                         for _ in range(m)])


def rand_poly_matrix(rng, ring, m, n, deg=2, lo=-3, hi=3):
    rows = []
    for _ in range(m):
        rows.append([ring.coerce(Poly([rng.randint(lo, hi)
                                       for _ in range(rng.randint(0, deg + 1))]))
                     for _ in range(n)])
    return Matrix(m, n, rows)


def to_sympy(ring, mat):
    def conv(x):
        if ring is ZZ:
            return sympy.Integer(x)
        expr = sympy.Integer(0)
        for k, c in enumerate(x):
            expr += (sympy.Integer(int(c)) if ring is F2A
                     else sympy.Rational(c)) * _a ** k
        return expr
    return SMatrix(mat.m, mat.n,
                   [conv(mat.rows[i][j]) for i in range(mat.m)
                    for j in range(mat.n)])


def sympy_invariants(ring, mat):
    """Nonzero invariant factors, in the engine's canonical form."""
    sm = to_sympy(ring, mat)
    if ring is ZZ:
        out = [abs(int(d)) for d in invariant_factors(sm, domain=sympy.ZZ)]
        return [d for d in out if d]
    dom = QQ[_a] if ring is QA else GF(2)[_a]
    out = []
    for d in invariant_factors(sm, domain=dom):
        d = sympy.expand(d)
        if d == 0:
            continue
        p = sympy.Poly(d, _a)
        p = p.monic() if ring is QA else p
        coeffs = p.all_coeffs()[::-1]
        out.append(ring._trim(
            (int(c) % 2 if ring is F2A else Fraction(c.p, c.q))
            for c in coeffs))
    return out


class TestSmithForm:
    def test_integer_matrices_match_sympy(self):
        rng = random.Random(7)
        for _ in range(25):
            m, n = rng.randint(1, 5), rng.randint(1, 5)
            mat = rand_int_matrix(rng, m, n)
            snf, _, _ = smith_normal_form(ZZ, mat)
            assert diagonal_invariants(ZZ, snf) == sympy_invariants(ZZ, mat)

    def test_rational_poly_matrices_match_sympy(self):
        rng = random.Random(8)
        for _ in range(12):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            mat = rand_poly_matrix(rng, QA, m, n)
            snf, _, _ = smith_normal_form(QA, mat)
            assert diagonal_invariants(QA, snf) == sympy_invariants(QA, mat)

    def test_f2_poly_matrices_match_sympy(self):
        rng = random.Random(9)
        for _ in range(12):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            mat = rand_poly_matrix(rng, F2A, m, n)
            snf, _, _ = smith_normal_form(F2A, mat)
            assert diagonal_invariants(F2A, snf) == sympy_invariants(F2A, mat)

    def test_divisibility_chain(self):
        rng = random.Random(10)
        for ring in (ZZ, QA, F2A):
            for _ in range(10):
                mat = (rand_int_matrix(rng, 4, 4, -8, 8) if ring is ZZ
                       else rand_poly_matrix(rng, ring, 3, 3))
                snf, _, _ = smith_normal_form(ring, mat)
                divs = diagonal_invariants(ring, snf)
                for x, y in zip(divs, divs[1:]):
                    _, rem = ring.divmod_pair(y, x)
                    assert ring.is_zero(rem)

    def test_transforms_are_inverse(self):
        rng = random.Random(11)
        for ring in (ZZ, QA):
            mat = (rand_int_matrix(rng, 4, 6) if ring is ZZ
                   else rand_poly_matrix(rng, ring, 3, 5))
            _, v, vinv = smith_normal_form(ring, mat, track=True)
            assert mat_mul(ring, v, vinv) == Matrix.identity(mat.n, ring)
            assert mat_mul(ring, vinv, v) == Matrix.identity(mat.n, ring)

    def test_canonical_pivots(self):
        snf, _, _ = smith_normal_form(ZZ, Matrix(2, 2, [[-3, 0], [0, -5]]))
        assert diagonal_invariants(ZZ, snf) == [1, 15]
        mat = Matrix(1, 1, [[QA.coerce(2 * A + 4)]])
        snf, _, _ = smith_normal_form(QA, mat)
        assert diagonal_invariants(QA, snf) == [(Fraction(2), Fraction(1))]


class TestKernel:
    def test_kernel_vectors_annihilate(self):
        rng = random.Random(12)
        for ring in (ZZ, QA, F2A):
            for _ in range(8):
                mat = (rand_int_matrix(rng, 3, 5) if ring is ZZ
                       else rand_poly_matrix(rng, ring, 3, 5, deg=1))
                kb = kernel_basis(ring, mat)
                snf, _, _ = smith_normal_form(ring, mat)
                assert len(kb) == mat.n - len(diagonal_invariants(ring, snf))
                for vec in kb:
                    col = Matrix(mat.n, 1, [[x] for x in vec])
                    prod = mat_mul(ring, mat, col)
                    assert all(ring.is_zero(prod.rows[i][0])
                               for i in range(mat.m))

    def test_zero_row_matrix_kernel_is_everything(self):
        kb = kernel_basis(ZZ, Matrix(0, 3, []))
        assert len(kb) == 3


class TestHomology:
    def test_two_torsion_example(self):
        d_out = Matrix(1, 3, [[0, -1, 0]])
        d_in = Matrix(3, 2, [[0, 1], [0, 0], [2, 0]])
        assert homology(ZZ, d_out, d_in) == (0, [2])

    def test_exact_pair(self):
        d_out = Matrix(1, 3, [[1, 0, 0]])
        d_in = Matrix(3, 2, [[0, 0], [1, 0], [0, 1]])
        assert homology(ZZ, d_out, d_in) == (0, [])

    def test_free_quotient(self):
        d_out = Matrix(1, 3, [[0, 0, 1]])
        d_in = Matrix(3, 1, [[1], [0], [0]])
        assert homology(ZZ, d_out, d_in) == (1, [])

    def test_mixed_free_and_torsion(self):
        d_out = Matrix(1, 3, [[0, 0, 1]])
        d_in = Matrix(3, 1, [[2], [0], [0]])
        assert homology(ZZ, d_out, d_in) == (1, [2])

    def test_nonzero_composite_rejected(self):
        d_out = Matrix(1, 2, [[1, 0]])
        d_in = Matrix(2, 1, [[1], [0]])
        with pytest.raises(ValueError):
            homology(ZZ, d_out, d_in)

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            homology(ZZ, Matrix(1, 3, [[0, 0, 1]]), Matrix(2, 1, [[1], [1]]))

    def test_empty_edges(self):
        assert homology(ZZ, Matrix(2, 0, [[], []]),
                        Matrix(0, 0, [])) == (0, [])
        assert homology(ZZ, Matrix(0, 2, []),
                        Matrix(2, 0, [[], []])) == (2, [])

    def test_f2_slice(self):
        d_out = Matrix(1, 3, [[F2A.coerce(0), F2A.coerce(1), F2A.coerce(0)]])
        d_in = Matrix(3, 2, [[F2A.coerce(0), F2A.coerce(1)],
                             [F2A.coerce(0), F2A.coerce(0)],
                             [F2A.coerce(2), F2A.coerce(0)]])
        assert homology(F2A, d_out, d_in) == (1, [])


class TestRingStrategies:
    def test_ring_by_name(self):
        assert ring_by_name("z") is ZZ
        assert ring_by_name("Q") is QA
        assert ring_by_name("f2") is F2A
        with pytest.raises(ValueError):
            ring_by_name("gf3")

    def test_int_ring_rejects_nonconstant(self):
        with pytest.raises(ValueError):
            ZZ.coerce(A + 1)
        assert ZZ.coerce(Poly(-7)) == -7

    def test_f2_reduction(self):
        assert F2A.coerce(Poly([2, 3, 4])) == (0, 1)
        assert F2A.add((1,), (1,)) == ()

    def test_poly_divmod(self):
        x = QA.coerce(Poly([1, 0, 1]))
        y = QA.coerce(Poly([1, 1]))
        q, r = QA.divmod_pair(x, y)
        assert QA.add(QA.mul(q, y), r) == x
        assert len(r) < len(y)

    def test_format(self):
        assert ZZ.format(6) == 6
        assert QA.format(QA.coerce(A * A + 3)) == "a^2 + 3"
        assert F2A.format(F2A.coerce(Poly([1, 1]))) == "a + 1"
        assert QA.format(()) == "0"
