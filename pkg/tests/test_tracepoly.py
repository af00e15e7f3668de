import random
from fractions import Fraction

import pytest

from slchar import mat2
from slchar.polyring import F2_VARS, F3_VARS, Polynomial, reduce_mod_phi
from slchar.sampling import random_reduced_word, random_unimodular
from slchar.tracepoly import (
    TraceExpression,
    evaluate_at_character,
    generator_count,
    kappa,
    phi_polynomial,
    quadruple_trace_check,
    sum_product_relation_polys,
    trace_poly,
    trace_poly_f2,
    trace_poly_f3,
)
from slchar.words import Word, parse_word

RND = random.Random(20)


def P(text_terms):
    """Build a rank-2 polynomial from {(ex,ey,ez): coeff}."""
    return Polynomial(F2_VARS, {e: Fraction(c) for e, c in text_terms.items()})


class TestRank2BaseValues:
    def test_commutator(self):
        expected = P({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1,
                      (1, 1, 1): -1, (0, 0, 0): -2})
        assert trace_poly_f2(parse_word("X Y x y", 2)) == expected

    def test_xy_inverse(self):
        assert trace_poly_f2(parse_word("X y", 2)) == P({(1, 1, 0): 1, (0, 0, 1): -1})

    def test_xyxinvy(self):
        expected = P({(0, 0, 0): 2, (2, 0, 0): -1, (0, 0, 2): -1, (1, 1, 1): 1})
        assert trace_poly_f2(parse_word("X Y x Y", 2)) == expected

    def test_square(self):
        assert trace_poly_f2(parse_word("X X", 2)) == P({(2, 0, 0): 1, (0, 0, 0): -2})

    def test_identity(self):
        assert trace_poly_f2(Word(2, ())) == P({(0, 0, 0): 2})

    def test_triple_basic(self):
        # tr(eta xi eta) = yz - x and tr(zeta xi^-1) relatives
        assert trace_poly_f2(parse_word("Y X Y", 2)) == P(
            {(0, 1, 1): 1, (1, 0, 0): -1}
        )

    def test_kappa(self):
        assert kappa() == trace_poly_f2(Word(2, (1, 2, -1, -2)))
        assert kappa().evaluate({"x": 0, "y": 0, "z": 0}) == -2
        assert kappa().evaluate({"x": 2, "y": 2, "z": 2}) == 2
        assert kappa().evaluate({"x": 3, "y": 3, "z": 3}) == -2


class TestRank3BaseValues:
    def test_cyclic_rotation(self):
        assert trace_poly_f3(parse_word("X2 X3 X1", 3)) == Polynomial.variable(
            F3_VARS, "x123"
        )

    def test_reversed_triple(self):
        got = trace_poly_f3(parse_word("X1 X3 X2", 3))
        fsum, _ = sum_product_relation_polys()
        assert got == fsum - Polynomial.variable(F3_VARS, "x123")

    def test_pair_variables(self):
        assert trace_poly_f3(parse_word("X3 X2", 3)) == Polynomial.variable(
            F3_VARS, "x23"
        )


class TestInvariance:
    def test_conjugation(self):
        for _ in range(150):
            w = random_reduced_word(RND, 2, 10)
            g = random_reduced_word(RND, 2, 4)
            assert trace_poly_f2(w) == trace_poly_f2(g * w * g.inverse())

    def test_inversion(self):
        for _ in range(150):
            w = random_reduced_word(RND, 2, 10)
            assert trace_poly_f2(w) == trace_poly_f2(w.inverse())

    def test_rank3_conjugation(self):
        for _ in range(60):
            w = random_reduced_word(RND, 3, 7)
            g = random_reduced_word(RND, 3, 3)
            assert trace_poly_f3(w) == trace_poly_f3(g * w * g.inverse())

    def test_canonical_mod_phi(self):
        for _ in range(60):
            w = random_reduced_word(RND, 3, 8)
            p = trace_poly_f3(w)
            assert p.degree_in("x123") <= 1
            assert reduce_mod_phi(p) == p


class TestOracle:
    def test_rank2(self):
        for _ in range(300):
            w = random_reduced_word(RND, 2, 12)
            ms = [random_unimodular(RND) for _ in range(2)]
            val = evaluate_at_character(trace_poly_f2(w), ms)
            tr = mat2.trace(mat2.evaluate_word(w, ms))
            assert abs(val - tr) <= 1e-8 * (1 + abs(tr))

    def test_rank3(self):
        for _ in range(150):
            w = random_reduced_word(RND, 3, 8)
            ms = [random_unimodular(RND) for _ in range(3)]
            val = evaluate_at_character(trace_poly_f3(w), ms)
            tr = mat2.trace(mat2.evaluate_word(w, ms))
            assert abs(val - tr) <= 1e-8 * (1 + abs(tr))

    def test_rank1(self):
        w = Word(1, (1,) * 5)
        m = random_unimodular(RND)
        val = evaluate_at_character(trace_poly(w), [m])
        assert abs(val - mat2.trace(mat2.evaluate_word(w, [m]))) <= 1e-9


class TestPhiAndRelations:
    def test_phi_monic_quadratic(self):
        phi = phi_polynomial()
        assert phi.degree_in("x123") == 2
        fsum, fprod = sum_product_relation_polys()
        x123 = Polynomial.variable(F3_VARS, "x123")
        assert phi == x123 * x123 - fsum * x123 + fprod

    def test_phi_at_trivial_rep(self):
        point = {n: 2 for n in F3_VARS}
        assert phi_polynomial().evaluate(point) == 0

    def test_phi_vanishes_on_characters(self):
        for _ in range(100):
            ms = [random_unimodular(RND) for _ in range(3)]
            val = evaluate_at_character(phi_polynomial(), ms)
            assert abs(val) <= 1e-8

    def test_sum_product_on_characters(self):
        fsum, fprod = sum_product_relation_polys()
        for _ in range(100):
            ms = [random_unimodular(RND) for _ in range(3)]
            t123 = mat2.trace(ms[0] @ ms[1] @ ms[2])
            t132 = mat2.trace(ms[0] @ ms[2] @ ms[1])
            s = evaluate_at_character(fsum, ms)
            p = evaluate_at_character(fprod, ms)
            assert abs(t123 + t132 - s) <= 1e-8 * (1 + abs(s))
            assert abs(t123 * t132 - p) <= 1e-8 * (1 + abs(p))

    def test_trivial_rep_roots(self):
        fsum, fprod = sum_product_relation_polys()
        point = {n: 2 for n in F3_VARS}
        assert fsum.evaluate(point) == 4
        assert fprod.evaluate(point) == 4  # roots of t^2 - 4t + 4: (2, 2)

    def test_discriminant_is_branch_locus(self):
        fsum, fprod = sum_product_relation_polys()
        disc = fsum * fsum - fprod * 4
        # on the branch locus the two triple traces coincide
        for _ in range(50):
            ms = [random_unimodular(RND) for _ in range(3)]
            t123 = mat2.trace(ms[0] @ ms[1] @ ms[2])
            t132 = mat2.trace(ms[0] @ ms[2] @ ms[1])
            d = evaluate_at_character(disc, ms)
            assert abs(d - (t123 - t132) ** 2) <= 1e-7 * (1 + abs(d))


class TestQuadrupleTrace:
    def test_random_tuples(self):
        for _ in range(100):
            ms = [random_unimodular(RND) for _ in range(4)]
            assert quadruple_trace_check(ms) <= 1e-8

    def test_identity_tuple(self):
        assert quadruple_trace_check([mat2.I2] * 4) == 0

    def test_degenerate_fourth(self):
        for _ in range(20):
            ms = [random_unimodular(RND) for _ in range(3)] + [mat2.I2]
            assert quadruple_trace_check(ms) <= 1e-10

    def test_arity(self):
        with pytest.raises(ValueError):
            quadruple_trace_check([mat2.I2] * 3)


class TestGeneratorCount:
    def test_values(self):
        assert generator_count(1) == 1
        assert generator_count(2) == 3
        assert generator_count(3) == 7
        assert generator_count(4) == 14

    def test_matches_binomials(self):
        from math import comb

        for n in range(1, 12):
            assert generator_count(n) == n + comb(n, 2) + comb(n, 3)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            generator_count(0)


class TestTraceExpression:
    def test_linearity(self):
        expr = TraceExpression(2)
        w1 = parse_word("X Y", 2)
        w2 = parse_word("X y", 2)
        expr.add(w1, Fraction(1, 2)).add(w2, Fraction(1, 2))
        # (tr(xy) + tr(xy^-1))/2 = xy/2
        expected = trace_poly_f2(w1).scale(Fraction(1, 2)) + trace_poly_f2(
            w2
        ).scale(Fraction(1, 2))
        assert expr.resolve() == expected

    def test_cancellation(self):
        expr = TraceExpression(2)
        w = parse_word("X Y", 2)
        expr.add(w).add(parse_word("Y X", 2), -1)  # same cyclic class
        assert expr.resolve().is_zero()
