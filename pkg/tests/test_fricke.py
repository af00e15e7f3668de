import math
import random
from fractions import Fraction

import numpy as np
import pytest

from slchar import mat2
from slchar.fricke import (
    CharacterS04,
    CharacterS12,
    FNCoords,
    S03Verdict,
    S04Verdict,
    S11Verdict,
    S12Verdict,
    defining_identity_residual,
    fn_to_traces,
    h1z2_action,
    member_c02,
    member_c11,
    member_s03,
    member_s04,
    member_s11,
    member_s12,
    pants_curve_count,
    s04_defining_poly,
    s12_relation_polys,
)
from slchar.tracepoly import kappa_value

RND = random.Random(50)


class TestS03:
    def test_slice(self):
        assert member_s03(-3, -3, -3).verdict is S03Verdict.MEMBER_SLICE

    def test_cusped_slice(self):
        res = member_s03(-2, -2, -2)
        assert res.verdict is S03Verdict.MEMBER_SLICE
        assert res.cusps == ("x", "y", "z")

    def test_other_octant(self):
        assert member_s03(-3, 3, 3).verdict is S03Verdict.MEMBER_OTHER_OCTANT
        assert member_s03(3, 3, -3).verdict is S03Verdict.MEMBER_OTHER_OCTANT
        assert member_s03(3, -3, 3).verdict is S03Verdict.MEMBER_OTHER_OCTANT

    def test_nonmember(self):
        assert member_s03(-3, -3, 0).verdict is S03Verdict.NONMEMBER
        assert member_s03(3, 3, 3).verdict is S03Verdict.NONMEMBER

    def test_slice_points_have_hexagons(self):
        from slchar.hypgeom import hexagon_certificate

        for _ in range(50):
            x, y, z = (RND.uniform(-9, -2.2) for _ in range(3))
            assert member_s03(x, y, z).verdict is S03Verdict.MEMBER_SLICE
            cert = hexagon_certificate(x, y, z)
            assert all(p.inner < -1 for p in cert.pairs)


class TestS11:
    def test_boundary_cusp(self):
        res = member_s11(3, 3, 3)
        assert res.verdict is S11Verdict.MEMBER_SLICE
        assert res.cusp and res.kappa == -2

    def test_interior(self):
        res = member_s11(5, 5, 5)
        assert res.verdict is S11Verdict.MEMBER_SLICE
        assert res.kappa == -52

    def test_nonmember(self):
        assert member_s11(3, 3, 10).verdict is S11Verdict.NONMEMBER

    def test_quaternion_orbit_only(self):
        assert member_s11(0, 0, 0).verdict is S11Verdict.MEMBER_ORBIT

    def test_invariant_under_sign_action(self):
        for _ in range(200):
            x, y, z = (RND.uniform(-6, 6) for _ in range(3))
            verdicts = {
                member_s11(*t).verdict is not S11Verdict.NONMEMBER
                for t in h1z2_action(x, y, z)
            }
            assert len(verdicts) == 1


class TestH1Z2:
    def test_displayed_orbit(self):
        assert h1z2_action(1, 2, 3) == (
            (1, 2, 3), (1, -2, -3), (-1, 2, -3), (-1, -2, 3)
        )

    def test_fixed_points(self):
        orbit = set(h1z2_action(1, 0, 0))
        assert len(orbit) == 2  # two coordinates vanish -> half the orbit
        orbit = set(h1z2_action(0, 0, 5))
        assert len(orbit) == 2
        assert len(set(h1z2_action(0, 0, 0))) == 1

    def test_kappa_invariant(self):
        for _ in range(100):
            x, y, z = (RND.uniform(-4, 4) for _ in range(3))
            kappas = {round(kappa_value(*t), 9) for t in h1z2_action(x, y, z)}
            assert len(kappas) == 1


class TestCrossSurfaces:
    def test_c02(self):
        assert member_c02(2, 2, -2)
        assert not member_c02(0, 0, -2)
        assert member_c02(3, 3, -3)
        assert not member_c02(3, 3, 3)  # r > -2

    def test_c11(self):
        assert member_c11(1, 1, 0)
        assert not member_c11(1, 1, 3)
        assert member_c11(0, 0, 0)


class TestS04:
    def test_defining_identity_symbolic(self):
        assert defining_identity_residual().is_zero()

    def test_euler_zero_family_rejected(self):
        # a = b = c = d = 2, y = 2, z = 4 - x lies on the variety but on
        # the wrong hyperbola component for every x < -2
        for x in (-2.5, -3.0, -7.0):
            res = member_s04(CharacterS04(2, 2, 2, 2, x, 2, 4 - x))
            assert res.residual <= 1e-10
            assert res.verdict is S04Verdict.NONMEMBER_WRONG_COMPONENT
            assert res.f_plus < 0 and res.f_minus < 0

    def test_member_witness(self):
        y = -18 - 10 * math.sqrt(5)
        res = member_s04(CharacterS04(3, 3, 3, 3, -3, y, y))
        assert res.verdict is S04Verdict.MEMBER
        assert res.residual <= 1e-10
        assert res.f_plus > 0 and res.f_minus > 0

    def test_member_witness_exact(self):
        # the same point in the quadratic extension: substitute
        # y = z = -18 - 10 s with s^2 = 5 into the defining quartic
        from slchar.polyring import Polynomial, VariableSet

        s_vars = VariableSet(("s",))
        s = Polynomial.variable(s_vars, "s")
        const = lambda c: Polynomial.constant(s_vars, c)
        y = const(-18) - const(10) * s
        mapping = {
            "a": const(3), "b": const(3), "c": const(3), "d": const(3),
            "x": const(-3), "y": y, "z": y,
        }
        image = s04_defining_poly().substitute(mapping, target=s_vars)
        # reduce modulo s^2 - 5
        total = {0: Fraction(0), 1: Fraction(0)}
        for (e,), coeff in image.terms():
            total[e % 2] += coeff * Fraction(5) ** (e // 2)
        assert total[0] == 0 and total[1] == 0

    def test_off_variety(self):
        res = member_s04(CharacterS04(3, 3, 3, 3, -3, 0, 0))
        assert res.verdict is S04Verdict.NONMEMBER_OFF_VARIETY

    def test_range(self):
        res = member_s04(CharacterS04(1, 3, 3, 3, -3, 0, 0))
        assert res.verdict is S04Verdict.NONMEMBER_RANGE
        res = member_s04(CharacterS04(3, 3, 3, 3, 3, 0, 0))
        assert res.verdict is S04Verdict.NONMEMBER_RANGE

    def test_exact_mode(self):
        coords = [Fraction(v) for v in (2, 2, 2, 2, -3, 2, 7)]
        res = member_s04(CharacterS04(*coords))
        assert res.residual == 0
        assert res.verdict is S04Verdict.NONMEMBER_WRONG_COMPONENT

    def test_product_constant(self):
        # on-variety: F+ F- = 4 k_ab k_cd / (x^2 - 4)
        for x in (-2.5, -3.0, -5.0):
            res = member_s04(CharacterS04(2, 2, 2, 2, x, 2, 4 - x))
            expect = 4 * res.kappa_ab * res.kappa_cd / (x * x - 4)
            assert res.f_plus * res.f_minus == pytest.approx(expect, rel=1e-9)
        y = -18 - 10 * math.sqrt(5)
        res = member_s04(CharacterS04(3, 3, 3, 3, -3, y, y))
        expect = 4 * res.kappa_ab * res.kappa_cd / (9 - 4)
        assert res.f_plus * res.f_minus == pytest.approx(expect, rel=1e-9)


def _s12_character_from_matrices(U, X, Y):
    return CharacterS12(
        a=mat2.trace(U @ X @ Y).real,
        b=mat2.trace(U @ Y @ X).real,
        u=mat2.trace(U).real,
        x=mat2.trace(X).real,
        y=mat2.trace(Y).real,
        v=mat2.trace(U @ X).real,
        w=mat2.trace(U @ Y).real,
        z=mat2.trace(X @ Y).real,
    )


def _rotated_hyperbolics(length, seed=None):
    """Three hyperbolic elements with axes through i at angles 0, 60,
    120 degrees: every pair has crossing axes, so the commutator traces
    drop below -2 once the translation lengths are large enough."""
    D = np.diag([math.exp(length / 2), math.exp(-length / 2)]).astype(complex)
    out = []
    for k in range(3):
        t = k * math.pi / 3 / 2
        R = np.array(
            [[math.cos(t), math.sin(t)], [-math.sin(t), math.cos(t)]],
            dtype=complex,
        )
        out.append(R @ D @ mat2.adjoint(R))
    return out


class TestS12:
    def test_member_from_representation(self):
        U, X, Y = _rotated_hyperbolics(3.0)
        ch = _s12_character_from_matrices(U, X, Y)
        res = member_s12(ch)
        assert res.residuals[0] <= 1e-8 and res.residuals[1] <= 1e-8
        assert all(k < -2 for k in res.kappas)
        assert res.verdict is S12Verdict.MEMBER

    def test_off_variety_perturbation(self):
        U, X, Y = _rotated_hyperbolics(3.0)
        ch = _s12_character_from_matrices(U, X, Y)
        bad = CharacterS12(**{**ch.__dict__, "a": ch.a + 0.1})
        assert member_s12(bad).verdict is S12Verdict.NONMEMBER_OFF_VARIETY

    def test_inequalities_fail_for_short_lengths(self):
        # small translation lengths: genuine representation but the
        # commutator traces stay above -2
        U, X, Y = _rotated_hyperbolics(0.4)
        ch = _s12_character_from_matrices(U, X, Y)
        res = member_s12(ch)
        assert res.verdict is S12Verdict.NONMEMBER_INEQUALITIES
        assert res.residuals[0] <= 1e-8 and res.residuals[1] <= 1e-8

    def test_relation_polys_vanish_on_representations(self):
        rel1, rel2 = s12_relation_polys()
        for length in (1.0, 2.0, 3.5):
            U, X, Y = _rotated_hyperbolics(length)
            ch = _s12_character_from_matrices(U, X, Y)
            point = {
                "a": ch.a, "b": ch.b, "u": ch.u, "v": ch.v,
                "w": ch.w, "x": ch.x, "y": ch.y, "z": ch.z,
            }
            assert abs(rel1.evaluate(point)) <= 1e-8
            assert abs(rel2.evaluate(point)) <= 1e-8


class TestFenchelNielsen:
    def test_x_is_length_trace(self):
        for _ in range(50):
            l = RND.uniform(0.1, 5)
            res = fn_to_traces(FNCoords(l=l, tau=RND.uniform(-4, 4), b=RND.uniform(0, 4)))
            assert res.x == 2 * math.cosh(l / 2)

    def test_cusped_example(self):
        res = fn_to_traces(FNCoords(l=2 * math.acosh(1.5), tau=0.0, b=0.0))
        assert res.x == pytest.approx(3, abs=1e-12)
        assert res.kappa == pytest.approx(-2, abs=1e-12)

    def test_boundary_constraint(self):
        for _ in range(100):
            coords = FNCoords(
                l=RND.uniform(0.1, 5), tau=RND.uniform(-4, 4), b=RND.uniform(0, 4)
            )
            res = fn_to_traces(coords)
            assert abs(res.kappa + 2 * math.cosh(coords.b / 2)) <= 1e-9
            assert member_s11(*res.traces()).verdict is S11Verdict.MEMBER_SLICE

    def test_twist_shift_pattern(self):
        l, b = 1.7, 0.9
        tau = 0.6
        res1 = fn_to_traces(FNCoords(l=l, tau=tau, b=b))
        res2 = fn_to_traces(FNCoords(l=l, tau=tau - l, b=b))
        # y carries cosh(tau/2), z carries cosh((tau+l)/2)
        assert res2.z == pytest.approx(res1.y, rel=1e-12)

    def test_metadata_flags_uncorrected_form(self):
        res = fn_to_traces(FNCoords(l=2.0, tau=0.5, b=1.0))
        assert res.metadata["closed_form_y_matches"]
        assert not res.metadata["uncorrected_matches"]

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            FNCoords(l=0, tau=0)
        with pytest.raises(ValueError):
            FNCoords(l=1, tau=0, b=-1)


class TestPantsCurves:
    def test_values(self):
        assert pants_curve_count(1, 1) == 1
        assert pants_curve_count(0, 4) == 1
        assert pants_curve_count(2, 0) == 3

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            pants_curve_count(-1, 2)
