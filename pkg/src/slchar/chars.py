"""Character maps and inverse constructions.

Characters of pairs and triples, irreducibility tests, the real
character classification, and the explicit reconstruction of a
rank-3 representation from six traces and a branch choice.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

import numpy as np

from . import mat2
from .mat2 import GeometryError, normal_form_pair, principal_sqrt
from .tracepoly import kappa_value

__all__ = [
    "CharacterF2",
    "CharacterF3",
    "RealCharClass",
    "IrreducibilityReport",
    "character_of_pair",
    "character_of_triple",
    "is_irreducible",
    "irreducibility_witnesses",
    "classify_real_character",
    "axes_cross",
    "triple_trace_roots",
    "construct_triple",
    "hermitian_invariant_form",
]

#: Tolerance for equality tests against 2 (irreducibility) in float mode.
IRREDUCIBILITY_TOL = 1e-9


@dataclass(frozen=True)
class CharacterF2:
    x: complex
    y: complex
    z: complex

    def as_tuple(self):
        return (self.x, self.y, self.z)

    def kappa(self) -> complex:
        return kappa_value(self.x, self.y, self.z)

    def to_json(self) -> dict:
        return {"x": mat2.format_complex(complex(self.x)),
                "y": mat2.format_complex(complex(self.y)),
                "z": mat2.format_complex(complex(self.z))}


@dataclass(frozen=True)
class CharacterF3:
    t1: complex
    t2: complex
    t3: complex
    t12: complex
    t13: complex
    t23: complex
    t123: complex
    t132: complex

    def as_tuple(self):
        return (self.t1, self.t2, self.t3, self.t12, self.t13, self.t23,
                self.t123, self.t132)

    def sum_product_residuals(self) -> tuple[float, float]:
        """Absolute residuals of the Sum and Product relations."""
        t1, t2, t3, t12, t13, t23, t123, t132 = self.as_tuple()
        fsum = t12 * t3 + t13 * t2 + t23 * t1 - t1 * t2 * t3
        fprod = (
            t1 * t1 + t2 * t2 + t3 * t3
            + t12 * t12 + t23 * t23 + t13 * t13
            - (t1 * t2 * t12 + t2 * t3 * t23 + t3 * t1 * t13)
            + t12 * t23 * t13 - 4
        )
        return abs(t123 + t132 - fsum), abs(t123 * t132 - fprod)

    def is_valid(self, tol: float = 1e-9) -> bool:
        r1, r2 = self.sum_product_residuals()
        return r1 <= tol and r2 <= tol

    def to_json(self) -> dict:
        names = ("t1", "t2", "t3", "t12", "t13", "t23", "t123", "t132")
        return {n: mat2.format_complex(complex(v))
                for n, v in zip(names, self.as_tuple())}


class RealCharClass(enum.Enum):
    SU2_FIXED_POINT = "SU2-fixed-point"
    SL2R_PLANE = "SL2R-plane"
    REDUCIBLE_CENTRAL = "Reducible-central"
    REDUCIBLE_SO2 = "Reducible-SO2"
    REDUCIBLE_SO11 = "Reducible-SO11"
    REDUCIBLE_PARABOLIC_FIXED = "Reducible-parabolic-fixed"
    REDUCIBLE_UNDETERMINED = "Reducible-undetermined"


def character_of_pair(xi: np.ndarray, eta: np.ndarray) -> CharacterF2:
    return CharacterF2(mat2.trace(xi), mat2.trace(eta), mat2.trace(xi @ eta))


def character_of_triple(m1, m2, m3) -> CharacterF3:
    return CharacterF3(
        t1=mat2.trace(m1),
        t2=mat2.trace(m2),
        t3=mat2.trace(m3),
        t12=mat2.trace(m1 @ m2),
        t13=mat2.trace(m1 @ m3),
        t23=mat2.trace(m2 @ m3),
        t123=mat2.trace(m1 @ m2 @ m3),
        t132=mat2.trace(m1 @ m3 @ m2),
    )


def is_irreducible(c: CharacterF2, tol: float = IRREDUCIBILITY_TOL) -> bool:
    """kappa(x, y, z) != 2; exact when the inputs are exact numbers."""
    k = c.kappa()
    if isinstance(k, complex):
        return abs(k - 2) > tol
    return k != 2


@dataclass(frozen=True)
class IrreducibilityReport:
    kappa: complex
    commutator_trace: complex
    lie_determinant: complex
    basis_determinant: complex
    irreducible: bool

    def witnesses_agree(self, tol: float = 1e-8) -> bool:
        scale = 1 + abs(self.kappa)
        return (
            abs(self.commutator_trace - self.kappa) <= tol * scale
            and abs(self.lie_determinant - (2 - self.kappa)) <= tol * scale
            and abs(self.basis_determinant - (2 - self.kappa)) <= tol * scale
        )


def irreducibility_witnesses(xi: np.ndarray, eta: np.ndarray) -> IrreducibilityReport:
    """Evaluate all equivalent irreducibility criteria on a pair.

    The witnesses: tr[xi,eta] (must differ from 2), det of the Lie
    product (must be nonzero, equals 2 - kappa), and the 4x4
    determinant of {I, xi, eta, xi eta} in the elementary-matrix
    basis (also equals 2 - kappa).
    """
    c = character_of_pair(xi, eta)
    k = kappa_value(*c.as_tuple())
    comm = mat2.trace(
        xi @ eta @ mat2.adjoint(xi) @ mat2.adjoint(eta)
    )
    dlie = mat2.det(mat2.lie_product(xi, eta))
    basis = np.column_stack(
        [m.reshape(-1) for m in (mat2.I2, xi, eta, xi @ eta)]
    )
    bdet = complex(np.linalg.det(basis))
    report = IrreducibilityReport(
        kappa=k,
        commutator_trace=comm,
        lie_determinant=dlie,
        basis_determinant=bdet,
        irreducible=abs(k - 2) > IRREDUCIBILITY_TOL,
    )
    if not report.witnesses_agree():
        raise AssertionError(f"irreducibility witnesses disagree: {report}")
    return report


def classify_real_character(x: float, y: float, z: float,
                            tol: float = IRREDUCIBILITY_TOL) -> RealCharClass:
    """Case split for real (x, y, z).

    kappa < 2 with all traces in [-2, 2] fixes a point of hyperbolic
    3-space (an SU(2) character); any other kappa != 2 preserves a
    plane (an SL(2,R) character).  kappa = 2 is reducible; only the
    SO(2)/SO(1,1) subcases are determined by the character alone, and
    the all-boundary case stays undetermined (central and
    parabolic-fixed representations share those traces).
    """
    x, y, z = float(x), float(y), float(z)
    k = kappa_value(x, y, z)
    in_cube = all(abs(t) <= 2 + tol for t in (x, y, z))
    if abs(k - 2) > tol:
        if k < 2 and in_cube:
            return RealCharClass.SU2_FIXED_POINT
        return RealCharClass.SL2R_PLANE
    all_edge = all(abs(abs(t) - 2) <= tol for t in (x, y, z))
    outside = all(abs(t) >= 2 - tol for t in (x, y, z))
    if all_edge:
        return RealCharClass.REDUCIBLE_UNDETERMINED
    if in_cube:
        return RealCharClass.REDUCIBLE_SO2
    if outside:
        return RealCharClass.REDUCIBLE_SO11
    return RealCharClass.REDUCIBLE_UNDETERMINED


def axes_cross(x: float, y: float, z: float) -> bool:
    """For a real character with kappa <= -2, other than the quaternion
    character (0,0,0): the generators act as hyperbolic elements of
    SL(2,R) with crossing axes.

    Verified constructively: build a real pair with this character and
    check that the Lie product has positive determinant.
    """
    x, y, z = float(x), float(y), float(z)
    k = kappa_value(x, y, z)
    if k > -2 + 1e-12:
        raise GeometryError(f"axes_cross requires kappa <= -2, got {k}")
    if abs(x) < 1e-12 and abs(y) < 1e-12 and abs(z) < 1e-12:
        raise GeometryError("the quaternion character (0,0,0) is excluded")
    from .hypgeom import real_normal_form_pair

    X, Y = real_normal_form_pair(x, y, z)
    dlie = mat2.det(mat2.lie_product(X, Y))
    return dlie.real > 0


def triple_trace_roots(t1, t2, t3, t12, t13, t23) -> tuple[complex, complex]:
    """The two roots of t^2 - f_Sigma t + f_Pi at the six given traces.

    The first root is the one with larger real part, ties broken by
    larger imaginary part (the deterministic sheet labeling of the
    double cover).
    """
    fsum = t12 * t3 + t13 * t2 + t23 * t1 - t1 * t2 * t3
    fprod = (
        t1 * t1 + t2 * t2 + t3 * t3
        + t12 * t12 + t23 * t23 + t13 * t13
        - (t1 * t2 * t12 + t2 * t3 * t23 + t3 * t1 * t13)
        + t12 * t23 * t13 - 4
    )
    disc = principal_sqrt(fsum * fsum - 4 * fprod)
    r1 = (fsum + disc) / 2
    r2 = (fsum - disc) / 2
    if (r1.real, r1.imag) >= (r2.real, r2.imag):
        return r1, r2
    return r2, r1


def _solve_quadratic_smallest(a: complex, b: complex, c: complex) -> list[complex]:
    """Roots of a s^2 + b s + c = 0, sorted by |s| then by (re, im)."""
    if abs(a) < 1e-14:
        if abs(b) < 1e-14:
            raise GeometryError("degenerate determinant equation")
        return [-c / b]
    disc = principal_sqrt(b * b - 4 * a * c)
    roots = [(-b + disc) / (2 * a), (-b - disc) / (2 * a)]
    roots.sort(key=lambda s: (abs(s), s.real, s.imag))
    return roots


def construct_triple(
    t1, t2, t3, t12, t23, t13, branch: str = "+", tol: float = 1e-8
):
    """A unimodular triple realizing six prescribed traces.

    When (t1, t2, t12) is an irreducible rank-2 character the third
    matrix is found on the affine line omega_0 + s Lie(xi1, xi2) by
    solving det = 1, and the branch sign selects which root of the
    triple-trace quadratic tr(xi1 xi2 xi3) realizes ('+' is the root
    with larger real part).  In the reducible case the triple is
    assembled from explicit upper-triangular matrices and the branch
    choice may be unrealizable (the two sheets collide).
    """
    if branch not in ("+", "-"):
        raise ValueError(f"branch must be '+' or '-', got {branch!r}")
    t1, t2, t3 = complex(t1), complex(t2), complex(t3)
    t12, t23, t13 = complex(t12), complex(t23), complex(t13)
    k = kappa_value(t1, t2, t12)
    if abs(k - 2) > IRREDUCIBILITY_TOL:
        xi1, xi2 = normal_form_pair(t1, t2, t12)
        # affine system: tr(w) = t3, tr(xi2 w) = t23, tr(xi1 w) = t13
        rows = []
        for m in (mat2.I2, xi2, xi1):
            # tr(m @ w) as a linear functional of w = [[w00,w01],[w10,w11]]
            rows.append([m[0, 0], m[1, 0], m[0, 1], m[1, 1]])
        rhs = np.array([t3, t23, t13], dtype=complex)
        w0, *_ = np.linalg.lstsq(np.array(rows, dtype=complex), rhs, rcond=None)
        omega0 = w0.reshape(2, 2)
        L = mat2.lie_product(xi1, xi2)
        # det(omega0 + s L) = det(omega0) + s (tr(omega0)tr(L) - tr(omega0 L)) + s^2 det(L)
        a = mat2.det(L)
        b = mat2.trace(omega0) * mat2.trace(L) - mat2.trace(omega0 @ L)
        c = mat2.det(omega0) - 1
        roots = _solve_quadratic_smallest(a, b, c)
        want = triple_trace_roots(t1, t2, t3, t12, t13, t23)[0 if branch == "+" else 1]
        candidates = [omega0 + s * L for s in roots]
        candidates.sort(
            key=lambda m: abs(mat2.trace(xi1 @ xi2 @ m) - want)
        )
        return xi1, xi2, candidates[0]

    # reducible base pair: explicit upper-triangular forms
    a1 = (t1 + principal_sqrt(t1 * t1 - 4)) / 2
    a2 = (t2 + principal_sqrt(t2 * t2 - 4)) / 2
    xi3 = mat2.mat2(t3, -1, 1, 0)
    both_plus = abs(a1 * a2 + 1 / (a1 * a2) - t12) <= abs(a1 / a2 + a2 / a1 - t12)
    if both_plus:
        xi1 = mat2.mat2(a1, t13 - a1 * t3, 0, 1 / a1)
    else:
        xi1 = mat2.mat2(1 / a1, t13 - t3 / a1, 0, a1)
    xi2 = mat2.mat2(a2, t23 - a2 * t3, 0, 1 / a2)
    return xi1, xi2, xi3


def hermitian_invariant_form(x: float, y: float, z: float) -> np.ndarray:
    """The Hermitian matrix preserved by the normal-form pair of a real
    character with |z| <= 2; its determinant equals 2 - kappa(x,y,z),
    so the form is definite exactly on the SU(2) characters.
    """
    x, y, z = float(x), float(y), float(z)
    if abs(z) > 2:
        raise GeometryError(f"requires |z| <= 2, got z = {z}")
    sin_t = np.sqrt(max(0.0, 1 - (z / 2) ** 2))
    off = -x * sin_t + 1j * (y - x * z / 2)
    return np.array([[2 * sin_t, off], [np.conj(off), 2 * sin_t]], dtype=complex)
