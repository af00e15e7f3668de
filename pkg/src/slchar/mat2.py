"""Complex 2x2 (and 3x3) matrix kernel.

All explicit matrix formulas live here, together with the numeric
oracle ``evaluate_word`` for trace polynomials.  Matrices are plain
2x2 (or 3x3) complex numpy arrays; unimodular constructors check
``|det - 1| <= 1e-12``.

Sign conventions: several formulas only determine a matrix up to a
global sign (the underlying statements are projective).  ``sign_normalize`` picks
the representative whose first nonzero entry, scanned row-major, has
positive real part (positive imaginary part on ties), which makes
outputs reproducible.
"""

from __future__ import annotations

import cmath
import json

import numpy as np

from .words import Word

__all__ = [
    "GeometryError",
    "ReduciblePairError",
    "NotSemisimpleError",
    "NotHyperbolicError",
    "mat2",
    "I2",
    "trace",
    "det",
    "adjoint",
    "inverse",
    "is_unimodular",
    "evaluate_word",
    "lie_product",
    "normal_form_pair",
    "conjugating_involution",
    "traceless_projection",
    "involution_of",
    "hat",
    "sym2",
    "glide_reflection_sqrt",
    "sign_normalize",
    "matrix_to_json",
    "matrix_from_json",
    "format_complex",
    "TOL_ALGEBRAIC",
    "TOL_CONJUGACY",
]

#: Default tolerance for algebraic identities on well-conditioned inputs.
TOL_ALGEBRAIC = 1e-12
#: Default tolerance for conjugacy / commutation assertions.
TOL_CONJUGACY = 1e-9


class GeometryError(ValueError):
    """A matrix input violates a geometric precondition."""


class ReduciblePairError(GeometryError):
    """The pair generates a reducible representation."""


class NotSemisimpleError(GeometryError):
    """Parabolic or central input where a semisimple element is required."""


class NotHyperbolicError(GeometryError):
    """Real trace in [-2, 2] where a hyperbolic element is required."""


def mat2(a, b, c, d) -> np.ndarray:
    return np.array([[a, b], [c, d]], dtype=complex)


def principal_sqrt(w: complex) -> complex:
    """Principal complex square root with a signed-zero guard: an
    imaginary part of -0.0 would silently select the lower side of the
    branch cut, so exact zeros are normalized to +0.0 first."""
    w = complex(w)
    if w.imag == 0:
        w = complex(w.real, 0.0)
    return cmath.sqrt(w)


I2 = np.eye(2, dtype=complex)


def trace(m: np.ndarray) -> complex:
    return m[0, 0] + m[1, 1]


def det(m: np.ndarray) -> complex:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def adjoint(m: np.ndarray) -> np.ndarray:
    """Adjugate: ``m @ adjoint(m) == det(m) * I``."""
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex)


def is_unimodular(m: np.ndarray, tol: float = TOL_ALGEBRAIC) -> bool:
    return abs(det(m) - 1) <= tol


def inverse(m: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Inverse by the cofactor formula; requires unimodularity."""
    if not is_unimodular(m, tol):
        raise GeometryError(f"matrix is not unimodular: det = {det(m)}")
    return adjoint(m)


def evaluate_word(w: Word, assignment) -> np.ndarray:
    """The product w(xi_1, ..., xi_n) for unimodular matrices xi_i."""
    mats = list(assignment)
    if len(mats) != w.rank:
        raise ValueError(
            f"assignment has {len(mats)} matrices for a rank-{w.rank} word"
        )
    invs = [adjoint(m) for m in mats]
    out = I2.copy()
    for g in w.letters:
        out = out @ (mats[g - 1] if g > 0 else invs[-g - 1])
    return out


def lie_product(xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
    """xi @ eta - eta @ xi; always traceless."""
    return xi @ eta - eta @ xi


def sign_normalize(m: np.ndarray, tol: float = 1e-13) -> np.ndarray:
    """Of m and -m, return the one whose first nonzero entry (row-major)
    has positive real part, ties broken by positive imaginary part."""
    scale = max(1.0, float(np.abs(m).max()))
    for v in m.reshape(-1):
        if abs(v) > tol * scale:
            if v.real > tol * scale or (abs(v.real) <= tol * scale and v.imag > 0):
                return m
            return -m
    return m


def normal_form_pair(x: complex, y: complex, z: complex) -> tuple[np.ndarray, np.ndarray]:
    """A unimodular pair with traces (x, y) and product trace z.

    xi = [[x, -1], [1, 0]], eta = [[0, 1/f], [-f, y]] where f + 1/f = z
    and f = (z + sqrt(z^2 - 4))/2 with the principal square root.
    z = +-2 gives f = +-1, which is still valid.
    """
    x, y, z = complex(x), complex(y), complex(z)
    f = (z + principal_sqrt(z * z - 4)) / 2
    if f == 0:  # unreachable for finite z, kept as a guard
        raise GeometryError("degenerate branch value")
    xi = mat2(x, -1, 1, 0)
    eta = mat2(0, 1 / f, -f, y)
    return xi, eta


def conjugating_involution(
    xi: np.ndarray, eta: np.ndarray, tol: float = TOL_ALGEBRAIC
) -> np.ndarray:
    """The unimodular h with h^2 = -I conjugating (xi, eta) to (xi^-1, eta^-1).

    h is the Lie product scaled into SL(2); it exists exactly when the
    pair is irreducible (det of the Lie product nonzero).
    """
    L = lie_product(xi, eta)
    dL = det(L)
    if abs(dL) <= tol:
        raise ReduciblePairError(
            "pair is reducible (Lie product has zero determinant)"
        )
    return sign_normalize(L / principal_sqrt(dL))


def traceless_projection(xi: np.ndarray) -> np.ndarray:
    """xi - (tr(xi)/2) I."""
    return xi - (trace(xi) / 2) * I2


def involution_of(xi: np.ndarray, tol: float = TOL_CONJUGACY) -> np.ndarray:
    """The involution commuting with a semisimple xi.

    Normalizes the traceless projection to determinant one; rejects
    parabolic and central inputs (tr = +-2).
    """
    t = trace(xi)
    if abs(t * t - 4) <= tol:
        raise NotSemisimpleError(f"parabolic or central input: tr = {t}")
    h = traceless_projection(xi) * (2 / principal_sqrt(4 - t * t))
    return sign_normalize(h)


def hat(a: np.ndarray, tol: float = TOL_CONJUGACY) -> np.ndarray:
    """Reflection vector of the invariant axis of a real hyperbolic matrix.

    hat(A) = (2A - tr(A) I)/sqrt(tr(A)^2 - 4), normalized to the
    de Sitter locus: tr = 0 and (1/2) tr(hat^2) = 1, i.e. det = -1.
    Consequently hat(A)^2 = I and hat(A^-1) = -hat(A).
    """
    t = trace(a)
    if abs(t.imag) > tol or not np.allclose(a.imag, 0, atol=tol):
        raise GeometryError("hat() requires a real matrix")
    tr_ = t.real
    if tr_ * tr_ <= 4 + tol:
        raise NotHyperbolicError(f"matrix is not hyperbolic: tr = {tr_}")
    h = (2 * a.real - tr_ * np.eye(2)) / np.sqrt(tr_ * tr_ - 4)
    return h.astype(complex)


def sym2(xi: np.ndarray) -> np.ndarray:
    """The induced map on the symmetric square, basis (e.e, e.f, f.f).

    tr(sym2(xi)) = tr(xi)^2 - 1 for unimodular xi, and sym2 is
    multiplicative: sym2(xi @ eta) = sym2(xi) @ sym2(eta).
    """
    a, b = xi[0, 0], xi[0, 1]
    c, d = xi[1, 0], xi[1, 1]
    return np.array(
        [
            [a * a, a * b, b * b],
            [2 * a * c, a * d + b * c, 2 * b * d],
            [c * c, c * d, d * d],
        ],
        dtype=complex,
    )


def glide_reflection_sqrt(xi: np.ndarray, tol: float = TOL_CONJUGACY) -> np.ndarray:
    """The glide reflection g = (xi - I)/sqrt(tr(xi) - 2) with g^2 = xi.

    Defined for real xi with tr(xi) > 2; det g = -1.
    """
    t = trace(xi)
    if abs(t.imag) > tol or not np.allclose(xi.imag, 0, atol=tol):
        raise GeometryError("glide_reflection_sqrt() requires a real matrix")
    if t.real <= 2 + tol:
        raise NotHyperbolicError(f"trace must exceed 2, got {t.real}")
    return (xi - I2) / np.sqrt(t.real - 2)


# -- JSON wire format ----------------------------------------------------------


def format_complex(v: complex) -> str:
    """``a+bi`` with 17 significant digits."""
    re = f"{v.real:.17g}"
    im = f"{abs(v.imag):.17g}"
    sign = "+" if v.imag >= 0 else "-"
    return f"{re}{sign}{im}i"


def matrix_to_json(m: np.ndarray) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"re": m.real.tolist(), "im": m.imag.tolist()}


def matrix_from_json(data) -> np.ndarray:
    if isinstance(data, str):
        data = json.loads(data)
    re = np.array(data["re"], dtype=float)
    im = np.array(data.get("im", np.zeros_like(re).tolist()), dtype=float)
    return re + 1j * im
