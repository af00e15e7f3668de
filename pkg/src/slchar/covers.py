"""Character-ring homomorphisms induced by orientable double covers.

Each map is a table of image polynomials, derived here from the
word-level monomorphism of fundamental groups by running the trace
engine on the image words.  That construction makes the defining
relations of the source ring vanish identically after substitution,
which ``symbolic_check`` verifies, and ties the tables to the matrix
oracle through the same engine.

Maps provided:

* ``embed_r2_in_r3``   - the rank-3 ring of an orientable double cover
  restricted along Y1 = X1^2, Y2 = X1^-1 X2^-1, Y3 = X2^2;
* ``deck_involution_f3`` - the deck transformation of that cover,
  an involution of the rank-3 ring (modulo the hypersurface ideal);
* ``cover_c02_to_s04`` - four-holed sphere over the two-holed
  cross-surface;
* ``cover_c11_to_s12`` - two-holed torus over the one-holed Klein
  bottle.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .chars import CharacterF3, triple_trace_roots
from .polyring import (
    F2_VARS,
    F3_VARS,
    S04_VARS,
    S12_VARS,
    Polynomial,
    VariableSet,
    reduce_mod_phi,
)
from .tracepoly import trace_poly
from .words import Word

__all__ = [
    "RingMap",
    "embed_r2_in_r3",
    "deck_involution_f3",
    "deck_ring_map",
    "cover_c02_to_s04",
    "cover_c11_to_s12",
    "symbolic_check",
]

#: Base-ring variable names used by the cross-surface covers.
C02_VARS = VariableSet(("u", "v", "w"))
C11_VARS = VariableSet(("p", "q", "r"))


@dataclass(frozen=True)
class RingMap:
    """A character-ring homomorphism as a table of image polynomials."""

    name: str
    source: VariableSet
    target: VariableSet
    images: Mapping[str, Polynomial]

    def apply_poly(self, p: Polynomial) -> Polynomial:
        """Push a polynomial over the source variables through the map."""
        if p.variables != self.source:
            raise ValueError(f"{self.name}: expected a polynomial over {self.source}")
        out = p.substitute(dict(self.images), target=self.target)
        if self.target == F3_VARS:
            out = reduce_mod_phi(out)
        return out

    def apply_point(self, point: Mapping[str, complex]) -> dict[str, complex]:
        """Evaluate every image at a numeric point of the target ring."""
        return {n: img.evaluate(point) for n, img in self.images.items()}

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "source": list(self.source.names),
            "target": list(self.target.names),
            "images": {n: img.to_text() for n, img in self.images.items()},
        }


def _word_trace(letters: tuple[int, ...], rank: int) -> Polynomial:
    return trace_poly(Word(rank, letters))


@lru_cache(maxsize=None)
def embed_r2_in_r3() -> RingMap:
    """Rank-3 coordinates of (X1^2, X1^-1 X2^-1, X2^2) as polynomials in
    the rank-2 coordinates (x1, x2, x12) of (X1, X2)."""
    target = VariableSet(("x1", "x2", "x12"))
    y1 = (1, 1)
    y2 = (-1, -2)
    y3 = (2, 2)
    words = {
        "x1": y1,
        "x2": y2,
        "x3": y3,
        "x12": y1 + y2,
        "x13": y1 + y3,
        "x23": y2 + y3,
        "x123": y1 + y2 + y3,
    }
    images = {
        n: _word_trace(w, 2).rename_variables(target) for n, w in words.items()
    }
    return RingMap("embed_r2_in_r3", F3_VARS, target, images)


@lru_cache(maxsize=None)
def deck_ring_map() -> RingMap:
    """The deck involution of the orientable double cover on the rank-3
    ring: conjugation by X1 on the subgroup generated by Y1 = X1^2,
    Y2 = X1^-1 X2^-1, Y3 = X2^2, expressed back in the Y-coordinates.

    Fixes x1 and x3, swaps x2 with x123 and x12 with x23, and sends
    x13 to x1 x3 - x13 - x12 x23 + x123 x2.
    """
    # images of Y1, Y2, Y3 under Inn(X1), as words in Y1, Y2, Y3
    # (letters in the rank-3 free group on the Y's):
    img = {
        1: (1,),            # Y1
        2: (-3, -2, -1),    # Y3^-1 Y2^-1 Y1^-1
        3: (1, 2, 3, -2, -1),
    }

    def push(letters):
        out = []
        for g in letters:
            w = img[abs(g)]
            out.extend(w if g > 0 else tuple(-k for k in reversed(w)))
        return tuple(out)

    basis = {
        "x1": (1,),
        "x2": (2,),
        "x3": (3,),
        "x12": (1, 2),
        "x13": (1, 3),
        "x23": (2, 3),
        "x123": (1, 2, 3),
    }
    images = {n: _word_trace(push(w), 3) for n, w in basis.items()}
    return RingMap("deck_involution_f3", F3_VARS, F3_VARS, images)


def deck_involution_f3(arg):
    """Apply the deck involution to a CharacterF3 or to a Polynomial
    over the rank-3 variables (reduced modulo the hypersurface)."""
    rm = deck_ring_map()
    if isinstance(arg, Polynomial):
        return rm.apply_poly(arg)
    if isinstance(arg, CharacterF3):
        point = {
            "x1": arg.t1, "x2": arg.t2, "x3": arg.t3,
            "x12": arg.t12, "x13": arg.t13, "x23": arg.t23,
            "x123": arg.t123,
        }
        vals = rm.apply_point(point)
        roots = triple_trace_roots(
            vals["x1"], vals["x2"], vals["x3"],
            vals["x12"], vals["x13"], vals["x23"],
        )
        t123 = vals["x123"]
        t132 = roots[1] if abs(roots[0] - t123) <= abs(roots[1] - t123) else roots[0]
        return CharacterF3(
            t1=vals["x1"], t2=vals["x2"], t3=vals["x3"],
            t12=vals["x12"], t13=vals["x13"], t23=vals["x23"],
            t123=t123, t132=t132,
        )
    raise TypeError(f"expected CharacterF3 or Polynomial, got {type(arg)!r}")


@lru_cache(maxsize=None)
def cover_c02_to_s04() -> RingMap:
    """Four-holed-sphere coordinates restricted along the double cover
    of the two-holed cross-surface: A -> UV, B -> V^-1 U,
    C -> U^-2 V U, D -> U^-1 V^-1, in the base coordinates
    (u, v, w) = (tr U, tr V, tr UV)."""
    A = (1, 2)
    B = (-2, 1)
    C = (-1, -1, 2, 1)
    D = (-1, -2)
    words = {
        "a": A, "b": B, "c": C, "d": D,
        "x": A + B, "y": B + C, "z": A + C,
    }
    images = {
        n: _word_trace(w, 2).rename_variables(C02_VARS) for n, w in words.items()
    }
    return RingMap("cover_c02_to_s04", S04_VARS, C02_VARS, images)


@lru_cache(maxsize=None)
def cover_c11_to_s12() -> RingMap:
    """Two-holed-torus coordinates restricted along the double cover of
    the one-holed Klein bottle: U -> PQ, X -> QP^-1, Y -> P^2, in the
    base coordinates (p, q, r) = (tr P, tr Q, tr PQ)."""
    U = (1, 2)
    X = (2, -1)
    Y = (1, 1)
    words = {
        "u": U, "x": X, "y": Y,
        "v": U + X, "w": U + Y, "z": X + Y,
        "a": U + X + Y, "b": U + Y + X,
    }
    images = {
        n: _word_trace(w, 2).rename_variables(C11_VARS) for n, w in words.items()
    }
    return RingMap("cover_c11_to_s12", S12_VARS, C11_VARS, images)


def symbolic_check(name: str) -> dict[str, bool]:
    """Verify that a map sends the source ring's defining relations to
    zero (exact polynomial arithmetic).  Returns one flag per relation.
    """
    from .fricke import s04_defining_poly, s12_relation_polys
    from .polyring import PHI

    if name == "c02s04":
        rm = cover_c02_to_s04()
        return {"defining_quartic": rm.apply_poly(s04_defining_poly()).is_zero()}
    if name == "c11s12":
        rm = cover_c11_to_s12()
        rel1, rel2 = s12_relation_polys()
        return {
            "sum_relation": rm.apply_poly(rel1).is_zero(),
            "product_relation": rm.apply_poly(rel2).is_zero(),
        }
    if name == "embed":
        rm = embed_r2_in_r3()
        return {"phi_image": rm.apply_poly(PHI).is_zero()}
    if name == "deck":
        rm = deck_ring_map()
        phi_img = rm.apply_poly(PHI)
        basis_ok = True
        for n in F3_VARS:
            p = Polynomial.variable(F3_VARS, n)
            twice = rm.apply_poly(rm.apply_poly(p))
            if twice != reduce_mod_phi(p):
                basis_ok = False
        return {"phi_in_ideal": phi_img.is_zero(), "involution_on_generators": basis_ok}
    raise ValueError(f"unknown map {name!r}")
