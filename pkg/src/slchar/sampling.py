"""Seeded random inputs for the verification suites and tests.

Random unimodular matrices: entries uniform in [-2,2] (both real and
imaginary parts in the complex case), then the last entry solved to
force det = 1, rejecting ill-conditioned draws (|pivot| < 1e-3).
Streams derive deterministically from (seed, trial-index), so suites
may parallelize trials without changing results.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from .words import Word

__all__ = [
    "rng_for",
    "random_unimodular",
    "random_real_unimodular",
    "random_rational_unimodular",
    "random_reduced_word",
    "exact_matmul",
    "exact_evaluate_word",
    "exact_trace",
]


def rng_for(seed: int, trial: int | None = None) -> random.Random:
    if trial is None:
        return random.Random(f"slchar:{seed}")
    return random.Random(f"slchar:{seed}:{trial}")


def random_unimodular(rnd: random.Random, pivot_tol: float = 1e-3) -> np.ndarray:
    while True:
        a = complex(rnd.uniform(-2, 2), rnd.uniform(-2, 2))
        b = complex(rnd.uniform(-2, 2), rnd.uniform(-2, 2))
        c = complex(rnd.uniform(-2, 2), rnd.uniform(-2, 2))
        if abs(a) >= pivot_tol:
            d = (1 + b * c) / a
            return np.array([[a, b], [c, d]], dtype=complex)


def random_real_unimodular(rnd: random.Random, pivot_tol: float = 1e-3) -> np.ndarray:
    while True:
        a = rnd.uniform(-2, 2)
        b = rnd.uniform(-2, 2)
        c = rnd.uniform(-2, 2)
        if abs(a) >= pivot_tol:
            d = (1 + b * c) / a
            return np.array([[a, b], [c, d]], dtype=complex)


def random_reduced_word(rnd: random.Random, rank: int, max_len: int) -> Word:
    """A uniformly drawn freely reduced word of length <= max_len."""
    length = rnd.randint(0, max_len)
    letters: list[int] = []
    alphabet = [g for k in range(1, rank + 1) for g in (k, -k)]
    while len(letters) < length:
        g = rnd.choice(alphabet)
        if letters and letters[-1] == -g:
            continue
        letters.append(g)
    return Word(rank, tuple(letters))


# -- exact-mode helpers: 2x2 matrices over Fraction ------------------------------

ExactMat = tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]


def random_rational_unimodular(rnd: random.Random) -> ExactMat:
    """A unimodular matrix with small rational entries (exact det 1)."""
    while True:
        a = Fraction(rnd.randint(-8, 8), rnd.randint(1, 3))
        b = Fraction(rnd.randint(-8, 8), rnd.randint(1, 3))
        c = Fraction(rnd.randint(-8, 8), rnd.randint(1, 3))
        if a != 0:
            d = (1 + b * c) / a
            return ((a, b), (c, d))


def exact_matmul(m: ExactMat, n: ExactMat) -> ExactMat:
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def _exact_adjugate(m: ExactMat) -> ExactMat:
    return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))


def exact_evaluate_word(w: Word, mats: list[ExactMat]) -> ExactMat:
    """Exact product of unimodular Fraction matrices along a word."""
    one, zero = Fraction(1), Fraction(0)
    out: ExactMat = ((one, zero), (zero, one))
    invs = [_exact_adjugate(m) for m in mats]
    for g in w.letters:
        out = exact_matmul(out, mats[g - 1] if g > 0 else invs[-g - 1])
    return out


def exact_trace(m: ExactMat) -> Fraction:
    return m[0][0] + m[1][1]
