from __future__ import annotations

import random
from fractions import Fraction

from ellsurf.ratfunc import Poly
from ellsurf.weierstrass import WeierstrassModel, ZeroDiscriminantError


def random_poly(rng: random.Random, max_degree: int, zero_ok: bool = True) -> Poly:
    if zero_ok and rng.random() < 0.2:
        return Poly()
    degree = rng.randint(0, max_degree)
    coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(degree)]
    coeffs.append(Fraction(rng.choice([-3, -2, -1, 1, 2, 3])))
    return Poly(coeffs)


def random_model(rng: random.Random, max_degree: int = 4) -> WeierstrassModel:
    while True:
        a = random_poly(rng, max_degree)
        b = random_poly(rng, max_degree)
        if a.is_zero and b.is_zero:
            continue
        try:
            return WeierstrassModel(a, b)
        except ZeroDiscriminantError:
            continue


def random_squarefree_with_rational_roots(rng: random.Random) -> Poly:
    roots = rng.sample(
        [Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
         Fraction(3), Fraction(1, 2)],
        rng.randint(1, 3),
    )
    f = Poly.constant(1)
    for r in roots:
        f = f * Poly((-r, Fraction(1)))
    return f
