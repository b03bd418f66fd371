"""Seeded random monomial ideals for cross-validation runs."""
from __future__ import annotations

import random

from .ideal import Monomial, MonomialIdeal, PolynomialContext, minimalize


def random_monomial(rng: random.Random, n: int, degree: int) -> Monomial:
    exps = [0] * n
    for _ in range(degree):
        exps[rng.randrange(n)] += 1
    return Monomial(tuple(exps))


def random_monomial_ideal(rng: random.Random, max_vars: int = 6, max_gens: int = 6,
                          max_degree: int = 3, squarefree: bool = False) -> MonomialIdeal:
    n = rng.randint(2, max_vars)
    ctx = PolynomialContext.standard(n)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        if squarefree:
            size = rng.randint(1, min(max_degree, n))
            gens.append(Monomial.from_support(rng.sample(range(n), size), n))
        else:
            gens.append(random_monomial(rng, n, rng.randint(1, max_degree)))
    return minimalize(gens, ctx)


def random_corpus(count: int = 200, seed: int = 0, **kwargs) -> list[MonomialIdeal]:
    """``count`` ideals from one seeded generator (deterministic for a seed)."""
    rng = random.Random(seed)
    return [random_monomial_ideal(rng, **kwargs) for _ in range(count)]
