"""Monomial bookkeeping for forms in x0..x3."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement

import numpy as np


@lru_cache(maxsize=None)
def monomials(degree: int, nvars: int = 4) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of the given degree in descending lex order.

    For degree 3 this is x0^3, x0^2 x1, x0^2 x2, ..., x3^3, the coefficient
    order used by surface strings.
    """
    out = set()
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.add(tuple(e))
    return tuple(sorted(out, reverse=True))


@lru_cache(maxsize=None)
def monomial_index(degree: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomials(degree))}


CUBICS = monomials(3)
QUADRICS = monomials(2)


def monomial_name(e) -> str:
    parts = []
    for v, k in enumerate(e):
        if k == 1:
            parts.append(f"x{v}")
        elif k > 1:
            parts.append(f"x{v}^{k}")
    return "*".join(parts) or "1"


@lru_cache(maxsize=None)
def derivative_terms(var: int) -> tuple[tuple[int, int, int], ...]:
    """(cubic index, quadric index, integer factor) for d/dx_var of each cubic monomial."""
    qidx = monomial_index(2)
    out = []
    for ci, e in enumerate(CUBICS):
        if e[var]:
            d = list(e)
            d[var] -= 1
            out.append((ci, qidx[tuple(d)], e[var]))
    return tuple(out)


@lru_cache(maxsize=None)
def product_columns(gen_degree: int, target_degree: int) -> np.ndarray:
    """cols[i, j] = index in degree ``target_degree`` of multiplier_i * generator_monomial_j."""
    tidx = monomial_index(target_degree)
    mult = monomials(target_degree - gen_degree)
    gens = monomials(gen_degree)
    cols = np.empty((len(mult), len(gens)), dtype=np.intp)
    for i, m in enumerate(mult):
        for j, g in enumerate(gens):
            cols[i, j] = tidx[tuple(a + b for a, b in zip(m, g))]
    return cols


@lru_cache(maxsize=None)
def factor_pairs(degree: int) -> tuple[tuple[int, int], ...]:
    """For each monomial of ``degree``: (index of its degree-1 lower part, variable).

    Lets monomial values be built by one multiplication per monomial from the
    values one degree down.
    """
    lower = monomial_index(degree - 1)
    out = []
    for e in monomials(degree):
        v = next(i for i, k in enumerate(e) if k)
        d = list(e)
        d[v] -= 1
        out.append((lower[tuple(d)], v))
    return tuple(out)
