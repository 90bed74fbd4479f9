"""Parametrized families of cubic forms F = X*Q1 + Y*Q2 containing the line X = Y = 0."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import GF, make_field
from .monomials import CUBICS, QUADRICS, monomial_index
from .proj import Line
from .surface import CubicSurface

ELL = Line(((0, 0, 1, 0), (0, 0, 0, 1)))  # X = Y = 0

X, Y, Z, W = range(4)

INTERPRETATIONS = ("eYW", "printed")


def _times(var: int, quad) -> tuple[int, ...]:
    e = list(quad)
    e[var] += 1
    return tuple(e)


def _unit(cubic_exp) -> tuple[int, ...]:
    v = [0] * 20
    v[monomial_index(3)[tuple(cubic_exp)]] = 1
    return tuple(v)


Q2_MONOMIALS = tuple(e for e in QUADRICS if e[X] == 0)  # the 6 quadrics in Y, Z, W


@dataclass(frozen=True)
class Family:
    """offset + sum_j param_j * basis_j with params in F_p, indexed in base p.

    Parameter j is digit j (least significant first) of the model index.
    """

    name: str
    p: int
    offset: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @property
    def field(self) -> GF:
        return make_field(self.p)

    @property
    def total(self) -> int:
        return self.p ** len(self.basis)

    def params(self, indices: np.ndarray) -> np.ndarray:
        idx = np.asarray(indices, dtype=np.int64)
        out = np.empty((idx.shape[0], len(self.basis)), dtype=np.int64)
        rest = idx.copy()
        for j in range(len(self.basis)):
            out[:, j] = rest % self.p
            rest //= self.p
        return out

    def coeffs(self, indices: np.ndarray) -> np.ndarray:
        P = self.params(indices)
        B = np.asarray(self.basis, dtype=np.int64)
        return (P @ B + np.asarray(self.offset, dtype=np.int64)[None, :]) % self.p

    def surface(self, index: int) -> CubicSurface | None:
        c = self.coeffs(np.array([index]))[0]
        if not c.any():
            return None
        return CubicSurface(self.field, tuple(int(x) for x in c))

    def index_of_params(self, params) -> int:
        idx = 0
        for v in reversed(list(params)):
            idx = idx * self.p + int(v)
        return idx


def f2_family() -> Family:
    """All X*Q1 + Y*Q2 over F_2: Q1 over the 10 quadrics, Q2 over the 6 in Y, Z, W."""
    basis = [_unit(_times(X, e)) for e in QUADRICS] + [_unit(_times(Y, e)) for e in Q2_MONOMIALS]
    labels = [f"Q1:{e}" for e in QUADRICS] + [f"Q2:{e}" for e in Q2_MONOMIALS]
    return Family("f2", 2, (0,) * 20, tuple(basis), tuple(labels))


_YZ_Y_PLUS_Z = tuple(
    a + b for a, b in zip(_unit((0, 2, 1, 0)), _unit((0, 1, 2, 0)))
)  # Y^2 Z + Y Z^2


def f3_family(interpretation: str = "eYW") -> Family:
    """X(aX^2 + bXY + cXZ + dY^2 + e*T + fZ^2 + gW^2) + YZ(Y + Z) over F_3.

    With interpretation "eYW" the fifth term is T = YW.  With "printed" the
    fifth term is read literally as eY, so X*eY has degree 2; only the cubic
    part of the printed expression is kept and e has no effect.
    """
    if interpretation not in INTERPRETATIONS:
        raise ValueError(f"unknown interpretation {interpretation!r}")
    quads = [(2, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (0, 2, 0, 0), None, (0, 0, 2, 0), (0, 0, 0, 2)]
    basis = []
    for e in quads:
        if e is None:
            basis.append(_unit(_times(X, (0, 1, 0, 1))) if interpretation == "eYW" else (0,) * 20)
        else:
            basis.append(_unit(_times(X, e)))
    return Family(f"f3-{interpretation}", 3, _YZ_Y_PLUS_Z, tuple(basis), tuple("abcdefg"))


def f3_superset() -> Family:
    """X*Q1 + Y*(YZ + Z^2) over F_3 with Q1 free over the 10 quadrics."""
    basis = [_unit(_times(X, e)) for e in QUADRICS]
    return Family("f3-superset", 3, _YZ_Y_PLUS_Z, tuple(basis), tuple(f"Q1:{e}" for e in QUADRICS))


def f3_full() -> Family:
    """All X*Q1 + Y*Q2 over F_3 (3^16 models); not run by default."""
    fam = f2_family()
    return Family("f3-full", 3, (0,) * 20, fam.basis, fam.labels)


@dataclass(frozen=True)
class F3FamilyModel:
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    g: int
    interpretation: str = "eYW"

    def index(self) -> int:
        return f3_family(self.interpretation).index_of_params(
            (self.a, self.b, self.c, self.d, self.e, self.f, self.g)
        )

    def surface(self) -> CubicSurface | None:
        return f3_family(self.interpretation).surface(self.index())

    def is_homogeneous_reading(self) -> bool:
        return self.interpretation == "eYW" or self.e == 0


def family_by_name(name: str) -> Family:
    if name == "f2":
        return f2_family()
    if name.startswith("f3-") and name[3:] in INTERPRETATIONS:
        return f3_family(name[3:])
    if name == "f3-superset":
        return f3_superset()
    if name == "f3-full":
        return f3_full()
    raise ValueError(f"unknown family {name!r}")


def random_containing_ell(F: GF, rng: np.random.Generator) -> CubicSurface | None:
    """Uniform X*Q1 + Y*Q2 with coefficients from F; None for the zero form."""
    c = [0] * 20
    fam = f2_family()
    vals = rng.integers(0, F.q, size=len(fam.basis))
    for v, b in zip(vals, fam.basis):
        if v:
            c[b.index(1)] = int(v)
    if not any(c):
        return None
    return CubicSurface(F, tuple(c))


__all__ = [
    "CUBICS",
    "ELL",
    "F3FamilyModel",
    "Family",
    "f2_family",
    "f3_family",
    "f3_full",
    "f3_superset",
    "family_by_name",
    "random_containing_ell",
]
