"""Cubic surfaces S = V(F) in P^3 over a finite field.

Everything here rests on one identity: for points A, B and a cubic form F,

    F(sA + tB) = F(A) s^3 + (grad F(A) . B) s^2 t + (grad F(B) . A) s t^2 + F(B) t^3,

which holds over the integers and hence in every characteristic.  Secant and
tangent residuals, local quadratic parts at a point and line restrictions are
all read off from gradients this way.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

import numpy as np

from . import macaulay
from .gf import GF, embedding_table, make_field
from .monomials import CUBICS, QUADRICS, factor_pairs, monomial_name
from .proj import (
    GeometryError,
    Line,
    Plane,
    Point,
    line_through,
    lines_of_space,
    normalize,
    nullspace,
    plane,
    points_of_space,
    projective_line_params,
    rank,
)


class SurfaceError(ValueError):
    pass


class NotOnSurface(SurfaceError):
    pass


class SingularPoint(SurfaceError):
    pass


class LineOnSurface(SurfaceError):
    pass


class MultiplicityShortfall(SurfaceError):
    pass


_SURFACE_RE = re.compile(r"^\s*q\s*=\s*(\d+)\s*\^\s*(\d+)\s*;\s*F\s*=\s*([\d,\s]+)$")


@dataclass(frozen=True)
class CubicSurface:
    field: GF
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        if len(c) != 20:
            raise SurfaceError(f"need 20 coefficients, got {len(c)}")
        if any(not 0 <= x < self.field.q for x in c):
            raise SurfaceError("coefficient code out of range")
        if not any(c):
            raise SurfaceError("the zero form does not define a surface")
        object.__setattr__(self, "coeffs", c)

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, CubicSurface)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __str__(self):
        return f"q={self.field.p}^{self.field.k}; F=" + ",".join(map(str, self.coeffs))

    def __reduce__(self):
        return (parse_surface, (str(self),))

    @classmethod
    def from_terms(cls, F: GF, terms: dict) -> "CubicSurface":
        """Build from {exponent tuple: coefficient code}."""
        idx = {e: i for i, e in enumerate(CUBICS)}
        c = [0] * 20
        for e, v in terms.items():
            c[idx[tuple(e)]] = F.add(c[idx[tuple(e)]], v)
        return cls(F, tuple(c))

    def pretty(self) -> str:
        parts = [f"{c}*{monomial_name(e)}" for c, e in zip(self.coeffs, CUBICS) if c]
        return " + ".join(parts)

    @cached_property
    def partials(self) -> tuple[tuple[int, ...], ...]:
        """Coefficient vectors of dF/dx_i over the quadric monomials."""
        return tuple(tuple(v) for v in macaulay.partial_coefficients(self.field, self.coeffs))

    @cached_property
    def _gradient_terms(self):
        return [[(qi, c) for qi, c in enumerate(vec) if c] for vec in self.partials]


def parse_surface(text: str) -> CubicSurface:
    m = _SURFACE_RE.match(text)
    if not m:
        raise SurfaceError(f"malformed surface string {text!r}")
    p, k = int(m.group(1)), int(m.group(2))
    coeffs = [int(x) for x in m.group(3).replace(" ", "").split(",") if x != ""]
    return CubicSurface(make_field(p, k), tuple(coeffs))


def base_change(S: CubicSurface, dst: GF) -> CubicSurface:
    t = embedding_table(S.field, dst)
    return CubicSurface(dst, tuple(t[c] for c in S.coeffs))


# -- evaluation ---------------------------------------------------------------

def _quadric_values(F: GF, P) -> list[int]:
    return [F.mul(P[a], P[b]) for a, b in _QUAD_PAIRS]


_QUAD_PAIRS = tuple(
    tuple(v for v in range(4) for _ in range(e[v])) for e in QUADRICS
)


def evaluate(S: CubicSurface, P) -> int:
    F = S.field
    qv = _quadric_values(F, P)
    acc = 0
    for c, (lo, v) in zip(S.coeffs, factor_pairs(3)):
        if c:
            acc = F.add(acc, F.mul(c, F.mul(qv[lo], P[v])))
    return acc


def gradient(S: CubicSurface, P) -> tuple[int, int, int, int]:
    F = S.field
    qv = _quadric_values(F, P)
    out = []
    for terms in S._gradient_terms:
        acc = 0
        for qi, c in terms:
            if qv[qi]:
                acc = F.add(acc, F.mul(c, qv[qi]))
        out.append(acc)
    return tuple(out)


def polar(S: CubicSurface, A, B) -> int:
    """grad F(A) . B, the s^2 t coefficient of F(sA + tB)."""
    return S.field.dot(gradient(S, A), B)


def on_surface(S: CubicSurface, P) -> bool:
    return evaluate(S, P) == 0


def tangent_plane(S: CubicSurface, P) -> Plane:
    if evaluate(S, P):
        raise NotOnSurface(f"{P} is not on the surface")
    g = gradient(S, P)
    if not any(g):
        raise SingularPoint(f"surface is singular at {P}")
    return plane(S.field, g)


# -- binary forms on lines ------------------------------------------------------

@dataclass(frozen=True)
class BinaryCubic:
    """c3 s^3 + c2 s^2 t + c1 s t^2 + c0 t^3 in the ordered basis (A, B)."""

    field: GF
    coeffs: tuple[int, int, int, int]
    basis: tuple[tuple[int, ...], tuple[int, ...]]

    def __call__(self, s: int, t: int) -> int:
        F = self.field
        c3, c2, c1, c0 = self.coeffs
        acc = 0
        for c, i, j in ((c3, 3, 0), (c2, 2, 1), (c1, 1, 2), (c0, 0, 3)):
            if c:
                acc = F.add(acc, F.mul(c, F.mul(F.pow(s, i), F.pow(t, j))))
        return acc

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def point(self, s: int, t: int) -> Point:
        F = self.field
        return Point(normalize(F, F.axpy(s, self.basis[0], t, self.basis[1])))

    def rational_roots(self) -> list[tuple[tuple[int, int], int]]:
        """[((s:t), multiplicity)] over the base field; requires a nonzero form."""
        if self.is_zero():
            raise LineOnSurface("zero restriction has every point as a root")
        F = self.field
        poly = list(self.coeffs)  # in s with t = 1, highest degree first
        out = []
        # root at (1:0) <=> s^3 coefficient vanishes
        mult = 0
        while mult < 3 and poly[mult] == 0:
            mult += 1
        if mult:
            out.append(((1, 0), mult))
        for r in range(F.q):
            m = _root_multiplicity(F, poly, r)
            if m:
                out.append(((r, 1), m))
        return out


def _root_multiplicity(F: GF, coeffs_high_first, r: int) -> int:
    """Multiplicity of r as a root of sum coeffs[i] x^(3-i)."""
    poly = [c for c in coeffs_high_first]
    while poly and poly[0] == 0:
        poly.pop(0)
    mult = 0
    while len(poly) > 1:
        # synthetic division by (x - r)
        acc = 0
        quot = []
        for c in poly:
            acc = F.add(F.mul(acc, r), c)
            quot.append(acc)
        if quot[-1] != 0:
            break
        mult += 1
        poly = quot[:-1]
    return mult


def _restriction_coeffs(S: CubicSurface, A, B) -> tuple[int, int, int, int]:
    F = S.field
    gA = gradient(S, A)
    gB = gradient(S, B)
    return (evaluate(S, A), F.dot(gA, B), F.dot(gB, A), evaluate(S, B))


def restrict_to_line(S: CubicSurface, ell) -> BinaryCubic:
    """F restricted to a line, in the line's stored basis or an explicit (A, B)."""
    if isinstance(ell, Line):
        A, B = ell.basis
    else:
        A, B = (tuple(x) for x in ell)
    return BinaryCubic(S.field, _restriction_coeffs(S, A, B), (tuple(A), tuple(B)))


def line_on_surface(S: CubicSurface, ell) -> bool:
    return restrict_to_line(S, ell).is_zero()


def third_intersection(S: CubicSurface, ell: Line, P, Q) -> Point:
    """The residual R in ell . S = P + Q + R."""
    F = S.field
    P, Q = tuple(P), tuple(Q)
    for X in (P, Q):
        if not ell.contains(F, X):
            raise GeometryError(f"{Point(X)} is not on the line")
        if evaluate(S, X):
            raise NotOnSurface(f"{Point(X)} is not on the surface")
    if P != Q:
        c2 = polar(S, P, Q)
        c1 = polar(S, Q, P)
        if not c1 and not c2:
            raise LineOnSurface(str(ell))
        return Point(normalize(F, F.axpy(c1, P, F.neg(c2), Q)))
    D = next(b for b in ell.basis if rank(F, [P, b]) == 2)
    if polar(S, P, D):
        raise MultiplicityShortfall(f"line is not tangent at {Point(P)}")
    c1 = polar(S, D, P)
    c0 = evaluate(S, D)
    if not c1 and not c0:
        raise LineOnSurface(str(ell))
    return Point(normalize(F, F.axpy(c0, P, F.neg(c1), D)))


def secant_residual(S: CubicSurface, P, Q) -> Point | None:
    """Third point on the secant through distinct P, Q in S, None if that line lies on S."""
    F = S.field
    c2 = polar(S, P, Q)
    c1 = polar(S, Q, P)
    if not c1 and not c2:
        return None
    return Point(normalize(F, F.axpy(c1, P, F.neg(c2), Q)))


# -- local geometry at a point ------------------------------------------------------

class Kind(str, Enum):
    ECKARDT = "Eckardt"
    CUSP = "ParabolicCusp"
    NODE = "Node"


@dataclass(frozen=True)
class PointClass:
    kind: Kind
    asymptotic_dirs: tuple[Point, ...]
    quadratic: tuple[int, int, int]
    cubic: tuple[int, int, int, int] = field(repr=False)
    frame: tuple[tuple[int, ...], tuple[int, ...]] = field(repr=False)

    @property
    def is_eckardt(self) -> bool:
        return self.kind is Kind.ECKARDT

    @property
    def is_parabolic(self) -> bool:
        return self.kind is not Kind.NODE


def tangent_frame(S: CubicSurface, P) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Two points D1, D2 with (P, D1, D2) spanning the tangent plane at P.

    D1, D2 are taken from the reduced nullspace basis of the covector, skipping
    the first one that is dependent on P.
    """
    F = S.field
    P = tuple(P)
    H = tangent_plane(S, P)
    basis = nullspace(F, [H.covector], 4)
    chosen = []
    for v in basis:
        if rank(F, [P, *chosen, v]) == len(chosen) + 2:
            chosen.append(v)
        if len(chosen) == 2:
            break
    return chosen[0], chosen[1]


def local_forms(S: CubicSurface, P, frame=None):
    """Quadratic and cubic parts of F(lam P + u D1 + v D2) in (u, v).

    Returns ((c20, c11, c02), (F(D1), polar(D1,D2), polar(D2,D1), F(D2)), frame).
    """
    F = S.field
    P = tuple(P)
    D1, D2 = frame if frame is not None else tangent_frame(S, P)
    g1 = gradient(S, D1)
    g2 = gradient(S, D2)
    g12 = gradient(S, tuple(F.add(a, b) for a, b in zip(D1, D2)))
    c20 = F.dot(g1, P)
    c02 = F.dot(g2, P)
    c11 = F.sub(F.sub(F.dot(g12, P), c20), c02)
    cubic = (evaluate(S, D1), F.dot(g1, D2), F.dot(g2, D1), evaluate(S, D2))
    return (c20, c11, c02), cubic, (D1, D2)


def _quadratic_roots(F: GF, a: int, b: int, c: int) -> list[tuple[int, int]]:
    """Rational roots (u:v) of a u^2 + b uv + c v^2 (nonzero form)."""
    out = []
    for u, v in projective_line_params(F):
        val = F.add(F.add(F.mul(a, F.mul(u, u)), F.mul(b, F.mul(u, v))), F.mul(c, F.mul(v, v)))
        if val == 0:
            out.append((u, v))
    return out


def has_repeated_root(F: GF, a: int, b: int, c: int) -> bool:
    if F.p == 2:
        return b == 0
    disc = F.sub(F.mul(b, b), F.mul(4 % F.p, F.mul(a, c)))
    return disc == 0


def classify_point(S: CubicSurface, P) -> PointClass:
    F = S.field
    P = tuple(P)
    if evaluate(S, P):
        raise NotOnSurface(f"{Point(P)} is not on the surface")
    (a, b, c), cubic, (D1, D2) = local_forms(S, P)
    if not (a or b or c):
        return PointClass(Kind.ECKARDT, (), (a, b, c), cubic, (D1, D2))
    kind = Kind.CUSP if has_repeated_root(F, a, b, c) else Kind.NODE
    dirs = tuple(
        Point(normalize(F, F.axpy(u, D1, v, D2))) for u, v in _quadratic_roots(F, a, b, c)
    )
    return PointClass(kind, dirs, (a, b, c), cubic, (D1, D2))


def is_eckardt(S: CubicSurface, P) -> bool:
    (a, b, c), _, _ = local_forms(S, P)
    return not (a or b or c)


def lines_through_point(S: CubicSurface, P) -> list[Line]:
    """Lines of S over the base field passing through the smooth point P."""
    F = S.field
    P = tuple(P)
    (a, b, c), (d3, d2, d1, d0), (D1, D2) = local_forms(S, P)
    out = []
    for u, v in projective_line_params(F):
        quad = F.add(F.add(F.mul(a, F.mul(u, u)), F.mul(b, F.mul(u, v))), F.mul(c, F.mul(v, v)))
        if quad:
            continue
        cub = BinaryCubic(F, (d3, d2, d1, d0), (D1, D2))(u, v)
        if cub:
            continue
        out.append(line_through(F, P, F.axpy(u, D1, v, D2)))
    return out


# -- Gauss map on a line of S -----------------------------------------------------

@dataclass(frozen=True)
class GaussOnLine:
    """gamma(s:t) = (u(s,t) : v(s,t)) in the pencil basis (N0, N1) of planes through the line.

    u, v, wronskian are binary quadratics (coefficients of s^2, st, t^2).
    """

    field: GF
    line: Line
    pencil: tuple[tuple[int, ...], tuple[int, ...]]
    u: tuple[int, int, int]
    v: tuple[int, int, int]
    wronskian: tuple[int, int, int]
    separable: bool

    def plane_at(self, s: int, t: int) -> Plane:
        F = self.field
        uu = _binary_quadratic(F, self.u, s, t)
        vv = _binary_quadratic(F, self.v, s, t)
        return plane(F, F.axpy(uu, self.pencil[0], vv, self.pencil[1]))

    def parabolic_count(self) -> int | None:
        """Distinct parabolic points over the algebraic closure, None for "all"."""
        if not self.separable:
            return None
        a, b, c = self.wronskian
        if self.field.p == 2:
            return 1
        return 1 if has_repeated_root(self.field, a, b, c) else 2

    def rational_parabolic_params(self) -> list[tuple[int, int]]:
        if not self.separable:
            return projective_line_params(self.field)
        return _quadratic_roots(self.field, *self.wronskian)


def _binary_quadratic(F: GF, coeffs, s: int, t: int) -> int:
    a, b, c = coeffs
    return F.add(F.add(F.mul(a, F.mul(s, s)), F.mul(b, F.mul(s, t))), F.mul(c, F.mul(t, t)))


def gauss_on_line(S: CubicSurface, ell: Line) -> GaussOnLine:
    F = S.field
    if not line_on_surface(S, ell):
        raise SurfaceError(f"line {ell} is not on the surface")
    A, B = ell.basis
    gA = gradient(S, A)
    gB = gradient(S, B)
    gAB = gradient(S, tuple(F.add(x, y) for x, y in zip(A, B)))
    g11 = tuple(F.sub(F.sub(z, x), y) for x, y, z in zip(gA, gB, gAB))
    n0, n1 = nullspace(F, ell.basis, 4)
    # two coordinates where (n0, n1) are independent
    i, j = next(
        (i, j)
        for i in range(4)
        for j in range(i + 1, 4)
        if F.sub(F.mul(n0[i], n1[j]), F.mul(n0[j], n1[i]))
    )
    det_inv = F.inv(F.sub(F.mul(n0[i], n1[j]), F.mul(n0[j], n1[i])))

    def coords(g):
        # solve a n0 + b n1 = g on coordinates i, j
        a = F.mul(det_inv, F.sub(F.mul(g[i], n1[j]), F.mul(g[j], n1[i])))
        b = F.mul(det_inv, F.sub(F.mul(n0[i], g[j]), F.mul(n0[j], g[i])))
        return a, b

    (ua, va), (ub, vb), (uc, vc) = coords(gA), coords(g11), coords(gB)
    u = (ua, ub, uc)
    v = (va, vb, vc)
    # u = a s^2 + b st + c t^2, v = d s^2 + e st + f t^2:
    # W = (ae - bd) s^2 + 2(af - cd) st + (bf - ce) t^2
    w2 = F.sub(F.mul(ua, vb), F.mul(ub, va))
    w1 = F.mul(2 % F.p, F.sub(F.mul(ua, vc), F.mul(uc, va)))
    w0 = F.sub(F.mul(ub, vc), F.mul(uc, vb))
    W = (w2, w1, w0)
    return GaussOnLine(F, ell, (n0, n1), u, v, W, any(W))


# -- point sets -----------------------------------------------------------------

_SPACE_CACHE: dict[int, np.ndarray] = {}


def space_array(F: GF) -> np.ndarray:
    """All points of P^3(F) as an (N, 4) int array, in points_of_space order."""
    key = F.q
    arr = _SPACE_CACHE.get(key)
    if arr is None:
        arr = np.array([p.coords for p in points_of_space(F)], dtype=np.int64)
        _SPACE_CACHE[key] = arr
    return arr


def monomial_values(F: GF, pts: np.ndarray, degree: int) -> np.ndarray:
    """(N, n_monomials) array of monomial values at the rows of ``pts``."""
    T = F.dense
    vals = pts
    for d in range(2, degree + 1):
        pairs = factor_pairs(d)
        lo = np.array([a for a, _ in pairs])
        var = np.array([b for _, b in pairs])
        vals = T.mul(vals[:, lo], pts[:, var])
    return vals


def evaluate_many(S: CubicSurface, pts: np.ndarray, cubic_values=None) -> np.ndarray:
    F = S.field
    T = F.dense
    mv = monomial_values(F, pts, 3) if cubic_values is None else cubic_values
    nz = [i for i, c in enumerate(S.coeffs) if c]
    terms = T.mul(np.array([S.coeffs[i] for i in nz])[None, :], mv[:, nz])
    return T.sum(terms, axis=1)


def gradient_many(S: CubicSurface, pts: np.ndarray, quad_values=None) -> np.ndarray:
    F = S.field
    T = F.dense
    qv = monomial_values(F, pts, 2) if quad_values is None else quad_values
    out = np.zeros((pts.shape[0], 4), dtype=np.int64)
    for i, vec in enumerate(S.partials):
        nz = [j for j, c in enumerate(vec) if c]
        if nz:
            terms = T.mul(np.array([vec[j] for j in nz])[None, :], qv[:, nz])
            out[:, i] = T.sum(terms, axis=1)
    return out


def surface_point_array(S: CubicSurface) -> np.ndarray:
    pts = space_array(S.field)
    return pts[evaluate_many(S, pts) == 0]


def surface_points(S: CubicSurface) -> list[Point]:
    return [Point(tuple(int(x) for x in row)) for row in surface_point_array(S)]


# -- lines on S --------------------------------------------------------------------

def k_lines_brute(S: CubicSurface) -> list[Line]:
    """Filter every line of P^3(F_q); only sensible for small q."""
    return [ell for ell in lines_of_space(S.field) if line_on_surface(S, ell)]


def k_lines_on_surface(S: CubicSurface) -> list[Line]:
    """All lines of S defined over the base field, sorted.

    Every line meets the plane x0 = 0, and a line inside it meets x1 = 0
    unless it is the line x0 = x1 = 0 itself; so it suffices to collect the
    lines through the points of S on those two planes.  Through a smooth
    point P they are the common roots of the local quadratic and cubic parts.
    """
    F = S.field
    found: set[Line] = set()
    axis = Line(((0, 0, 1, 0), (0, 0, 0, 1)))
    if line_on_surface(S, axis):
        found.add(axis)
    pts = space_array(F)
    mask = (pts[:, 0] == 0) | (pts[:, 1] == 0)
    cand = pts[mask]
    on = cand[evaluate_many(S, cand) == 0]
    grads = gradient_many(S, on)
    for row, g in zip(on, grads):
        P = tuple(int(x) for x in row)
        if any(g):
            found.update(lines_through_point(S, P))
        else:
            for Q in points_of_space(F):
                if Q.coords != P:
                    ell = line_through(F, P, Q)
                    if ell not in found and line_on_surface(S, ell):
                        found.add(ell)
    return sorted(found)


def lines_over_extension(S: CubicSurface, m: int) -> tuple[CubicSurface, list[Line]]:
    """Base change to F_{q^m} and list the lines there."""
    dst = make_field(S.field.p, S.field.k * m)
    T = base_change(S, dst)
    return T, k_lines_on_surface(T)


# -- smoothness -------------------------------------------------------------------

def rational_singular_points(S: CubicSurface) -> np.ndarray:
    pts = space_array(S.field)
    qv = monomial_values(S.field, pts, 2)
    g = gradient_many(S, pts, qv)
    mask = ~g.any(axis=1)
    if not mask.any():
        return pts[:0]
    sub = pts[mask]
    return sub[evaluate_many(S, sub) == 0]


def is_smooth(S: CubicSurface, degree: int = macaulay.DEFAULT_DEGREE) -> bool:
    return macaulay.ideal_fills_degree(S.field, S.coeffs, degree)


class SingularSearch:
    """Brute-force search for singular points of base-field surfaces over F_{q^m}.

    For a prime base field the values of all cubic and quadric monomials over
    the extension are cached as digit vectors, so that F and its partials are
    one F_p-linear map per surface.
    """

    def __init__(self, base: GF, m: int, chunk: int = 1 << 16):
        if not base.is_prime:
            raise SurfaceError("SingularSearch needs a prime base field")
        self.base = base
        self.ext = make_field(base.p, m)
        self.chunk = chunk
        pts = space_array(self.ext)
        qv = monomial_values(self.ext, pts, 2)
        cv = monomial_values(self.ext, pts, 3)
        allv = np.concatenate([cv, qv], axis=1)  # (N, 30)
        p, k = base.p, m
        digits = np.empty((pts.shape[0], k, 30), dtype=np.float32)
        rest = allv.copy()
        for d in range(k):
            digits[:, d, :] = rest % p
            rest //= p
        self.digits = digits.reshape(pts.shape[0] * k, 30)
        self.npoints = pts.shape[0]
        self.k = k

    def has_singular_point(self, S: CubicSurface) -> bool:
        if S.field is not self.base:
            raise SurfaceError("surface field mismatch")
        p = self.base.p
        A = np.zeros((30, 5), dtype=np.float32)
        A[:20, 0] = S.coeffs
        for i, vec in enumerate(S.partials):
            A[20:, i + 1] = vec
        rows_per_chunk = self.chunk * self.k
        for start in range(0, self.digits.shape[0], rows_per_chunk):
            block = self.digits[start:start + rows_per_chunk] @ A
            block = np.rint(block).astype(np.int64) % p
            zero = ~block.reshape(-1, self.k * 5).any(axis=1)
            if zero.any():
                return True
        return False


def singular_point_over(S: CubicSurface, m: int) -> bool:
    """True if S has a singular point over F_{q^m} (table-driven, any base field)."""
    T = base_change(S, make_field(S.field.p, S.field.k * m)) if m > 1 else S
    return rational_singular_points(T).shape[0] > 0


def strict_smooth(S: CubicSurface, max_m: int = 6, point_budget: int = 3_000_000) -> bool:
    """Rank test plus brute-force singular search over F_{q^m}, m <= max_m within budget."""
    if not is_smooth(S):
        return False
    for m in range(1, max_m + 1):
        Q = S.field.q**m
        if Q**3 + Q**2 + Q + 1 > point_budget or Q > 1024:
            break
        if singular_point_over(S, m):
            return False
    return True


def rational_eckardt_points(S: CubicSurface, ell: Line) -> list[Point]:
    F = S.field
    return [P for P in ell.points(F) if is_eckardt(S, P)]


__all__ = [
    "BinaryCubic",
    "CubicSurface",
    "GaussOnLine",
    "Kind",
    "PointClass",
    "SingularSearch",
    "base_change",
    "classify_point",
    "evaluate",
    "gauss_on_line",
    "gradient",
    "is_smooth",
    "k_lines_on_surface",
    "line_on_surface",
    "parse_surface",
    "restrict_to_line",
    "surface_points",
    "tangent_plane",
    "third_intersection",
]
