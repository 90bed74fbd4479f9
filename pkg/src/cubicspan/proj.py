"""Points, lines and planes of P^3 over a finite field.

Points and planes are stored as 4-tuples of element codes scaled so that the
first nonzero entry is 1.  Lines are stored as the reduced row-echelon form
of any 2 x 4 basis, which is unique per line.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gf import GF

CONTAINED = "contained"


class GeometryError(ValueError):
    pass


# -- small dense linear algebra over GF(q) -----------------------------------

def rref(F: GF, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = F.neg(m[i][c])
                m[i] = [F.add(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(F: GF, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F: GF, rows, ncols: int) -> list[tuple[int, ...]]:
    """Basis of {x : rows . x = 0}."""
    red, pivots = rref(F, rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(red, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(tuple(v))
    return basis


def normalize(F: GF, v) -> tuple[int, ...]:
    """Scale so the first nonzero entry is 1."""
    for x in v:
        if x:
            if x == 1:
                return tuple(v)
            inv = F.inv(x)
            return tuple(F.mul(inv, y) for y in v)
    raise GeometryError("zero vector has no projective class")


def projective_line_params(F: GF) -> list[tuple[int, int]]:
    """The q+1 points (s:t) of P^1, normalized, in code order."""
    return [(0, 1)] + [(1, t) for t in range(F.q)]


# -- objects ------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Point:
    coords: tuple[int, int, int, int]

    def __str__(self):
        return ":".join(map(str, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @classmethod
    def parse(cls, F: GF, text: str) -> "Point":
        parts = [int(x) for x in text.strip().split(":")]
        if len(parts) != 4 or any(not 0 <= x < F.q for x in parts):
            raise GeometryError(f"bad point literal {text!r} for {F!r}")
        return point(F, parts)


@dataclass(frozen=True, order=True)
class Plane:
    covector: tuple[int, int, int, int]

    def __str__(self):
        return "[" + ",".join(map(str, self.covector)) + "]"

    @classmethod
    def parse(cls, F: GF, text: str) -> "Plane":
        parts = [int(x) for x in text.strip().strip("[]").split(",")]
        if len(parts) != 4:
            raise GeometryError(f"bad plane literal {text!r}")
        return plane(F, parts)

    def contains(self, F: GF, P) -> bool:
        return F.dot(self.covector, P) == 0


@dataclass(frozen=True, order=True)
class Line:
    basis: tuple[tuple[int, int, int, int], tuple[int, int, int, int]]

    def __str__(self):
        return ";".join(":".join(map(str, r)) for r in self.basis)

    @classmethod
    def parse(cls, F: GF, text: str) -> "Line":
        a, b = text.split(";")
        return line_through(F, Point.parse(F, a), Point.parse(F, b))

    def point_at(self, F: GF, s: int, t: int) -> Point:
        return Point(normalize(F, F.axpy(s, self.basis[0], t, self.basis[1])))

    def points(self, F: GF) -> list[Point]:
        return [self.point_at(F, s, t) for s, t in projective_line_params(F)]

    def contains(self, F: GF, P) -> bool:
        return rank(F, [*self.basis, tuple(P)]) == 2


def point(F: GF, coords) -> Point:
    return Point(normalize(F, coords))


def plane(F: GF, covector) -> Plane:
    return Plane(normalize(F, covector))


def line_from_basis(F: GF, rows) -> Line:
    red, piv = rref(F, rows)
    if len(piv) != 2:
        raise GeometryError("line basis must have rank 2")
    return Line((tuple(red[0]), tuple(red[1])))


# -- operations ------------------------------------------------------------------

def points_of_space(F: GF) -> list[Point]:
    out = []
    els = range(F.q)
    for lead in range(4):
        for tail in product(els, repeat=3 - lead):
            out.append(Point((0,) * lead + (1,) + tail))
    return out


def points_of_plane(F: GF, H: Plane) -> list[Point]:
    a, b, c = nullspace(F, [H.covector], 4)
    out = []
    for s, t, u in _projective_plane_params(F):
        v = F.axpy(s, a, t, b)
        v = tuple(F.add(x, F.mul(u, y)) for x, y in zip(v, c))
        out.append(point(F, v))
    return out


def _projective_plane_params(F: GF):
    els = range(F.q)
    yield (0, 0, 1)
    for t in els:
        yield (0, 1, t)
    for t, u in product(els, repeat=2):
        yield (1, t, u)


def line_through(F: GF, P, Q) -> Line:
    if tuple(P) == tuple(Q):
        raise GeometryError("line_through needs two distinct points")
    return line_from_basis(F, [tuple(P), tuple(Q)])


def lines_of_space(F: GF) -> list[Line]:
    """Every line of P^3(F_q) once, enumerated by RREF pivot pattern."""
    els = range(F.q)
    out = []
    for i in range(4):
        for j in range(i + 1, 4):
            free1 = [c for c in range(i + 1, 4) if c != j]
            free2 = list(range(j + 1, 4))
            for v1 in product(els, repeat=len(free1)):
                r1 = [0] * 4
                r1[i] = 1
                for c, x in zip(free1, v1):
                    r1[c] = x
                for v2 in product(els, repeat=len(free2)):
                    r2 = [0] * 4
                    r2[j] = 1
                    for c, x in zip(free2, v2):
                        r2[c] = x
                    out.append(Line((tuple(r1), tuple(r2))))
    return out


def are_skew(F: GF, l1: Line, l2: Line) -> bool:
    return rank(F, [*l1.basis, *l2.basis]) == 4


def meet_lines(F: GF, l1: Line, l2: Line) -> Point | None:
    """Common point of two distinct coplanar lines, None when skew."""
    if l1 == l2:
        raise GeometryError("identical lines")
    ns = nullspace(F, [[*r] for r in zip(*l1.basis, *l2.basis)], 4)
    if not ns:
        return None
    a, b, _, _ = ns[0]
    return point(F, F.axpy(a, l1.basis[0], b, l1.basis[1]))


def pencil_basis(F: GF, ell: Line) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n0, n1 = nullspace(F, ell.basis, 4)
    return n0, n1


def pencil_of_planes(F: GF, ell: Line) -> list[Plane]:
    n0, n1 = pencil_basis(F, ell)
    return [plane(F, F.axpy(a, n0, b, n1)) for a, b in projective_line_params(F)]


def meet_plane_line(F: GF, H: Plane, ell: Line) -> Point | str:
    A, B = ell.basis
    a = F.dot(H.covector, A)
    b = F.dot(H.covector, B)
    if a == 0 and b == 0:
        return CONTAINED
    return point(F, F.axpy(b, A, F.neg(a), B))


def plane_through(F: GF, ell: Line, P) -> Plane:
    ns = nullspace(F, [*ell.basis, tuple(P)], 4)
    if len(ns) != 1:
        raise GeometryError(f"point {P} lies on the line")
    return plane(F, ns[0])


def plane_of_lines(F: GF, l1: Line, l2: Line) -> Plane | None:
    """Plane spanned by two distinct meeting lines, None when skew."""
    ns = nullspace(F, [*l1.basis, *l2.basis], 4)
    if len(ns) != 1:
        return None
    return plane(F, ns[0])


def base_change_line(src: GF, dst: GF, ell: Line) -> Line:
    from .gf import embedding_table

    t = embedding_table(src, dst)
    return Line(tuple(tuple(t[x] for x in row) for row in ell.basis))


def base_change_point(src: GF, dst: GF, P) -> Point:
    from .gf import embedding_table

    t = embedding_table(src, dst)
    return Point(tuple(t[x] for x in P))
