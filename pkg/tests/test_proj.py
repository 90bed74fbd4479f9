import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicspan.gf import make_field
from cubicspan.proj import (
    CONTAINED,
    GeometryError,
    Line,
    Plane,
    Point,
    are_skew,
    line_through,
    lines_of_space,
    meet_lines,
    meet_plane_line,
    normalize,
    pencil_of_planes,
    plane_through,
    points_of_plane,
    points_of_space,
)

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1)]


@pytest.mark.parametrize("q,n", [(2, 15), (3, 40), (11, 1464)])
def test_point_counts(q, n):
    assert len(points_of_space(make_field(q))) == n


@pytest.mark.parametrize("pk", FIELDS)
def test_points_normalized_and_distinct(pk):
    F = make_field(*pk)
    pts = points_of_space(F)
    assert len(set(pts)) == len(pts)
    for P in pts:
        lead = next(x for x in P.coords if x)
        assert lead == 1
        assert normalize(F, P.coords) == P.coords


@pytest.mark.parametrize("q,n", [(2, 35), (3, 130)])
def test_line_counts_against_brute_force(q, n):
    F = make_field(q)
    lines = lines_of_space(F)
    assert len(lines) == n == (q * q + 1) * (q * q + q + 1)
    pts = points_of_space(F)
    brute = {line_through(F, P, Q) for i, P in enumerate(pts) for Q in pts[i + 1:]}
    assert brute == set(lines)


def test_line_through_example():
    F = make_field(3)
    L = line_through(F, (1, 0, 0, 0), (0, 1, 0, 0))
    assert L.basis == ((1, 0, 0, 0), (0, 1, 0, 0))
    with pytest.raises(GeometryError):
        line_through(F, (1, 0, 0, 0), (2, 0, 0, 0))


@pytest.mark.parametrize("pk", FIELDS)
def test_line_and_plane_sizes(pk):
    F = make_field(*pk)
    L = line_through(F, (1, 0, 1, 0), (0, 1, 0, 1))
    assert len(L.points(F)) == F.q + 1
    H = Plane((0, 1, 1, 0))
    assert len(points_of_plane(F, H)) == F.q**2 + F.q + 1


def test_skewness():
    F = make_field(3)
    XY = Line(((0, 0, 1, 0), (0, 0, 0, 1)))
    ZW = Line(((1, 0, 0, 0), (0, 1, 0, 0)))
    assert are_skew(F, XY, ZW)
    other = line_through(F, (0, 0, 1, 0), (1, 0, 0, 0))
    assert not are_skew(F, XY, other)
    assert not are_skew(F, XY, XY)
    assert meet_lines(F, XY, other) == Point((0, 0, 1, 0))
    assert meet_lines(F, XY, ZW) is None


def test_pencil_and_meets():
    F = make_field(3)
    XY = Line(((0, 0, 1, 0), (0, 0, 0, 1)))
    pencil = pencil_of_planes(F, XY)
    assert len(pencil) == 4
    assert all(H.covector[2] == H.covector[3] == 0 for H in pencil)
    ZW = Line(((1, 0, 0, 0), (0, 1, 0, 0)))
    assert meet_plane_line(F, Plane((1, 0, 0, 0)), ZW) == Point((0, 1, 0, 0))
    assert meet_plane_line(F, Plane((1, 0, 0, 0)), XY) == CONTAINED
    assert plane_through(F, ZW, (0, 0, 1, 0)) == Plane((0, 0, 0, 1))


def test_literals_round_trip():
    F = make_field(7)
    P = Point.parse(F, "2:5:0:1")
    assert str(P) == "1:6:0:4"
    L = Line.parse(F, "1:6:0:0;0:0:1:6")
    assert Line.parse(F, str(L)) == L
    with pytest.raises(GeometryError):
        Point.parse(F, "1:2:3")


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=8, max_size=8))
def test_line_canonical_form(vals):
    F = make_field(5)
    A, B = tuple(vals[:4]), tuple(vals[4:])
    if not any(A) or not any(B) or normalize(F, A) == normalize(F, B):
        return
    L = line_through(F, A, B)
    assert L.contains(F, A) and L.contains(F, B)
    pts = L.points(F)
    assert len(set(pts)) == 6
    # any two distinct points recover the same canonical basis
    assert line_through(F, pts[1].coords, pts[-1].coords) == L
