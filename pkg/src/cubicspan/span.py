"""Closure of a point set under the secant and tangent process.

For a surface S over F_q, the points of S(K) are indexed once and two tables
are precomputed from gradients:

* ``secant[i, j]``: index of the residual point on the line through points
  i != j, or -1 when that line lies on S;
* ``tangent[i]``: residual points R of the K-lines through point i inside
  its tangent plane (divisor 2P + R), lines on S skipped.

Closure is then a worklist over these tables: each newly added point is paired
with every point already processed ("new x all"), so every pair is seen once.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

import numpy as np

from .proj import Line, Point, normalize, projective_line_params
from .surface import (
    CubicSurface,
    NotOnSurface,
    classify_point,
    evaluate,
    evaluate_many,
    gradient,
    gradient_many,
    line_on_surface,
    secant_residual,
    surface_point_array,
    tangent_frame,
)


def _encode(q: int, arr: np.ndarray) -> np.ndarray:
    return ((arr[..., 0] * q + arr[..., 1]) * q + arr[..., 2]) * q + arr[..., 3]


def _normalize_rows(T, arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Scale rows of (..., 4) so the first nonzero entry is 1; also return the zero mask."""
    nz = arr != 0
    zero = ~nz.any(axis=-1)
    lead_pos = np.argmax(nz, axis=-1)
    lead = np.take_along_axis(arr, lead_pos[..., None], axis=-1)[..., 0]
    inv = T.inv_t[lead]
    return T.mul(inv[..., None], arr), zero


class SpanTables:
    """Indexed S(K) with secant and tangent residual tables."""

    def __init__(self, S: CubicSurface):
        F = S.field
        T = F.dense
        q = F.q
        self.surface = S
        pts = surface_point_array(S)
        self.points = pts
        self.n = n = pts.shape[0]
        codes = _encode(q, pts)
        order = np.argsort(codes)
        self._sorted_codes = codes[order]
        self._sorted_index = order
        self.grads = gradient_many(S, pts)
        if n == 0:
            self.secant = np.zeros((0, 0), dtype=np.int64)
            self.tangent = []
            return

        # C[i, j] = grad F(P_i) . P_j
        C = T.sum(T.mul(self.grads[:, None, :], pts[None, :, :]), axis=-1)
        # R_ij = C[j, i] P_i - C[i, j] P_j
        R = T.sub(T.mul(C.T[:, :, None], pts[:, None, :]), T.mul(C[:, :, None], pts[None, :, :]))
        R, zero = _normalize_rows(T, R)
        idx = self.lookup(R)
        idx[zero] = -1
        np.fill_diagonal(idx, -1)
        self.secant = idx

        # tangent residuals: for direction D in the tangent plane at P,
        # F(sP + tD) = t^2 (c1 s + c0 t) with c1 = grad F(D) . P, c0 = F(D)
        params = projective_line_params(F)
        m = len(params)
        dirs = np.empty((n, m, 4), dtype=np.int64)
        uv = np.array(params, dtype=np.int64)
        for i in range(n):
            D1, D2 = tangent_frame(S, tuple(int(x) for x in pts[i]))
            D1 = np.asarray(D1, dtype=np.int64)
            D2 = np.asarray(D2, dtype=np.int64)
            dirs[i] = T.add(T.mul(uv[:, :1], D1[None, :]), T.mul(uv[:, 1:], D2[None, :]))
        flat = dirs.reshape(n * m, 4)
        c0 = evaluate_many(S, flat).reshape(n, m)
        gD = gradient_many(S, flat).reshape(n, m, 4)
        c1 = T.sum(T.mul(gD, pts[:, None, :]), axis=-1)
        Rt = T.sub(T.mul(c0[:, :, None], pts[:, None, :]), T.mul(c1[:, :, None], dirs))
        Rt, tzero = _normalize_rows(T, Rt)
        tidx = self.lookup(Rt)
        self.tangent = [np.unique(tidx[i][~tzero[i]]) for i in range(n)]

    def lookup(self, arr: np.ndarray) -> np.ndarray:
        """Indices of normalized points; -1 for points not on S."""
        codes = _encode(self.surface.field.q, arr)
        pos = np.searchsorted(self._sorted_codes, codes)
        pos = np.minimum(pos, len(self._sorted_codes) - 1)
        hit = self._sorted_codes[pos] == codes
        return np.where(hit, self._sorted_index[pos], -1)

    def index_of(self, P) -> int:
        i = int(self.lookup(np.asarray(tuple(P), dtype=np.int64)[None, :])[0])
        if i < 0:
            raise NotOnSurface(f"{Point(tuple(P))} is not on the surface")
        return i

    def point(self, i: int) -> Point:
        return Point(tuple(int(x) for x in self.points[i]))

    def closure_mask(
        self,
        seeds,
        order_rng: random.Random | None = None,
        stop_when_full: bool = True,
        known: np.ndarray | None = None,
    ) -> np.ndarray:
        """Member mask of Span(seeds).

        ``known`` optionally marks points already known to generate S(K);
        reaching one of them ends the search with the full mask.
        """
        member = np.zeros(self.n, dtype=bool)
        if known is not None and known[list(seeds)].any():
            return np.ones(self.n, dtype=bool)
        processed = np.zeros(self.n, dtype=bool)
        queue = deque()
        for i in seeds:
            if not member[i]:
                member[i] = True
                queue.append(i)
        count = int(member.sum())
        while queue:
            if stop_when_full and count == self.n:
                break
            if order_rng is not None and len(queue) > 1:
                k = order_rng.randrange(len(queue))
                queue.rotate(-k)
            i = queue.popleft()
            processed[i] = True
            cand = np.concatenate([self.tangent[i], self.secant[i, processed]])
            cand = cand[cand >= 0]
            new = np.unique(cand[~member[cand]])
            if new.size:
                member[new] = True
                count += new.size
                if known is not None and known[new].any():
                    return np.ones(self.n, dtype=bool)
                if order_rng is not None:
                    new = list(new)
                    order_rng.shuffle(new)
                queue.extend(int(x) for x in new)
        return member

    def levels(self, seeds) -> list[np.ndarray]:
        """B_0, B_1, ... computed round by round over all pairs (slow reference route)."""
        member = np.zeros(self.n, dtype=bool)
        member[list(seeds)] = True
        out = [member.copy()]
        while True:
            idx = np.flatnonzero(member)
            nxt = member.copy()
            sub = self.secant[np.ix_(idx, idx)]
            nxt[sub[sub >= 0]] = True
            for i in idx:
                nxt[self.tangent[i]] = True
            if (nxt == member).all():
                return out
            member = nxt
            out.append(member.copy())


@lru_cache(maxsize=32)
def span_tables(S: CubicSurface) -> SpanTables:
    return SpanTables(S)


@dataclass
class SpanState:
    """Incremental closure state over the indexed S(K)."""

    tables: SpanTables
    member: np.ndarray
    processed: np.ndarray
    worklist: deque
    generation: int = 0

    @classmethod
    def start(cls, S: CubicSurface, B) -> "SpanState":
        tables = span_tables(S)
        member = np.zeros(tables.n, dtype=bool)
        work = deque()
        for P in B:
            i = tables.index_of(P)
            if not member[i]:
                member[i] = True
                work.append(i)
        return cls(tables, member, np.zeros(tables.n, dtype=bool), work)

    def step(self) -> int:
        """Process one worklist entry; returns the number of points added."""
        t = self.tables
        i = self.worklist.popleft()
        self.processed[i] = True
        cand = np.concatenate([t.tangent[i], t.secant[i, self.processed]])
        cand = cand[cand >= 0]
        new = np.unique(cand[~self.member[cand]])
        self.member[new] = True
        self.worklist.extend(int(x) for x in new)
        self.generation += 1
        return int(new.size)

    def run(self) -> "SpanState":
        while self.worklist:
            self.step()
        return self

    def points(self) -> set[Point]:
        return {self.tables.point(i) for i in np.flatnonzero(self.member)}


# -- public operations ------------------------------------------------------------

def secant_candidates(S: CubicSurface, P, Q) -> Point | None:
    if tuple(P) == tuple(Q):
        raise ValueError("secant_candidates needs distinct points")
    for X in (P, Q):
        if evaluate(S, X):
            raise NotOnSurface(f"{Point(tuple(X))} is not on the surface")
    return secant_residual(S, tuple(P), tuple(Q))


def tangent_candidates(S: CubicSurface, P) -> set[Point]:
    """Residuals R with l . S = 2P + R over the K-lines l through P in its tangent plane."""
    F = S.field
    P = tuple(P)
    if evaluate(S, P):
        raise NotOnSurface(f"{Point(P)} is not on the surface")
    D1, D2 = tangent_frame(S, P)
    out = set()
    for u, v in projective_line_params(F):
        D = F.axpy(u, D1, v, D2)
        c1 = F.dot(gradient(S, D), P)
        c0 = evaluate(S, D)
        if not c1 and not c0:
            continue
        R = F.axpy(c0, P, F.neg(c1), D)
        out.add(Point(normalize(F, R)))
    return out


def span_closure(S: CubicSurface, B) -> set[Point]:
    t = span_tables(S)
    seeds = [t.index_of(P) for P in B]
    mask = t.closure_mask(seeds)
    return {t.point(i) for i in np.flatnonzero(mask)}


def span_size(S: CubicSurface, B) -> int:
    t = span_tables(S)
    return int(t.closure_mask([t.index_of(P) for P in B]).sum())


def is_generator(S: CubicSurface, P) -> bool:
    t = span_tables(S)
    return bool(t.closure_mask([t.index_of(P)]).all())


def generates(S: CubicSurface, B) -> bool:
    t = span_tables(S)
    return bool(t.closure_mask([t.index_of(P) for P in B]).all())


@dataclass
class GeneratorReport:
    surface: str
    n_points: int
    verdicts: dict[str, int] = field(default_factory=dict)
    min_size: int | str | None = None
    witnesses: list[list[str]] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(
            {
                "surface": self.surface,
                "n_points": self.n_points,
                "verdicts": self.verdicts,
                "min_size": self.min_size,
                "witnesses": self.witnesses,
            },
            sort_keys=True,
        )


def generator_report(S: CubicSurface, cap: int = 10_000) -> GeneratorReport:
    """Test all single points, then up to ``cap`` pairs, for generating S(K)."""
    t = span_tables(S)
    rep = GeneratorReport(str(S), t.n)
    singles = []
    for i in range(t.n):
        size = int(t.closure_mask([i], stop_when_full=False).sum())
        rep.verdicts[str(t.point(i))] = size
        if size == t.n:
            singles.append(i)
    if t.n == 0:
        rep.min_size = 0
        return rep
    if singles:
        rep.min_size = 1
        rep.witnesses = [[str(t.point(i))] for i in singles]
    else:
        for k, (i, j) in enumerate(combinations(range(t.n), 2)):
            if k >= cap:
                break
            if t.closure_mask([i, j]).all():
                rep.min_size = 2
                rep.witnesses = [[str(t.point(i)), str(t.point(j))]]
                break
        if rep.min_size is None:
            rep.min_size = ">2 (capped)"
    # re-verify witnesses through a fresh closure
    for w in rep.witnesses:
        pts = [Point.parse(S.field, x) for x in w]
        assert generates(S, pts), "witness failed re-verification"
    return rep


def line_points_on_surface(S: CubicSurface, ell: Line) -> list[Point]:
    if not line_on_surface(S, ell):
        raise ValueError("line is not on the surface")
    return ell.points(S.field)


def non_eckardt_points(S: CubicSurface, ell: Line) -> list[Point]:
    return [P for P in ell.points(S.field) if not classify_point(S, P).is_eckardt]
