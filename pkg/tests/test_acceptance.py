"""Acceptance criteria; each test appends one PASS/FAIL line to the summary."""

import random
import time
from itertools import combinations

import numpy as np

from cubicspan.census import (
    census_f2,
    census_f3_family,
    census_f3_superset,
    verify_main_theorem,
)
from cubicspan.families import f2_family, f3_family, f3_superset, random_containing_ell
from cubicspan.gf import make_field
from cubicspan.lemmas import check_parabolic
from cubicspan.proj import base_change_line, lines_of_space, meet_lines, plane_of_lines
from cubicspan.span import SpanTables
from cubicspan.surface import (
    CubicSurface,
    SingularSearch,
    is_smooth,
    k_lines_on_surface,
    lines_over_extension,
    restrict_to_line,
)

from conftest import fermat


def report(log, n, ok, msg):
    log.append(f"{'PASS' if ok else 'FAIL'} criterion {n}: {msg}")
    return ok


def test_criterion_1_f2_census(acceptance_log):
    t0 = time.perf_counter()
    rep = census_f2()
    secs = time.perf_counter() - t0
    ok = rep.total == 65536 and rep.eligible > 0 and rep.verified == rep.eligible and not rep.counterexamples
    ok &= secs <= 600
    report(
        acceptance_log, 1, ok,
        f"F2 census {rep.total} models, {rep.smooth} smooth, {rep.eligible} with Eckardt-free line, "
        f"{len(rep.counterexamples)} counterexamples, {secs:.0f} s",
    )
    assert ok


def test_criterion_2_f3_family(acceptance_log):
    parts = []
    ok = True
    for interp in ("eYW", "printed"):
        t0 = time.perf_counter()
        rep = census_f3_family(interp)
        secs = time.perf_counter() - t0
        outside = rep.details.get("failures_outside_hypothesis", [])
        ok &= rep.total == 2187 and rep.eligible > 0 and rep.verified == rep.eligible
        ok &= not rep.counterexamples and secs <= 120
        ok &= all(f["eckardt_on_line"] >= 2 for f in outside)
        parts.append(f"{interp}: {rep.eligible} eligible, {len(outside)} outside-hypothesis failures, {secs:.0f} s")
    report(acceptance_log, 2, ok, "F3 family 2187 models, 0 counterexamples; " + "; ".join(parts))
    assert ok


def test_criterion_3_f3_superset(acceptance_log):
    sup = f3_superset()
    sup_rows = {tuple(r) for r in sup.coeffs(np.arange(sup.total))}
    contains = all(
        {tuple(r) for r in f3_family(i).coeffs(np.arange(3**7))} <= sup_rows for i in ("eYW", "printed")
    )
    t0 = time.perf_counter()
    rep = census_f3_superset()
    secs = time.perf_counter() - t0
    ok = contains and rep.total == 59049 and rep.verified == rep.eligible and not rep.counterexamples
    ok &= secs <= 1800
    report(
        acceptance_log, 3, ok,
        f"F3 superset {rep.total} models, {rep.eligible} eligible, {len(rep.counterexamples)} counterexamples, "
        f"contains both readings: {contains}, {secs:.0f} s",
    )
    assert ok


def test_criterion_4_theorem_sampling(acceptance_log):
    t0 = time.perf_counter()
    parts = []
    ok = True
    for q in (4, 5, 7, 8, 9, 11):
        rep = verify_main_theorem(q, n_samples=100, seed=1)
        ok &= rep.eligible >= 100 and rep.verified == rep.eligible and not rep.counterexamples
        parts.append(f"q={q}: {rep.eligible} surfaces, {rep.details['counts'].get('points_checked', 0)} points")
    secs = time.perf_counter() - t0
    ok &= secs <= 1800
    report(acceptance_log, 4, ok, f"one-point generation, 0 failures ({secs:.0f} s); " + "; ".join(parts))
    assert ok


def test_criterion_5_parabolic_counts(acceptance_log):
    rng = np.random.default_rng(5)
    bad = []
    per_char = {}
    kinds = {"separable": 0, "inseparable": 0}
    for q in (2, 4, 3, 5, 7, 11):
        F = make_field(*{2: (2, 1), 4: (2, 2)}.get(q, (q, 1)))
        kept = 0
        while kept < 50:
            S = random_containing_ell(F, rng)
            if S is None or not is_smooth(S):
                continue
            kept += 1
            for L in k_lines_on_surface(S):
                ok, ctx = check_parabolic(S, L)
                kinds["separable" if ctx["separable"] else "inseparable"] += 1
                if not ok:
                    bad.append(ctx)
        per_char[F.p] = per_char.get(F.p, 0) + kept
    for k in (1, 2):
        S = fermat(make_field(2, k))
        for L in k_lines_on_surface(S):
            ok, ctx = check_parabolic(S, L)
            kinds["separable" if ctx["separable"] else "inseparable"] += 1
            if not ok:
                bad.append(ctx)
    ok = not bad and min(per_char.values()) >= 50 and kinds["inseparable"] > 0
    report(
        acceptance_log, 5, ok,
        f"parabolic counts on {kinds['separable']} separable and {kinds['inseparable']} inseparable lines, "
        f"samples per characteristic {per_char}, {len(bad)} mismatches",
    )
    assert ok, bad[:3]


def _five_pairs(F, lines, L) -> bool:
    """The 10 lines meeting L split into 5 pairs, each pair coplanar with L."""
    meeting = [M for M in lines if M != L and meet_lines(F, L, M) is not None]
    if len(meeting) != 10:
        return False
    pairs = [
        (M, N) for M, N in combinations(meeting, 2)
        if meet_lines(F, M, N) is not None and plane_of_lines(F, L, M) == plane_of_lines(F, L, N)
    ]
    return len(pairs) == 5 and len({X for pr in pairs for X in pr}) == 10


def test_criterion_6_cayley_salmon(acceptance_log):
    fam = f2_family()
    checked = 0
    full = None
    ok = True
    for idx in range(fam.total):
        if checked >= 5 and full is not None:
            break
        S = fam.surface(idx)
        if S is None or not is_smooth(S):
            continue
        checked += 1
        found = {m: lines_over_extension(S, m) for m in range(1, 7)}
        counts = {m: len(v[1]) for m, v in found.items()}
        ok &= max(counts.values()) <= 27
        for a in range(1, 7):
            for b in range(a, 7):
                if b % a == 0:
                    ok &= counts[a] <= counts[b]
                    src, dst = found[a][0].field, found[b][0].field
                    ok &= all(base_change_line(src, dst, L) in set(found[b][1]) for L in found[a][1])
        if full is None:
            for m in range(1, 7):
                if counts[m] == 27:
                    full = (idx, m, found[m])
                    break
    pair_ok = False
    if full is not None:
        T, lines = full[2]
        pair_ok = all(_five_pairs(T.field, lines, L) for L in lines)
    ok &= checked >= 5 and pair_ok
    report(
        acceptance_log, 6, ok,
        f"{checked} F2 census surfaces, counts <= 27 and monotone in m | m'; "
        f"model {full[0] if full else None} has 27 lines over F_(2^{full[1] if full else '?'}), five coplanar pairs: {pair_ok}",
    )
    assert ok


def test_criterion_7_smoothness_oracle(acceptance_log):
    rng = np.random.default_rng(7)
    disagreements = 0
    tallies = {}
    for p in (2, 3):
        F = make_field(p)
        searches = [SingularSearch(F, m) for m in range(1, 5)]
        smooth = 0
        for _ in range(1000):
            c = tuple(int(x) for x in rng.integers(0, p, size=20))
            if not any(c):
                c = (1,) + c[1:]
            S = CubicSurface(F, c)
            rank_says = is_smooth(S)
            brute_says = not any(s.has_singular_point(S) for s in searches)
            smooth += brute_says
            disagreements += rank_says != brute_says
        tallies[p] = smooth
        del searches
    ok = disagreements == 0
    report(
        acceptance_log, 7, ok,
        f"rank test vs singular search over F_(q^m), m <= 4: 2000 surfaces, smooth counts {tallies}, "
        f"{disagreements} disagreements",
    )
    assert ok


def _saturated(S, t: SpanTables, mask, lines) -> bool:
    """Every line of P^3 not on S whose divisor is K-rational is closed under 'two in, third in'."""
    for L in lines:
        f = restrict_to_line(S, L)
        if f.is_zero():
            continue
        roots = f.rational_roots()
        if sum(m for _, m in roots) != 3:
            continue
        pts = []
        for (s, u), m in roots:
            pts += [t.index_of(f.point(s, u).coords)] * m
        for k in range(3):
            rest = pts[:k] + pts[k + 1:]
            if mask[rest].all() and not mask[pts[k]]:
                return False
    return True


def test_criterion_8_closure_properties(acceptance_log):
    rng = np.random.default_rng(8)
    fields = [make_field(2), make_field(3), make_field(2, 2)]
    all_lines = {F.q: lines_of_space(F) for F in fields}
    violations = {"extensive": 0, "monotone": 0, "idempotent": 0, "saturated": 0, "order": 0}
    done = 0
    while done < 200:
        F = fields[done % 3]
        c = tuple(int(x) for x in rng.integers(0, F.q, size=20))
        S = CubicSurface(F, c) if any(c) else None
        if S is None or not is_smooth(S):
            continue
        t = SpanTables(S)
        if t.n == 0:
            continue
        done += 1
        k = int(rng.integers(1, min(3, t.n) + 1))
        B = [int(x) for x in rng.choice(t.n, size=k, replace=False)]
        B2 = B + [int(rng.integers(t.n))]
        m = t.closure_mask(B, stop_when_full=False)
        m2 = t.closure_mask(B2, stop_when_full=False)
        violations["extensive"] += not m[B].all()
        violations["monotone"] += not (m2 >= m).all()
        again = t.closure_mask(list(np.flatnonzero(m)), stop_when_full=False)
        violations["idempotent"] += not (again == m).all()
        violations["saturated"] += not _saturated(S, t, m, all_lines[F.q])
        for r in range(3):
            shuffled = t.closure_mask(B, order_rng=random.Random(r), stop_when_full=False)
            if not (shuffled == m).all():
                violations["order"] += 1
                break
    total = sum(violations.values())
    ok = total == 0
    report(acceptance_log, 8, ok, f"closure laws on {done} instances at q in {{2, 3, 4}}, violations {violations}")
    assert ok
