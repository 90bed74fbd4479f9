"""Exhaustive censuses over parametrized families and sampled verification runs.

Every run produces a :class:`CensusReport`.  Exhaustive runs walk the model
index range in fixed strides; each stride is an independent job, so strides
can be farmed out to worker processes and merged in index order, and the
running tally can be written to a cursor file after every stride.
"""

from __future__ import annotations

import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache

import numpy as np

from .families import ELL, Family, f2_family, f3_family, f3_superset, family_by_name, random_containing_ell
from .gf import field_of_order, make_field
from .lemmas import SurfaceView, applicable_checks, check_surface
from .monomials import derivative_terms
from .proj import Point, are_skew
from .span import SpanTables
from .surface import (
    CubicSurface,
    is_eckardt,
    is_smooth,
    k_lines_on_surface,
    monomial_values,
    parse_surface,
    space_array,
    strict_smooth,
)

STRIDE = 4096
THEOREM_FIELDS = (4, 5, 7, 8, 9, 11)
SAMPLE_BLOCK = 32


@dataclass
class CensusReport:
    family: str
    q: int
    total: int = 0
    smooth: int = 0
    eligible: int = 0
    verified: int = 0
    counterexamples: list = field(default_factory=list)
    seed: int | None = None
    elapsed_ms: int = 0
    checkpoint: int = 0
    details: dict = field(default_factory=dict)

    @property
    def singular(self) -> int:
        return self.total - self.smooth

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        d["singular"] = self.singular
        if not timing:
            d.pop("elapsed_ms")
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "CensusReport":
        d = dict(d)
        d.pop("singular", None)
        return cls(**d)


# -- tallies --------------------------------------------------------------------------

def _new_tally() -> dict:
    return {"counts": Counter(), "lists": {}}


def _merge(into: dict, other: dict) -> None:
    into["counts"].update(other["counts"])
    for k, v in other["lists"].items():
        into["lists"].setdefault(k, []).extend(v)


def _tally_to_json(t: dict) -> dict:
    return {"counts": dict(sorted(t["counts"].items())), "lists": t["lists"]}


def _tally_from_json(d: dict) -> dict:
    return {"counts": Counter(d["counts"]), "lists": {k: list(v) for k, v in d["lists"].items()}}


# -- cheap rational singular filter -----------------------------------------------------

class BatchSingularFilter:
    """Detects singular points over F_{p^m} for many prime-field surfaces at once.

    F and its partials at a fixed point are F_p-linear in the 20 coefficients,
    so one matrix product evaluates all of them at every point, digit by digit.
    """

    def __init__(self, p: int, degrees=(1, 2)):
        self.p = p
        mats = []
        for m in degrees:
            ext = make_field(p, m)
            pts = space_array(ext)
            cv = monomial_values(ext, pts, 3)  # (N, 20)
            qv = monomial_values(ext, pts, 2)  # (N, 10)
            n = pts.shape[0]
            digits = np.zeros((20, n, 5, m), dtype=np.int64)
            # partial d/dx_v gets factor * (quadric value) from each cubic monomial
            qd = _digits(qv, p, m)  # (N, 10, m)
            for v in range(4):
                for ci, qi, f in derivative_terms(v):
                    digits[ci, :, v + 1, :] = (f * qd[:, qi, :]) % p
            digits[:, :, 0, :] = np.moveaxis(_digits(cv, p, m), 1, 0)
            mats.append((n, m, digits.reshape(20, -1).astype(np.float64)))
        self.mats = mats

    def singular(self, coeffs: np.ndarray) -> np.ndarray:
        """Boolean mask over rows of ``coeffs`` (B x 20 over F_p)."""
        C = np.asarray(coeffs, dtype=np.float64)
        out = np.zeros(C.shape[0], dtype=bool)
        for n, m, W in self.mats:
            live = np.flatnonzero(~out)
            if live.size == 0:
                break
            V = np.rint(C[live] @ W).astype(np.int64) % self.p
            zero = ~V.reshape(live.size, n, 5 * m).any(axis=2)
            out[live] = zero.any(axis=1)
        return out


def _digits(arr: np.ndarray, p: int, m: int) -> np.ndarray:
    out = np.empty(arr.shape + (m,), dtype=np.int64)
    rest = arr.copy()
    for d in range(m):
        out[..., d] = rest % p
        rest //= p
    return out


@lru_cache(maxsize=None)
def _filter(p: int) -> BatchSingularFilter:
    return BatchSingularFilter(p, (1, 2) if p <= 3 else (1,))


# -- per-model verdicts -------------------------------------------------------------------

def _line_spans(S: CubicSurface, t: SpanTables) -> tuple[list[int], list[bool], list[bool]]:
    """Indices of ELL(K), Eckardt flags and generator flags."""
    idx = [t.index_of(P.coords) for P in ELL.points(S.field)]
    eck = [is_eckardt(S, tuple(int(x) for x in t.points[i])) for i in idx]
    gens = [bool(t.closure_mask([i]).all()) for i in idx]
    return idx, eck, gens


def _reconfirm(S: CubicSurface, need_non_eckardt: bool) -> bool:
    """Independent re-check of a failure: strict smoothness and round-based closure."""
    if not strict_smooth(S):
        return False
    t = SpanTables(S)
    for P in ELL.points(S.field):
        i = t.index_of(P.coords)
        if need_non_eckardt and is_eckardt(S, P.coords):
            continue
        if t.levels([i])[-1].all():
            return False
    return True


def _has_skew_partner(S: CubicSurface) -> bool:
    return any(are_skew(S.field, ELL, L) for L in k_lines_on_surface(S) if L != ELL)


def _f2_verdict(index: int, S: CubicSurface, tally: dict) -> None:
    c = tally["counts"]
    t = SpanTables(S)
    idx, eck, gens = _line_spans(S, t)
    c[f"points_{t.n}"] += 1
    if not any(eck):
        c["eligible"] += 1
        if any(gens):
            c["verified"] += 1
        elif _reconfirm(S, need_non_eckardt=False):
            tally["lists"].setdefault("counterexamples", []).append(
                {"index": index, "surface": str(S), "n_points": t.n, "eckardt_on_line": 0}
            )
        else:
            c["failure_not_reconfirmed"] += 1
    else:
        c["with_eckardt_on_line"] += 1
        if any(gens):
            c["with_eckardt_on_line_generating"] += 1
        else:
            tally["lists"].setdefault("with_eckardt_no_generator", []).append(
                {"index": index, "surface": str(S), "eckardt_on_line": sum(eck)}
            )


def _f3_verdict(index: int, S: CubicSurface, tally: dict) -> None:
    c = tally["counts"]
    t = SpanTables(S)
    idx, eck, gens = _line_spans(S, t)
    n_eck = sum(eck)
    ok = any(g and not e for g, e in zip(gens, eck))
    c[f"eckardt_on_line_{n_eck}"] += 1
    skew = _has_skew_partner(S)
    c["with_skew_partner" if skew else "without_skew_partner"] += 1
    if any(gens) and not ok:
        c["only_eckardt_generators"] += 1
    if n_eck == 1:
        c["eligible"] += 1
        if ok:
            c["verified"] += 1
        elif _reconfirm(S, need_non_eckardt=True):
            tally["lists"].setdefault("counterexamples", []).append(
                {
                    "index": index,
                    "surface": str(S),
                    "n_points": t.n,
                    "eckardt_on_line": n_eck,
                    "skew_partner": skew,
                }
            )
        else:
            c["failure_not_reconfirmed"] += 1
    elif not ok:
        tally["lists"].setdefault("failures_outside_hypothesis", []).append(
            {"index": index, "surface": str(S), "eckardt_on_line": n_eck, "skew_partner": skew}
        )


def _verdict_for(name: str):
    return _f2_verdict if name == "f2" else _f3_verdict


def scan_range(family: Family, start: int, stop: int) -> dict:
    """Tally for model indices [start, stop)."""
    tally = _new_tally()
    c = tally["counts"]
    idx = np.arange(start, stop, dtype=np.int64)
    coeffs = family.coeffs(idx)
    nonzero = coeffs.any(axis=1)
    cheap_singular = _filter(family.p).singular(coeffs)
    c["total"] += len(idx)
    c["zero_form"] += int((~nonzero).sum())
    c["cheap_rejected"] += int((nonzero & cheap_singular).sum())
    verdict = _verdict_for(family.name)
    F = family.field
    for j in np.flatnonzero(nonzero & ~cheap_singular):
        S = CubicSurface(F, tuple(int(x) for x in coeffs[j]))
        if not is_smooth(S):
            continue
        c["smooth"] += 1
        verdict(int(idx[j]), S, tally)
    return tally


def _scan_job(args) -> dict:
    name, start, stop = args
    return scan_range(family_by_name(name), start, stop)


def _write_checkpoint(path: str, family: str, cursor: int, tally: dict) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump({"family": family, "cursor": cursor, "tally": _tally_to_json(tally)}, fh, sort_keys=True)
    os.replace(tmp, path)


def _read_checkpoint(path: str, family: str) -> tuple[int, dict] | None:
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        d = json.load(fh)
    if d.get("family") != family:
        raise ValueError(f"checkpoint {path} belongs to family {d.get('family')!r}")
    return int(d["cursor"]), _tally_from_json(d["tally"])


def run_family(
    family: Family,
    workers: int = 1,
    checkpoint: str | None = None,
    stop: int | None = None,
    stride: int = STRIDE,
) -> CensusReport:
    """Enumerate family models [0, stop) (default: all), resuming from ``checkpoint``."""
    t0 = time.perf_counter()
    end = family.total if stop is None else min(stop, family.total)
    cursor, tally = 0, _new_tally()
    resumed = _read_checkpoint(checkpoint, family.name) if checkpoint else None
    if resumed:
        cursor, tally = resumed
    jobs = [(family.name, s, min(s + stride, end)) for s in range(cursor, end, stride)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = ex.map(_scan_job, jobs)
            for (_, _, hi), part in zip(jobs, results):
                _merge(tally, part)
                cursor = hi
                if checkpoint:
                    _write_checkpoint(checkpoint, family.name, cursor, tally)
    else:
        for _, lo, hi in jobs:
            _merge(tally, scan_range(family, lo, hi))
            cursor = hi
            if checkpoint:
                _write_checkpoint(checkpoint, family.name, cursor, tally)
    return _report_from_tally(family.name, family.p, tally, cursor, t0)


def _report_from_tally(name: str, q: int, tally: dict, cursor: int, t0: float, seed=None) -> CensusReport:
    c = Counter(tally["counts"])
    lists = dict(tally["lists"])
    rep = CensusReport(
        family=name,
        q=q,
        total=c.pop("total", 0),
        smooth=c.pop("smooth", 0),
        eligible=c.pop("eligible", 0),
        verified=c.pop("verified", 0),
        counterexamples=lists.pop("counterexamples", []),
        seed=seed,
        checkpoint=cursor,
    )
    rep.details = {"counts": dict(sorted(c.items())), **{k: v for k, v in sorted(lists.items())}}
    rep.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    return rep


def census_f2(workers: int = 1, checkpoint: str | None = None) -> CensusReport:
    return run_family(f2_family(), workers, checkpoint)


def census_f3_family(interpretation: str = "eYW", workers: int = 1, checkpoint: str | None = None) -> CensusReport:
    return run_family(f3_family(interpretation), workers, checkpoint)


def census_f3_superset(workers: int = 1, checkpoint: str | None = None) -> CensusReport:
    return run_family(f3_superset(), workers, checkpoint)


# -- sampled runs -----------------------------------------------------------------------

def sample_rng(seed: int, attempt: int) -> np.random.Generator:
    """Independent counter-based stream for one sampling attempt."""
    return np.random.Generator(np.random.Philox(key=int(seed), counter=[0, int(attempt), 0, 0]))


def _theorem_attempt(args) -> dict:
    q, seed, attempt = args
    F = field_of_order(q)
    S = random_containing_ell(F, sample_rng(seed, attempt))
    res = {"attempt": attempt, "smooth": False, "kept": False}
    if S is None or not is_smooth(S):
        return res
    res["smooth"] = True
    V = SurfaceView(S)
    partners = V.skew_partners(ELL)
    if not partners:
        return res
    res["kept"] = True
    res["partners"] = len(partners)
    res["surface"] = str(S)
    checked = failures = eck = 0
    fails = []
    for L in [ELL, *partners]:
        for i in V.on_line(L):
            if V.eckardt(i):
                eck += 1
                continue
            checked += 1
            if not V.generates([i]):
                failures += 1
                fails.append({"line": str(L), "point": V.point(i)})
    res.update(points_checked=checked, eckardt_skipped=eck, failures=fails)
    return res


def _run_sampler(job, make_args, n_samples: int, workers: int, max_attempts: int):
    """Yield per-attempt results in attempt order until ``n_samples`` are kept."""
    kept = 0
    attempt = 0
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while kept < n_samples and attempt < max_attempts:
            block = [make_args(a) for a in range(attempt, min(attempt + SAMPLE_BLOCK, max_attempts))]
            attempt += len(block)
            results = pool.map(job, block) if pool else map(job, block)
            for r in results:
                if kept >= n_samples:
                    break
                yield r
                kept += bool(r["kept"])
    finally:
        if pool:
            pool.shutdown()


def verify_main_theorem(q: int, n_samples: int = 100, seed: int = 0, workers: int = 1) -> CensusReport:
    """Sample smooth X*Q1 + Y*Q2 over F_q with a K-line skew to X = Y = 0 and
    check that every non-Eckardt K-point on those lines generates S(K)."""
    if q not in THEOREM_FIELDS:
        raise ValueError(f"q must be one of {THEOREM_FIELDS}")
    t0 = time.perf_counter()
    tally = _new_tally()
    c = tally["counts"]
    last = -1
    for r in _run_sampler(_theorem_attempt, lambda a: (q, seed, a), n_samples, workers, 400 * n_samples):
        last = r["attempt"]
        c["total"] += 1
        c["smooth"] += r["smooth"]
        if not r["kept"]:
            continue
        c["eligible"] += 1
        c["points_checked"] += r["points_checked"]
        c["eckardt_skipped"] += r["eckardt_skipped"]
        if not r["failures"]:
            c["verified"] += 1
            continue
        S = parse_surface(r["surface"])
        if strict_smooth(S) and _failures_reconfirmed(S, r["failures"]):
            tally["lists"].setdefault("counterexamples", []).append(
                {"attempt": r["attempt"], "surface": r["surface"], "failures": r["failures"]}
            )
        else:
            c["failure_not_reconfirmed"] += 1
    return _report_from_tally(f"theorem-q{q}", q, tally, last + 1, t0, seed)


def _failures_reconfirmed(S: CubicSurface, failures: list[dict]) -> bool:
    t = SpanTables(S)
    for f in failures:
        i = t.index_of(Point.parse(S.field, f["point"]).coords)
        if t.levels([i])[-1].all():
            return False
    return True


def _lemma_attempt(args) -> dict:
    q, seed, attempt = args
    F = field_of_order(q)
    S = random_containing_ell(F, sample_rng(seed, attempt))
    res = {"attempt": attempt, "smooth": False, "kept": False}
    if S is None or not is_smooth(S):
        return res
    res["smooth"] = res["kept"] = True
    res["checks"] = {
        name: {"checked": t.checked, "passed": t.passed, "failures": t.failures}
        for name, t in check_surface(S).items()
    }
    return res


def lemma_suite(q: int, n_samples: int = 50, seed: int = 0, workers: int = 1) -> CensusReport:
    """Run every applicable property check on ``n_samples`` sampled smooth surfaces."""
    if q > 11:
        raise ValueError("lemma suite supports q <= 11")
    F = field_of_order(q)
    t0 = time.perf_counter()
    tally = _new_tally()
    c = tally["counts"]
    per = {name: {"checked": 0, "passed": 0} for name in applicable_checks(q, F.p)}
    last = -1
    for r in _run_sampler(_lemma_attempt, lambda a: (q, seed, a), n_samples, workers, 400 * n_samples):
        last = r["attempt"]
        c["total"] += 1
        c["smooth"] += r["smooth"]
        if not r["kept"]:
            continue
        for name, v in r["checks"].items():
            per[name]["checked"] += v["checked"]
            per[name]["passed"] += v["passed"]
            c["eligible"] += v["checked"]
            c["verified"] += v["passed"]
            for f in v["failures"]:
                if strict_smooth(parse_surface(f["surface"])):
                    tally["lists"].setdefault("counterexamples", []).append({"check": name, **f})
    rep = _report_from_tally(f"lemma-suite-q{q}", q, tally, last + 1, t0, seed)
    rep.details["samples"] = rep.smooth
    rep.details["checks"] = per
    return rep


__all__ = [
    "BatchSingularFilter",
    "CensusReport",
    "STRIDE",
    "THEOREM_FIELDS",
    "census_f2",
    "census_f3_family",
    "census_f3_superset",
    "lemma_suite",
    "run_family",
    "sample_rng",
    "scan_range",
    "verify_main_theorem",
]
