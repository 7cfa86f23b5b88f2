"""Acceptance checks, one test per criterion, each printing a PASS/FAIL line."""

import time
from pathlib import Path

import pytest

from dstream import _kernels, _pykernels, quality, steady, stretched, tilted
from dstream.chronology import MIN_SIZE, epoch_of
from dstream.oracle import (
    GOALS,
    ReplayState,
    closed_form_stretched,
    closed_form_tilted,
    goal_stretched,
    goal_tilted,
    reservation_count,
)

MODULES = {"steady": steady, "stretched": stretched, "tilted": tilted}


@pytest.fixture
def report(capsys):
    def emit(n, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail

    return emit


def retained_at(module, S, T):
    return [v for v in module.lookup(S, T) if v is not None]


def test_criterion_01_golden_tables(report):
    E = None
    want = {
        "steady": {
            **dict(enumerate([0, 1, 6, 2, 10, 7, 13, 3, 16, 11, 18, 8, 20])),
            **dict(zip(range(31, 41), [5, E, 24, E, 16, E, 25, E, 10, E])),
        },
        "stretched": {
            **dict(enumerate([0, 1, 17, 2, 10, 18, 25, 3, 7, 11, 14, 19, 22])),
            **dict(zip(range(28, 32), [28, 30, 31, 5])),
            **dict(zip(range(32, 41), [E, E, E, 9, E, E, E, 13, E])),
        },
        "tilted": {
            **dict(enumerate([0, 1, 17, 2, 10, 18, 25, 3, 7, 11, 14, 19, 22])),
            **dict(zip(range(32, 41), [0, 1, 17, 9, 10, 18, 25, 13, 7])),
        },
    }
    bad = [
        (algo, T, k, MODULES[algo].site_select(32, T))
        for algo, table in want.items()
        for T, k in table.items()
        if MODULES[algo].site_select(32, T) != k
    ]
    report(1, "S=32 site-selection tables reproduced exactly", not bad, f"mismatches={bad[:3]}")


def test_criterion_02_roundtrip(report):
    start = time.perf_counter()
    cells = [("steady", S, 4096) for S in (4, 8, 16, 32, 64)]
    cells += [(a, S, min(4096, 2**S - 2)) for a in ("stretched", "tilted") for S in (8, 16, 32)]
    cells += [(a, 16, 2**15) for a in ("steady", "stretched", "tilted")]
    first_bad = None
    checked = 0
    for algo, S, horizon in cells:
        state = ReplayState(algo, S)
        lookup = MODULES[algo].lookup
        for T in range(horizon + 1):
            state.advance_to(T)
            checked += 1
            if lookup(S, T) != state.table:
                first_bad = (algo, S, T)
                break
        if first_bad:
            break
    elapsed = time.perf_counter() - start
    ok = first_bad is None and elapsed < 120
    report(2, "lookup equals last-writer-wins replay", ok,
           f"{checked} tables, {elapsed:.1f}s, first divergence={first_bad}")


def test_criterion_03_steady_bounds(report):
    S = 16
    bad = None
    for T in range(2**16 + 1):
        cost = quality.cost_steady(retained_at(steady, S, T), T)
        low_ok = quality.bound_steady_lower(S, T) <= cost
        up_ok = T < S or cost <= quality.bound_steady_upper(S, T)
        if not (low_ok and up_ok):
            bad = (T, cost)
            break
    report(3, "S=16 floor(T/(S+1)) <= steady cost <= 2*binfloor(T/S)-1, T <= 2^16",
           bad is None, f"first violation={bad}")


def test_criterion_04_stretched_bounds(report):
    S = 16
    bad = None
    for T in range(S, 2**S - 1):
        cost = quality.cost_stretched(retained_at(stretched, S, T), T)
        upper = quality.bound_stretched_upper(S, T)
        if cost > upper or cost > 1:
            bad = ("upper", T, cost, upper)
            break
        if T > S:
            lower = quality.bound_stretched_lower(S, T)
            if cost < lower:
                bad = ("lower", T, cost, lower)
                break
    report(4, "S=16 stretched cost within epoch upper bound, <= 1, and >= strict lower bound",
           bad is None, f"T in [16, 65535); first violation={bad}")


def test_criterion_05_tilted_bounds(report):
    S, s = 16, 4
    bad = None
    formula_checked = 0
    for T in range(S, 2**S - 1):
        cost = quality.cost_tilted(retained_at(tilted, S, T), T)
        if cost > 2:
            bad = ("cap", T, cost)
            break
        if epoch_of(S, T) < S - s:
            formula_checked += 1
            upper = quality.bound_tilted_upper(S, T)
            if cost > upper:
                bad = ("formula", T, cost, upper)
                break
    report(5, "S=16 tilted cost within closed-form upper bound and <= 2", bad is None,
           f"formula checked at {formula_checked} times (epochs 1..11), cap at all; "
           f"first violation={bad}")


def test_criterion_06_retention(report):
    S = 16
    bad = None
    for algo in ("steady", "stretched", "tilted"):
        state = ReplayState(algo, S)
        goal = GOALS[algo]
        for T in range(2**15 + 1):
            state.advance_to(T)
            missing = goal(S, T) - state.retained()
            if missing:
                bad = (algo, T, min(missing))
                break
        if bad:
            break
    report(6, "S=16 retention goals contained in the retained set for all T <= 2^15",
           bad is None, f"first missing={bad}")


def test_criterion_07_closed_forms(report):
    bad = []
    for T in (100, 1000, 10000):
        n = reservation_count(16, T)
        if closed_form_stretched(n, T) != goal_stretched(16, T):
            bad.append(("stretched", T))
        if closed_form_tilted(n, T) != goal_tilted(16, T):
            bad.append(("tilted", T))
    report(7, "closed-form retained sets equal brute-force goal sets at S=16", not bad,
           f"mismatches={bad}")


def test_criterion_08_epoch0_bijection(report):
    bad = []
    for algo, code in _kernels.ALGO_CODES.items():
        S = MIN_SIZE[algo]
        while S <= 1 << 16:
            if sorted(_kernels.select_range(code, S, 0, S)) != list(range(S)):
                bad.append((algo, S))
            # Public API on the smaller sizes too.
            if S <= 256 and sorted(MODULES[algo].site_select(S, T) for T in range(S)) != list(range(S)):
                bad.append((algo, S, "api"))
            S *= 2
    report(8, "epoch-0 selections form a permutation of [0, S) for every supported S",
           not bad, f"failures={bad}")


def _mean_latency(fn, base, reps=7, n=2000):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        for T in range(base, base + n):
            fn(T)
        best = min(best, (time.perf_counter() - t0) / n)
    return best


def test_criterion_09_constant_time(report):
    S = 64
    ratios = {}
    for name, fn in {
        "public API": lambda T: stretched.site_select(S, T),
        "python kernel": lambda T: _pykernels.site(_kernels.STRETCHED, S, T),
        "active kernel": lambda T: _kernels.site(_kernels.STRETCHED, S, T),
        "tilted API": lambda T: tilted.site_select(S, T),
        "steady API": lambda T: steady.site_select(S, T),
    }.items():
        small = _mean_latency(fn, 10**3)
        large = _mean_latency(fn, 10**15)
        ratios[name] = max(small, large) / min(small, large)
    worst = max(ratios.values())
    detail = ", ".join(f"{k} {v:.2f}x" for k, v in ratios.items())
    report(9, "S=64 selection latency at T~1e3 vs T~1e15 within 2x", worst <= 2, detail)


def test_criterion_10_documented_substitute(report):
    readme = (Path(__file__).resolve().parents[1] / "README.md").read_text()
    ok = "not reproduced" in readme.lower()
    report(10, "hardware deployment claims documented as not reproducible; criteria 2-9 substitute",
           ok, "README states the limitation")
