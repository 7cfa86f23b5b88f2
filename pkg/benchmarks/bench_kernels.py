"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--size 64] [--count 20000]

Reports mean nanoseconds per site selection and per full lookup for each
algorithm, at small and very large logical times.
"""

from __future__ import annotations

import argparse
import random
import timeit

from dstream import _kernels, _pykernels

try:
    from dstream import _ckernels
except ImportError:
    _ckernels = None


def time_per_call(fn, args_list, repeat=5):
    def run():
        for a in args_list:
            fn(*a)

    best = min(timeit.repeat(run, number=1, repeat=repeat))
    return best / len(args_list) * 1e9


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--size", type=int, default=64)
    parser.add_argument("--count", type=int, default=20000)
    args = parser.parse_args()
    S = args.size

    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    rng = random.Random(1)

    print(f"S={S}, {args.count} calls per cell; times in ns/call")
    print(f"{'algo':<10}{'op':<8}{'T range':<10}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, code in _kernels.ALGO_CODES.items():
        for label, lo in (("1e3", 10**3), ("1e15", 10**15)):
            sel = [(code, S, lo + i) for i in range(args.count)]
            look = [(code, S, lo + rng.randrange(10**3)) for _ in range(max(1, args.count // 20))]
            for op, calls, fname in (("site", sel, "site"), ("lookup", look, "lookup")):
                times = {b: time_per_call(getattr(m, fname), calls) for b, m in backends.items()}
                speed = times["python"] / times["cython"] if "cython" in times else float("nan")
                print(
                    f"{name:<10}{op:<8}{label:<10}"
                    + "".join(f"{t:>12.0f}" for t in times.values())
                    + f"{speed:>9.1f}x"
                )


if __name__ == "__main__":
    main()
