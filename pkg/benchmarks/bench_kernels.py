"""Time the compiled counting kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py            # quick sizes
    python benchmarks/bench_kernels.py --full     # adds R_7 and the side-5 permanent sum

Each row reports the best of ``--repeat`` runs and checks both backends agree.
"""

import argparse
import random
import sys
import time

from rainbowdecomp import _pykernels

try:
    from rainbowdecomp import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    best, value = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def cases(full):
    rng = random.Random(0)
    rows = [rng.getrandbits(12) for _ in range(12)]
    out = [
        ("reduced_latin_count(5)", lambda k: k.reduced_latin_count(5)),
        ("reduced_latin_count(6)", lambda k: k.reduced_latin_count(6)),
        ("permanent_rows(12x12)", lambda k: k.permanent_rows(rows, 12)),
        ("shao_wei_sum(3)", lambda k: k.shao_wei_sum(3)),
        ("shao_wei_sum(4)", lambda k: k.shao_wei_sum(4)),
    ]
    if full:
        out.append(("reduced_latin_count(7)", lambda k: k.reduced_latin_count(7)))
        out.append(("shao_wei_sum(5)", lambda k: k.shao_wei_sum(5)))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--full", action="store_true", help="include the long cases (minutes in pure Python)")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1

    print(f"{'kernel':<26}{'cython (s)':>12}{'python (s)':>12}{'speedup':>10}")
    for name, call in cases(args.full):
        tc, vc = best_of(lambda: call(_kernels), args.repeat)
        reps = 1 if args.full and name.endswith(("(7)", "(5)")) else args.repeat
        tp, vp = best_of(lambda: call(_pykernels), reps)
        if int(vc) != int(vp):
            print(f"{name}: backends disagree ({vc} vs {vp})", file=sys.stderr)
            return 1
        print(f"{name:<26}{tc:>12.4f}{tp:>12.4f}{tp / max(tc, 1e-9):>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
