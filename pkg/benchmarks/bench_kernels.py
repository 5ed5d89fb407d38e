"""Compare the compiled and pure-Python kernels.

Micro timings call both kernel modules directly on the same inputs; the
end-to-end timing runs ``verify_isomorphism`` in a fresh interpreter per
backend, selected with RANK2CRYSTALS_PURE.

    python3 benchmarks/bench_kernels.py [--repeat N] [--cartan A,B] [--depth D]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from rank2crystals import _kernels_py

try:
    from rank2crystals import _kernels_c
except ImportError:
    _kernels_c = None

END_TO_END = """
import time
from rank2crystals import BACKEND, new_cartan, verify_isomorphism
start = time.perf_counter()
report = verify_isomorphism(new_cartan({a}, {b}), {i}, 0, {depth})
assert report.verified
print(BACKEND, report.nodes, time.perf_counter() - start)
"""


def micro_inputs(rng):
    terms = sorted({rng.randint(-40, 40): rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(24)}.items())
    nums = sorted(rng.sample(range(1, 600), 7))
    return terms, [rng.randint(-12, 12) for _ in range(8)], [0] + nums + [600]


def micro(repeat):
    rng = random.Random(0)
    cases = [micro_inputs(rng) for _ in range(200)]
    rows = []
    for name in ("prefix_scan", "height_scan"):
        for label, mod in (("python", _kernels_py), ("compiled", _kernels_c)):
            if mod is None:
                continue
            fn = getattr(mod, name)
            if name == "prefix_scan":
                stmt = lambda: [fn(t) for t, _, _ in cases]
            else:
                stmt = lambda: [fn(s, n) for _, s, n in cases]
            best = min(timeit.repeat(stmt, number=50, repeat=repeat)) / (50 * len(cases))
            rows.append((name, label, best * 1e6))
    return rows


def end_to_end(a, b, i, depth):
    results = {}
    for pure in ("1", ""):
        env = dict(os.environ, RANK2CRYSTALS_PURE=pure)
        code = END_TO_END.format(a=a, b=b, i=i, depth=depth)
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, nodes, seconds = out.stdout.split()
        results[backend] = (int(nodes), float(seconds))
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--cartan", default="2,3")
    parser.add_argument("--weight", type=int, default=1)
    parser.add_argument("--depth", type=int, default=12)
    args = parser.parse_args()
    if _kernels_c is None:
        print("compiled kernels not built; only the pure-Python rows are shown")

    print("kernel        backend    us/call")
    for name, label, us in micro(args.repeat):
        print(f"{name:13} {label:10} {us:7.2f}")

    a, b = (int(x) for x in args.cartan.split(","))
    print(f"\nverify_isomorphism cartan={a},{b} i={args.weight} depth={args.depth}")
    results = end_to_end(a, b, args.weight, args.depth)
    for backend, (nodes, seconds) in sorted(results.items()):
        print(f"  {backend:10} {seconds:6.2f}s  ({nodes} nodes)")
    if len(results) == 2:
        print(f"  speedup    {results['python'][1] / results['compiled'][1]:.2f}x")


if __name__ == "__main__":
    main()
