"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import timeit

from screencurve.kernels import available_backends, load_backend


def workloads(k, cases):
    return {
        "curvature x 10k points": lambda: [k.curvature(0.95, 0.99, i / 10_000) for i in range(10_000)],
        "threshold oracle x 200": lambda: [k.curvature_argmax(a, b, 1001, 1e-9) for a, b in cases],
        "adaptive Simpson AUC x 200": lambda: [k.adaptive_simpson_ppv(a, b, 0.0, 1.0, 1e-10, 60)
                                               for a, b in cases],
        "sample 100k rows": lambda: k.sample(0.95, 0.99, 100_001),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(0)
    cases = []
    while len(cases) < 200:
        a, b = rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99)
        if abs(a + b - 1) >= 0.05:
            cases.append((a, b))

    names = available_backends()
    timings = {}
    for name in names:
        for label, fn in workloads(load_backend(name), cases).items():
            timings[label, name] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    labels = list(workloads(load_backend(names[0]), cases))
    header = f"{'workload':<30}" + "".join(f"{n:>12}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label in labels:
        row = f"{label:<30}" + "".join(f"{timings[label, n] * 1e3:>10.2f}ms" for n in names)
        if len(names) > 1:
            row += f"{timings[label, 'python'] / timings[label, 'cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
