"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import random
import timeit

from freeprod import _pykernels, kernels
from freeprod.groups import cyclic, sym3


def workloads(rng):
    h, g = sym3(), cyclic(7)
    words = []
    for _ in range(2000):
        words.append([rng.randrange(h.order) << 1 if i % 3 else rng.randrange(g.order) << 1 | 1
                      for i in range(rng.randint(10, 200))])
    periodic = [[rng.randrange(4) for _ in range(rng.randint(1, 8))] * rng.randint(1, 40)
                for _ in range(2000)]
    return {
        "reduce": lambda k: [k.reduce_codes(w, h.flat, h.order, g.flat, g.order) for w in words],
        "minimal_period": lambda k: [k.minimal_period(s) for s in periodic],
        "least_rotation": lambda k: [k.least_rotation(s) for s in periodic],
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    if kernels.compiled_backend is None:
        raise SystemExit("compiled kernels are not built; run pip install -e . first")
    backends = {"python": _pykernels, "cython": kernels.compiled_backend}
    print(f"{'kernel':<16}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for name, job in workloads(random.Random(0)).items():
        assert job(backends["python"]) == job(backends["cython"])
        times = {
            b: min(timeit.repeat(lambda: job(mod), number=1, repeat=args.repeat))
            for b, mod in backends.items()
        }
        print(f"{name:<16}{times['python']:>12.4f}{times['cython']:>12.4f}"
              f"{times['python'] / times['cython']:>9.1f}x")


if __name__ == "__main__":
    main()
