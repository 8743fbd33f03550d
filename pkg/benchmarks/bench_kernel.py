"""Benchmark: compiled kernel vs the pure-Python fallback.

Times the raw polynomial kernels on synthetic workloads and the end-to-end
worked-example suites (which spend most of their time in those kernels).
Run after building the extension in place:

    python3 setup.py build_ext --inplace
    python3 benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

HERE = os.path.dirname(os.path.abspath(__file__))
SRC = os.path.join(HERE, "..", "src")
sys.path.insert(0, SRC)


def rand_poly(rng, nvars, terms):
    out = {}
    for _ in range(terms):
        key = tuple(rng.randint(0, 6) for _ in range(nvars))
        out[key] = Fraction(rng.randint(-30, 30) or 1, rng.randint(1, 17))
    return out


def bench_raw(kernel, label, repeats=60):
    rng = random.Random(5)
    polys = [rand_poly(rng, 3, 24) for _ in range(20)]
    t0 = time.perf_counter()
    for _ in range(repeats):
        for i in range(len(polys) - 1):
            c = kernel.poly_mul(polys[i], polys[i + 1])
            c = kernel.poly_add(c, polys[i])
            kernel.poly_diff(c, 0)
    dt = time.perf_counter() - t0
    print("  raw kernels   %-9s %.3fs" % (label, dt), flush=True)
    return dt


def bench_suite(env_flag):
    code = (
        "import sys, time; sys.path.insert(0, {src!r})\n"
        "from qgroupoid.kernel import BACKEND\n"
        "from qgroupoid.axb import axb_relation_suite, build_axb\n"
        "t0 = time.perf_counter()\n"
        "bundle = build_axb(4, 4)\n"
        "rep = axb_relation_suite(4, 4, bundle=bundle)\n"
        "assert rep.ok(), rep.first_failure()\n"
        "print('  example suite %-9s %.3fs' % (BACKEND, time.perf_counter() - t0))\n"
    ).format(src=SRC)
    env = dict(os.environ)
    if env_flag:
        env["QGROUPOID_PURE"] = "1"
    else:
        env.pop("QGROUPOID_PURE", None)
    subprocess.run([sys.executable, "-c", code], env=env, check=True)


def main():
    os.environ.pop("QGROUPOID_PURE", None)
    from qgroupoid import _kernel_py
    print("polynomial kernel comparison", flush=True)
    pure = bench_raw(_kernel_py, "pure")
    try:
        from qgroupoid import _kernel_c
        compiled = bench_raw(_kernel_c, "compiled")
        print("  speedup %.2fx" % (pure / compiled), flush=True)
    except ImportError:
        print("  compiled kernel not built; run setup.py build_ext --inplace",
              flush=True)
    print("end-to-end worked-example suite (N=4, d=4)", flush=True)
    bench_suite(env_flag=True)
    try:
        import qgroupoid._kernel_c  # noqa: F401
        bench_suite(env_flag=False)
    except ImportError:
        pass


if __name__ == "__main__":
    main()
