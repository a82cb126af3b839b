"""Compare the compiled rational/vector kernel against the pure-Python twin.

Runs each workload in a subprocess with PLEXALG_KERNEL forced, so both
implementations are measured under identical import-time selection.

    python3 benchmarks/bench_kernel.py [--budget N] [--repeat K]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workloads(budget):
    from plexalg import kernel as kn
    from plexalg import lawcheck as lc
    from plexalg import parsing as ps

    def rational_chain():
        acc = kn.rmake(0)
        term = kn.rmake(1, 3)
        for k in range(budget * 20):
            acc = kn.radd(acc, term)
            term = kn.rmul(term, kn.rmake(k % 7 - 3, 5))
            if kn.rcmp(acc, kn.ZERO) > 0:
                acc = kn.rsub(acc, kn.ONE)
        return acc

    E = ps.parse_algebra("I(II(Z, Q), full, Q)")
    V3b = ps.parse_algebra("III(Q, idx 1, idx 3, Q)")

    return [
        ("rational-chain", rational_chain),
        ("law-suite-E", lambda: lc.check_fle_laws(E, budget=budget, seed=5)),
        ("table3-V3b", lambda: lc.check_table(V3b, 3, budget=budget // 4,
                                              seed=5)),
    ]


def run_child(budget, repeat):
    from plexalg import kernel as kn

    results = {"impl": kn.KERNEL_IMPL, "times": {}}
    for name, fn in workloads(budget):
        best = min(measure(fn) for _ in range(repeat))
        results["times"][name] = best
    print(json.dumps(results))


def measure(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def run_parent(budget, repeat):
    rows = {}
    for impl in ("py", "c"):
        env = dict(os.environ, PLEXALG_KERNEL=impl)
        proc = subprocess.run(
            [sys.executable, __file__, "--child", "--budget", str(budget),
             "--repeat", str(repeat)],
            env=env, capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"{impl}: failed\n{proc.stderr}", file=sys.stderr)
            continue
        data = json.loads(proc.stdout)
        assert data["impl"] == impl, "kernel override was not honored"
        rows[impl] = data["times"]
    if "py" not in rows or "c" not in rows:
        return 1
    print(f"{'workload':<16} {'pure py':>10} {'compiled':>10} {'speedup':>8}")
    for name in rows["py"]:
        py_t, c_t = rows["py"][name], rows["c"][name]
        print(f"{name:<16} {py_t:>9.4f}s {c_t:>9.4f}s {py_t / c_t:>7.2f}x")
    return 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=4000)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        run_child(args.budget, args.repeat)
        return 0
    return run_parent(args.budget, args.repeat)


if __name__ == "__main__":
    sys.exit(main())
