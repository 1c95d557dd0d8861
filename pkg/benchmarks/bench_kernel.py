"""Compare the compiled and pure-Python permutation kernels.

Usage: python3 benchmarks/bench_kernel.py [--repeat N] [--json]

Each workload runs on both backends; results must agree before timings are
reported.
"""

from __future__ import annotations

import argparse
import json
import statistics
import sys
import time

from fnq import _pykernel

try:
    from fnq import _kernel
except ImportError:
    _kernel = None


def _sym_gens(n):
    swap = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    return [swap, cycle]


def _alt_gens(n):
    three = tuple([1, 2, 0] + list(range(3, n)))
    long = tuple(list(range(1, n)) + [0]) if n % 2 else tuple([0] + list(range(2, n)) + [1])
    return [three, long]


def workloads():
    s8 = _pykernel.perm_closure(_sym_gens(8), 8, 10**6)[0]
    a6 = _pykernel.perm_closure(_alt_gens(6), 6, 10**6)[0]
    a5 = _pykernel.perm_closure(_alt_gens(5), 5, 10**6)[0]
    table = _pykernel.multiplication_table(a5)
    labels = _pykernel.class_labels(s8, _sym_gens(8))
    tau = s8.index((1, 0, 3, 2, 4, 5, 6, 7))
    tau_class = [k for k, lab in enumerate(labels) if lab == labels[tau]]
    pairs = [[g, h] for g in range(60) for h in range(g + 1, 60)]
    return {
        "closure S9": lambda k: k.perm_closure(_sym_gens(9), 9, 10**6)[0],
        "class labels S8": lambda k: list(k.class_labels(s8, _sym_gens(8))),
        "element orders S8": lambda k: list(k.perm_orders(s8)),
        "commuting count S8": lambda k: [k.count_commuting(s8, tau_class, y) for y in tau_class],
        "multiplication table A6": lambda k: list(k.multiplication_table(a6)),
        "subgroup joins A5": lambda k: [bytes(k.table_join(table, 60, gs)) for gs in pairs],
    }


def _time(fn, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t)
    return statistics.median(runs)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if _kernel is None:
        print("compiled kernel not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1

    rows = []
    for name, fn in workloads().items():
        if fn(_kernel) != fn(_pykernel):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 1
        pure = _time(lambda: fn(_pykernel), args.repeat)
        compiled = _time(lambda: fn(_kernel), args.repeat)
        rows.append({"workload": name, "python_s": pure, "cython_s": compiled, "speedup": pure / compiled})

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'workload':26s}{'python':>10s}{'cython':>10s}{'speedup':>9s}")
        for r in rows:
            print(f"{r['workload']:26s}{r['python_s']:10.4f}{r['cython_s']:10.4f}{r['speedup']:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
