#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the numpy fallback.

For each benchmark group the two hot kernels are timed separately:
``closure`` (breadth-first element enumeration) and ``conjugation_maps``
(index maps of generator conjugation on the sorted element matrix, the
core of class counting).  Run from the repository root:

    python3 benchmarks/bench_core.py [--repeat N] [--heavy]

``--heavy`` adds S10 (3.6M elements) and the Aut(M22) pair.
"""

import argparse
import time

import numpy as np

from kclass._core import available_backends, lex_sort_rows
from kclass.corpus import DATA_DIR, parse_group_file
from kclass.permcore import perms_to_matrix


def load_gens(filename, section="ambient"):
    gf = parse_group_file((DATA_DIR / filename).read_text(encoding="utf-8"))
    gens = gf.generators(section) or gf.generators("ambient")
    return perms_to_matrix(gens, gf.degree)


def sym_gens(n):
    cyc = list(range(1, n)) + [0]
    swap = list(range(n))
    swap[0], swap[1] = 1, 0
    return np.array([cyc, swap], dtype=np.uint8)


def bench(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--heavy", action="store_true",
                        help="include S10 and Aut(M22)")
    args = parser.parse_args()

    backends = available_backends()
    if len(backends) < 2:
        print("note: compiled backend not built; timing the fallback only")

    cases = [
        ("S8 (40320, deg 8)", sym_gens(8)),
        ("M12:2 (190080, deg 24)", load_gens("m12_aut.grp")),
        ("Aut(PSL3(4)) (241920, deg 42)", load_gens("psl3_4.grp")),
    ]
    if args.heavy:
        cases += [
            ("S10 (3628800, deg 10)", sym_gens(10)),
            ("Aut(M22) (887040, deg 22)", load_gens("m22_aut.grp")),
        ]

    header = f"{'group':32} {'kernel':18}" + "".join(
        f"{name:>12}" for name in backends)
    print(header)
    print("-" * len(header))
    for label, gens in cases:
        closure_times = {}
        elems = None
        for name, mod in backends.items():
            t, raw = bench(lambda m=mod: m.closure(gens, 5_000_000), args.repeat)
            closure_times[name] = t
            if elems is None:
                elems = lex_sort_rows(raw)
        row = "".join(f"{closure_times[n] * 1e3:>10.1f}ms" for n in backends)
        print(f"{label:32} {'closure':18}{row}")
        fuse_times = {}
        for name, mod in backends.items():
            t, _ = bench(lambda m=mod: m.conjugation_maps(elems, gens),
                         args.repeat)
            fuse_times[name] = t
        row = "".join(f"{fuse_times[n] * 1e3:>10.1f}ms" for n in backends)
        print(f"{'':32} {'conjugation maps':18}{row}")
        if len(backends) == 2:
            c = closure_times["python"] / closure_times["compiled"]
            f = fuse_times["python"] / fuse_times["compiled"]
            print(f"{'':32} {'speedup':18}{c:>11.1f}x{f:>11.1f}x")


if __name__ == "__main__":
    main()
