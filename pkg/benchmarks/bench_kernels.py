"""Compare the compiled bitmask kernels against the pure Python twins.

Workloads mirror what the sweeps spend their time on: closing and
validating random orders, enumerating their down-sets, synthesizing
meet/join tables for the resulting lattices, and scanning those tables
for distributivity. Both backends run over identical inputs and their
outputs are compared, so this doubles as a large randomized
equivalence check.

    python3 benchmarks/bench_kernels.py --count 200 --points 6
"""

import argparse
import random
import time

from stonekit import _kernels

try:
    from stonekit import _core
except ImportError:
    _core = None


def random_raw_masks(rng, n):
    """Masks of a random strict DAG, not yet closed."""
    below = [0] * n
    for y in range(n):
        for x in range(y):
            if rng.random() < 0.35:
                below[y] |= 1 << x
    return below


def lattice_order(sets):
    """Containment order of a down-set family, as below masks."""
    m = len(sets)
    below = [0] * m
    for i in range(m):
        for j in range(m):
            if sets[j] & ~sets[i] == 0:
                below[i] |= 1 << j
    return below


def build_workloads(seed, count, points):
    rng = random.Random(seed)
    raw, closed, orders, tables = [], [], [], []
    for _ in range(count):
        n = rng.randint(max(2, points - 2), points)
        masks = random_raw_masks(rng, n)
        raw.append(list(masks))
        done = _kernels.closure(masks)
        closed.append(done)
        sets = _kernels.downset_masks(done, 64)
        if sets is None:
            continue
        order = lattice_order(sets)
        orders.append(order)
        meet, join, missing = _kernels.bound_tables(order)
        if missing is None:
            tables.append((meet, join))
    return {
        "closure": raw,
        "check_poset": closed,
        "downset_masks": closed,
        "bound_tables": orders,
        "distributive_witness": tables,
    }


def run(module, kernel, inputs):
    fn = getattr(module, kernel)
    out = []
    t0 = time.perf_counter()
    if kernel == "downset_masks":
        for arg in inputs:
            out.append(fn(arg, 4096))
    elif kernel == "distributive_witness":
        for meet, join in inputs:
            out.append(fn(meet, join))
    else:
        for arg in inputs:
            out.append(fn(arg))
    return time.perf_counter() - t0, out


def normalize(kernel, results):
    if kernel == "bound_tables":
        return [
            (
                [list(r) for r in meet] if meet else None,
                [list(r) for r in join] if join else None,
                missing,
            )
            for meet, join, missing in results
        ]
    if kernel in ("closure", "downset_masks"):
        return [list(r) if r is not None else None for r in results]
    return results


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--count", type=int, default=200, help="posets to draw")
    parser.add_argument("--points", type=int, default=6, help="max points per poset")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--repeat", type=int, default=5, help="timing passes, best kept")
    args = parser.parse_args()
    if not 2 <= args.points <= 6:
        parser.error("--points must be between 2 and 6")

    workloads = build_workloads(args.seed, args.count, args.points)
    if _core is None:
        print("compiled backend not built; timing the pure backend only")
    header = f"{'kernel':<22}{'inputs':>7}{'pure ms':>10}"
    if _core is not None:
        header += f"{'core ms':>10}{'speedup':>9}{'agree':>7}"
    print(header)
    for kernel, inputs in workloads.items():
        best_pure, pure_out = min(
            (run(_kernels, kernel, inputs) for _ in range(args.repeat)),
            key=lambda pair: pair[0],
        )
        row = f"{kernel:<22}{len(inputs):>7}{best_pure * 1000:>10.2f}"
        if _core is not None:
            best_core, core_out = min(
                (run(_core, kernel, inputs) for _ in range(args.repeat)),
                key=lambda pair: pair[0],
            )
            agree = normalize(kernel, pure_out) == normalize(kernel, core_out)
            ratio = best_pure / best_core if best_core else float("inf")
            row += f"{best_core * 1000:>10.2f}{ratio:>8.1f}x{'yes' if agree else 'NO':>7}"
        print(row)


if __name__ == "__main__":
    main()
