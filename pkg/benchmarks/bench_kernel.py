#!/usr/bin/env python3
"""Benchmark the compiled elimination kernel against the pure-Python fallback.

Builds the boundary matrices of a few representative order complexes and
times invariant-factor extraction (unit-pivot phase) and Z/2 rank on each,
once per backend.  Run from the repository root after ``python setup.py
build_ext --inplace``; without the extension only the pure backend appears.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ordertop._kernel import _pure  # noqa: E402

try:
    from ordertop._kernel import _speedups
except ImportError:
    _speedups = None

from ordertop.complexes import cyclic_polytope_boundary  # noqa: E402
from ordertop.homology import ChainComplex  # noqa: E402
from ordertop.posets import BoundedPoset, partition_lattice  # noqa: E402


def boundary_matrices(name, K):
    cc = ChainComplex.from_complex(K)
    return [(f"{name} d{k}", m) for k, m in sorted(cc.boundary.items()) if m.entries]


def time_backend(module, matrices, repeat=3):
    rows = []
    for name, m in matrices:
        best_units = best_rank = None
        t_units = t_rank = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            units, residual = module.eliminate_unit_pivots(m.n_rows, m.n_cols, m.entries)
            t_units = min(t_units, time.perf_counter() - t0)
            t0 = time.perf_counter()
            rank2 = module.rank_mod2(m.n_rows, m.n_cols, m.entries)
            t_rank = min(t_rank, time.perf_counter() - t0)
            best_units, best_rank = (units, len(residual)), rank2
        rows.append((name, m.n_rows, m.n_cols, len(m.entries), best_units, best_rank, t_units, t_rank))
    return rows


def main():
    cases = []
    for n in (5, 6):
        P = BoundedPoset.from_poset(partition_lattice(n))
        cases += boundary_matrices(f"partition({n})", P.truncate().order_complex())
    cases += boundary_matrices("cyclic(12,6)", cyclic_polytope_boundary(12, 6))

    backends = [("pure", _pure)]
    if _speedups is not None:
        backends.append(("compiled", _speedups))
    else:
        print("compiled kernel not built; showing pure only", file=sys.stderr)

    results = {label: time_backend(mod, cases) for label, mod in backends}

    header = f"{'matrix':<18} {'shape':>12} {'nnz':>7}"
    for label in results:
        header += f" {label + ' snf':>12} {label + ' z2':>12}"
    print(header)
    print("-" * len(header))
    for i, (name, nr, nc, nnz, units, rank2, _, _) in enumerate(results[backends[0][0]]):
        line = f"{name:<18} {f'{nr}x{nc}':>12} {nnz:>7}"
        for label in results:
            _, _, _, _, u, r, tu, tr = results[label][i]
            assert (u, r) == (units, rank2), "backends disagree"
            line += f" {tu * 1000:>10.1f}ms {tr * 1000:>10.1f}ms"
        print(line)
    if len(results) == 2:
        total = {
            label: sum(tu + tr for *_, tu, tr in rows) for label, rows in results.items()
        }
        print(f"\ntotal pure {total['pure']:.3f}s, compiled {total['compiled']:.3f}s, "
              f"speedup x{total['pure'] / total['compiled']:.1f}")


if __name__ == "__main__":
    main()
