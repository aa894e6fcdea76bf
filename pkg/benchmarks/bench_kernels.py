"""Compare the compiled and pure-Python kernels on resonance graphs.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--max-vertices N]

Times the all-pairs distance kernel and the median check on resonance
graphs of growing size, for both backends, and confirms they agree.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

import numpy as np

from cerscode import _purepy, catalog
from cerscode.generate import random_spec
from cerscode.matching import enumerate_perfect_matchings
from cerscode.model import realize
from cerscode.resonance import build_resonance_graph

try:
    from cerscode import _kernels
except ImportError:
    _kernels = None


def workloads(max_vertices: int):
    cases = [(f"square_ladder_{n}", catalog.square_ladder(n)) for n in (6, 9, 12)]
    cases += [(f"hexagon_chain_{n}", catalog.hexagon_chain(n)) for n in (10, 30)]
    cases.append(("triphenylene_like", catalog.triphenylene_like()))
    rng = random.Random(3)
    big = max((random_spec(rng, 10, 10, min_faces=9) for _ in range(40)), key=lambda s: len(
        enumerate_perfect_matchings(realize(s))
    ))
    cases.append(("random_10_faces", big))
    for name, spec in cases:
        plane = realize(spec)
        g = build_resonance_graph(plane, enumerate_perfect_matchings(plane)).graph()
        if g.n <= max_vertices:
            yield name, g


def best(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--max-vertices", type=int, default=400)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; only the pure-Python backend is available")
        return 1
    header = f"{'graph':<20}{'|V|':>6}  {'kernel':<10}{'python s':>10}{'cython s':>10}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, g in workloads(args.max_vertices):
        indptr, indices = g.csr
        d_py = _purepy.all_pairs_distances(g.n, indptr, indices)
        d_cy = _kernels.all_pairs_distances(g.n, indptr, indices)
        assert np.array_equal(d_py, d_cy)
        assert _purepy.median_violation(d_py) == _kernels.median_violation(d_cy)
        rows = [
            (
                "distances",
                best(lambda: _purepy.all_pairs_distances(g.n, indptr, indices), args.repeat),
                best(lambda: _kernels.all_pairs_distances(g.n, indptr, indices), args.repeat),
            ),
            (
                "median",
                best(lambda: _purepy.median_violation(d_py), args.repeat),
                best(lambda: _kernels.median_violation(d_cy), args.repeat),
            ),
        ]
        for kernel, t_py, t_cy in rows:
            print(f"{name:<20}{g.n:>6}  {kernel:<10}{t_py:>10.4f}{t_cy:>10.4f}{t_py / t_cy:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
