"""Time the compiled and pure-Python BFS kernels, and both against the closed form.

    python benchmarks/bench_bfs.py [--repeat 5]
"""
import argparse
import timeit

from knodel import _bfs_py
from knodel.core import new_graph
from knodel.distance import diameter_formula

try:
    from knodel import _bfs_ext
except ImportError:
    _bfs_ext = None

CASES = [(3, 600), (4, 2000), (6, 1200), (8, 20000), (12, 6142), (14, 24574)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _bfs_ext is None:
        print("compiled kernel not built; showing pure-Python timings only")
    print(f"{'graph':>14} {'python ms':>10} {'cython ms':>10} {'speedup':>8} {'formula us':>11}")
    for delta, n in CASES:
        g = new_graph(delta, n)
        offs = g.offsets_array()

        def best(fn):
            return min(timeit.repeat(fn, number=1, repeat=args.repeat))

        t_py = best(lambda: _bfs_py.bfs(g.half, offs, 0))
        t_c = best(lambda: _bfs_ext.bfs(g.half, offs, 0)) if _bfs_ext else float("nan")
        t_f = best(lambda: diameter_formula(g)) if delta >= 3 and n >= (2 * delta - 5) * (2**delta - 2) + 4 else float("nan")
        print(f"{f'W({delta},{n})':>14} {t_py * 1e3:10.2f} {t_c * 1e3:10.3f} {t_py / t_c:8.1f} {t_f * 1e6:11.1f}")

    g = new_graph(4, 256)
    t_py = min(timeit.repeat(lambda: _bfs_py.all_pairs_max(g.half, g.offsets_array()), number=1, repeat=2))
    if _bfs_ext:
        t_c = min(timeit.repeat(lambda: _bfs_ext.all_pairs_max(g.half, g.offsets_array()), number=1, repeat=2))
        print(f"all-pairs W(4,256): python {t_py * 1e3:.1f} ms, cython {t_c * 1e3:.2f} ms, speedup {t_py / t_c:.0f}x")


if __name__ == "__main__":
    main()
