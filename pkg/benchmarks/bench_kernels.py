"""Compare the compiled and pure-Python kernels on the audit hot loop.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times ``kernels.survey`` (enumerate every reduced word up to the
bound and classify it by both routes), plus a single ``audit`` end to end.
"""
import argparse
import time

from bsdh_fano import _pykernels, kernels
from bsdh_fano.fano import audit
from bsdh_fano.rootsys import SimpleType, cartan_matrix

CASES = [("A3", 8), ("B3", 8), ("G2", 6), ("A4", 10), ("C4", 10), ("D4", 12), ("F4", 9)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    try:
        from bsdh_fano import _ckernels
    except ImportError:
        _ckernels = None
        print("compiled kernels not built; timing the Python backend only")

    print(f"{'type':<5} {'len':>4} {'words':>8} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, L in CASES:
        t = SimpleType.parse(name)
        flat = cartan_matrix(t).flat()
        tp, rows = best_of(lambda: _pykernels.survey(flat, t.rank, L, 10**7), args.repeat)
        if _ckernels is not None:
            tc, crows = best_of(lambda: _ckernels.survey(flat, t.rank, L, 10**7), args.repeat)
            assert crows == rows
            print(f"{name:<5} {L:>4} {len(rows):>8} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
        else:
            print(f"{name:<5} {L:>4} {len(rows):>8} {tp:>10.4f} {'-':>10} {'-':>8}")

    for backend in kernels.available_backends():
        kernels.use_backend(backend)
        dt, a = best_of(lambda: audit(SimpleType.parse("D4"), 12), args.repeat)
        print(f"audit D4<=12 [{backend}]: {a.words_checked} words, {len(a.divergences)} divergences, {dt:.4f}s")


if __name__ == "__main__":
    main()
