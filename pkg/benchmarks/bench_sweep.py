"""Time the numba kernels against the pure numpy/python fallbacks."""

import argparse
import time

import numpy as np

from paramagloss import BACKEND, default_db_path, load_species_db, sweep
from paramagloss._kernels import (
    jacobi_cycle_numba,
    jacobi_cycle_python,
    lorentzian_mix_loops,
    lorentzian_mix_numba,
    lorentzian_mix_numpy,
)


def best_of(fn, repeats: int) -> float:
    """Return the fastest wall-clock time of repeats calls, in seconds."""
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_mix(points: int, lines: int, repeats: int) -> None:
    rng = np.random.default_rng(7)
    omega = np.linspace(2e9, 1e11, points)
    centers = rng.uniform(1e10, 9e10, lines)
    gammas = rng.uniform(1e8, 1e9, lines)
    amps = rng.uniform(1e-10, 1e-8, lines)
    out = np.empty(points)

    def run(fn):
        out.fill(0.0)
        fn(omega, centers, gammas, amps, out)

    t_numpy = best_of(lambda: run(lorentzian_mix_numpy), repeats)
    t_loops = best_of(lambda: run(lorentzian_mix_loops), repeats)
    print(f"lorentzian_mix  ({points} points x {lines} lines)")
    print(f"  numpy fallback   {t_numpy * 1e3:10.3f} ms")
    print(f"  python loops     {t_loops * 1e3:10.3f} ms")
    if lorentzian_mix_numba is not None:
        run(lorentzian_mix_numba)  # trigger JIT compile outside the timing
        t_numba = best_of(lambda: run(lorentzian_mix_numba), repeats)
        print(f"  numba            {t_numba * 1e3:10.3f} ms")
        print(f"  speedup vs numpy {t_numpy / t_numba:10.2f}x")
    else:
        print("  numba            unavailable (fallback build)")


def bench_jacobi(dim: int, batch: int, repeats: int) -> None:
    rng = np.random.default_rng(11)
    raw = rng.normal(size=(batch, dim, dim)) + 1j * rng.normal(size=(batch, dim, dim))
    mats = raw + np.conj(np.transpose(raw, (0, 2, 1)))
    target = 1e-14 * float(np.linalg.norm(mats[0]))

    def run(fn):
        for k in range(batch):
            h = mats[k].copy()
            v = np.eye(dim, dtype=np.complex128)
            fn(h, v, target, 100)

    t_python = best_of(lambda: run(jacobi_cycle_python), repeats)
    print(f"jacobi_cycle    ({batch} matrices, dim {dim})")
    print(f"  python fallback  {t_python * 1e3:10.3f} ms")
    if jacobi_cycle_numba is not None:
        run(jacobi_cycle_numba)
        t_numba = best_of(lambda: run(jacobi_cycle_numba), repeats)
        print(f"  numba            {t_numba * 1e3:10.3f} ms")
        print(f"  speedup          {t_python / t_numba:10.2f}x")
    else:
        print("  numba            unavailable (fallback build)")


def bench_end_to_end(points: int, repeats: int) -> None:
    db = load_species_db(default_db_path())
    sweep(db, 1.0, 15.0, points)  # warm any compiled paths
    t = best_of(lambda: sweep(db, 1.0, 15.0, points), repeats)
    print(f"sweep           ({points} points, backend {BACKEND})")
    print(f"  full spectrum    {t * 1e3:10.3f} ms")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=200_000)
    parser.add_argument("--lines", type=int, default=10)
    parser.add_argument("--dim", type=int, default=8)
    parser.add_argument("--batch", type=int, default=200)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args(argv)

    print(f"selected backend: {BACKEND}")
    bench_mix(args.points, args.lines, args.repeats)
    bench_jacobi(args.dim, args.batch, args.repeats)
    bench_end_to_end(1401, args.repeats)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
