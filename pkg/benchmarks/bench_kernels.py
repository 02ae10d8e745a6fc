"""Timing comparison between the compiled kernels and the pure-Python port.

Micro benchmarks call both kernel modules directly in one process; the
macro benchmark re-executes this script with EDC_BACKEND pinned so each
run measures a full corpus sweep through the selected backend.

Usage: python3 benchmarks/bench_kernels.py [--uniforms N] [--masks N]
"""

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

from edc import _kernels_py


def _load_backends():
    backends = {"python": _kernels_py}
    try:
        from edc import _kernels
    except ImportError:
        print("note: compiled kernels not built; timing the python port only")
    else:
        backends["c"] = _kernels
    return backends


def _best_of(fn, repeats=5):
    return min(fn() for _ in range(repeats))


def bench_uniforms(kernels, n):
    def run():
        state = kernels.stream_init(42, 0, 0)
        start = time.perf_counter()
        for _ in range(n):
            state, _ = kernels.next_uniform(state)
        return time.perf_counter() - start

    return _best_of(run)


def bench_keep_mask(kernels, n_masks, width):
    def run():
        state = kernels.stream_init(42, 0, 0)
        start = time.perf_counter()
        for _ in range(n_masks):
            state, _ = kernels.keep_mask(state, width, 0.5)
        return time.perf_counter() - start

    return _best_of(run)


def _run_sweep():
    from edc import backend_name
    from edc.schedule import DifficultySchedule
    from edc.stats import sweep
    from edc.synthetic import synthetic_corpus

    corpus = synthetic_corpus(n_captions=2000)
    schedule = DifficultySchedule(alpha=0.05, max_epoch=100)
    start = time.perf_counter()
    sweep(corpus, schedule, seed=42, batch_size=64)
    elapsed = time.perf_counter() - start
    print(json.dumps({"backend": backend_name(), "seconds": elapsed}))


def bench_sweep(backend, repeats=3):
    env = dict(os.environ, EDC_BACKEND=backend)
    samples = []
    for _ in range(repeats):
        out = subprocess.run(
            [sys.executable, __file__, "--sweep-child"],
            env=env, capture_output=True, text=True, check=True,
        )
        payload = json.loads(out.stdout.splitlines()[-1])
        assert payload["backend"] == backend
        samples.append(payload["seconds"])
    return min(samples), statistics.mean(samples)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--uniforms", type=int, default=1_000_000)
    parser.add_argument("--masks", type=int, default=100_000)
    parser.add_argument("--sweep-child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()

    if args.sweep_child:
        _run_sweep()
        return

    backends = _load_backends()

    print(f"uniform draws ({args.uniforms:,}):")
    times = {}
    for name, mod in backends.items():
        times[name] = bench_uniforms(mod, args.uniforms)
        rate = args.uniforms / times[name] / 1e6
        print(f"  {name:>6}: {times[name]:.3f} s  ({rate:.1f} M draws/s)")
    if len(times) == 2:
        print(f"  speedup: {times['python'] / times['c']:.1f}x")

    print(f"keep masks ({args.masks:,} x 16 tokens):")
    times = {}
    for name, mod in backends.items():
        times[name] = bench_keep_mask(mod, args.masks, 16)
        rate = args.masks / times[name] / 1e3
        print(f"  {name:>6}: {times[name]:.3f} s  ({rate:.1f} K masks/s)")
    if len(times) == 2:
        print(f"  speedup: {times['python'] / times['c']:.1f}x")

    print("full sweep (2000 captions, 101 epochs):")
    sweep_times = {}
    for name in backends:
        best, mean = bench_sweep(name)
        sweep_times[name] = best
        print(f"  {name:>6}: best {best:.2f} s, mean {mean:.2f} s")
    if len(sweep_times) == 2:
        print(f"  speedup: {sweep_times['python'] / sweep_times['c']:.1f}x")


if __name__ == "__main__":
    main()
