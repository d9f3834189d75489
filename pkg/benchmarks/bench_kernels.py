"""Time the numba and pure-numpy paths of every hot kernel on representative inputs.

    python3 benchmarks/bench_kernels.py [--repeat 20]

Prints one row per kernel with the median wall time of each path and the
speedup. The numba functions are called once before timing so JIT
compilation is excluded.
"""
import argparse
import statistics
import time

import numpy as np

from bevdiff import _kernels as K


def _median_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def cases(rng):
    # codec-sized convolution lowering: batch 32, 32 channels, 26x26 padded, 3x3 kernel
    xp = rng.normal(size=(32, 32, 26, 26)).astype(np.float32)
    cols = rng.normal(size=(32, 32, 3, 3, 24, 24)).astype(np.float32)
    yield "im2col 32x32x26x26 k3", lambda f: f(xp, 3, 1, 24, 24), (K.np_im2col, K.nb_im2col)
    yield "col2im 32x32x26x26 k3", lambda f: f(cols, 26, 26, 1), (K.np_col2im, K.nb_col2im)

    # one scene's worth of vehicle boxes on a 128x128 canvas
    quads = []
    for _ in range(30):
        c = rng.uniform(0, 128, 2)
        a = rng.uniform(0, np.pi)
        u, v = np.array([np.cos(a), np.sin(a)]), np.array([-np.sin(a), np.cos(a)])
        quads.append(np.array([c + 9 * u + 4 * v, c - 9 * u + 4 * v, c - 9 * u - 4 * v, c + 9 * u - 4 * v]))
    color = np.array([0.2, 0.6, 0.9])

    def boxes(f):
        canvas = np.zeros((3, 128, 128))
        for q in quads:
            f(canvas, q, color)
    yield "fill_quad x30 128x128", boxes, (K.np_fill_quad, K.nb_fill_quad)

    # future trajectories: 30 polylines of 9 vertices
    lines = [(rng.uniform(0, 128, (9, 2)), rng.random((9, 3))) for _ in range(30)]

    def strokes(f):
        canvas = np.zeros((3, 128, 128))
        for pts, cs in lines:
            f(canvas, pts, cs)
    yield "draw_polyline x30 128x128", strokes, (K.np_draw_polyline, K.nb_draw_polyline)

    # simulator lane projection: 64 points onto a 200-vertex centreline
    t = np.linspace(0, np.pi, 200)
    poly = np.stack([60 * np.cos(t), 60 * np.sin(t)], 1)
    cum = np.concatenate([[0.0], np.cumsum(np.hypot(*np.diff(poly, axis=0).T))])
    pts = rng.uniform(-70, 70, (64, 2))
    yield "project_polyline 64x200", lambda f: f(pts, poly, cum), (K.np_project_polyline, K.nb_project_polyline)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args(argv)
    if K.numba is None:
        raise SystemExit("numba is not installed; only the numpy path exists")
    print(f"default path: {'numba' if K.USE_NUMBA else 'numpy'}")
    print(f"{'kernel':<28}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, run, (np_fn, nb_fn) in cases(np.random.default_rng(0)):
        run(nb_fn)  # compile
        t_np = _median_time(lambda: run(np_fn), args.repeat)
        t_nb = _median_time(lambda: run(nb_fn), args.repeat)
        print(f"{name:<28}{1e3 * t_np:>12.3f}{1e3 * t_nb:>12.3f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
