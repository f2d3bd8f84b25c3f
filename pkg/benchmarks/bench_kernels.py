"""Time the clique-search kernel with numba and with the pure-numpy fallback.

Each mode runs in its own interpreter because the backend is chosen at import
time from RAMSEY_BOUNDS_DISABLE_NUMBA.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def instances(quick):
    import numpy as np

    from ramsey_bounds import seed, theorem1_construct, theorem2_construct
    from ramsey_bounds.coloring import EdgeColoring, num_pairs

    w8, wb = seed("wagner8")
    q17, qb = seed("qr17")
    rng = np.random.default_rng(0)
    cases = [
        ("thm2 wagner8 t=3 (n=32)", theorem2_construct(w8, wb, 3, 1)),
        ("thm1 qr17 k1=4 (n=51)", theorem1_construct(q17, qb, 4)),
        ("thm2 qr17 t=4 (n=85)", theorem2_construct(q17, qb, 4, 1)),
    ]
    if not quick:
        cases.append(("thm2 qr17 t=10 (n=187)", theorem2_construct(q17, qb, 10, 1)))
    out = [(name, res.coloring, res.claimed_bounds) for name, res in cases]
    n = 60 if quick else 90
    rand = EdgeColoring(n, 2, rng.integers(1, 3, size=num_pairs(n), dtype=np.uint8))
    out.append((f"random 2-coloring (n={n})", rand, (9, 9)))
    return out


def run_mode(repeat, quick):
    from ramsey_bounds import verify
    from ramsey_bounds._jit import NUMBA_ENABLED

    rows = []
    for name, c, bounds in instances(quick):
        verify(c, bounds, budget=10)  # compile outside the clock
        best = float("inf")
        for _ in range(repeat):
            start = time.perf_counter()
            report = verify(c, bounds)
            best = min(best, time.perf_counter() - start)
        nodes = sum(res.nodes for res in report.per_color)
        rows.append({"name": name, "seconds": best, "nodes": nodes, "certified": report.certified})
    return {"numba": NUMBA_ENABLED, "rows": rows}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller random instance")
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.child:
        json.dump(run_mode(args.repeat, args.quick), sys.stdout)
        return

    results = {}
    for label, flag in (("numba", "0"), ("fallback", "1")):
        env = dict(os.environ, RAMSEY_BOUNDS_DISABLE_NUMBA=flag)
        cmd = [sys.executable, __file__, "--child", "--repeat", str(args.repeat)]
        if args.quick:
            cmd.append("--quick")
        out = subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout
        results[label] = json.loads(out)

    print(f"{'instance':34s} {'nodes':>9s} {'numba s':>9s} {'numpy s':>9s} {'speedup':>8s}")
    for fast, slow in zip(results["numba"]["rows"], results["fallback"]["rows"]):
        assert fast["nodes"] == slow["nodes"] and fast["certified"] == slow["certified"]
        ratio = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("inf")
        print(f"{fast['name']:34s} {fast['nodes']:9d} {fast['seconds']:9.4f} {slow['seconds']:9.4f} {ratio:7.1f}x")


if __name__ == "__main__":
    main()
