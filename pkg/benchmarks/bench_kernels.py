"""Time the compiled and pure-Python kernels on the same instances.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""
import argparse
import time

from sierdom import BACKENDS
from sierdom.domination import Parameter, brute_force, exact_gamma_dr, exact_gamma_r
from sierdom.graph import complete_graph, cycle_graph, path_graph
from sierdom.sierpinski import sierpinski


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases(quick):
    bnb = [(f"S(K{n},2)", sierpinski(complete_graph(n), 2).graph) for n in ((5, 6) if quick else (5, 6, 7))]
    bnb += [("S(K3,3)", sierpinski(complete_graph(3), 3).graph), ("S(K4,3)", sierpinski(complete_graph(4), 3).graph)]
    brute = [(f"C{n}", cycle_graph(n)) for n in ((8, 9) if quick else (8, 9, 10))]
    brute += [("P11", path_graph(11))] if not quick else []
    return bnb, brute


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    backends = sorted(BACKENDS)
    bnb, brute = cases(args.quick)
    print(f"backends: {', '.join(backends)}")
    print(f"{'kernel':<12}{'instance':<10}{'param':<10}{'weight':>7}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    rows = []
    for name, g in bnb:
        for param, solve in ((Parameter.GAMMA_R, exact_gamma_r), (Parameter.GAMMA_DR, exact_gamma_dr)):
            rows.append(("bnb", name, param, {b: best_of(lambda: solve(g, backend=b), args.repeat) for b in backends}))
    for name, g in brute:
        rows.append(("brute", name, Parameter.GAMMA_DR, {b: best_of(lambda: brute_force(g, Parameter.GAMMA_DR, backend=b), 1) for b in backends}))
    for kernel, name, param, res in rows:
        weights = {r[1].weight for r in res.values()}
        assert len(weights) == 1, f"backends disagree on {name}"
        secs = {b: r[0] for b, r in res.items()}
        speed = f"{secs['python'] / secs['compiled']:.1f}x" if 'compiled' in secs else '-'
        print(f"{kernel:<12}{name:<10}{param.value:<10}{weights.pop():>7}" + "".join(f"{secs[b]:>11.4f}s" for b in backends) + f"{speed:>10}")


if __name__ == "__main__":
    main()
