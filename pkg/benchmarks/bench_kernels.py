"""Compare the compiled and pure-Python kernel backends.

    python benchmarks/bench_kernels.py [--repeat N]

Times every kernel on a few fixed hypergraphs and reports the speedup.
"""

import argparse
import timeit

from hyperposet import _kernels
from hyperposet.hypergraph import (
    GroundInterval,
    complete_cyclic_interval_hypergraph,
    complete_interval_hypergraph,
    parse,
)
from hyperposet.lattice import pairwise_pseudo_joins, pairwise_pseudo_meets
from hyperposet.poset import build_poset, hasse, is_lattice_bruteforce, join_table

CASES = {
    "tamari-6": complete_interval_hypergraph(6),
    "cyclic-5": complete_cyclic_interval_hypergraph(5),
    "worked-6": parse(GroundInterval(1, 6), [{1, 2, 3, 6}, {2, 3, 4}, {1, 2, 5, 6}, {3, 4}, {5, 6}]),
}


def kernels(H, backend):
    n = H.ground.size
    P = build_poset(H, backend=backend)
    return {
        "backtrack": lambda: backend.backtrack_acyclic(H.masks, n),
        "permutations": lambda: backend.permutation_image(H.masks, n),
        "order rows": lambda: backend.up_rows(P.sources),
        "hasse": lambda: hasse(P),
        "lattice scan": lambda: is_lattice_bruteforce(P),
        "join table": lambda: join_table(P),
        "pseudo-joins": lambda: pairwise_pseudo_joins(P, backend),
        "pseudo-meets": lambda: pairwise_pseudo_meets(P, backend),
    }, len(P)


def best(fn, repeat):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(repeat, number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _kernels.backends()
    names = [b.NAME for b in backends]
    print(f"backends: {', '.join(names)}")
    header = f"{'case':<10} {'kernel':<14}" + "".join(f"{n:>12}" for n in names)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for case, H in CASES.items():
        rows = {}
        for backend in backends:
            fns, size = kernels(H, backend)
            for name, fn in fns.items():
                rows.setdefault(name, []).append(best(fn, args.repeat))
        print(f"{case} ({size} orientations)")
        for name, times in rows.items():
            line = f"{'':<10} {name:<14}" + "".join(f"{t * 1e3:>10.3f}ms" for t in times)
            if len(times) > 1:
                line += f"{times[1] / times[0]:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
