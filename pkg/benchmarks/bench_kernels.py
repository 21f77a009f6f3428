"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the raw cover kernel on random side lists and full 4-tangle
enumeration on a few fixtures, once per backend.
"""

import argparse
import random
import timeit

from tangle4 import _pykernels, kernels
from tangle4.named_graphs import NAMED, blown_up_cube


def cover_workload(seed=0, cases=300):
    rng = random.Random(seed)
    g = NAMED["petersen"]()
    out = []
    for _ in range(cases):
        sides = [rng.getrandbits(g.n) | rng.getrandbits(g.n) for _ in range(40)]
        out.append(sides)
    return g, out


def run_cover(mod, g, workload):
    for sides in workload:
        mod.find_cover(sides, g.adj, g.n)


def run_enumeration(mod, graphs):
    from tangle4 import tangles
    saved = kernels.backend
    kernels.backend = lambda n: mod
    try:
        for g in graphs:
            tangles.enumerate_tangles(g, 4)
    finally:
        kernels.backend = saved


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    backends = [("python", _pykernels)]
    if kernels.COMPILED:
        from tangle4 import _ckernels
        backends.insert(0, ("compiled", _ckernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    g, work = cover_workload()
    graphs = [NAMED[n]() for n in ("petersen", "two_cube_gadget", "chain")] + [blown_up_cube((3, 3, 1, 1))]
    rows = []
    for name, mod in backends:
        cover = min(timeit.repeat(lambda: run_cover(mod, g, work), number=1, repeat=args.repeat))
        enum = min(timeit.repeat(lambda: run_enumeration(mod, graphs), number=1, repeat=args.repeat))
        rows.append((name, cover, enum))
    print(f"{'backend':<10}{'cover kernel (s)':>18}{'enumeration (s)':>18}")
    for name, cover, enum in rows:
        print(f"{name:<10}{cover:>18.4f}{enum:>18.4f}")
    if len(rows) == 2:
        print(f"{'speed-up':<10}{rows[1][1] / rows[0][1]:>17.1f}x{rows[1][2] / rows[0][2]:>17.1f}x")


if __name__ == "__main__":
    main()
