"""Time the compiled and pure-Python kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import sys
import timeit

from lierep._backend import CKernel, PyKernel
from lierep.enumeration import dominant_weights_up_to
from lierep.rootsys import build


def _fresh(cls, rs):
    k = rs.kernel
    return cls(k.cartan, k.roots, k.coroots, k.gram, k.gram_scale)


def _workloads():
    e6, e8, a3 = build("E6"), build("E8"), build("A3")
    dims = [w for w, _ in dominant_weights_up_to(e6, 10**8)]

    def heights(rs):
        return [sum(r) for r in rs.positive_roots]

    def weyl_dims(k):
        for w in dims:
            k.weyl_dimension(w)

    def freudenthal(rs, hw):
        def run(k):
            ordered = [mu for mu, _ in k.dominant_weights(hw, heights(rs), 10**6)]
            return k.freudenthal(ordered)
        return run

    def klimyk(rs, small, large):
        def run(k):
            ordered = [mu for mu, _ in k.dominant_weights(small, heights(rs), 10**6)]
            char = k.freudenthal(ordered)
            return k.klimyk(list(char.items()), tuple(c + 1 for c in large))
        return run

    return [
        (f"weyl_dimension x{len(dims)} (E6)", e6, weyl_dims),
        ("freudenthal E8 w1+w7", e8, freudenthal(e8, (1, 0, 0, 0, 0, 0, 1, 0))),
        ("freudenthal A3 6w1+6w2+6w3", a3, freudenthal(a3, (6, 6, 6))),
        ("klimyk E6 w1+w6 (x) w3+w5", e6, klimyk(e6, (1, 0, 0, 0, 0, 1), (0, 0, 1, 0, 1, 0))),
        ("orbit E8 w4", e8, lambda k: k.orbit((0, 0, 0, 1, 0, 0, 0, 0))),
        ("closure order E6", e6, lambda k: k.closure_order(10**6)),
    ]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    if CKernel is None:
        print("compiled kernel not built; only the Python kernel is available", file=sys.stderr)
        return 1
    print(f"{'workload':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, rs, fn in _workloads():
        py, cy = _fresh(PyKernel, rs), _fresh(CKernel, rs)
        assert fn(py) == fn(cy), name
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat))
        t_cy = min(timeit.repeat(lambda: fn(cy), number=1, repeat=args.repeat))
        print(f"{name:34} {t_py:10.4f} {t_cy:10.4f} {t_py / t_cy:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
