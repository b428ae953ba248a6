"""Compare the compiled and pure-Python kernel backends.

Usage::

    python benchmarks/bench_kernels.py [--repeat N]

Times ``li2_many`` on random points and the potential and gradient of the
composite diagram at its hyperbolic solution.  Results of the two backends
are cross-checked before timing.
"""

import argparse
import timeit

import numpy as np

from knotrep import fixtures, kernels
from knotrep.exact import ROOTS
from knotrep.volume import potential_tables, solution_from_shadow


def cases(rng):
    zs = (rng.normal(size=20000) + 1j * rng.normal(size=20000)) * 2
    sh = fixtures.shadow_coloring("3_1#4_1", x=ROOTS["minus"])
    w = np.array(solution_from_shadow(sh), dtype=complex)
    t = potential_tables(sh.diagram)
    return {
        "li2_many (20000 points)": lambda m: m.li2_many(zs),
        "potential (3_1#4_1)": lambda m: m.potential(
            w, t.coef, t.faces, t.exps, t.lp_coef, t.lp_idx, t.const),
        "log_gradient (3_1#4_1)": lambda m: m.log_gradient(
            w, t.coef, t.faces, t.exps, t.lp_coef, t.lp_idx, t.n_faces),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    impls = kernels.backends()
    if "cython" not in impls:
        print("compiled backend not built; timing the Python backend only")
    rng = np.random.default_rng(0)
    print(f"{'case':28s}" + "".join(f"{name:>14s}" for name in impls) + "   speedup")
    for label, fn in cases(rng).items():
        outs = [np.asarray(fn(m)) for m in impls.values()]
        assert all(np.allclose(o, outs[0], rtol=1e-12, atol=1e-12) for o in outs), label
        times = {}
        for name, m in impls.items():
            number = 1 if label.startswith("li2") else 2000
            best = min(timeit.repeat(lambda: fn(m), number=number, repeat=args.repeat))
            times[name] = best / number
        row = f"{label:28s}" + "".join(f"{times[n] * 1e6:12.1f}us" for n in impls)
        if "cython" in times:
            row += f"   {times['python'] / times['cython']:6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
