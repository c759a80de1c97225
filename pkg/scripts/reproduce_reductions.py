"""Reduce each ansatz template and print the resulting bracket table.

    python3 scripts/reproduce_reductions.py [template ...] [--no-branch]
"""

import sys
import time

from liefol.geometry import classify
from liefol.symbolic import TEMPLATES, reduce_template, verify_identically_zero


def show(template, branch):
    t0 = time.perf_counter()
    red, res = reduce_template(template, branch=branch)
    dt = time.perf_counter() - t0
    g = red.algebra
    print(f"== {template}  ({dt:.2f}s, {len(res.free)} free)")
    if res.assumptions:
        print("assumptions: " + ", ".join(f"{a} = 0" for a in res.assumptions))
    print("free: " + " ".join(res.free))
    for (i, j), row in g.brackets.items():
        terms = [f"({c})*{g.basis[k]}" for k, c in enumerate(row) if not c.is_zero()]
        print(f"  [{g.basis[i]},{g.basis[j]}] = " + " + ".join(terms))
    if res.residual:
        print(f"residual ({len(res.residual)}):")
        for p in res.residual:
            print(f"  {p} = 0")
    else:
        print("residual: none")
    print(f"jacobi identically zero: {not verify_identically_zero(red)}")
    rep = classify(g, red.splitting)
    print(f"symbolic mean curvature: {[str(c) for c in rep.mean_curvature]}")
    print()


def main(argv):
    branch = "--no-branch" not in argv
    names = [a for a in argv if not a.startswith("--")] or list(TEMPLATES)
    for name in names:
        show(name, branch)


if __name__ == "__main__":
    main(sys.argv[1:])
