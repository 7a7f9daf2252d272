"""Compare the compiled bitset kernels against the pure-Python fallback.

Times order-ideal enumeration and repeated rowmotion sweeps over the full
ideal lattice of square grid posets.  Run from the repository root:

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --sides 5 6 7 --repeats 20
"""

import argparse
import time

from togglekit.kernels import HAVE_COMPILED, pybitops
from togglekit.posets import rectangle_poset

if HAVE_COMPILED:
    from togglekit.kernels import _bitops
else:
    _bitops = None


def _time(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def bench_side(side, repeats):
    poset = rectangle_poset(side, side)
    lows = poset.lower_masks
    ups = poset.upper_masks
    order = poset.rowmotion_order

    rows = []
    pure_enum, masks = _time(pybitops.enumerate_ideals, poset.size, lows)
    row = {"label": f"enumerate J([{side}]x[{side}]) ({len(masks)} ideals)",
           "pure": pure_enum}
    if _bitops is not None:
        fast_enum, fast_masks = _time(_bitops.enumerate_ideals, poset.size, lows)
        assert sorted(fast_masks) == sorted(masks), "kernel outputs disagree"
        row["compiled"] = fast_enum
    rows.append(row)

    def sweep_all(mod):
        out = masks
        for _ in range(repeats):
            out = mod.sweep_many(out, order, lows, ups)
        return out

    pure_sweep, pure_out = _time(sweep_all, pybitops)
    row = {"label": f"rowmotion x{repeats} over all ideals", "pure": pure_sweep}
    if _bitops is not None:
        fast_sweep, fast_out = _time(sweep_all, _bitops)
        assert list(fast_out) == list(pure_out), "kernel outputs disagree"
        row["compiled"] = fast_sweep
    rows.append(row)
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sides", type=int, nargs="+", default=[4, 5, 6, 7],
                        help="grid side lengths to benchmark (default 4 5 6 7)")
    parser.add_argument("--repeats", type=int, default=50,
                        help="rowmotion sweeps per ideal (default 50)")
    args = parser.parse_args()

    print(f"compiled kernels available: {HAVE_COMPILED}")
    header = f"{'benchmark':<45} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for side in args.sides:
        for row in bench_side(side, args.repeats):
            pure = row["pure"]
            if "compiled" in row:
                fast = row["compiled"]
                ratio = pure / fast if fast > 0 else float("inf")
                print(f"{row['label']:<45} {pure:>10.4f} {fast:>13.4f} {ratio:>7.1f}x")
            else:
                print(f"{row['label']:<45} {pure:>10.4f} {'-':>13} {'-':>8}")


if __name__ == "__main__":
    main()
