"""Benchmark the permanent kernels on reduced presentation matrices.

Compares the compiled Gray-code Ryser extension against the pure Python
fallback and the memoised expansion route.  Run:

    python benchmarks/bench_permanent.py
"""

import time

from tradeforge import build_presentation, permanent_expansion, torank, two_rows
from tradeforge.kernels import (
    HAVE_COMPILED,
    ryser_permanent_compiled,
    ryser_permanent_pure,
)

CASES = [
    ("two_rows(8)", two_rows(8)),
    ("two_rows(10)", two_rows(10)),
    ("two_rows(12)", two_rows(12)),
    ("torank(3)", torank(3)),
    ("torank(6)", torank(6)),
]

RYSER_LIMIT = 24  # pure Ryser above this is pointlessly slow for a benchmark


def timed(fn, *args):
    start = time.perf_counter()
    value = fn(*args)
    return value, time.perf_counter() - start


def main():
    print(f"compiled kernel available: {HAVE_COMPILED}")
    header = f"{'instance':<14} {'n':>3} {'per':>8} {'compiled':>10} {'pure':>10} {'expansion':>10}"
    print(header)
    print("-" * len(header))
    for name, bt in CASES:
        reduced = build_presentation(bt).reduced_matrix
        rows = reduced.to_lists()
        n = reduced.rows
        value, t_exp = timed(permanent_expansion, reduced)
        if n <= RYSER_LIMIT:
            if HAVE_COMPILED:
                c_value, t_c = timed(ryser_permanent_compiled, rows)
                assert c_value == value
                compiled_col = f"{t_c:9.3f}s"
            else:
                compiled_col = "      n/a"
            p_value, t_p = timed(ryser_permanent_pure, rows)
            assert p_value == value
            pure_col = f"{t_p:9.3f}s"
        else:
            compiled_col = "   (>cap)"
            pure_col = "   (>cap)"
        print(
            f"{name:<14} {n:>3} {value:>8} {compiled_col:>10} {pure_col:>10} "
            f"{t_exp:9.3f}s"
        )


if __name__ == "__main__":
    main()
