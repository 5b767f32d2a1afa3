"""Pure-Python fallback for the hot permanent kernel.

Same Gray-code Ryser scheme as the compiled extension, with Python's
arbitrary-precision integers, so there is no overflow precondition.
"""

from __future__ import annotations


def ryser_permanent(rows) -> int:
    """Permanent by Ryser's inclusion-exclusion over column subsets.

    Subsets are walked in Gray-code order so each step toggles a single
    column; the product of row sums is maintained incrementally through a
    zero counter plus exact division, making a step O(column support)
    instead of O(n).
    """
    n = len(rows)
    if n == 0:
        return 1
    support = [
        [(i, rows[i][j]) for i in range(n) if rows[i][j]] for j in range(n)
    ]
    row_sum = [0] * n
    prod = 1
    zeros = n
    total = 0
    gray = 0
    size = 0
    for k in range(1, 1 << n):
        bit = k & -k
        j = bit.bit_length() - 1
        gray ^= bit
        if gray & bit:
            sign = 1
            size += 1
        else:
            sign = -1
            size -= 1
        for i, value in support[j]:
            old = row_sum[i]
            new = old + sign * value
            row_sum[i] = new
            if old:
                prod //= old
            else:
                zeros -= 1
            if new:
                prod *= new
            else:
                zeros += 1
        if not zeros:
            if (n - size) & 1:
                total -= prod
            else:
                total += prod
    return total
