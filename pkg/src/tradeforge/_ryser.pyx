# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Gray-code Ryser kernel.

Accumulates in 128-bit integers; the Python wrapper only dispatches here
after proving, from an a-priori bound on every intermediate, that 128 bits
suffice, so no overflow checks are needed in the loop.
"""

from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #include <stdint.h>

    typedef __int128 tf_i128;

    /* Permanent of the n x n int64 matrix a (row-major).  Writes the
       magnitude into hi/lo and the sign into neg.  Returns 0 on success,
       -1 on allocation failure.  Caller guarantees n <= 62 and that
       2^n * prod_i(sum_j |a_ij|) fits in a signed 128-bit integer, which
       bounds every partial product and the running total. */
    static int tf_ryser_i128(const int64_t *a, int n,
                             uint64_t *hi, uint64_t *lo, int *neg)
    {
        tf_i128 row_sum[64];
        tf_i128 prod = 1, total = 0, old_v, new_v;
        uint64_t gray = 0, k, lim = ((uint64_t)1) << n;
        int *col_rows;
        int64_t *col_vals;
        int *col_len;
        int i, j, t, zeros = n, size = 0, sign;

        col_rows = (int *)malloc(sizeof(int) * (size_t)n * (size_t)n);
        col_vals = (int64_t *)malloc(sizeof(int64_t) * (size_t)n * (size_t)n);
        col_len = (int *)malloc(sizeof(int) * (size_t)n);
        if (!col_rows || !col_vals || !col_len) {
            free(col_rows); free(col_vals); free(col_len);
            return -1;
        }
        for (j = 0; j < n; j++) {
            t = 0;
            for (i = 0; i < n; i++) {
                if (a[(size_t)i * n + j]) {
                    col_rows[(size_t)j * n + t] = i;
                    col_vals[(size_t)j * n + t] = a[(size_t)i * n + j];
                    t++;
                }
            }
            col_len[j] = t;
        }
        for (i = 0; i < n; i++) row_sum[i] = 0;

        for (k = 1; k < lim; k++) {
            uint64_t bit = k & (~k + 1);
            j = __builtin_ctzll(k);
            gray ^= bit;
            if (gray & bit) { sign = 1; size++; } else { sign = -1; size--; }
            for (t = 0; t < col_len[j]; t++) {
                i = col_rows[(size_t)j * n + t];
                old_v = row_sum[i];
                new_v = old_v + (sign > 0 ? (tf_i128)col_vals[(size_t)j * n + t]
                                          : -(tf_i128)col_vals[(size_t)j * n + t]);
                row_sum[i] = new_v;
                if (old_v != 0) prod /= old_v; else zeros--;
                if (new_v != 0) prod *= new_v; else zeros++;
            }
            if (zeros == 0) {
                if ((n - size) & 1) total -= prod; else total += prod;
            }
        }
        free(col_rows); free(col_vals); free(col_len);
        if (total < 0) { *neg = 1; total = -total; } else { *neg = 0; }
        *hi = (uint64_t)((tf_i128)total >> 64);
        *lo = (uint64_t)(total & (tf_i128)0xffffffffffffffffULL);
        return 0;
    }
    """
    int tf_ryser_i128(const int64_t *a, int n,
                      uint64_t *hi, uint64_t *lo, int *neg) nogil


def ryser_permanent(rows):
    """Permanent of a square integer matrix given as a list of row lists.

    The caller is responsible for the 128-bit feasibility precondition; see
    tradeforge.kernels for the dispatch logic.
    """
    cdef int n = len(rows)
    if n == 0:
        return 1
    if n > 62:
        raise ValueError("compiled kernel handles at most 62 rows")
    cdef int64_t *a = <int64_t *>malloc(sizeof(int64_t) * n * n)
    if a == NULL:
        raise MemoryError
    cdef int i, j, rc
    cdef uint64_t hi = 0, lo = 0
    cdef int neg = 0
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                a[i * n + j] = row[j]
        with nogil:
            rc = tf_ryser_i128(a, n, &hi, &lo, &neg)
    finally:
        free(a)
    if rc != 0:
        raise MemoryError
    value = (int(hi) << 64) | int(lo)
    return -value if neg else value
