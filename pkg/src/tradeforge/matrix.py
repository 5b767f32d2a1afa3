"""Dense arbitrary-precision integer matrices and the exact operations the
group construction rests on: fraction-free determinant, Ryser permanent, a
memoised expansion permanent for large sparse inputs, Smith normal form with
accumulated unimodular transforms, and rational linear solving.

No floating point is used anywhere.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd

from . import kernels
from .errors import InternalInconsistency, NotSquare, Singular, TooLarge

DEFAULT_PERMANENT_CAP = 30
PERMANENT_CAP_ENV = "TRADEFORGE_PERMANENT_CAP"


class IntMatrix:
    """Immutable row-major matrix of Python integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        data = tuple(tuple(int(v) for v in row) for row in entries)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({self.rows}x{self.cols})"

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.entries)) if other.entries else []
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, colvec)) for colvec in bt]
                for row in self.entries
            ]
        )

    def to_lists(self):
        return [list(row) for row in self.entries]

    def submatrix(self, keep_rows, keep_cols) -> "IntMatrix":
        return IntMatrix(
            [[self.entries[i][j] for j in keep_cols] for i in keep_rows]
        )

    def with_column(self, j: int, column) -> "IntMatrix":
        out = self.to_lists()
        for i, v in enumerate(column):
            out[i][j] = int(v)
        return IntMatrix(out)

    def with_entry(self, i: int, j: int, value: int) -> "IntMatrix":
        out = self.to_lists()
        out[i][j] = int(value)
        return IntMatrix(out)

    def nonzero_positions(self):
        return [
            (i, j)
            for i, row in enumerate(self.entries)
            for j, v in enumerate(row)
            if v
        ]


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every intermediate entry is itself a minor of m, so the single division
    per step is exact and no rationals appear.
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * pivot - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _permanent_cap(cap):
    if cap is not None:
        return cap
    env = os.environ.get(PERMANENT_CAP_ENV)
    if env:
        return int(env)
    return DEFAULT_PERMANENT_CAP


def permanent(m: IntMatrix, cap: int | None = None) -> int:
    """Exact permanent via Ryser's inclusion-exclusion (2^n subsets).

    Refuses matrices larger than the cap (default 30, overridable by the
    TRADEFORGE_PERMANENT_CAP environment variable or the `cap` argument).
    Dispatches to the compiled Gray-code kernel when it is available and
    provably overflow-free, else to the pure Python kernel.
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols}")
    limit = _permanent_cap(cap)
    if m.rows > limit:
        raise TooLarge(m.rows, limit)
    return kernels.ryser_permanent(m.to_lists())


def permanent_expansion(m: IntMatrix) -> int:
    """Exact permanent by memoised Laplace expansion on the sparsest column.

    Independent of the Ryser route.  Worst-case exponential, but on the
    sparse presentation matrices arising here the memo stays tiny, which is
    what makes permanents of orders well past the Ryser cap feasible.
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    support = [
        [(1 << i, m.entries[i][j]) for i in range(n) if m.entries[i][j]]
        for j in range(n)
    ]
    col_bits = [1 << j for j in range(n)]
    full = (1 << n) - 1
    memo = {}

    def expand(rows_mask, cols_mask):
        if not cols_mask:
            return 1
        key = (rows_mask, cols_mask)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best_j = -1
        best = None
        best_count = n + 1
        mask = cols_mask
        while mask:
            bit = mask & -mask
            mask ^= bit
            j = bit.bit_length() - 1
            avail = [(rb, v) for rb, v in support[j] if rb & rows_mask]
            if len(avail) < best_count:
                best_count = len(avail)
                best_j = j
                best = avail
                if best_count == 0:
                    break
        if best_count == 0:
            memo[key] = 0
            return 0
        rest = cols_mask ^ col_bits[best_j]
        total = 0
        for rb, v in best:
            total += v * expand(rows_mask ^ rb, rest)
        memo[key] = total
        return total

    return expand(full, full)


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form s = u1 @ input @ u2 with unimodular u1, u2.

    The diagonal of s is non-negative with each entry dividing the next;
    invariant_factors lists the diagonal entries exceeding 1.
    """

    u1: IntMatrix
    s: IntMatrix
    u2: IntMatrix
    invariant_factors: tuple

    @property
    def diagonal(self):
        return tuple(
            self.s.entries[i][i] for i in range(min(self.s.rows, self.s.cols))
        )

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Diagonalise m over the integers, accumulating the transforms.

    Pivots are chosen as the minimum-absolute-value nonzero entry of the
    remaining block to limit coefficient growth.  Works for rectangular
    input.  The identity u1 @ m @ u2 == s is re-checked by exact
    multiplication before returning.
    """
    nr, nc = m.rows, m.cols
    a = m.to_lists()
    u1 = IntMatrix.identity(nr).to_lists()
    u2 = IntMatrix.identity(nc).to_lists()

    def row_sub(i, k, q):  # row i -= q * row k
        ai, ak = a[i], a[k]
        for j in range(nc):
            ai[j] -= q * ak[j]
        vi, vk = u1[i], u1[k]
        for j in range(nr):
            vi[j] -= q * vk[j]

    def col_sub(j, k, q):  # col j -= q * col k
        for i in range(nr):
            a[i][j] -= q * a[i][k]
        for i in range(nc):
            u2[i][j] -= q * u2[i][k]

    t = 0
    while t < min(nr, nc):
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                v = a[i][j]
                if v and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u1[t], u1[pi] = u1[pi], u1[t]
        if pj != t:
            for rowvec in a:
                rowvec[t], rowvec[pj] = rowvec[pj], rowvec[t]
            for rowvec in u2:
                rowvec[t], rowvec[pj] = rowvec[pj], rowvec[t]
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
            u1[t] = [-v for v in u1[t]]
        d = a[t][t]
        clean = True
        for i in range(t + 1, nr):
            if a[i][t]:
                row_sub(i, t, a[i][t] // d)
                if a[i][t]:
                    clean = False
        for j in range(t + 1, nc):
            if a[t][j]:
                col_sub(j, t, a[t][j] // d)
                if a[t][j]:
                    clean = False
        if not clean:
            continue
        # the pivot must divide the whole remaining block
        offender = None
        for i in range(t + 1, nr):
            if any(v % d for v in a[i][t + 1:]):
                offender = i
                break
        if offender is not None:
            row_sub(t, offender, -1)
            continue
        t += 1

    s = IntMatrix(a)
    check = IntMatrix(u1) @ m @ IntMatrix(u2)
    if check != s:
        raise InternalInconsistency("Smith normal form transform check failed")
    diag = [s.entries[i][i] for i in range(min(nr, nc))]
    for x, y in zip(diag, diag[1:]):
        if y and (not x or y % x):
            raise InternalInconsistency("diagonal is not a divisibility chain")
    return SnfResult(
        u1=IntMatrix(u1),
        s=s,
        u2=IntMatrix(u2),
        invariant_factors=tuple(d for d in diag if d > 1),
    )


@dataclass(frozen=True)
class RationalVector:
    """Integer numerators over one positive common denominator, reduced."""

    numerators: tuple
    denominator: int

    @property
    def is_integral(self):
        return self.denominator == 1

    def __len__(self):
        return len(self.numerators)

    def __getitem__(self, i):
        from fractions import Fraction

        return Fraction(self.numerators[i], self.denominator)


def solve_rational(m: IntMatrix, rhs) -> RationalVector:
    """Unique exact solution of m @ x = rhs by Cramer's rule.

    Each coordinate is det(m with column j replaced by rhs) / det(m); all
    determinants go through the fraction-free elimination above.
    """
    if m.rows != m.cols:
        raise NotSquare(f"{m.rows}x{m.cols}")
    rhs = [int(v) for v in rhs]
    if len(rhs) != m.rows:
        raise ValueError("rhs length mismatch")
    den = determinant(m)
    if den == 0:
        raise Singular("matrix has determinant 0")
    nums = [determinant(m.with_column(j, rhs)) for j in range(m.cols)]
    if den < 0:
        den = -den
        nums = [-v for v in nums]
    g = den
    for v in nums:
        g = gcd(g, v)
    return RationalVector(tuple(v // g for v in nums), den // g)
