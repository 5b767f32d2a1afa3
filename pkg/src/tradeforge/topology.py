"""Genus of separated connected bitrades and disjoint-mate enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import NamedTuple

from .errors import InternalInconsistency, NoMateExists, NotConnected, NotSeparated
from .pls import Bitrade, Pls, Triple, is_connected, is_separated, validate_bitrade


@dataclass(frozen=True)
class GenusReport:
    size: int
    rows: int
    cols: int
    syms: int
    genus: int


def genus(bt: Bitrade) -> GenusReport:
    """Genus of the orientable surface triangulated by the bitrade.

    g = (2 + size - |R| - |C| - |S|) / 2, which only makes sense for
    separated, connected bitrades; those preconditions are enforced and the
    numerator is checked to be even and non-negative.
    """
    sep = is_separated(bt)
    if not sep.separated:
        raise NotSeparated(sep.offenders)
    conn = is_connected(bt)
    if not conn.connected:
        raise NotConnected(conn.components)
    w = bt.white
    nr, nc, ns = len(w.rows), len(w.cols), len(w.syms)
    numerator = 2 + bt.size - nr - nc - ns
    if numerator % 2 or numerator < 0:
        raise InternalInconsistency(
            f"genus numerator {numerator} is not an even non-negative integer"
        )
    return GenusReport(bt.size, nr, nc, ns, numerator // 2)


def is_spherical(bt: Bitrade) -> bool:
    """True when the bitrade is separated, connected and of genus zero."""
    if not is_separated(bt).separated or not is_connected(bt).connected:
        return False
    return genus(bt).genus == 0


class MateFlags(NamedTuple):
    separated: bool
    connected: bool


@dataclass(frozen=True)
class MateSearchResult:
    mates: tuple
    truncated: bool
    classified: tuple

    def __len__(self):
        return len(self.mates)


def find_mates(w: Pls, limit: int = 64) -> MateSearchResult:
    """Enumerate the disjoint mates of w, in lexicographic order.

    A mate occupies exactly w's cells, deranges every row's symbols onto
    that row's cells and permutes every column's symbols, which together
    already force the bitrade conditions.  Rows are processed fewest cells
    first with column multisets propagated after each row.  Enumeration
    stops after `limit` mates; each mate is re-validated and classified.
    """
    if not len(w):
        raise NoMateExists("empty partial latin square")
    for kind, labels, of in (
        ("row", w.rows, w.in_row),
        ("column", w.cols, w.in_col),
        ("symbol", w.syms, w.with_sym),
    ):
        for lab in labels:
            if len(of(lab)) < 2:
                raise NoMateExists(f"{kind} {lab} is used only once")

    order = sorted(w.rows, key=lambda r: (len(w.in_row(r)), r))
    column_need = {c: {} for c in w.cols}
    for t in w:
        column_need[t.col][t.sym] = column_need[t.col].get(t.sym, 0) + 1

    mates = []
    chosen = {}

    def assign_row(i):
        if len(mates) >= limit:
            return
        if i == len(order):
            mates.append(Pls(Triple(r, c, s) for (r, c), s in chosen.items()))
            return
        r = order[i]
        cells = w.in_row(r)
        whites = [t.sym for t in cells]
        for perm in permutations(whites):
            ok = True
            for t, s in zip(cells, perm):
                if s == t.sym or column_need[t.col].get(s, 0) <= 0:
                    ok = False
                    break
            if not ok:
                continue
            for t, s in zip(cells, perm):
                column_need[t.col][s] -= 1
                chosen[(r, t.col)] = s
            assign_row(i + 1)
            for t, s in zip(cells, perm):
                column_need[t.col][s] += 1
                del chosen[(r, t.col)]
            if len(mates) >= limit:
                return

    assign_row(0)
    truncated = len(mates) >= limit
    if not mates:
        raise NoMateExists("no symbol rearrangement yields a disjoint mate")

    mates.sort(key=lambda p: p.triples)
    flags = []
    for mate in mates:
        bt = validate_bitrade(w, mate)
        flags.append(
            MateFlags(is_separated(bt).separated, is_connected(bt).connected)
        )
    return MateSearchResult(tuple(mates), truncated, tuple(flags))
