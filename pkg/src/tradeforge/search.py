"""Necessary-condition tests and brute-force group-embedding searches.

The quadrangle criterion and the row-permutation (regularity/closure) test
can only rule embeddings out; the backtracking searches decide membership
in a concrete cyclic or finite abelian group.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import NotARectangle
from .groups import AbelianGroup, groups_of_order
from .pls import ROW, Pls


@dataclass(frozen=True)
class QuadrangleViolation:
    """Two symbol-aligned quadrangles whose fourth cells disagree.

    first/second hold the three triples fixing the shared symbol pattern;
    first_cell/second_cell are the fourth cells with their distinct symbols.
    """

    first: tuple
    second: tuple
    first_cell: object
    second_cell: object

    def __str__(self):
        return (
            f"cells ({self.first_cell.row} {self.first_cell.col}) and "
            f"({self.second_cell.row} {self.second_cell.col}) hold "
            f"{self.first_cell.sym} vs {self.second_cell.sym}"
        )


def quadrangle_violations(p: Pls) -> list:
    """Exhaustively scan for quadrangle-criterion violations.

    Any violation certifies that p embeds in no group.  An empty list does
    not certify embeddability.
    """
    rows = p.rows
    seen = {}
    violations = []
    for r1 in rows:
        row1 = {t.col: t for t in p.in_row(r1)}
        for r2 in rows:
            if r2 == r1:
                continue
            row2 = {t.col: t for t in p.in_row(r2)}
            shared = [c for c in row1 if c in row2]
            for c1 in shared:
                for c2 in shared:
                    if c2 == c1:
                        continue
                    key = (row1[c1].sym, row1[c2].sym, row2[c1].sym)
                    config = ((row1[c1], row1[c2], row2[c1]), row2[c2])
                    kept = seen.get(key)
                    if kept is None:
                        seen[key] = config
                    elif kept[1].sym != row2[c2].sym:
                        violations.append(
                            QuadrangleViolation(
                                first=kept[0],
                                second=config[0],
                                first_cell=kept[1],
                                second_cell=config[1],
                            )
                        )
    return violations


@dataclass(frozen=True)
class RowPermutationReport:
    """Regularity of the row-pair permutations and the order of the group
    they generate (capped; overflow already rules out group embeddings)."""

    regular: bool
    irregular_pair: Optional[tuple]
    closure_order: Optional[int]
    overflow: bool

    @property
    def rules_out_group_embedding(self) -> bool:
        return not self.regular or self.overflow


def row_permutation_test(p: Pls) -> RowPermutationReport:
    """Treat row pairs as permutations in two-row format.

    If some pair is not regular (cycles of equal length), or the
    permutations built from the first row generate a group larger than the
    symbol count, p cannot be embedded in any group.
    """
    rows = p.rows
    if len(rows) < 2:
        raise NotARectangle("need at least two rows")
    cols = p.cols
    syms = p.syms
    tables = []
    for r in rows:
        table = {t.col: t.sym for t in p.in_row(r)}
        if set(table) != set(cols) or set(table.values()) != set(syms):
            raise NotARectangle(f"row {r} does not cover all columns/symbols")
        tables.append(table)

    def pair_permutation(i, j):
        return {tables[i][c]: tables[j][c] for c in cols}

    def cycle_lengths(perm):
        lengths = []
        seen = set()
        for start in perm:
            if start in seen:
                continue
            n = 0
            x = start
            while x not in seen:
                seen.add(x)
                x = perm[x]
                n += 1
            lengths.append(n)
        return lengths

    regular = True
    irregular_pair = None
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            lengths = cycle_lengths(pair_permutation(i, j))
            if len(set(lengths)) > 1:
                regular = False
                irregular_pair = (rows[i], rows[j])
                break
        if not regular:
            break

    # closure of the permutations off the first row, capped at |S| + 1
    order = sorted(syms)
    index = {s: k for k, s in enumerate(order)}

    def as_tuple(perm):
        return tuple(index[perm[s]] for s in order)

    cap = len(syms) + 1
    identity = tuple(range(len(order)))
    generators = [as_tuple(pair_permutation(0, j)) for j in range(1, len(rows))]
    closure = {identity}
    frontier = [identity]
    overflow = False
    while frontier and not overflow:
        current = frontier.pop()
        for g in generators:
            composed = tuple(g[v] for v in current)
            if composed not in closure:
                closure.add(composed)
                frontier.append(composed)
                if len(closure) >= cap:
                    overflow = True
                    break
    return RowPermutationReport(
        regular=regular,
        irregular_pair=irregular_pair,
        closure_order=None if overflow else len(closure),
        overflow=overflow,
    )


@dataclass(frozen=True)
class Assignment:
    """A verified embedding witness: r + c = s on every triple, injective
    within each namespace."""

    group: AbelianGroup
    rows: Mapping
    cols: Mapping
    syms: Mapping

    def holds_for(self, p: Pls) -> bool:
        if any(
            self.rows[t.row] + self.cols[t.col] != self.syms[t.sym] for t in p
        ):
            return False
        return all(
            len(set(m.values())) == len(m)
            for m in (self.rows, self.cols, self.syms)
        )


def _backtrack_assignment(p: Pls, group: AbelianGroup):
    if len(p) == 0:
        return Assignment(group, {}, {}, {})
    for count in (len(p.rows), len(p.cols), len(p.syms)):
        if group.order < count:
            return None

    by_row = {r: p.in_row(r) for r in p.rows}
    by_col = {c: p.in_col(c) for c in p.cols}
    fixed = p.triples[0]
    zero = group.identity()
    elements = tuple(group.elements())

    rowval = {}
    colval = {}
    symval = {}
    sym_owner = {}
    row_used = set()
    col_used = set()

    def force(label, trail):
        """Derive symbol values for every incident triple that became fully
        located; returns False on any clash."""
        incident = by_row[label] if label.kind == ROW else by_col[label]
        for t in incident:
            r = rowval.get(t.row)
            c = colval.get(t.col)
            if r is None or c is None:
                continue
            value = r + c
            known = symval.get(t.sym)
            if known is not None:
                if known != value:
                    return False
                continue
            owner = sym_owner.get(value)
            if owner is not None:
                return False
            symval[t.sym] = value
            sym_owner[value] = t.sym
            trail.append(t.sym)
        return True

    def undo(trail):
        for s in trail:
            del sym_owner[symval[s]]
            del symval[s]

    def unassigned():
        for r in p.rows:
            if r not in rowval:
                yield r
        for c in p.cols:
            if c not in colval:
                yield c

    def choose():
        best = None
        best_key = None
        for lab in unassigned():
            incident = by_row[lab] if lab.kind == ROW else by_col[lab]
            located = 0
            for t in incident:
                other = t.col if lab.kind == ROW else t.row
                table = colval if lab.kind == ROW else rowval
                if other in table:
                    located += 1
            key = (-located, -len(incident), lab)
            if best_key is None or key < best_key:
                best_key = key
                best = lab
        return best

    def rec():
        lab = choose()
        if lab is None:
            return True
        if lab.kind == ROW:
            table, used = rowval, row_used
        else:
            table, used = colval, col_used
        for value in elements:
            if value in used:
                continue
            table[lab] = value
            used.add(value)
            trail = []
            if force(lab, trail) and rec():
                return True
            undo(trail)
            del table[lab]
            used.discard(value)
        return False

    trail = []
    rowval[fixed.row] = zero
    row_used.add(zero)
    colval[fixed.col] = zero
    col_used.add(zero)
    if not (force(fixed.row, trail) and force(fixed.col, trail)):
        return None
    if not rec():
        return None
    result = Assignment(group, dict(rowval), dict(colval), dict(symval))
    if not result.holds_for(p):
        return None
    return result


def cyclic_embed(p: Pls, m: int) -> Optional[Assignment]:
    """Search for an embedding of p into the cyclic group of order m.

    One triple is pinned to (0, 0, 0), which loses no generality for
    group embeddings; symbol values are always derived, never chosen.
    """
    if m < 2:
        raise ValueError("cyclic group order must be at least 2")
    return _backtrack_assignment(p, AbelianGroup((m,)))


def abelian_embed(p: Pls, g: AbelianGroup) -> Optional[Assignment]:
    """Search for an embedding of p into the finite abelian group g."""
    return _backtrack_assignment(p, g)


def minimal_abelian_embedding(p: Pls, max_order: int):
    """Smallest finite abelian group admitting an embedding of p.

    Groups are tried by increasing order, ties broken by lexicographically
    least invariant-factor list.  Returns (group, assignment) or None when
    nothing up to max_order works.
    """
    if max_order < 2:
        raise ValueError("max_order must be at least 2")
    lower = max(len(p.rows), len(p.cols), len(p.syms), 2)
    for order in range(lower, max_order + 1):
        for group in groups_of_order(order):
            found = abelian_embed(p, group)
            if found is not None:
                return group, found
    return None
