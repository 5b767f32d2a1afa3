"""Partial latin squares and latin bitrades.

Triples live in R x C x S with the three namespaces kept explicitly
disjoint, so conjugation (permuting the coordinate roles) is total and
relabelling can never confuse a row with a symbol of the same name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import (
    ColSymbolClash,
    DuplicateCell,
    InternalInconsistency,
    MissingPartner,
    NonInjectiveMap,
    NonUniquePartner,
    NotDisjoint,
    RowSymbolClash,
    UnknownLabel,
)

ROW = "row"
COL = "col"
SYM = "sym"
NAMESPACES = (ROW, COL, SYM)


@dataclass(frozen=True, order=True)
class Label:
    """A row, column or symbol name; equality requires both fields to match."""

    kind: str
    token: str

    def __post_init__(self):
        if self.kind not in NAMESPACES:
            raise ValueError(f"bad namespace {self.kind!r}")
        if not self.token or any(ch.isspace() for ch in self.token):
            raise ValueError(f"bad label token {self.token!r}")

    def __str__(self):
        return self.token


def row(token) -> Label:
    return Label(ROW, str(token))


def col(token) -> Label:
    return Label(COL, str(token))


def sym(token) -> Label:
    return Label(SYM, str(token))


@dataclass(frozen=True, order=True)
class Triple:
    row: Label
    col: Label
    sym: Label

    def __post_init__(self):
        for field, kind in ((self.row, ROW), (self.col, COL), (self.sym, SYM)):
            if field.kind != kind:
                raise ValueError(f"{field!r} used in {kind} position")

    @property
    def cell(self):
        return (self.row, self.col)

    def __str__(self):
        return f"{self.row} {self.col} {self.sym}"


def triple(r, c, s) -> Triple:
    """Build a Triple from bare tokens."""
    return Triple(row(r), col(c), sym(s))


class Pls:
    """An immutable partial latin square: a set of triples in which no two
    agree on (row, col), (row, sym) or (col, sym)."""

    __slots__ = ("triples", "_by_cell", "_by_row_sym", "_by_col_sym")

    def __init__(self, triples: Iterable[Triple]):
        trips = tuple(sorted(set(triples)))
        by_cell = {}
        by_row_sym = {}
        by_col_sym = {}
        for t in trips:
            for index, key, exc in (
                (by_cell, (t.row, t.col), DuplicateCell),
                (by_row_sym, (t.row, t.sym), RowSymbolClash),
                (by_col_sym, (t.col, t.sym), ColSymbolClash),
            ):
                if key in index:
                    raise exc(index[key], t)
                index[key] = t
        object.__setattr__(self, "triples", trips)
        object.__setattr__(self, "_by_cell", by_cell)
        object.__setattr__(self, "_by_row_sym", by_row_sym)
        object.__setattr__(self, "_by_col_sym", by_col_sym)

    def __setattr__(self, name, value):
        raise AttributeError("Pls is immutable")

    def __len__(self):
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __contains__(self, t):
        return self._by_cell.get((t.row, t.col)) == t

    def __eq__(self, other):
        return isinstance(other, Pls) and self.triples == other.triples

    def __hash__(self):
        return hash(self.triples)

    def __repr__(self):
        return f"Pls({len(self)} triples)"

    @property
    def rows(self):
        return tuple(sorted({t.row for t in self.triples}))

    @property
    def cols(self):
        return tuple(sorted({t.col for t in self.triples}))

    @property
    def syms(self):
        return tuple(sorted({t.sym for t in self.triples}))

    @property
    def cells(self):
        return tuple(t.cell for t in self.triples)

    def used_labels(self):
        return self.rows + self.cols + self.syms

    def at_cell(self, r: Label, c: Label):
        return self._by_cell.get((r, c))

    def in_row(self, r: Label):
        return tuple(t for t in self.triples if t.row == r)

    def in_col(self, c: Label):
        return tuple(t for t in self.triples if t.col == c)

    def with_sym(self, s: Label):
        return tuple(t for t in self.triples if t.sym == s)

    def by_row_sym(self, r: Label, s: Label):
        return self._by_row_sym.get((r, s))

    def by_col_sym(self, c: Label, s: Label):
        return self._by_col_sym.get((c, s))


def validate_pls(triples: Iterable[Triple]) -> Pls:
    """Check the partial-latin-square property and return the Pls.

    Raises DuplicateCell, RowSymbolClash or ColSymbolClash naming the
    offending pair of triples.
    """
    return Pls(triples)


class Bitrade:
    """An ordered pair (white, black) of disjoint partial latin squares in
    which every triple of either side has unique partners in the other side
    differing in exactly the row, exactly the column and exactly the symbol.

    Construct through validate_bitrade."""

    __slots__ = ("white", "black")

    def __init__(self, white: Pls, black: Pls):
        object.__setattr__(self, "white", white)
        object.__setattr__(self, "black", black)

    def __setattr__(self, name, value):
        raise AttributeError("Bitrade is immutable")

    @property
    def size(self):
        return len(self.white)

    def __eq__(self, other):
        return (
            isinstance(other, Bitrade)
            and self.white == other.white
            and self.black == other.black
        )

    def __hash__(self):
        return hash((self.white, self.black))

    def __repr__(self):
        return f"Bitrade(size {self.size})"

    def swapped(self) -> "Bitrade":
        """The same bitrade with the colours exchanged."""
        return Bitrade(self.black, self.white)

    def used_labels(self):
        return self.white.used_labels()


def _check_partners(source: Pls, target: Pls):
    for t in source:
        partners = [
            (ROW, [u for u in target.with_sym(t.sym) if u.col == t.col and u.row != t.row]),
            (COL, [u for u in target.with_sym(t.sym) if u.row == t.row and u.col != t.col]),
            (SYM, [u for u in target.in_row(t.row) if u.col == t.col and u.sym != t.sym]),
        ]
        for coordinate, found in partners:
            if not found:
                raise MissingPartner(t, coordinate)
            if len(found) > 1:
                raise NonUniquePartner(t, coordinate)


def validate_bitrade(w: Pls, b: Pls) -> Bitrade:
    """Check the six partner-uniqueness conditions and return the Bitrade."""
    if not len(w) or not len(b):
        raise MissingPartner(None, "empty side")
    shared = set(w.triples) & set(b.triples)
    if shared:
        raise NotDisjoint(sorted(shared)[0])
    _check_partners(w, b)
    _check_partners(b, w)
    return Bitrade(w, b)


@dataclass(frozen=True)
class PsiPermutation:
    """The fixed-point-free pairing permutation attached to one label.

    For a row r it acts on the symbols of r, sending the white symbol of a
    cell to the black symbol of the same cell; for a column it does the same
    per column; for a symbol s it acts on the columns containing s, sending
    c to c' when the white and black occurrences of s at columns c, c' share
    a row.  The label is separated exactly when there is a single cycle.
    """

    owner: Label
    mapping: Mapping[Label, Label]
    cycles: tuple

    @property
    def is_single_cycle(self):
        return len(self.cycles) <= 1


def _close_cycles(mapping):
    cycles = []
    seen = set()
    for start in sorted(mapping):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = mapping[x]
        cycles.append(tuple(cyc))
    return tuple(sorted(cycles))


def psi(bt: Bitrade, x: Label) -> PsiPermutation:
    """Pairing permutation of label x in the bitrade; raises UnknownLabel."""
    w, b = bt.white, bt.black
    mapping = {}
    if x.kind == ROW:
        for t in w.in_row(x):
            mapping[t.sym] = b.at_cell(t.row, t.col).sym
    elif x.kind == COL:
        for t in w.in_col(x):
            mapping[t.sym] = b.at_cell(t.row, t.col).sym
    else:
        for t in w.with_sym(x):
            mapping[t.col] = b.by_row_sym(t.row, x).col
    if not mapping:
        raise UnknownLabel(f"{x!r} does not occur in the bitrade")
    for a, c in mapping.items():
        if a == c:
            raise InternalInconsistency(f"pairing permutation of {x} fixes {a}")
    return PsiPermutation(owner=x, mapping=mapping, cycles=_close_cycles(mapping))


class SeparationReport(NamedTuple):
    separated: bool
    offenders: tuple


def is_separated(bt: Bitrade) -> SeparationReport:
    """A bitrade is separated when every pairing permutation is one cycle."""
    offenders = [x for x in bt.used_labels() if not psi(bt, x).is_single_cycle]
    return SeparationReport(not offenders, tuple(offenders))


def _split_assignments(bt: Bitrade, x: Label):
    """Map each triple of bt touching x to its replacement label for x."""
    perm = psi(bt, x)
    cycle_of = {}
    for idx, cyc in enumerate(perm.cycles):
        for member in cyc:
            cycle_of[member] = idx
    fresh = {idx: Label(x.kind, f"{x.token}#{idx}") for idx in range(len(perm.cycles))}

    def assign(t: Triple):
        if x.kind == ROW or x.kind == COL:
            return fresh[cycle_of[t.sym]]
        # symbol label: cycles partition the columns carrying x
        return fresh[cycle_of[t.col]]

    return assign, tuple(fresh.values())


def separate(bt: Bitrade) -> Bitrade:
    """Split every non-separated label into one fresh label per cycle.

    Size is preserved; fresh labels are token + "#" + cycle index with
    cycles ordered by smallest member, so the output is reproducible.
    Already-separated bitrades are returned unchanged.
    """
    current = bt
    for _ in range(64):
        report = is_separated(current)
        if report.separated:
            return current
        splits = {}
        used_tokens = {
            ns: {lab.token for lab in labs}
            for ns, labs in (
                (ROW, current.white.rows),
                (COL, current.white.cols),
                (SYM, current.white.syms),
            )
        }
        for x in report.offenders:
            assign, fresh = _split_assignments(current, x)
            for lab in fresh:
                if lab.token in used_tokens[lab.kind]:
                    raise InternalInconsistency(f"fresh label {lab} already in use")
            splits[x] = assign

        def rewrite(t: Triple):
            r, c, s = t.row, t.col, t.sym
            if r in splits:
                r = splits[r](t)
            if c in splits:
                c = splits[c](t)
            if s in splits:
                s = splits[s](t)
            return Triple(r, c, s)

        white = Pls(rewrite(t) for t in current.white)
        black = Pls(rewrite(t) for t in current.black)
        current = validate_bitrade(white, black)
    raise InternalInconsistency("separation did not converge")


class Component(NamedTuple):
    rows: tuple
    cols: tuple
    triples: tuple


class ConnectivityReport(NamedTuple):
    connected: bool
    components: tuple


def is_connected(bt: Bitrade) -> ConnectivityReport:
    """Decide whether the bitrade splits into two smaller bitrades.

    Any sub-bitrade must take whole cycles of every pairing permutation, so
    connectivity is the transitive closure of "same cycle": each white
    triple is linked to the white triple carrying its cell's black symbol
    within the same row and within the same column.  For separated bitrades
    this reduces to connectivity of the row-column cell graph, but a
    non-separated mate on the same cells can genuinely disconnect, so the
    cell graph alone would misclassify it.
    """
    w, b = bt.white, bt.black
    parent = {t: t for t in w}

    def find(t):
        while parent[t] is not t:
            parent[t] = parent[parent[t]]
            t = parent[t]
        return t

    def union(a, c):
        ra, rc = find(a), find(c)
        if ra is not rc:
            parent[ra] = rc

    for t in w:
        black_sym = b.at_cell(t.row, t.col).sym
        union(t, w.by_row_sym(t.row, black_sym))
        union(t, w.by_col_sym(t.col, black_sym))

    groups = {}
    for t in w:
        groups.setdefault(find(t), []).append(t)
    components = []
    for trips in groups.values():
        trips = tuple(sorted(trips))
        rows = tuple(sorted({t.row for t in trips}))
        cols = tuple(sorted({t.col for t in trips}))
        components.append(Component(rows, cols, trips))
    components.sort(key=lambda comp: comp.triples[0])
    return ConnectivityReport(len(components) == 1, tuple(components))


_KIND_BY_POSITION = (ROW, COL, SYM)


def conjugate(p: Pls, perm) -> Pls:
    """Permute the three coordinate roles; position i takes coordinate perm[i].

    Namespaces are re-tagged to match the new positions, tokens are kept.
    """
    perm = tuple(perm)
    if sorted(perm) != [0, 1, 2]:
        raise ValueError(f"{perm!r} is not a permutation of (0, 1, 2)")
    out = []
    for t in p:
        coords = (t.row, t.col, t.sym)
        out.append(
            Triple(
                *(
                    Label(_KIND_BY_POSITION[i], coords[perm[i]].token)
                    for i in range(3)
                )
            )
        )
    return Pls(out)


def apply_isotopy(p: Pls, fr: Mapping, fc: Mapping, fs: Mapping) -> Pls:
    """Relabel rows, columns and symbols componentwise.

    Maps may be partial (missing labels stay fixed) but must be injective on
    the labels the Pls actually uses; otherwise NonInjectiveMap is raised.
    """
    maps = {ROW: dict(fr), COL: dict(fc), SYM: dict(fs)}
    for kind, mapping in maps.items():
        for key, value in mapping.items():
            if key.kind != kind or value.kind != kind:
                raise NonInjectiveMap(f"{key} -> {value} leaves namespace {kind}")
    for kind, used in ((ROW, p.rows), (COL, p.cols), (SYM, p.syms)):
        images = [maps[kind].get(lab, lab) for lab in used]
        if len(set(images)) != len(images):
            raise NonInjectiveMap(f"map on {kind} labels is not injective")
    return Pls(
        Triple(
            maps[ROW].get(t.row, t.row),
            maps[COL].get(t.col, t.col),
            maps[SYM].get(t.sym, t.sym),
        )
        for t in p
    )
