"""Constructors for the bitrade families and transcribed worked examples
that make up the test corpus."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .errors import BadParameter, UnknownFixture
from .pls import Bitrade, Pls, Triple, col, row, sym, validate_bitrade
from .textio import parse_bitrade


def _table_rows(row_indices, m):
    """White/black sides built from rows of the cyclic table, the mate being
    the same rows with the top one shifted to the bottom."""
    white = []
    black = []
    k = len(row_indices)
    for pos, i in enumerate(row_indices):
        shifted = row_indices[(pos + 1) % k]
        for j in range(m):
            white.append(Triple(row(f"r{i}"), col(f"c{j}"), sym(f"s{(i + j) % m}")))
            black.append(Triple(row(f"r{i}"), col(f"c{j}"), sym(f"s{(shifted + j) % m}")))
    return validate_bitrade(Pls(white), Pls(black))


def intercalate() -> Bitrade:
    """The size-4 bitrade of a 2x2 latin subsquare; the smallest bitrade."""
    return two_rows(2)


def two_rows(m: int) -> Bitrade:
    """First two rows of the cyclic table of order m, mate = rows swapped.

    Size 2m, spherical; its canonical group is cyclic of order m.
    """
    if m < 2:
        raise BadParameter(f"two_rows needs m >= 2, got {m}")
    return _table_rows([0, 1], m)


def three_rows(g: int) -> Bitrade:
    """First three rows of the cyclic table of order 2g+1, mate = top row
    shifted to the bottom.

    Separated, connected, genus exactly g, and the white side embeds in the
    cyclic group of order 2g+1.
    """
    if g < 1:
        raise BadParameter(f"three_rows needs g >= 1, got {g}")
    return _table_rows([0, 1, 2], 2 * g + 1)


def non_embeddable(g: int) -> Bitrade:
    """A separated connected bitrade of genus g whose white side embeds in
    no group (it fails the quadrangle criterion).

    For g = 1 this is the transcribed size-11 minimum; for g >= 2 it is the
    three-row cyclic construction of order 2g+1 with the cells (2,1), (2,2)
    and (2,2g) re-filled by symbols 4, 1 and 3.
    """
    if g < 1:
        raise BadParameter(f"non_embeddable needs g >= 1, got {g}")
    if g == 1:
        return fixture("min-nonembeddable")
    m = 2 * g + 1
    replaced = {1: 4, 2: 1, 2 * g: 3}
    white = []
    black = []
    for i in range(3):
        for j in range(m):
            if i == 2 and j in replaced:
                white.append(Triple(row(f"r{i}"), col(f"c{j}"), sym(f"s{replaced[j]}")))
            else:
                white.append(Triple(row(f"r{i}"), col(f"c{j}"), sym(f"s{(i + j) % m}")))
    by_cell = {(t.row.token, t.col.token): t.sym for t in white}
    for i in range(3):
        source = f"r{(i + 1) % 3}"
        for j in range(m):
            black.append(
                Triple(row(f"r{i}"), col(f"c{j}"), by_cell[(source, f"c{j}")])
            )
    return validate_bitrade(Pls(white), Pls(black))


def torank(m: int) -> Bitrade:
    """Spherical bitrade of size 8m forcing large torsion rank.

    Starts from two_rows(m); each black triangle on row r0 is replaced by
    the seven-triangle gadget that introduces rows rh{i} and rt{i}, columns
    ca{i} and cb{i}, and symbols sa{i} and sb{i} (i = 1..m).  In any group
    embedding the rows r0, rt1, ..., rtm all double to the same element, so
    at least log2(m+1) invariant factors are needed.
    """
    if m < 2:
        raise BadParameter(f"torank needs m >= 2, got {m}")
    base = two_rows(m)
    white = set(base.white)
    black = set(base.black)
    for i in range(1, m + 1):
        j = i - 1
        r = row("r0")
        c = col(f"c{j}")
        s = sym(f"s{(j + 1) % m}")
        helper = row(f"rh{i}")
        twin = row(f"rt{i}")
        ca = col(f"ca{i}")
        cb = col(f"cb{i}")
        sa = sym(f"sa{i}")
        sb = sym(f"sb{i}")
        white |= {
            Triple(r, cb, sa),
            Triple(r, ca, sb),
            Triple(helper, c, sa),
            Triple(helper, ca, s),
            Triple(twin, ca, sa),
            Triple(twin, cb, sb),
        }
        black.remove(Triple(r, c, s))
        black |= {
            Triple(r, c, sa),
            Triple(r, ca, s),
            Triple(helper, c, s),
            Triple(helper, ca, sa),
            Triple(r, cb, sb),
            Triple(twin, cb, sa),
            Triple(twin, ca, sb),
        }
    return validate_bitrade(Pls(white), Pls(black))


def torank_doubled_rows(m: int):
    """The distinguished rows of torank(m): r0 and its m doubling partners."""
    return row("r0"), tuple(row(f"rt{i}") for i in range(1, m + 1))


@dataclass(frozen=True)
class FixtureInfo:
    name: str
    size: int
    separated: bool
    connected: bool
    genus: Optional[int]
    description: str

    @property
    def spherical(self):
        return self.separated and self.connected and self.genus == 0


_CATALOGUE = {
    info.name: info
    for info in (
        FixtureInfo(
            "separation-demo", 12, False, True, None,
            "connected, not separated; its first row splits into two rows",
        ),
        FixtureInfo(
            "rectangle-3x9", 27, True, True, 4,
            "passes the quadrangle criterion but embeds in no group "
            "(permutation closure exceeds the symbol count)",
        ),
        FixtureInfo(
            "min-nonembeddable", 11, True, True, 1,
            "smallest connected separated trade embedding in no group",
        ),
        FixtureInfo(
            "min-noncyclic", 10, True, True, 0,
            "smallest trade with no cyclic embedding; both sides embed in Z2+Z4",
        ),
        FixtureInfo(
            "min-nonabelian", 14, True, True, 1,
            "smallest trade embedding in a group but in no abelian group",
        ),
        FixtureInfo(
            "nonsep-nonembeddable", 10, False, True, None,
            "connected, not separated, fails the quadrangle criterion; "
            "separates to a spherical bitrade",
        ),
        FixtureInfo(
            "torus-z6-z3", 12, True, True, 1,
            "white group Z6, black group Z3; the black side embeds in no group",
        ),
        FixtureInfo(
            "min-embed-differs", 12, True, True, 0,
            "smallest bitrade whose sides have minimal embeddings in "
            "different groups (white: Z6; black: no cyclic embedding)",
        ),
        FixtureInfo(
            "double-mate", 16, True, True, 0,
            "spherical; its white side also admits a twisted second mate",
        ),
        FixtureInfo(
            "double-mate-twisted", 16, False, False, None,
            "the same white side with its other mate; neither separated "
            "nor connected",
        ),
    )
}


def fixture_ids():
    return tuple(sorted(_CATALOGUE))


def fixture_info(name: str) -> FixtureInfo:
    if name not in _CATALOGUE:
        raise UnknownFixture(f"{name!r}; known: {', '.join(fixture_ids())}")
    return _CATALOGUE[name]


def fixture(name: str) -> Bitrade:
    """Load a transcribed worked example by name; see fixture_ids()."""
    info = fixture_info(name)
    text = (
        resources.files("tradeforge")
        .joinpath("fixtures", f"{info.name}.trade")
        .read_text()
    )
    return parse_bitrade(text)


def spherical_corpus():
    """The spherical instances every theorem-level check runs over."""
    from .pls import separate

    corpus = [("intercalate", intercalate())]
    corpus += [(f"two_rows({m})", two_rows(m)) for m in range(2, 13)]
    corpus += [(f"torank({m})", torank(m)) for m in range(2, 7)]
    corpus += [
        (name, fixture(name))
        for name in ("min-noncyclic", "min-embed-differs", "double-mate")
    ]
    corpus += [
        (f"{name} (separated)", separate(fixture(name)))
        for name in ("separation-demo", "nonsep-nonembeddable")
    ]
    return corpus
