"""Presentation matrices of bitrades and the canonical group embedding.

Relations r + c + s = 0, one per triangle of the chosen colour, give a
(0,1) presentation matrix over the used labels.  Deleting one special
triangle's column together with its three label rows pins those labels to
the identity and makes the group finite for spherical bitrades; the Smith
normal form of the reduced matrix then yields both the invariant factors
and, through the left transform, explicit images for every label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import (
    InternalInconsistency,
    NotSpherical,
    SpecialNotInTrade,
    VerificationFailed,
)
from .groups import AbelianGroup, GroupElement
from .matrix import IntMatrix, determinant, smith_normal_form
from .pls import Bitrade, Triple
from .topology import is_spherical

WHITE = "white"
BLACK = "black"


@dataclass(frozen=True)
class Presentation:
    bitrade: Bitrade
    color: str
    special: Triple
    full_matrix: IntMatrix
    reduced_matrix: IntMatrix
    gen_index: Mapping
    rel_index: Mapping
    reduced_generators: tuple
    reduced_relations: tuple


def build_presentation(
    bt: Bitrade,
    color: str = WHITE,
    special: Triple | None = None,
    unchecked: bool = False,
) -> Presentation:
    """Presentation matrices for the chosen colour of the bitrade.

    The full matrix has one row per used label and one column per triangle,
    with exactly three 1s per column.  The reduced matrix drops the special
    triangle's column and its three label rows; by default the special
    triangle is the lexicographically least triple of the colour.

    Requires a spherical bitrade unless `unchecked` is set (the genus-1
    fixtures are computed with the guard off, but no theorem is promised
    there).
    """
    if color not in (WHITE, BLACK):
        raise ValueError(f"bad colour {color!r}")
    if not unchecked and not is_spherical(bt):
        raise NotSpherical(
            "presentation requires a separated, connected, genus-0 bitrade"
        )
    side = bt.white if color == WHITE else bt.black
    relations = side.triples
    if special is None:
        special = relations[0]
    elif special not in side:
        raise SpecialNotInTrade(f"{special} is not a {color} triple")
    generators = tuple(sorted(set(bt.used_labels())))
    gen_index = {lab: i for i, lab in enumerate(generators)}
    full = [[0] * len(relations) for _ in generators]
    for j, t in enumerate(relations):
        for lab in (t.row, t.col, t.sym):
            full[gen_index[lab]][j] = 1
    rel_index = {t: j for j, t in enumerate(relations)}
    dead = {special.row, special.col, special.sym}
    reduced_generators = tuple(lab for lab in generators if lab not in dead)
    reduced_relations = tuple(t for t in relations if t != special)
    keep_rows = [gen_index[lab] for lab in reduced_generators]
    keep_cols = [rel_index[t] for t in reduced_relations]
    full_m = IntMatrix(full)
    return Presentation(
        bitrade=bt,
        color=color,
        special=special,
        full_matrix=full_m,
        reduced_matrix=full_m.submatrix(keep_rows, keep_cols),
        gen_index=gen_index,
        rel_index=rel_index,
        reduced_generators=reduced_generators,
        reduced_relations=reduced_relations,
    )


def canonical_group(p: Presentation) -> AbelianGroup:
    """Invariant factors of the finite group presented by the reduced matrix.

    For square reduced matrices the order is cross-checked against the
    determinant; a mismatch can only come from an implementation bug and is
    raised as InternalInconsistency.
    """
    result = smith_normal_form(p.reduced_matrix)
    reduced = p.reduced_matrix
    if result.rank < reduced.rows:
        raise InternalInconsistency(
            "presentation has a free part; the group is not finite"
        )
    group = AbelianGroup(result.invariant_factors)
    if reduced.rows == reduced.cols:
        det = determinant(reduced)
        if abs(det) != group.order:
            raise InternalInconsistency(
                f"|det| = {abs(det)} but invariant factors give {group.order}"
            )
    return group


@dataclass(frozen=True)
class Embedding:
    """Injections of rows, columns and symbols into a finite abelian group
    with i1(r) + i2(c) = i3(s) on every triple of the embedded trade."""

    group: AbelianGroup
    i1: Mapping
    i2: Mapping
    i3: Mapping
    special: Triple

    def image(self, lab) -> GroupElement:
        for mapping in (self.i1, self.i2, self.i3):
            if lab in mapping:
                return mapping[lab]
        raise KeyError(lab)


@dataclass(frozen=True)
class EmbeddingCheck:
    ok: bool
    relation_failures: tuple
    injectivity_failures: tuple


def verify_embedding(emb: Embedding, triples) -> EmbeddingCheck:
    """Re-check the additive relations and injectivity, independently of how
    the embedding was produced."""
    relation_failures = tuple(
        t
        for t in triples
        if emb.i1[t.row] + emb.i2[t.col] != emb.i3[t.sym]
    )
    injectivity_failures = []
    for name, mapping in (("i1", emb.i1), ("i2", emb.i2), ("i3", emb.i3)):
        if len(set(mapping.values())) != len(mapping):
            injectivity_failures.append(name)
    return EmbeddingCheck(
        ok=not relation_failures and not injectivity_failures,
        relation_failures=relation_failures,
        injectivity_failures=tuple(injectivity_failures),
    )


def _coordinate_images(p: Presentation):
    """Group plus the image of every reduced generator, from the SNF left
    transform: generator v's image is column v of u1 read in the new basis,
    reduced mod the diagonal, trivial coordinates dropped."""
    result = smith_normal_form(p.reduced_matrix)
    if result.rank < p.reduced_matrix.rows:
        raise InternalInconsistency(
            "presentation has a free part; the group is not finite"
        )
    diag = result.diagonal
    group = AbelianGroup(result.invariant_factors)
    keep = [i for i, d in enumerate(diag) if d > 1]
    u1 = result.u1.entries
    images = {}
    for j, lab in enumerate(p.reduced_generators):
        images[lab] = group.element(u1[i][j] % diag[i] for i in keep)
    return group, images


def canonical_embedding(
    bt: Bitrade,
    special: Triple | None = None,
    unchecked: bool = False,
) -> Embedding:
    """The canonical embedding of the white trade into its canonical group.

    The special triangle's labels map to the identity and symbols carry the
    negated generator image, so the trade reads i1(r) + i2(c) = i3(s).  The
    result is verified before being returned; for spherical input a
    verification failure is impossible and raises VerificationFailed.
    """
    p = build_presentation(bt, WHITE, special, unchecked)
    group, images = _coordinate_images(p)
    zero = group.identity()
    i1 = {p.special.row: zero}
    i2 = {p.special.col: zero}
    i3 = {p.special.sym: zero}
    for lab in p.reduced_generators:
        if lab.kind == "row":
            i1[lab] = images[lab]
        elif lab.kind == "col":
            i2[lab] = images[lab]
        else:
            i3[lab] = -images[lab]
    emb = Embedding(group=group, i1=i1, i2=i2, i3=i3, special=p.special)
    check = verify_embedding(emb, bt.white.triples)
    if not check.ok and not unchecked:
        raise VerificationFailed(
            f"relations failed on {len(check.relation_failures)} triples, "
            f"non-injective maps: {check.injectivity_failures}"
        )
    return emb


def black_group(bt: Bitrade, unchecked: bool = False) -> AbelianGroup:
    """Canonical group of the colour-swapped bitrade (relations from the
    black triangles)."""
    return canonical_group(build_presentation(bt, BLACK, unchecked=unchecked))


@dataclass(frozen=True)
class FullGroupReport:
    free_rank: int
    torsion: AbelianGroup


def full_group(bt: Bitrade, unchecked: bool = False) -> FullGroupReport:
    """Free rank and torsion of the group presented by the full matrix (no
    special triangle).  Spherical bitrades have free rank exactly two and
    torsion equal to the canonical group."""
    p = build_presentation(bt, WHITE, unchecked=unchecked)
    result = smith_normal_form(p.full_matrix)
    free_rank = p.full_matrix.rows - result.rank
    return FullGroupReport(
        free_rank=free_rank, torsion=AbelianGroup(result.invariant_factors)
    )


@dataclass(frozen=True)
class ConjectureReport:
    orders_equal: bool
    isomorphic: bool
    white_factors: tuple
    black_factors: tuple


def conjecture_check(bt: Bitrade, unchecked: bool = False) -> ConjectureReport:
    """Compare the white and black canonical groups.

    Equal orders is a theorem for spherical bitrades and must always hold
    there; equal factor lists is the open conjecture, so it is reported
    rather than asserted.
    """
    white = canonical_group(build_presentation(bt, WHITE, unchecked=unchecked))
    black = black_group(bt, unchecked=unchecked)
    return ConjectureReport(
        orders_equal=white.order == black.order,
        isomorphic=white.factors == black.factors,
        white_factors=white.factors,
        black_factors=black.factors,
    )
