import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tradeforge import (
    apply_isotopy,
    col,
    conjugate,
    fixture,
    intercalate,
    is_connected,
    is_separated,
    psi,
    row,
    separate,
    sym,
    three_rows,
    triple,
    two_rows,
    validate_bitrade,
    validate_pls,
)
from tradeforge.errors import (
    ColSymbolClash,
    DuplicateCell,
    MissingPartner,
    NonInjectiveMap,
    NotDisjoint,
    RowSymbolClash,
    UnknownLabel,
)
from tradeforge.pls import Label, Pls, Triple


def cyclic_rows(indices, m):
    return Pls(
        triple(f"r{i}", f"c{j}", f"s{(i + j) % m}") for i in indices for j in range(m)
    )


class TestValidatePls:
    def test_single_triple(self):
        p = validate_pls([triple("r0", "c0", "s0")])
        assert len(p) == 1

    def test_duplicate_cell(self):
        with pytest.raises(DuplicateCell) as err:
            validate_pls([triple("r0", "c0", "s0"), triple("r0", "c0", "s1")])
        assert err.value.first.cell == err.value.second.cell

    def test_row_clash(self):
        with pytest.raises(RowSymbolClash):
            validate_pls([triple("r0", "c0", "s0"), triple("r0", "c1", "s0")])

    def test_col_clash(self):
        with pytest.raises(ColSymbolClash):
            validate_pls([triple("r0", "c0", "s0"), triple("r1", "c0", "s0")])

    def test_transcribed_minimum_nonembeddable(self):
        assert len(fixture("min-nonembeddable").white) == 11

    def test_label_namespaces_disjoint(self):
        assert row("x") != col("x") != sym("x")
        with pytest.raises(ValueError):
            Triple(col("c0"), col("c0"), sym("s0"))


class TestValidateBitrade:
    def test_intercalate(self):
        bt = intercalate()
        assert bt.size == 4

    def test_self_mate_rejected(self):
        w = intercalate().white
        with pytest.raises(NotDisjoint):
            validate_bitrade(w, w)

    def test_separation_demo_size(self):
        assert fixture("separation-demo").size == 12

    def test_missing_partner(self):
        w = validate_pls([triple("r0", "c0", "s0"), triple("r0", "c1", "s1")])
        b = validate_pls([triple("r0", "c0", "s1"), triple("r0", "c1", "s0")])
        with pytest.raises(MissingPartner):
            validate_bitrade(w, b)

    def test_symmetry(self):
        bt = fixture("min-noncyclic")
        validate_bitrade(bt.black, bt.white)

    def test_same_cells_and_row_symbols(self):
        bt = fixture("double-mate")
        assert set(bt.white.cells) == set(bt.black.cells)
        for r in bt.white.rows:
            assert {t.sym for t in bt.white.in_row(r)} == {
                t.sym for t in bt.black.in_row(r)
            }
        for c in bt.white.cols:
            assert {t.sym for t in bt.white.in_col(c)} == {
                t.sym for t in bt.black.in_col(c)
            }


class TestPsi:
    def test_separation_demo_first_row(self):
        perm = psi(fixture("separation-demo"), row("r0"))
        assert perm.cycles == ((sym("s1"), sym("s4")), (sym("s3"), sym("s5")))

    def test_intercalate_row(self):
        perm = psi(intercalate(), row("r0"))
        assert perm.cycles == ((sym("s0"), sym("s1")),)

    def test_three_rows_third_row_single_cycle(self):
        # direct enumeration of the row's cells: each white symbol is paired
        # with the black symbol two positions back, a 3-cycle mod 3
        bt = three_rows(1)
        perm = psi(bt, row("r2"))
        assert perm.mapping == {
            sym("s2"): sym("s0"),
            sym("s0"): sym("s1"),
            sym("s1"): sym("s2"),
        }
        assert perm.is_single_cycle

    def test_unknown_label(self):
        with pytest.raises(UnknownLabel):
            psi(intercalate(), row("nope"))

    def test_symbol_psi_acts_on_columns(self):
        perm = psi(intercalate(), sym("s0"))
        assert set(perm.mapping) == {col("c0"), col("c1")}


class TestSeparation:
    def test_intercalate_separated(self):
        assert is_separated(intercalate()).separated

    def test_separation_demo_offender(self):
        report = is_separated(fixture("separation-demo"))
        assert not report.separated
        assert report.offenders == (row("r0"),)

    def test_nonsep_fixture_psi(self):
        perm = psi(fixture("nonsep-nonembeddable"), row("r0"))
        assert perm.cycles == ((sym("s0"), sym("s2")), (sym("s1"), sym("s3")))

    def test_split_matches_display(self):
        out = separate(fixture("separation-demo"))
        assert out.size == 12
        assert is_separated(out).separated
        # the first row splits into the two displayed rows
        new_rows = {r.token for r in out.white.rows}
        assert new_rows == {"r0#0", "r0#1", "r1", "r2"}
        cells_row0 = {
            t.col.token for t in out.white.in_row(Label("row", "r0#0"))
        }
        assert cells_row0 == {"c1", "c3"}

    def test_fixed_point(self):
        bt = intercalate()
        assert separate(bt) == bt

    def test_nonsep_becomes_spherical(self):
        from tradeforge import is_spherical

        out = separate(fixture("nonsep-nonembeddable"))
        assert out.size == 10
        assert is_spherical(out)


class TestConnectivity:
    def test_intercalate(self):
        assert is_connected(intercalate()).connected

    def test_disjoint_union(self):
        a = intercalate()
        w2 = apply_isotopy(
            a.white,
            {row("r0"): row("r2"), row("r1"): row("r3")},
            {col("c0"): col("c2"), col("c1"): col("c3")},
            {sym("s0"): sym("s2"), sym("s1"): sym("s3")},
        )
        b2 = apply_isotopy(
            a.black,
            {row("r0"): row("r2"), row("r1"): row("r3")},
            {col("c0"): col("c2"), col("c1"): col("c3")},
            {sym("s0"): sym("s2"), sym("s1"): sym("s3")},
        )
        w = Pls(list(a.white) + list(w2))
        b = Pls(list(a.black) + list(b2))
        report = is_connected(validate_bitrade(w, b))
        assert not report.connected
        assert len(report.components) == 2

    def test_min_noncyclic_connected(self):
        assert is_connected(fixture("min-noncyclic")).connected

    def test_twisted_mate_disconnects(self):
        # same cells as the connected double-mate bitrade, different mate:
        # the cell graph alone cannot see this
        assert is_connected(fixture("double-mate")).connected
        report = is_connected(fixture("double-mate-twisted"))
        assert not report.connected
        assert len(report.components) > 1


class TestConjugateIsotopy:
    def test_identity_conjugate(self):
        p = intercalate().white
        assert conjugate(p, (0, 1, 2)) == p

    def test_transpose(self):
        p = intercalate().white
        q = conjugate(p, (1, 0, 2))
        assert {t.row.token for t in q} == {"c0", "c1"}
        assert conjugate(q, (1, 0, 2)) == p

    def test_three_cycle_composes_to_identity(self):
        p = fixture("min-noncyclic").white
        q = p
        for _ in range(3):
            q = conjugate(q, (1, 2, 0))
        assert q == p

    def test_identity_isotopy(self):
        p = intercalate().white
        assert apply_isotopy(p, {}, {}, {}) == p

    def test_row_swap(self):
        p = intercalate().white
        q = apply_isotopy(
            p, {row("r0"): row("r1"), row("r1"): row("r0")}, {}, {}
        )
        assert q != p
        assert len(q) == 4

    def test_non_injective(self):
        p = intercalate().white
        with pytest.raises(NonInjectiveMap):
            apply_isotopy(p, {row("r0"): row("r1")}, {}, {})


FAMILY_POOL = [
    intercalate(),
    two_rows(3),
    two_rows(5),
    three_rows(2),
    fixture("min-noncyclic"),
    fixture("min-embed-differs"),
    fixture("separation-demo"),
]

CONJUGATIONS = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]


@st.composite
def transformed_bitrade(draw):
    bt = draw(st.sampled_from(FAMILY_POOL))
    perm = draw(st.sampled_from(CONJUGATIONS))
    offset = draw(st.integers(min_value=0, max_value=3))
    w = conjugate(bt.white, perm)
    b = conjugate(bt.black, perm)
    maps = []
    for kind, labels in (("row", w.rows), ("col", w.cols), ("sym", w.syms)):
        rotated = labels[offset % len(labels):] + labels[: offset % len(labels)]
        maps.append(dict(zip(labels, rotated)))
    w = apply_isotopy(w, *maps)
    b = apply_isotopy(b, *maps)
    return bt, validate_bitrade(w, b)


class TestProperties:
    @settings(max_examples=40, deadline=None)
    @given(transformed_bitrade())
    def test_psi_has_no_fixed_points(self, pair):
        _, bt = pair
        for lab in bt.used_labels():
            perm = psi(bt, lab)
            assert all(a != b for a, b in perm.mapping.items())

    @settings(max_examples=40, deadline=None)
    @given(transformed_bitrade())
    def test_separate_round_trip(self, pair):
        _, bt = pair
        out = separate(bt)
        assert out.size == bt.size
        assert is_separated(out).separated

    @settings(max_examples=40, deadline=None)
    @given(transformed_bitrade())
    def test_status_invariant_under_species_maps(self, pair):
        original, bt = pair
        assert is_separated(bt).separated == is_separated(original).separated
        assert is_connected(bt).connected == is_connected(original).connected

    @settings(max_examples=40, deadline=None)
    @given(transformed_bitrade())
    def test_bitrade_symmetry(self, pair):
        _, bt = pair
        validate_bitrade(bt.black, bt.white)

    @settings(max_examples=40, deadline=None)
    @given(transformed_bitrade())
    def test_usage_lower_bounds(self, pair):
        _, bt = pair
        for side in (bt.white, bt.black):
            for r in side.rows:
                assert len(side.in_row(r)) >= 2
            for c in side.cols:
                assert len(side.in_col(c)) >= 2
            for s in side.syms:
                assert len(side.with_sym(s)) >= 2
