import pytest

from tradeforge import (
    fixture,
    fixture_ids,
    fixture_info,
    genus,
    intercalate,
    is_connected,
    is_separated,
    is_spherical,
    non_embeddable,
    spherical_corpus,
    three_rows,
    torank,
    two_rows,
    validate_bitrade,
)
from tradeforge.errors import BadParameter, UnknownFixture
from tradeforge.pls import col, row, sym, Triple


def test_intercalate_is_two_rows_two():
    assert intercalate() == two_rows(2)
    assert intercalate().size == 4
    assert is_spherical(intercalate())


def test_two_rows_sizes_and_genus():
    for m in (2, 5, 7, 11):
        bt = two_rows(m)
        assert bt.size == 2 * m
        assert genus(bt).genus == 0


def test_three_rows_genus():
    for g in range(1, 7):
        bt = three_rows(g)
        assert bt.size == 3 * (2 * g + 1)
        assert genus(bt).genus == g


def test_three_rows_all_labels_separated():
    bt = three_rows(1)
    assert is_separated(bt).separated


def test_non_embeddable_displayed_pair():
    bt = non_embeddable(3)
    w = {(t.row.token, t.col.token): t.sym.token for t in bt.white}
    expected_rows = [
        [0, 1, 2, 3, 4, 5, 6],
        [1, 2, 3, 4, 5, 6, 0],
        [2, 4, 1, 5, 6, 0, 3],
    ]
    for i, symbols in enumerate(expected_rows):
        for j, s in enumerate(symbols):
            assert w[(f"r{i}", f"c{j}")] == f"s{s}"
    b = {(t.row.token, t.col.token): t.sym.token for t in bt.black}
    for j in range(7):
        assert b[("r0", f"c{j}")] == w[("r1", f"c{j}")]
        assert b[("r1", f"c{j}")] == w[("r2", f"c{j}")]
        assert b[("r2", f"c{j}")] == w[("r0", f"c{j}")]


def test_non_embeddable_genus():
    assert non_embeddable(1).size == 11
    for g in range(1, 7):
        assert genus(non_embeddable(g)).genus == g


def test_torank_structure():
    for m in (2, 3, 4):
        bt = torank(m)
        assert bt.size == 8 * m
        assert is_spherical(bt)
        rows = {r.token for r in bt.white.rows}
        assert {"r0", "r1"} | {f"rh{i}" for i in range(1, m + 1)} | {
            f"rt{i}" for i in range(1, m + 1)
        } == rows


def test_torank_gadget_triples():
    bt = torank(2)
    w = set(bt.white)
    assert Triple(row("r0"), col("cb1"), sym("sa1")) in w
    assert Triple(row("rt1"), col("ca1"), sym("sa1")) in w
    b = set(bt.black)
    assert Triple(row("rh1"), col("c0"), sym("s1")) in b


def test_parameter_validation():
    for builder, bad in ((two_rows, 1), (three_rows, 0), (non_embeddable, 0),
                         (torank, 1)):
        with pytest.raises(BadParameter):
            builder(bad)


def test_fixture_catalogue_is_consistent():
    for name in fixture_ids():
        info = fixture_info(name)
        bt = fixture(name)
        validate_bitrade(bt.white, bt.black)
        assert bt.size == info.size, name
        assert is_separated(bt).separated == info.separated, name
        assert is_connected(bt).connected == info.connected, name
        if info.genus is not None:
            assert genus(bt).genus == info.genus, name
        assert is_spherical(bt) == info.spherical, name


def test_unknown_fixture():
    with pytest.raises(UnknownFixture):
        fixture("nope")


def test_cyclic_table_fixtures_carry_their_coordinates():
    # the white sides of these fixtures are cells of the order-6 cyclic
    # table, so reading tokens as integers must satisfy row + col = sym
    for name in ("min-embed-differs", "torus-z6-z3"):
        for t in fixture(name).white:
            i = int(t.row.token[1:])
            j = int(t.col.token[1:])
            k = int(t.sym.token[1:])
            assert (i + j) % 6 == k, (name, t)


def test_spherical_corpus_members_are_spherical():
    corpus = spherical_corpus()
    assert len(corpus) >= 20
    names = [name for name, _ in corpus]
    assert len(set(names)) == len(names)
    for name, bt in corpus:
        assert is_spherical(bt), name
