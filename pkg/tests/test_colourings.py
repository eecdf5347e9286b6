import pytest
from hypothesis import given, strategies as st

from monopart.colourings import (
    BLUE,
    GREEN,
    RED,
    Colour,
    HyperSplitSizes,
    PairColouring,
    TransversalColouring,
    TripleColouring,
    bipartite_index,
    pair_index,
    parse_colouring,
    serialize_colouring,
    transversal_index,
    triple_index,
)
from monopart.generators import gen_random


def test_triple_index_colex():
    assert triple_index(0, 1, 2) == 0
    assert triple_index(2, 3, 4) == 9  # last of C(5,3)
    assert triple_index(2, 0, 1) == 0  # order-insensitive
    # colex enumerates every rank exactly once
    import itertools

    ranks = sorted(triple_index(*t) for t in itertools.combinations(range(6), 3))
    assert ranks == list(range(20))


def test_pair_and_bipartite_index():
    assert pair_index(0, 1) == 0
    assert bipartite_index(3, 2, 1) == 7
    assert transversal_index(3, 2, (2, 1)) == 7
    with pytest.raises(ValueError):
        triple_index(1, 1, 2)
    with pytest.raises(ValueError):
        bipartite_index(3, 3, 0)


def test_parse_examples():
    col = parse_colouring("h3 5\n0011001100")
    assert isinstance(col, TripleColouring)
    assert [i for i, d in enumerate(col.digits()) if d == 1] == [2, 3, 6, 7]

    allred = PairColouring.constant("bnn", 2, 2, 0)
    assert serialize_colouring(allred) == "bnn 2\n0000\n"
    # short-form header alias is accepted on parse
    assert parse_colouring("b2 2\n0000") == allred


@pytest.mark.parametrize(
    "text",
    [
        "b2 2\n00X0",  # character outside palette
        "bnn 2\n000",  # length mismatch
        "h3 5\n00110011001",  # length mismatch
        "kn 3\n012",  # palette-2 body with a 2
        "zz 4\n0000",  # unknown kind
    ],
)
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_colouring(text)


@given(st.integers(3, 8), st.integers(0, 2**20 - 1))
def test_roundtrip_h3(n, seed):
    col = gen_random("h3", n, 2, seed)
    assert parse_colouring(serialize_colouring(col)) == col


@given(
    st.sampled_from(["kn", "bnn"]),
    st.integers(1, 7),
    st.sampled_from([2, 3]),
    st.integers(0, 2**20 - 1),
)
def test_roundtrip_pairs(kind, n, palette, seed):
    col = gen_random(kind, n, palette, seed)
    assert parse_colouring(serialize_colouring(col)) == col


@given(st.integers(1, 3), st.integers(2, 4), st.integers(0, 2**16))
def test_roundtrip_rxn_materialized(r, n, seed):
    col = gen_random("rxn", n, 2, seed, r=r)
    assert parse_colouring(serialize_colouring(col)).entries == col.entries


def test_roundtrip_rxn_rule():
    col = TransversalColouring(3, 9, rule=HyperSplitSizes(3, 9, (1, 4, 8)))
    back = parse_colouring(serialize_colouring(col))
    assert back.rule == col.rule


def test_rule_matches_materialized():
    rule = TransversalColouring(3, 3, rule=HyperSplitSizes(3, 3, (1, 2, 1)))
    mat = rule.materialize()
    for e0 in range(3):
        for e1 in range(3):
            for e2 in range(3):
                edge = (e0, 3 + e1, 6 + e2)
                assert rule.colour_bit(edge) == mat.colour_bit(edge)


def test_two_colour_context_rejects_green():
    with pytest.raises(ValueError):
        PairColouring("bnn", 2, 2, bytes([0, 1, 2, 0]))
    with pytest.raises(ValueError):
        TripleColouring.constant(4, 2)


def test_colour_order():
    assert RED < BLUE < GREEN
    assert Colour.RED.letter == "red"


def test_palette_header_roundtrip():
    col = gen_random("kn", 5, 3, 11)
    text = serialize_colouring(col)
    assert text.startswith("kn 5 3\n")
    assert parse_colouring(text) == col
