import itertools

import pytest

from monopart.colourings import BLUE, RED, TripleColouring
from monopart.oracles import oracle_spanning_bipath_exists
from monopart.tightpaths import (
    BicolouredTightPath,
    augment,
    classify_tight_path,
    spanning_bicoloured_path,
    split_into_two_mono,
)
from tests.conftest import all_triple_colourings


def colouring_by_rule(n, red_triples):
    red = {frozenset(t) for t in red_triples}
    digits = []
    for c in range(n):
        for b in range(c):
            for a in range(b):
                digits.append(0 if frozenset((a, b, c)) in red else 1)
    return TripleColouring.from_digits(n, digits)


def test_classify_examples():
    col = colouring_by_rule(4, [(0, 1, 2)])  # {1,2,3} blue
    res = classify_tight_path(col, [0, 1, 2, 3])
    assert res.kind == "bicoloured" and res.turn == 2

    allred = TripleColouring.constant(5, 0)
    res = classify_tight_path(allred, range(5))
    assert res.kind == "mono" and res.colour == RED

    # red, blue, red runs along six vertices
    col = colouring_by_rule(6, [(0, 1, 2), (2, 3, 4)])
    assert classify_tight_path(col, [0, 1, 2, 3, 4, 5]).kind == "invalid"


def test_classify_rejects_bad_sequences():
    col = TripleColouring.constant(5, 0)
    assert classify_tight_path(col, [0, 1, 1]).kind == "invalid"
    assert classify_tight_path(col, [0, 9, 2]).kind == "invalid"
    assert classify_tight_path(col, [0]).kind == "mono"
    assert classify_tight_path(col, []).kind == "mono"


def test_augment_mono_case():
    col = TripleColouring.constant(4, 0)
    path = BicolouredTightPath((0, 1, 2), 2)
    out = augment(col, path, 3)
    assert len(out.vertices) == 4
    assert classify_tight_path(col, out.vertices).kind != "invalid"


def test_augment_rejects_covered_vertex():
    col = TripleColouring.constant(4, 0)
    with pytest.raises(ValueError):
        augment(col, BicolouredTightPath((0, 1, 2), 2), 2)


def _valid_paths(col, n, max_len=None):
    """Every valid bicoloured tight path over [n] as a BicolouredTightPath."""
    max_len = max_len or n
    for k in range(1, max_len + 1):
        for seq in itertools.permutations(range(n), k):
            cls = classify_tight_path(col, seq)
            if cls.kind == "invalid":
                continue
            turn = cls.turn if cls.kind == "bicoloured" else (k - 1 if k >= 2 else None)
            yield BicolouredTightPath(seq, turn)


def test_augment_exhaustive_n4():
    # every colouring, every valid path, every uncovered vertex
    for _, col in all_triple_colourings(4):
        for path in _valid_paths(col, 4):
            covered = set(path.vertices)
            for w in range(4):
                if w in covered:
                    continue
                out = augment(col, path, w)
                assert len(out.vertices) == len(path.vertices) + 1
                assert classify_tight_path(col, out.vertices).kind != "invalid"


def test_augment_exhaustive_n5():
    # all 2^10 colourings x all valid paths x all uncovered vertices
    for _, col in all_triple_colourings(5):
        for path in _valid_paths(col, 5):
            for w in range(5):
                if w in path.vertices:
                    continue
                out = augment(col, path, w)
                assert len(out.vertices) == len(path.vertices) + 1
                assert classify_tight_path(col, out.vertices).kind != "invalid"


def test_spanning_path_all_red():
    col = TripleColouring.constant(5, 0)
    path = spanning_bicoloured_path(col)
    assert path.vertices == (0, 1, 2, 3, 4)
    assert classify_tight_path(col, path.vertices).kind == "mono"


@pytest.mark.parametrize("n", [3, 4, 5])
def test_spanning_path_exhaustive_small(n):
    for _, col in all_triple_colourings(n):
        path = spanning_bicoloured_path(col)
        assert sorted(path.vertices) == list(range(n))
        assert classify_tight_path(col, path.vertices).kind != "invalid"


def test_spanning_path_random_larger(rng):
    from monopart.generators import gen_random

    for n in range(7, 41, 3):
        for _ in range(40):
            col = gen_random("h3", n, 2, seed=rng.getrandbits(32))
            path = spanning_bicoloured_path(col)
            assert sorted(path.vertices) == list(range(n))
            assert classify_tight_path(col, path.vertices).kind != "invalid"


def test_oracle_agrees_n4():
    for _, col in all_triple_colourings(4):
        exists, witness = oracle_spanning_bipath_exists(col)
        assert exists
        assert classify_tight_path(col, witness).kind != "invalid"


def test_split_mono_input():
    col = TripleColouring.constant(5, 0)
    p1, c1, p2, c2 = split_into_two_mono(col, spanning_bicoloured_path(col))
    assert p1 == (0, 1, 2, 3, 4) and c1 == RED
    assert p2 == () and c2 == BLUE


def test_split_cut_rule_small():
    col = colouring_by_rule(4, [(0, 1, 2)])
    path = BicolouredTightPath((0, 1, 2, 3), 2)
    p1, c1, p2, c2 = split_into_two_mono(col, path)
    assert p1 == (0, 1, 2) and c1 == RED
    assert p2 == (3,) and c2 == BLUE


@pytest.mark.parametrize("n", [6, 7])
def test_split_parts_keep_edges(rng, n):
    from monopart.generators import gen_random

    for _ in range(300):
        col = gen_random("h3", n, 2, seed=rng.getrandbits(32))
        path = spanning_bicoloured_path(col)
        p1, c1, p2, c2 = split_into_two_mono(col, path)
        assert c1 != c2
        assert sorted(p1 + p2) == list(range(n))
        for part in (p1, p2):
            assert len(part) == 0 or len(part) >= 3
            assert classify_tight_path(col, part).kind == "mono"


def test_split_rejects_non_spanning():
    col = TripleColouring.constant(5, 0)
    with pytest.raises(ValueError):
        split_into_two_mono(col, BicolouredTightPath((0, 1, 2), 2))
