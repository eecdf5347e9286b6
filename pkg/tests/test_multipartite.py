import pytest

from monopart.certificates import PartitionCertificate, Piece, check_certificate
from monopart.colourings import BLUE, RED, HyperSplitSizes, TransversalColouring
from monopart.generators import gen_split_bipartite
from monopart.multipartite import (
    ExceedsCap,
    check_side_consistency,
    edge_colour_split,
    min_cover_exact,
    random_mono_tight_path,
    validate_transversal_tight_path,
    verify_counting,
)


def test_edge_colour_parity():
    assert edge_colour_split(HyperSplitSizes(2, 2, (1, 1)), (0, 0)) == RED
    sizes = HyperSplitSizes(3, 2, (1, 1, 1))
    assert edge_colour_split(sizes, (0, 0, 1)) == RED  # two inside: even
    assert edge_colour_split(sizes, (0, 1, 1)) == BLUE  # one inside: odd
    with pytest.raises(ValueError):
        edge_colour_split(sizes, (0, 1))


def test_rule_agrees_with_bipartite_generator():
    for n in range(2, 6):
        for a1 in range(1, n):
            for b1 in range(1, n):
                col, _ = gen_split_bipartite(n, a1, b1)
                sizes = HyperSplitSizes(2, n, (a1, b1))
                for a in range(n):
                    for b in range(n):
                        assert col.colour(a, n + b) == edge_colour_split(sizes, (a, b))


def test_validate_windows():
    assert validate_transversal_tight_path(3, 3, [0, 3, 6, 1, 4, 7])
    assert not validate_transversal_tight_path(3, 3, [0, 3, 3])
    assert not validate_transversal_tight_path(3, 3, [0, 3, 4])
    assert validate_transversal_tight_path(3, 3, [0, 5])  # short: vacuously fine
    assert not validate_transversal_tight_path(3, 3, [0, 99])


def test_rotation_path_spans_mono_host():
    r, n = 3, 3
    seq = [c * n + j for j in range(n) for c in range(r)]
    assert validate_transversal_tight_path(r, n, seq)
    mono = TransversalColouring(r, n, entries=bytes(n**r))
    cert = PartitionCertificate.for_colouring(mono, [Piece("path", RED, tuple(seq))])
    assert check_certificate(mono, cert).ok


def test_side_consistency_trivial_cases():
    sizes = HyperSplitSizes(2, 3, (1, 1))
    assert check_side_consistency(sizes, [0])
    assert check_side_consistency(sizes, [0, 3])  # inside both first halves: red
    with pytest.raises(ValueError):
        check_side_consistency(sizes, [0, 3, 1, 4])  # mixes colours
    with pytest.raises(ValueError):
        check_side_consistency(sizes, [0, 1])  # not transversal


def test_side_consistency_random_paths(rng):
    for _ in range(3000):
        r = rng.choice([2, 3])
        n = rng.randint(2, 9)
        sizes = HyperSplitSizes(r, n, tuple(rng.randint(1, n - 1) for _ in range(r)))
        path, _colour = random_mono_tight_path(sizes, rng)
        assert check_side_consistency(sizes, path)


def test_counting_report_values():
    rep = verify_counting(2, 81)
    assert rep.hypotheses_met and rep.all_hold
    by_label = {iq.label: iq for iq in rep.inequalities}
    assert by_label["class-2-growth"].lhs == 9
    assert by_label["class-2-growth"].rhs == 4  # 3 + 1

    rep = verify_counting(1, 27)
    assert rep.hypotheses_met and rep.all_hold
    assert rep.inequalities[0].lhs == 3 and rep.inequalities[0].rhs == 0

    rep = verify_counting(10, 3**12)
    assert rep.hypotheses_met and rep.all_hold


def test_counting_below_threshold_reports_unmet():
    rep = verify_counting(2, 80)
    assert not rep.hypotheses_met


def test_min_cover_mono_rotation():
    mono = TransversalColouring(3, 2, entries=bytes(8))
    k, witness = min_cover_exact(mono)
    assert k == 1
    (seq, colour), = witness
    assert validate_transversal_tight_path(3, 2, seq) and len(seq) == 6


def test_min_cover_small_split_values():
    # frozen values from the exhaustive search itself; the narrow blocks of
    # s=(1,2) at n=4 still admit two spanning block paths
    col = TransversalColouring(2, 4, rule=HyperSplitSizes(2, 4, (1, 2)))
    k, witness = min_cover_exact(col)
    assert k == 2
    cert = PartitionCertificate.for_colouring(
        col.materialize(), [Piece("path", c, tuple(s)) for s, c in witness]
    )
    assert check_certificate(col.materialize(), cert).ok

    k, _ = min_cover_exact(TransversalColouring(2, 2, rule=HyperSplitSizes(2, 2, (1, 1))))
    assert k == 2


def test_min_cover_deterministic():
    col = TransversalColouring(2, 2, rule=HyperSplitSizes(2, 2, (1, 1)))
    assert min_cover_exact(col) == min_cover_exact(col)


def _two_block_paths_feasible(n, a, b):
    # analytic two-piece criterion: both monochromatic block pairs must be
    # coverable by single spanning paths, which needs near-square blocks
    return abs(a - b) <= 1 or abs(a + b - n) <= 1


def test_min_cover_matches_block_analysis():
    for n in range(2, 8):
        for a in range(1, n):
            for b in range(1, n):
                if 2 * n > 14:
                    continue
                col = TransversalColouring(2, n, rule=HyperSplitSizes(2, n, (a, b)))
                k, witness = min_cover_exact(col)
                assert k >= 2
                assert (k == 2) == _two_block_paths_feasible(n, a, b), (n, a, b, k)
                masks = [frozenset(seq) for seq, _ in witness]
                assert sum(len(m) for m in masks) == 2 * n


def test_min_cover_cap():
    col = TransversalColouring(2, 8, rule=HyperSplitSizes(2, 8, (1, 1)))
    with pytest.raises(ExceedsCap):
        min_cover_exact(col)
