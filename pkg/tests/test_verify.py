import random
from itertools import product

import pytest

from helpers import first_projection_offense, square

from partite import (
    BlockFamily,
    CubeSet,
    LatinCube,
    Params,
    Verdict,
    are_mutually_orthogonal,
    blocks_to_mols,
    construct,
    extract_cubes,
    is_covering,
    is_decomposition,
    is_l_extendable,
    is_latin,
    is_mutually_invertible,
    lift_cubes,
    orthogonal_not_invertible_cubes,
    vandermonde_blocks,
)


def identity_family(k, n):
    """All n^k tuples: the trivial exact decomposition when k = ell."""
    return BlockFamily(
        Params(k, n, k), tuple(product(range(1, n + 1), repeat=k))
    )


def test_identity_family_is_exact():
    report = is_l_extendable(identity_family(3, 2))
    assert report.verdict is Verdict.EXACT
    assert report.witness is None


def test_polynomial_family_is_exact():
    family = vandermonde_blocks(3, 3, 2)
    assert is_l_extendable(family).verdict is Verdict.EXACT
    assert first_projection_offense(family) is None


def test_counterexample_lift_fails_extendability():
    family = lift_cubes(orthogonal_not_invertible_cubes())
    report = is_l_extendable(family)
    assert report.verdict is Verdict.FAIL
    # Slices of the superimposed pair force a permutation pattern, so the
    # first lexicographic offense is the quadruply covered (1,1) pair in the
    # first slice; the uncovered cells of the same index set come later.
    assert report.witness.index_set == (1, 2, 6)
    assert report.witness.values == (1, 1, 1)
    assert report.witness.multiplicity == 2
    assert first_projection_offense(family) == ((1, 2, 6), (1, 1, 1), 2)


def test_counterexample_lift_misses_the_documented_cell():
    family = lift_cubes(orthogonal_not_invertible_cubes())
    hits = [
        b for b in family.blocks if (b[0], b[1], b[5]) == (1, 2, 2)
    ]
    assert hits == []


def test_empty_family_fails_with_first_uncovered_cell():
    report = is_decomposition(BlockFamily(Params(3, 2, 2), ()))
    assert report.verdict is Verdict.FAIL
    assert report.witness.index_set == (1, 2)
    assert report.witness.values == (1, 1)
    assert report.witness.multiplicity == 0


def test_duplicate_plus_missing_block_reports_duplicate():
    family = construct(3, 3, 2)
    broken = BlockFamily(
        family.params, (family.blocks[0],) + family.blocks[:-1]
    )
    report = is_decomposition(broken)
    assert report.verdict is Verdict.FAIL
    assert report.witness.multiplicity == 2
    assert report.witness.index_set == (1, 2)
    assert report.witness.values == (1, 1)


def test_construct_output_is_decomposition():
    assert is_decomposition(construct(5, 5, 2)).verdict is Verdict.EXACT


def test_exact_family_is_also_covering():
    family = construct(4, 5, 2)
    assert is_covering(family).verdict is Verdict.EXACT


def test_covering_detects_repeated_blocks():
    family = construct(3, 3, 2)
    doubled = BlockFamily(family.params, family.blocks + family.blocks[:1])
    report = is_covering(doubled)
    assert report.verdict is Verdict.COVER_ONLY
    assert report.witness.multiplicity == 2


def test_identical_blocks_do_not_cover():
    family = BlockFamily(Params(3, 2, 2), ((1, 1, 1),) * 4)
    report = is_covering(family)
    assert report.verdict is Verdict.FAIL
    assert report.witness.values == (1, 2)


def test_one_dimensional_permutation_is_latin():
    assert is_latin(LatinCube(1, 4, (3, 1, 4, 2))).ok


def test_counterexample_cubes_are_latin():
    for cube in orthogonal_not_invertible_cubes().cubes:
        assert is_latin(cube).ok


def test_constant_cube_is_not_latin():
    check = is_latin(LatinCube(2, 2, (1, 1, 1, 1)))
    assert not check.ok
    assert check.axis == 1
    assert check.fixed == (1,)


def test_counterexample_cubes_are_mutually_orthogonal():
    assert are_mutually_orthogonal(orthogonal_not_invertible_cubes()).ok


def test_equal_squares_are_not_orthogonal():
    sq = square([[1, 2], [2, 1]])
    check = are_mutually_orthogonal(CubeSet(2, 2, (sq, sq)))
    assert not check.ok
    assert check.cubes == (1, 2)
    assert check.values == (1, 1)  # diagonal image, hit once per cell of L = 1
    assert check.multiplicity == 2


def test_extracted_mols_are_orthogonal():
    squares = blocks_to_mols(construct(4, 5, 2))
    assert len(squares.cubes) == 2
    assert are_mutually_orthogonal(squares).ok


def test_orthogonality_needs_at_least_d_cubes():
    sq = square([[1, 2], [2, 1]])
    with pytest.raises(ValueError, match="at least"):
        are_mutually_orthogonal(CubeSet(2, 2, (sq,)))


def test_counterexample_is_not_invertible():
    report = is_mutually_invertible(orthogonal_not_invertible_cubes())
    assert report.verdict is Verdict.FAIL
    assert report.witness.index_set == (1, 2, 6)


def test_single_square_lift_is_exact():
    cube_set = CubeSet(2, 3, (square([[1, 3, 2], [3, 2, 1], [2, 1, 3]]),))
    assert is_mutually_invertible(cube_set).verdict is Verdict.EXACT
    assert first_projection_offense(lift_cubes(cube_set)) is None


def test_extracted_cubes_from_admissible_order_are_invertible():
    family = construct(6, 7, 3)
    cube_set = extract_cubes(family, (4, 5, 6))
    assert is_mutually_invertible(cube_set).verdict is Verdict.EXACT


def test_invertible_implies_orthogonal():
    # extracted systems that verify as invertible must superimpose bijectively
    # (needs at least ell cubes, i.e. k >= 2*ell, for orthogonality to be defined)
    for k, n, ell in [(4, 5, 2), (5, 5, 2), (6, 7, 3), (7, 7, 3)]:
        cube_set = extract_cubes(
            construct(k, n, ell), tuple(range(k - ell + 1, k + 1))
        )
        assert is_mutually_invertible(cube_set).verdict is Verdict.EXACT
        assert are_mutually_orthogonal(cube_set).ok


def test_orthogonal_squares_are_invertible():
    # for squares (d = 2) orthogonality is already enough to lift exactly
    squares = blocks_to_mols(construct(4, 5, 2))
    assert are_mutually_orthogonal(squares).ok
    assert is_mutually_invertible(squares).verdict is Verdict.EXACT


def test_witness_agrees_with_brute_force_oracle_on_damaged_families():
    rng = random.Random(28114)
    pool = [construct(3, 3, 2), construct(2, 3, 2), construct(4, 5, 2)]
    for _ in range(15):
        family = rng.choice(pool)
        blocks = list(family.blocks)
        if rng.random() < 0.5:
            blocks.remove(rng.choice(blocks))
        else:
            blocks.append(rng.choice(blocks))
        damaged = BlockFamily(family.params, tuple(blocks))
        report = is_l_extendable(damaged)
        assert report.verdict is Verdict.FAIL
        offense = first_projection_offense(damaged)
        assert (
            report.witness.index_set,
            report.witness.values,
            report.witness.multiplicity,
        ) == offense


def test_verdicts_ignore_block_order():
    rng = random.Random(4173)
    family = construct(4, 5, 2)
    for _ in range(5):
        shuffled = list(family.blocks)
        rng.shuffle(shuffled)
        report = is_decomposition(BlockFamily(family.params, tuple(shuffled)))
        assert report.verdict is Verdict.EXACT

    broken = list(lift_cubes(orthogonal_not_invertible_cubes()).blocks)
    expected = is_l_extendable(
        BlockFamily(Params(6, 4, 3), tuple(broken))
    ).witness
    for _ in range(5):
        rng.shuffle(broken)
        report = is_l_extendable(BlockFamily(Params(6, 4, 3), tuple(broken)))
        assert report.witness == expected
