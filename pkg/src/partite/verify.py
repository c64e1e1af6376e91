"""Exhaustive projection-counting checks for block families and cube systems.

Every check is a pure function over immutable inputs, and every failure
witness is the lexicographically first offending (index set, value tuple)
pair, so verdicts do not depend on block order or scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .core import (
    BlockFamily,
    CubeSet,
    LatinCube,
    Verdict,
    VerifyReport,
    Witness,
    enumerate_index_sets,
    unflatten_index,
)


def _projection_counts(family: BlockFamily, index_set: tuple[int, ...]) -> bytearray:
    """Per-tuple hit counts of the family projected onto index_set, saturated at 2."""
    n = family.params.n
    counts = bytearray(n ** len(index_set))
    offsets = [s - 1 for s in index_set]
    for block in family.blocks:
        idx = 0
        for o in offsets:
            idx = idx * n + (block[o] - 1)
        if counts[idx] < 2:
            counts[idx] += 1
    return counts


def is_l_extendable(family: BlockFamily) -> VerifyReport:
    """Exact iff every value tuple at every index set is hit by exactly one block."""
    n, ell = family.params.n, family.params.ell
    for index_set in enumerate_index_sets(family.params):
        counts = _projection_counts(family, index_set)
        for flat, count in enumerate(counts):
            if count != 1:
                witness = Witness(index_set, unflatten_index(flat, n, ell), count)
                return VerifyReport(Verdict.FAIL, witness)
    return VerifyReport(Verdict.EXACT)


def is_decomposition(family: BlockFamily) -> VerifyReport:
    """Alias of is_l_extendable: a family decomposes the graph iff it is extendable."""
    return is_l_extendable(family)


def is_covering(family: BlockFamily) -> VerifyReport:
    """CoverOnly (or Exact) iff every value tuple at every index set is hit at least once.

    A Fail witness is the first uncovered pair; a CoverOnly report carries the
    first multiply-covered pair as an explanatory witness.
    """
    n, ell = family.params.n, family.params.ell
    first_dup: Witness | None = None
    for index_set in enumerate_index_sets(family.params):
        counts = _projection_counts(family, index_set)
        for flat, count in enumerate(counts):
            if count == 0:
                witness = Witness(index_set, unflatten_index(flat, n, ell), 0)
                return VerifyReport(Verdict.FAIL, witness)
            if count > 1 and first_dup is None:
                first_dup = Witness(index_set, unflatten_index(flat, n, ell), 2)
    if first_dup is not None:
        return VerifyReport(Verdict.COVER_ONLY, first_dup)
    return VerifyReport(Verdict.EXACT)


@dataclass(frozen=True)
class LatinCheck:
    """Result of the Latin-property check; the witness is the first violating line."""

    ok: bool
    axis: int | None = None
    fixed: tuple[int, ...] | None = None


def is_latin(cube: LatinCube) -> LatinCheck:
    """True iff every axis-parallel line of the table is a permutation of {1..n}."""
    d, n = cube.d, cube.n
    full = frozenset(range(1, n + 1))
    for axis in range(1, d + 1):
        for fixed in product(range(1, n + 1), repeat=d - 1):
            line = set()
            for j in range(1, n + 1):
                coords = fixed[: axis - 1] + (j,) + fixed[axis - 1 :]
                line.add(cube.value(coords))
            if line != full:
                return LatinCheck(False, axis, fixed)
    return LatinCheck(True)


@dataclass(frozen=True)
class OrthogonalityCheck:
    """Result of the superposition check over d-subsets of a cube set.

    On failure, `cubes` names the offending subset (1-based, in index order)
    and `values` the first image tuple hit zero times or more than once.
    """

    ok: bool
    cubes: tuple[int, ...] | None = None
    values: tuple[int, ...] | None = None
    multiplicity: int | None = None


def are_mutually_orthogonal(cube_set: CubeSet) -> OrthogonalityCheck:
    """True iff every d-subset of the cubes superimposes to a bijection onto {1..n}^d."""
    d, n = cube_set.d, cube_set.n
    m = len(cube_set.cubes)
    if m < d:
        raise ValueError(f"orthogonality needs at least d={d} cubes, got {m}")
    volume = n**d
    for subset in combinations(range(m), d):
        counts = bytearray(volume)
        tables = [cube_set.cubes[i].table for i in subset]
        for flat in range(volume):
            image = 0
            for table in tables:
                image = image * n + (table[flat] - 1)
            if counts[image] < 2:
                counts[image] += 1
        for image, count in enumerate(counts):
            if count != 1:
                return OrthogonalityCheck(
                    False,
                    tuple(i + 1 for i in subset),
                    unflatten_index(image, n, d),
                    count,
                )
    return OrthogonalityCheck(True)


def is_mutually_invertible(cube_set: CubeSet) -> VerifyReport:
    """Exact iff the lifted family (cube values, then coordinates) is extendable."""
    from .cubes import lift_cubes  # deferred: cubes depends on this module

    return is_l_extendable(lift_cubes(cube_set))
