"""Shared domain types and indexing conventions.

Symbols and colour classes are 1-based everywhere at the API surface:
a block over parameters (k, n) is a k-tuple with entries in {1..n}, and a
cube of dimension d and order n is a dense table over {1..n}^d.  Modular
arithmetic inside the constructions works on residues {0..n-1} and shifts
by +1 at the boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

Block = tuple[int, ...]
IndexSet = tuple[int, ...]


@dataclass(frozen=True)
class Params:
    """Problem parameters: k colour classes, n symbols per class, strength ell.

    Requires k >= ell >= 1 and n >= 1.
    """

    k: int
    n: int
    ell: int

    def __post_init__(self) -> None:
        if self.ell < 1:
            raise ValueError(f"ell >= 1 violated (ell={self.ell})")
        if self.k < self.ell:
            raise ValueError(f"k >= ell violated (k={self.k}, ell={self.ell})")
        if self.n < 1:
            raise ValueError(f"n >= 1 violated (n={self.n})")


def validate_params(k: int, n: int, ell: int) -> Params:
    """Build Params, rejecting any violated inequality by name."""
    return Params(k, n, ell)


def enumerate_index_sets(params: Params) -> list[IndexSet]:
    """All C(k, ell) strictly increasing position tuples, in lexicographic order."""
    return [tuple(s) for s in combinations(range(1, params.k + 1), params.ell)]


def flatten_coords(coords: Iterable[int], n: int) -> int:
    """Row-major flat offset of 1-based coordinates; last coordinate varies fastest."""
    index = 0
    for x in coords:
        index = index * n + (x - 1)
    return index


def unflatten_index(index: int, n: int, d: int) -> tuple[int, ...]:
    """Inverse of flatten_coords for a d-dimensional table of order n."""
    coords = [0] * d
    for i in range(d - 1, -1, -1):
        index, rem = divmod(index, n)
        coords[i] = rem + 1
    return tuple(coords)


def _check_block(block: Block, params: Params) -> None:
    if len(block) != params.k:
        raise ValueError(
            f"block length {len(block)} does not match k={params.k}: {block}"
        )
    for v in block:
        if not 1 <= v <= params.n:
            raise ValueError(f"symbol {v} outside 1..{params.n} in block {block}")


@dataclass(frozen=True)
class BlockFamily:
    """An ordered multiset of blocks under common parameters.

    Canonical form is lexicographically sorted with exact duplicates removed;
    duplicates are representable (they arise transiently during symbol fusion
    and in deliberately broken test inputs) but `canonical()` strips them.
    """

    params: Params
    blocks: tuple[Block, ...]

    def __post_init__(self) -> None:
        for block in self.blocks:
            _check_block(block, self.params)

    def canonical(self) -> "BlockFamily":
        return BlockFamily(self.params, tuple(sorted(set(self.blocks))))

    @property
    def is_canonical(self) -> bool:
        return all(a < b for a, b in zip(self.blocks, self.blocks[1:]))


@dataclass(frozen=True)
class LatinCube:
    """A dense function {1..n}^d -> {1..n}, stored last-coordinate-fastest.

    Construction validates shape and symbol range only; the Latin property
    itself is a verification verdict, so non-Latin tables are representable.
    """

    d: int
    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.d < 1 or self.n < 1:
            raise ValueError(f"cube dimensions must be positive (d={self.d}, n={self.n})")
        if len(self.table) != self.n**self.d:
            raise ValueError(
                f"table has {len(self.table)} entries, expected n^d = {self.n**self.d}"
            )
        for v in self.table:
            if not 1 <= v <= self.n:
                raise ValueError(f"symbol {v} outside 1..{self.n}")

    def value(self, coords: Sequence[int]) -> int:
        return self.table[flatten_coords(coords, self.n)]


@dataclass(frozen=True)
class CubeSet:
    """An ordered list of cubes sharing dimension and order.

    May be empty (extraction with no free positions yields zero cubes), in
    which case d and n still carry the intended geometry.
    """

    d: int
    n: int
    cubes: tuple[LatinCube, ...]

    def __post_init__(self) -> None:
        for i, cube in enumerate(self.cubes, start=1):
            if (cube.d, cube.n) != (self.d, self.n):
                raise ValueError(
                    f"cube {i} has (d={cube.d}, n={cube.n}), "
                    f"set declares (d={self.d}, n={self.n})"
                )


class Verdict(enum.Enum):
    EXACT = "Exact"
    COVER_ONLY = "CoverOnly"
    FAIL = "Fail"


@dataclass(frozen=True)
class Witness:
    """One offending projection cell: which positions, which values, how often hit.

    Multiplicity is capped at 2; 0 means uncovered, 2 means covered more than once.
    """

    index_set: IndexSet
    values: tuple[int, ...]
    multiplicity: int


@dataclass(frozen=True)
class VerifyReport:
    verdict: Verdict
    witness: Witness | None = None
