"""Brute-force oracles shared across test modules.

These deliberately re-count projections cell by cell with nested loops, so
they stay independent of the library's bucket-counting passes.
"""

from itertools import combinations, product

from partite import BlockFamily, LatinCube


def first_projection_offense(family: BlockFamily):
    """First (positions, values, capped hit count) with count != 1, or None."""
    k, n, ell = family.params.k, family.params.n, family.params.ell
    for positions in combinations(range(1, k + 1), ell):
        for values in product(range(1, n + 1), repeat=ell):
            hits = sum(
                1
                for block in family.blocks
                if all(block[s - 1] == v for s, v in zip(positions, values))
            )
            if hits != 1:
                return positions, values, min(hits, 2)
    return None


def covers_every_pair(blocks, k, n, ell):
    """True iff each (positions, values) cell is hit by at least one block."""
    for positions in combinations(range(1, k + 1), ell):
        for values in product(range(1, n + 1), repeat=ell):
            if not any(
                all(block[s - 1] == v for s, v in zip(positions, values))
                for block in blocks
            ):
                return False
    return True


def square(rows) -> LatinCube:
    """Build an order-len(rows) square from nested row lists."""
    return LatinCube(2, len(rows), tuple(v for row in rows for v in row))
