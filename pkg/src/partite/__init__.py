"""Clique decompositions and coverings of complete multipartite graphs.

Builds exact strength-ell decompositions (equivalently, index-unity
orthogonal arrays), converts them to and from Latin cube systems and MOLS,
verifies all the relevant properties exhaustively, and produces covering
families when exact decomposition is impossible.
"""

from .construct import (
    PrimeFactorization,
    construct,
    factorize,
    product_decomposition,
    vandermonde_blocks,
)
from .core import (
    Block,
    BlockFamily,
    CubeSet,
    IndexSet,
    LatinCube,
    Params,
    Verdict,
    VerifyReport,
    Witness,
    enumerate_index_sets,
    flatten_coords,
    unflatten_index,
    validate_params,
)
from .cover import (
    build_covering,
    exact_cover_size,
    fuse,
    lifting_order,
    next_admissible_order,
)
from .cubes import (
    blocks_to_mols,
    extract_cubes,
    lift_cubes,
    mols_to_blocks,
    orthogonal_not_invertible_cubes,
)
from .verify import (
    LatinCheck,
    OrthogonalityCheck,
    are_mutually_orthogonal,
    is_covering,
    is_decomposition,
    is_l_extendable,
    is_latin,
    is_mutually_invertible,
)

__all__ = [
    "Block",
    "BlockFamily",
    "CubeSet",
    "IndexSet",
    "LatinCheck",
    "LatinCube",
    "OrthogonalityCheck",
    "Params",
    "PrimeFactorization",
    "Verdict",
    "VerifyReport",
    "Witness",
    "are_mutually_orthogonal",
    "blocks_to_mols",
    "build_covering",
    "construct",
    "enumerate_index_sets",
    "exact_cover_size",
    "extract_cubes",
    "factorize",
    "flatten_coords",
    "fuse",
    "is_covering",
    "is_decomposition",
    "is_l_extendable",
    "is_latin",
    "is_mutually_invertible",
    "lift_cubes",
    "lifting_order",
    "mols_to_blocks",
    "next_admissible_order",
    "orthogonal_not_invertible_cubes",
    "product_decomposition",
    "unflatten_index",
    "validate_params",
    "vandermonde_blocks",
]
