"""
Instance generators for the agreement harness

Exhaustive families enumerate every 0/1 matrix of a shape; random families
draw from a seeded numpy Generator so runs are reproducible.
"""
from itertools import permutations, product
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.application.services.matrix_service import preprocess
from src.domain.entities.binary_matrix import BinaryMatrix

CanonicalKey = Tuple[Tuple[bool, ...], Tuple[Tuple[int, ...], ...]]


def exhaustive_matrices(n: int, m: int, active: Iterable[int] = ()) -> Iterator[BinaryMatrix]:
    """Every n x m binary matrix, in binary counting order of its cells"""
    active = tuple(active)
    for bits in product((0, 1), repeat=n * m):
        rows = [bits[i * m:(i + 1) * m] for i in range(n)]
        yield BinaryMatrix.from_rows(rows, active=active)


def canonical_key(matrix: BinaryMatrix) -> CanonicalKey:
    """
    Key shared by matrices with the same verdict up to renaming

    The matrix is preprocessed, its rows are taken as a set, and the key is
    the smallest encoding over all column permutations.
    """
    reduced, _ = preprocess(matrix)
    m = reduced.n_characters
    cells = reduced.cells
    best: Optional[CanonicalKey] = None
    for order in permutations(range(m)):
        flags = tuple(c in reduced.active for c in order)
        rows = tuple(sorted({tuple(int(v) for v in cells[s, list(order)]) for s in range(reduced.n_species)}))
        key = (flags, rows)
        if best is None or key < best:
            best = key
    return best if best is not None else ((), ())


def unique_matrices(matrices: Iterable[BinaryMatrix]) -> Iterator[BinaryMatrix]:
    """First representative of every canonical key"""
    seen = set()
    for matrix in matrices:
        key = canonical_key(matrix)
        if key not in seen:
            seen.add(key)
            yield matrix


def random_matrix(
    rng: np.random.Generator,
    n: int,
    m: int,
    active_size: int = 0,
    density: float = 0.5,
) -> BinaryMatrix:
    """Uniform cells with the given density; the active characters are a random sample"""
    cells = (rng.random((n, m)) < density).astype(np.uint8)
    active = rng.choice(m, size=active_size, replace=False).tolist() if active_size else []
    return BinaryMatrix.from_rows(cells.tolist(), active=active)


def random_matrices(
    count: int,
    n: int,
    m: int,
    seed: int = 0,
    active_sizes: Sequence[int] = (0,),
    density: float = 0.5,
) -> Iterator[BinaryMatrix]:
    """`count` random matrices per active-set size"""
    rng = np.random.default_rng(seed)
    for active_size in active_sizes:
        for _ in range(count):
            yield random_matrix(rng, n, m, active_size, density)


def random_laminar_matrix(rng: np.random.Generator, n: int, m: int) -> BinaryMatrix:
    """
    Conflict-free matrix drawn from a random rooted tree

    Node i > 0 hangs below a random earlier node and its edge carries
    character i - 1; species sit on random nodes, so every column is the
    species set of a subtree and the columns form a laminar family.
    """
    parents: List[int] = [-1] + [int(rng.integers(0, i)) for i in range(1, m + 1)]
    placement = rng.integers(0, m + 1, size=n)
    cells = np.zeros((n, m), dtype=np.uint8)
    for s, node in enumerate(placement):
        node = int(node)
        while node > 0:
            cells[s, node - 1] = 1
            node = parents[node]
    return BinaryMatrix.from_rows(cells.tolist())


def random_laminar_matrices(count: int, n: int, m: int, seed: int = 0) -> Iterator[BinaryMatrix]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_laminar_matrix(rng, n, m)
