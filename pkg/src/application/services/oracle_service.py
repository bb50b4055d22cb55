"""
Oracle Service - brute-force decision through laminar completions of the extended matrix
"""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.config.constants import Sign, Verdict
from src.config.settings import get_settings
from src.domain.entities.binary_matrix import BinaryMatrix
from src.domain.entities.extended_matrix import ExtendedMatrix
from src.domain.entities.persistent_tree import PersistentTree
from src.domain.value_objects.signed_character import SignedCharacter
from src.utilities.helpers import bits_of, gray_code_subsets, mask_of, nested_or_disjoint
from src.utilities.logger import get_logger

logger = get_logger(__name__)


@dataclass
class OracleResult:
    """Verdict of the completion search, with one witness completion when solvable"""

    verdict: Verdict
    unknown_count: int
    budget: int
    extended: ExtendedMatrix = field(repr=False)
    completion: Optional[np.ndarray] = field(default=None, repr=False)
    explored: int = 0

    @property
    def is_solvable(self) -> bool:
        return self.verdict is Verdict.SOLVABLE

    def witness_matrix(self) -> Optional[BinaryMatrix]:
        """The completion as a plain matrix over the doubled columns"""
        if self.completion is None:
            return None
        return BinaryMatrix(
            species_names=self.extended.matrix.species_names,
            character_names=tuple(self.extended.column_names),
            cells=self.completion,
        )

    def to_dict(self) -> Dict[str, object]:
        """Convert result to dictionary"""
        witness = self.witness_matrix()
        return {
            "verdict": self.verdict.value,
            "unknown_count": self.unknown_count,
            "budget": self.budget,
            "explored": self.explored,
            "witness": witness.to_dict() if witness is not None else None,
        }


def extend(matrix: BinaryMatrix) -> ExtendedMatrix:
    """Double every character; unknown pairs sit on the 0-cells of inactive columns"""
    return ExtendedMatrix.from_matrix(matrix)


def _column_masks(cells: np.ndarray) -> List[int]:
    return [mask_of(np.flatnonzero(cells[:, j]).tolist()) for j in range(cells.shape[1])]


def perfect_phylogeny_test(cells: np.ndarray) -> bool:
    """
    Zero-rooted compatibility of a complete 0/1 matrix

    True iff no column pair shows all of (0,1), (1,0) and (1,1), i.e. the
    columns form a laminar family.
    """
    masks = _column_masks(np.asarray(cells))
    return all(nested_or_disjoint(a, b) for a, b in combinations(masks, 2))


def solve_bruteforce(matrix: BinaryMatrix, budget: Optional[int] = None) -> OracleResult:
    """
    Search the completions of the extended matrix for a laminar one

    Characters are fixed one at a time; the species set that becomes
    persistent for a character is enumerated in Gray-code order, and a branch
    is cut as soon as its two new columns cross an earlier column.

    Args:
        matrix: Matrix with its active set
        budget: Largest unknown count searched (settings default)

    Returns:
        OracleResult; over_budget when the unknown count exceeds the budget
    """
    budget = get_settings().oracle_budget if budget is None else budget
    extended = extend(matrix)
    z = extended.unknown_count
    if z > budget:
        logger.info(f"Oracle over budget: z={z} > {budget}")
        return OracleResult(Verdict.OVER_BUDGET, z, budget, extended)

    fixed: List[int] = []
    for c in sorted(matrix.active):
        fixed.extend((extended.gain_mask(c), extended.loss_mask(c)))
    if not all(nested_or_disjoint(a, b) for a, b in combinations(fixed, 2)):
        return OracleResult(Verdict.UNSOLVABLE, z, budget, extended)

    inactive = [c for c in range(matrix.n_characters) if c not in matrix.active]
    chosen: Dict[int, int] = {}
    explored = 0

    def search(k: int, columns: List[int]) -> bool:
        nonlocal explored
        if k == len(inactive):
            return True
        c = inactive[k]
        gain = extended.gain_mask(c)
        for persistent in gray_code_subsets(extended.unknown_species(c)):
            explored += 1
            plus = gain | persistent
            if all(nested_or_disjoint(plus, col) and nested_or_disjoint(persistent, col) for col in columns):
                chosen[c] = persistent
                if search(k + 1, columns + [plus, persistent]):
                    return True
        chosen.pop(c, None)
        return False

    if search(0, fixed):
        completion = extended.complete(chosen)
        logger.debug(f"Oracle: solvable after {explored} partial completions")
        return OracleResult(Verdict.SOLVABLE, z, budget, extended, completion, explored)
    logger.debug(f"Oracle: unsolvable after {explored} partial completions")
    return OracleResult(Verdict.UNSOLVABLE, z, budget, extended, None, explored)


def witness_tree(matrix: BinaryMatrix, completion: np.ndarray) -> PersistentTree:
    """
    Persistent phylogeny induced by a laminar completion

    Each distinct nonempty column set is the species set below one edge,
    labelled by every column equal to it. Sets are taken by size, largest
    first, and hang below the smallest set containing them. The all-ones gain
    columns of active characters lie above the root and are skipped.
    """
    masks = _column_masks(np.asarray(completion))
    labels: Dict[int, List[SignedCharacter]] = {}
    for column, mask in enumerate(masks):
        c, sign = column // 2, Sign.PLUS if column % 2 == 0 else Sign.MINUS
        if not mask or (sign is Sign.PLUS and c in matrix.active):
            continue
        labels.setdefault(mask, []).append(SignedCharacter(c, sign, matrix.character_names[c]))

    tree = PersistentTree(matrix.root_state.tolist(), matrix.character_names)
    ordered: List[Tuple[int, int]] = []
    for mask in sorted(labels, key=lambda m: (-bin(m).count("1"), bits_of(m))):
        parent = tree.root
        for other, node in ordered:
            if mask & other == mask:
                parent = node
        edge = sorted(labels[mask], key=lambda item: (item.sign is Sign.MINUS, item.character))
        ordered.append((mask, tree.add_child(parent, edge)))

    for s, name in enumerate(matrix.species_names):
        node = tree.root
        for mask, candidate in ordered:
            if mask >> s & 1:
                node = candidate
        tree.add_species(node, name)
    return tree
