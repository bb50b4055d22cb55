"""
Extended Matrix Entity - every character doubled into a gain column and a loss column
"""
from dataclasses import dataclass
from typing import Dict, List, Mapping, Tuple

import numpy as np

from src.config.constants import Sign
from src.domain.entities.binary_matrix import BinaryMatrix
from src.utilities.helpers import bits_of, mask_of

UNKNOWN = -1


@dataclass(frozen=True, eq=False)
class ExtendedMatrix:
    """
    Columns 2j and 2j+1 are c_j+ and c_j-.

    Inactive c: M=1 gives (1,0); M=0 gives an unknown pair that completes to
    (0,0) or (1,1). Active c: c+ is all ones and c- is 1 exactly where M=0.
    """

    matrix: BinaryMatrix
    unknown: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_matrix(cls, matrix: BinaryMatrix) -> "ExtendedMatrix":
        unknown = tuple(
            (s, c)
            for c in range(matrix.n_characters)
            if c not in matrix.active
            for s in range(matrix.n_species)
            if matrix.cells[s, c] == 0
        )
        return cls(matrix, unknown)

    @property
    def unknown_count(self) -> int:
        """z: number of unknown pairs"""
        return len(self.unknown)

    @property
    def column_names(self) -> List[str]:
        return [f"{name}{sign.value}" for name in self.matrix.character_names for sign in (Sign.PLUS, Sign.MINUS)]

    def provenance(self, column: int) -> Tuple[int, Sign]:
        """Character index and sign behind an extended column"""
        return column // 2, Sign.PLUS if column % 2 == 0 else Sign.MINUS

    @property
    def cells(self) -> np.ndarray:
        """n x 2m array over {0, 1, UNKNOWN}"""
        n, m = self.matrix.n_species, self.matrix.n_characters
        out = np.zeros((n, 2 * m), dtype=np.int8)
        for c in range(m):
            column = self.matrix.cells[:, c].astype(np.int8)
            if c in self.matrix.active:
                out[:, 2 * c] = 1
                out[:, 2 * c + 1] = 1 - column
            else:
                out[:, 2 * c] = column
        for s, c in self.unknown:
            out[s, 2 * c] = UNKNOWN
            out[s, 2 * c + 1] = UNKNOWN
        return out

    def unknown_species(self, c: int) -> List[int]:
        """Species whose pair for c is unknown"""
        return [s for s, d in self.unknown if d == c]

    def gain_mask(self, c: int) -> int:
        """Known species of the c+ column"""
        if c in self.matrix.active:
            return (1 << self.matrix.n_species) - 1
        return self.matrix.column_mask(c)

    def loss_mask(self, c: int) -> int:
        """Known species of the c- column"""
        if c in self.matrix.active:
            return mask_of(np.flatnonzero(self.matrix.cells[:, c] == 0).tolist())
        return 0

    def complete(self, persistent: Mapping[int, int]) -> np.ndarray:
        """
        Fill the unknowns

        Args:
            persistent: For each inactive character, the species mask whose
                unknown pair becomes (1,1); all other unknowns become (0,0)

        Returns:
            n x 2m 0/1 array
        """
        out = self.cells.copy()
        out[out == UNKNOWN] = 0
        for c, mask in persistent.items():
            for s in bits_of(mask):
                out[s, 2 * c] = 1
                out[s, 2 * c + 1] = 1
        return out.astype(np.uint8)

    def to_dict(self) -> Dict[str, object]:
        """Convert extended matrix to dictionary"""
        return {
            "species": list(self.matrix.species_names),
            "columns": self.column_names,
            "rows": self.cells.tolist(),
            "unknown_count": self.unknown_count,
        }
