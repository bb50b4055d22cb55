"""
Binary Matrix Entity - species x character matrix with its active set
"""
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from src.error_trace.exceptions import MatrixValidationError, RealizationPreconditionError, UnknownVertexError
from src.utilities.helpers import mask_of

CharacterRef = Union[int, str]


@dataclass(frozen=True, eq=False)
class BinaryMatrix:
    """
    The pair (M, A): a 0/1 matrix with named rows and columns plus the
    indices of the active characters.

    `aliases` maps a kept column index to the names of the identical columns
    merged into it by preprocessing.
    """

    species_names: Tuple[str, ...]
    character_names: Tuple[str, ...]
    cells: np.ndarray
    active: FrozenSet[int] = frozenset()
    aliases: Mapping[int, Tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        """Validate shape, values, names and the active set"""
        cells = np.asarray(self.cells, dtype=np.uint8)
        if cells.size == 0:
            cells = cells.reshape(len(self.species_names), len(self.character_names))
        if cells.ndim != 2:
            raise MatrixValidationError("cells must be a 2-dimensional array")
        if cells.shape != (len(self.species_names), len(self.character_names)):
            raise MatrixValidationError(
                f"cells shape {cells.shape} does not match "
                f"{len(self.species_names)} species x {len(self.character_names)} characters"
            )
        if cells.size and cells.max() > 1:
            raise MatrixValidationError("cells must be 0 or 1")
        if len(set(self.species_names)) != len(self.species_names):
            raise MatrixValidationError("duplicate species name")
        if len(set(self.character_names)) != len(self.character_names):
            raise MatrixValidationError("duplicate character name")
        active = frozenset(int(c) for c in self.active)
        if any(c < 0 or c >= len(self.character_names) for c in active):
            raise MatrixValidationError("active set refers to a missing character")

        cells = cells.copy()
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "species_names", tuple(self.species_names))
        object.__setattr__(self, "character_names", tuple(self.character_names))
        object.__setattr__(self, "active", active)
        object.__setattr__(
            self, "aliases", MappingProxyType({int(k): tuple(v) for k, v in self.aliases.items() if v})
        )

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[int]],
        species_names: Optional[Sequence[str]] = None,
        character_names: Optional[Sequence[str]] = None,
        active: Iterable[CharacterRef] = (),
    ) -> "BinaryMatrix":
        """Build a matrix from nested lists, auto-naming s1.. and c1.. when names are omitted"""
        n = len(rows)
        m = len(rows[0]) if n else len(character_names or ())
        species = tuple(species_names) if species_names is not None else tuple(f"s{i + 1}" for i in range(n))
        characters = (
            tuple(character_names) if character_names is not None else tuple(f"c{j + 1}" for j in range(m))
        )
        cells = np.array(rows, dtype=np.uint8).reshape(n, m)
        matrix = cls(species_names=species, character_names=characters, cells=cells)
        return matrix.with_active(active)

    # Equality compares names, cells, active set and aliases

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return (
            self.species_names == other.species_names
            and self.character_names == other.character_names
            and self.active == other.active
            and dict(self.aliases) == dict(other.aliases)
            and np.array_equal(self.cells, other.cells)
        )

    __hash__ = None  # type: ignore[assignment]

    @property
    def n_species(self) -> int:
        return len(self.species_names)

    @property
    def n_characters(self) -> int:
        return len(self.character_names)

    @property
    def is_empty(self) -> bool:
        return self.n_species == 0 or self.n_characters == 0

    @property
    def root_state(self) -> np.ndarray:
        """State of the tree root: 1 exactly on the active characters"""
        state = np.zeros(self.n_characters, dtype=np.uint8)
        for c in self.active:
            state[c] = 1
        return state

    def character_index(self, ref: CharacterRef) -> int:
        """Resolve a character name or index"""
        if isinstance(ref, (int, np.integer)):
            if 0 <= int(ref) < self.n_characters:
                return int(ref)
            raise UnknownVertexError("character", ref)
        try:
            return self.character_names.index(ref)
        except ValueError:
            raise UnknownVertexError("character", ref)

    def species_index(self, ref: Union[int, str]) -> int:
        """Resolve a species name or index"""
        if isinstance(ref, (int, np.integer)):
            if 0 <= int(ref) < self.n_species:
                return int(ref)
            raise UnknownVertexError("species", ref)
        try:
            return self.species_names.index(ref)
        except ValueError:
            raise UnknownVertexError("species", ref)

    def with_active(self, refs: Iterable[CharacterRef]) -> "BinaryMatrix":
        """Copy with the active set replaced"""
        active = frozenset(self.character_index(r) for r in refs)
        return BinaryMatrix(self.species_names, self.character_names, self.cells, active, self.aliases)

    def row(self, s: Union[int, str]) -> np.ndarray:
        return self.cells[self.species_index(s)]

    def column(self, c: CharacterRef) -> np.ndarray:
        return self.cells[:, self.character_index(c)]

    def column_mask(self, c: CharacterRef) -> int:
        """Species set S(c) as a bitmask over species indices"""
        return mask_of(np.flatnonzero(self.column(c)).tolist())

    def species_of(self, c: CharacterRef) -> FrozenSet[str]:
        """S(c): names of the species that have character c"""
        return frozenset(self.species_names[i] for i in np.flatnonzero(self.column(c)))

    def conflicting(self, c1: CharacterRef, c2: CharacterRef) -> bool:
        """True iff the two columns show all four configurations (0,0),(0,1),(1,0),(1,1)"""
        a, b = self.character_index(c1), self.character_index(c2)
        if a == b:
            raise RealizationPreconditionError("conflicting() needs two distinct characters")
        pairs = set(zip(self.cells[:, a].tolist(), self.cells[:, b].tolist()))
        return len(pairs) == 4

    def submatrix(self, species: Sequence[int], characters: Sequence[int]) -> "BinaryMatrix":
        """Restrict to the given row and column indices, keeping their order"""
        position = {c: j for j, c in enumerate(characters)}
        cells = self.cells[np.ix_(list(species), list(characters))] if species and characters else np.zeros(
            (len(species), len(characters)), dtype=np.uint8
        )
        return BinaryMatrix(
            species_names=tuple(self.species_names[i] for i in species),
            character_names=tuple(self.character_names[c] for c in characters),
            cells=cells,
            active=frozenset(position[c] for c in self.active if c in position),
            aliases={position[c]: names for c, names in self.aliases.items() if c in position},
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert matrix to dictionary"""
        return {
            "species": list(self.species_names),
            "characters": list(self.character_names),
            "active": [self.character_names[c] for c in sorted(self.active)],
            "rows": self.cells.tolist(),
            "aliases": {self.character_names[c]: list(v) for c, v in sorted(self.aliases.items())},
        }


@dataclass
class PreprocessReport:
    """What preprocessing removed or merged, by name"""

    removed_null_characters: List[str] = field(default_factory=list)
    removed_null_species: List[str] = field(default_factory=list)
    merged_duplicate_columns: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return not (self.removed_null_characters or self.removed_null_species or self.merged_duplicate_columns)

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary"""
        return {
            "removed_null_characters": list(self.removed_null_characters),
            "removed_null_species": list(self.removed_null_species),
            "merged_duplicate_columns": [list(p) for p in self.merged_duplicate_columns],
        }
