"""
Signed Character Value Objects
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

from src.config.constants import Sign


@dataclass(frozen=True, order=True)
class SignedCharacter:
    """A character index tagged + (gained) or - (lost), carrying its display name"""

    character: int
    sign: Sign
    name: str = ""

    def __post_init__(self):
        """Validate sign"""
        if not isinstance(self.sign, Sign):
            object.__setattr__(self, "sign", Sign(self.sign))
        if not self.name:
            object.__setattr__(self, "name", f"c{self.character + 1}")

    @property
    def is_positive(self) -> bool:
        return self.sign is Sign.PLUS

    @property
    def label(self) -> str:
        """Text form such as 'c3+'"""
        return f"{self.name}{self.sign.value}"

    def __str__(self) -> str:
        return self.label

    @classmethod
    def plus(cls, character: int, name: str = "") -> "SignedCharacter":
        return cls(character, Sign.PLUS, name)

    @classmethod
    def minus(cls, character: int, name: str = "") -> "SignedCharacter":
        return cls(character, Sign.MINUS, name)

    @classmethod
    def from_label(cls, label: str, names: Sequence[str]) -> "SignedCharacter":
        """Parse 'c3+' against the given character names"""
        text = label.strip()
        if len(text) < 2 or text[-1] not in ("+", "-"):
            raise ValueError(f"Invalid signed character: {label}")
        name = text[:-1]
        try:
            index = list(names).index(name)
        except ValueError:
            raise ValueError(f"Unknown character in signed character: {label}")
        return cls(index, Sign(text[-1]), name)


@dataclass(frozen=True)
class CReduction:
    """Ordered sequence of signed characters; no character repeats with the same sign"""

    sequence: Tuple[SignedCharacter, ...] = ()

    def __post_init__(self):
        """Validate uniqueness of (character, sign)"""
        sequence = tuple(self.sequence)
        seen = set()
        for item in sequence:
            key = (item.character, item.sign)
            if key in seen:
                raise ValueError(f"{item.label} appears twice in a c-reduction")
            seen.add(key)
        object.__setattr__(self, "sequence", sequence)

    @classmethod
    def positives(cls, characters: Iterable[int], names: Sequence[str]) -> "CReduction":
        """Positive c-reduction over the given character indices, in order"""
        return cls(tuple(SignedCharacter.plus(c, names[c]) for c in characters))

    def __iter__(self) -> Iterator[SignedCharacter]:
        return iter(self.sequence)

    def __len__(self) -> int:
        return len(self.sequence)

    def __getitem__(self, index: int) -> SignedCharacter:
        return self.sequence[index]

    def __add__(self, other: "CReduction") -> "CReduction":
        return CReduction(self.sequence + tuple(other.sequence))

    @property
    def is_positive(self) -> bool:
        return all(item.is_positive for item in self.sequence)

    @property
    def negatives(self) -> List[SignedCharacter]:
        return [item for item in self.sequence if not item.is_positive]

    def positive_part(self) -> "CReduction":
        """Only the positive characters, order kept"""
        return CReduction(tuple(item for item in self.sequence if item.is_positive))

    @property
    def labels(self) -> List[str]:
        return [item.label for item in self.sequence]
