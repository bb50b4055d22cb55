"""
Helper Utility Functions
"""
from typing import Iterable, Iterator, List, Sequence


def mask_of(indices: Iterable[int]) -> int:
    """
    Pack indices into an integer bitmask

    Args:
        indices: Non-negative integers

    Returns:
        Bitmask with bit i set for every index i
    """
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def bits_of(mask: int) -> List[int]:
    """
    Unpack an integer bitmask into ascending indices

    Args:
        mask: Bitmask

    Returns:
        Sorted list of set bit positions
    """
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def nested_or_disjoint(a: int, b: int) -> bool:
    """True when two species sets are nested or disjoint (laminar pair)"""
    both = a & b
    return both == 0 or both == a or both == b


def gray_code_subsets(positions: Sequence[int]) -> Iterator[int]:
    """
    Enumerate all subsets of the given bit positions in Gray-code order

    Consecutive subsets differ in exactly one position; the first one is empty.

    Args:
        positions: Bit positions spanning the subsets

    Yields:
        Each subset as a bitmask
    """
    current = 0
    yield current
    for step in range(1, 1 << len(positions)):
        # Index of the lowest set bit of step is the position that flips
        flip = (step & -step).bit_length() - 1
        current ^= 1 << positions[flip]
        yield current


def is_binary_token(token: str) -> bool:
    """True for the cell tokens '0' and '1'"""
    return token in ("0", "1")


def format_names(indices: Iterable[int], names: Sequence[str]) -> str:
    """
    Render an index set as a brace-wrapped name list

    Args:
        indices: Indices into names
        names: Display names

    Returns:
        String such as '{c2,c3}'
    """
    return "{" + ",".join(names[i] for i in sorted(indices)) + "}"
