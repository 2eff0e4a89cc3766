"""
Sets of small non-negative integers packed into Python ints.
"""
from typing import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    """
    Pack indices into an integer bitmask.

    Examples:
        >>> mask_of([0, 2])
        5
    """
    mask = 0
    for idx in indices:
        if idx < 0:
            raise ValueError(f"bit not greater than or equal to 0, bit == {idx}")
        mask |= 1 << int(idx)
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """
    Iterate over the set bits of mask in ascending order.

    Examples:
        >>> list(iter_bits(0b1010))
        [1, 3]
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    """
    Number of set bits.
    """
    return bin(mask).count("1")
