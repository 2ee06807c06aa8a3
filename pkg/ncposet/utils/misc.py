"""
Module provides small helpers shared across ncposet.

Import functions:
    - parse_int_list
"""
from typing import Tuple


def parse_int_list(text: str) -> Tuple[int, ...]:
    """
    Parse "2,1,3,1,3" into a tuple of integers.

    :raises ValueError: If any item is not an integer.
    """
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        return tuple(int(item) for item in items)
    except ValueError as error:
        raise ValueError(f"Expected comma separated integers, got {text!r}.") from error
