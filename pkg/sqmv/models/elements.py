"""
Carrier element representations and their text labels.

    Fraction            points of [-1, 1]
    (a, b)              pairs, including product elements
    Fresh()             the element adjoined by a flattening
    Block(members)      a congruence class
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Tuple

from sqmv.utils.errors import DomainError

Element = Any


@dataclass(frozen=True)
class Fresh:
    label: str = "k"


@dataclass(frozen=True)
class Block:
    members: Tuple[Element, ...]


def clamp(value: Fraction) -> Fraction:
    if value > 1:
        return Fraction(1)
    if value < -1:
        return Fraction(-1)
    return value


def format_element(x: Element) -> str:
    if isinstance(x, Fresh):
        return x.label
    if isinstance(x, Block):
        return "{" + "|".join(format_element(member) for member in x.members) + "}"
    if isinstance(x, tuple):
        return "<" + ",".join(format_element(part) for part in x) + ">"
    if isinstance(x, (Fraction, int)):
        return str(Fraction(x))
    raise DomainError(f"not an element representation: {x!r}")


def split_top_level(text: str, separator: str = ",") -> List[str]:
    """Split text at separators outside any <...>, (...) or {...} nesting"""
    parts, depth, start = [], 0, 0
    for position, char in enumerate(text):
        if char in "<({":
            depth += 1
        elif char in ">)}":
            depth -= 1
        elif char == separator and depth == 0:
            parts.append(text[start:position])
            start = position + 1
    parts.append(text[start:])
    return parts


def parse_element(text: str) -> Element:
    """
    Parse an element label.

    Args:
        text: A rational such as ``-1/2``, a pair ``<a,b>`` or ``k``

    Returns:
        Element: The represented element

    Raises:
        DomainError: If text is not a label
    """
    text = text.strip()
    if text.startswith("<") and text.endswith(">"):
        return tuple(parse_element(part) for part in split_top_level(text[1:-1]))
    if text == "k":
        return Fresh()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise DomainError(f"cannot read element '{text}': {e}")
