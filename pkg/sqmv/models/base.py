"""
Abstract algebra model.
A model fixes a signature, a carrier and the operations on it. Finite
models enumerate their carrier; infinite ones supply sampling and grids.
"""
import logging
import random
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from sqmv.models.elements import Element, format_element, parse_element
from sqmv.schemas.model import ClassFlags
from sqmv.syntax.terms import Connective, Signature
from sqmv.utils.errors import DomainError, SignatureError, StrategyError

# Set up logging
logger = logging.getLogger(__name__)


def simple_first(d: int) -> List[Fraction]:
    """{k/d : -d ≤ k ≤ d} ordered 0, 1/d, -1/d, 2/d, -2/d, ..."""
    values = [Fraction(0)]
    for k in range(1, d + 1):
        values.extend((Fraction(k, d), Fraction(-k, d)))
    return values


def random_rational(rng: random.Random, max_den: int) -> Fraction:
    return Fraction(rng.randint(-max_den, max_den), max_den)


class Model(ABC):
    """Base class for every algebra the workbench evaluates terms in"""
    name: str = "model"
    signature: Signature = Signature.MV
    # classification known by construction, for models that cannot be enumerated
    declared: Optional[ClassFlags] = None
    elements: Optional[Tuple[Element, ...]] = None

    @property
    def is_finite(self) -> bool:
        return self.elements is not None

    @property
    def size(self) -> Optional[int]:
        return None if self.elements is None else len(self.elements)

    @abstractmethod
    def contains(self, x: Element) -> bool:
        """Carrier membership"""

    @abstractmethod
    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        """Apply an operation without validating its arguments"""

    def operation(self, op: Connective, *args: Element) -> Element:
        """
        Apply an operation after checking signature and carrier membership.

        Raises:
            SignatureError: If op is not an operation of this model
            DomainError: If an argument is outside the carrier
        """
        if op not in self.signature.connectives:
            raise SignatureError(f"{self.name} has no operation '{op.symbol}'")
        if len(args) != op.arity:
            raise DomainError(f"'{op.symbol}' takes {op.arity} arguments, got {len(args)}")
        for arg in args:
            if not self.contains(arg):
                raise DomainError(f"{format_element(arg)} is not an element of {self.name}")
        return self.compute(op, args)

    def constant(self, op: Connective) -> Element:
        return self.compute(op, ())

    def sample(self, rng: random.Random, max_den: int) -> Element:
        if self.elements is None:
            raise StrategyError(f"{self.name} does not support random sampling")
        return rng.choice(self.elements)

    def grid(self, d: int) -> Sequence[Element]:
        """Grid points in simplest-first order"""
        if self.elements is None:
            raise StrategyError(f"{self.name} does not support grid enumeration")
        return self.elements

    def format(self, x: Element) -> str:
        return format_element(x)

    def parse_value(self, text: str) -> Element:
        """Read an element label and check membership"""
        if self.elements is not None:
            wanted = text.replace(" ", "")
            for element in self.elements:
                if format_element(element).replace(" ", "") == wanted:
                    return element
        value = parse_element(text)
        if not self.contains(value):
            raise DomainError(f"{text} is not an element of {self.name}")
        return value

    def iter_tuples(self, arity: int) -> Iterable[Tuple[Element, ...]]:
        from itertools import product
        return product(self.elements, repeat=arity)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.name}>"
