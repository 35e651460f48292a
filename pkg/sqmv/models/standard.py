"""
The standard models over rational points.

    IntervalModel        MV*_[-1,1]
    StandardFlatModel    F(MV*_[-1,1], 0)
    SquareModel          S* and its disk subalgebra D*
    SquareWajsbergModel  SW* and DW*, the closed-form Wajsberg views
    HalfSquareModel      the strong quasi-MV* algebra on [-1,1] × [0,1]
"""
import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from sqmv.models.base import Model, random_rational, simple_first
from sqmv.models.elements import Element, clamp
from sqmv.schemas.model import ClassFlags
from sqmv.syntax.terms import Connective, Signature

HALF = Fraction(1, 2)
ZERO_Q = Fraction(0)
ONE_Q = Fraction(1)


def _is_rational(x: Element) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def _in_unit_interval(x: Element) -> bool:
    return _is_rational(x) and -1 <= x <= 1


def _declared(sig: Signature, strong: bool = True, flat: bool = False, classic: bool = False) -> ClassFlags:
    return ClassFlags(signature=sig.value, is_quasi=True, is_strong=strong, is_flat=flat,
                      is_classic=classic, exhaustive=False)


class IntervalModel(Model):
    """The standard MV*-algebra on [-1, 1]"""

    def __init__(self):
        self.name = "interval"
        self.signature = Signature.MV
        self.declared = _declared(Signature.MV, classic=True)

    def contains(self, x: Element) -> bool:
        return _in_unit_interval(x)

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        if op is Connective.OPLUS:
            return clamp(Fraction(args[0] + args[1]))
        if op is Connective.MINUS:
            return -Fraction(args[0])
        if op is Connective.POS:
            return max(ZERO_Q, Fraction(args[0]))
        if op is Connective.NEGPART:
            return min(ZERO_Q, Fraction(args[0]))
        if op is Connective.ZERO:
            return ZERO_Q
        return ONE_Q

    def sample(self, rng: random.Random, max_den: int) -> Element:
        return random_rational(rng, max_den)

    def grid(self, d: int) -> Sequence[Element]:
        return simple_first(d)


class StandardFlatModel(IntervalModel):
    """0-flattening of the interval: every operation but minus collapses to 0"""

    def __init__(self):
        self.name = "flat-standard"
        self.signature = Signature.MV
        self.declared = _declared(Signature.MV, flat=True)

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        if op is Connective.MINUS:
            return -Fraction(args[0])
        return ZERO_Q


class PairModel(Model):
    """Common carrier handling for models on pairs of rationals"""
    # second coordinates visited by grids, simplest first
    grid_second: Tuple[Fraction, ...] = (ZERO_Q, HALF, -HALF)

    def pair_contains(self, x: Element) -> bool:
        return isinstance(x, tuple) and len(x) == 2 and all(_is_rational(part) for part in x)

    def sample(self, rng: random.Random, max_den: int) -> Element:
        while True:
            candidate = (random_rational(rng, max_den), self._second_sample(rng, max_den))
            if self.contains(candidate):
                return candidate

    def _second_sample(self, rng: random.Random, max_den: int) -> Fraction:
        return random_rational(rng, max_den)

    def grid(self, d: int) -> Sequence[Element]:
        points = [(a, b) for a in simple_first(d) for b in self.grid_second]
        return [point for point in points if self.contains(point)]


class SquareModel(PairModel):
    """
    S* on [-1,1]², or with disk=True the subalgebra D* on the unit disk.

    ⟨a,b⟩ ⊕ ⟨c,d⟩ = ⟨clamp(a+c), 0⟩, −⟨a,b⟩ = ⟨−a,−b⟩,
    ⟨a,b⟩^+ = ⟨max(0,a), 0⟩, ⟨a,b⟩^- = ⟨min(0,a), 0⟩, 0 = ⟨0,0⟩, 1 = ⟨1,0⟩.
    """

    def __init__(self, disk: bool = False):
        self.disk = disk
        self.name = "disk" if disk else "square"
        self.signature = Signature.MV
        self.declared = _declared(Signature.MV)

    def contains(self, x: Element) -> bool:
        if not self.pair_contains(x):
            return False
        a, b = x
        if self.disk:
            return a * a + b * b <= 1
        return -1 <= a <= 1 and -1 <= b <= 1

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        if op is Connective.OPLUS:
            return (clamp(args[0][0] + args[1][0]), ZERO_Q)
        if op is Connective.MINUS:
            return (-args[0][0], -args[0][1])
        if op is Connective.POS:
            return (max(ZERO_Q, args[0][0]), ZERO_Q)
        if op is Connective.NEGPART:
            return (min(ZERO_Q, args[0][0]), ZERO_Q)
        if op is Connective.ZERO:
            return (ZERO_Q, ZERO_Q)
        return (ONE_Q, ZERO_Q)


class SquareWajsbergModel(SquareModel):
    """
    SW* (DW* with disk=True): ⟨a,b⟩ → ⟨c,d⟩ = ⟨clamp(c−a), 0⟩, ¬⟨a,b⟩ = ⟨−a,−b⟩.
    """

    def __init__(self, disk: bool = False):
        super().__init__(disk)
        self.name = ("disk" if disk else "square") + "@w"
        self.signature = Signature.W
        self.declared = _declared(Signature.W)

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        if op is Connective.IMPL:
            return (clamp(args[1][0] - args[0][0]), ZERO_Q)
        if op is Connective.NEG:
            return (-args[0][0], -args[0][1])
        return super().compute(op, args)

    @staticmethod
    def designated_closed_form(x: Element) -> bool:
        """{⟨a, 0⟩ : 0 ≤ a ≤ 1}"""
        return x[1] == 0 and x[0] >= 0

    def designated_slice(self, d: int) -> List[Element]:
        return [(a, ZERO_Q) for a in simple_first(d) if a >= 0]


class HalfSquareModel(PairModel):
    """
    The strong quasi-MV* algebra on [-1,1] × [0,1] with
    ⟨a,b⟩ ⊕ ⟨c,d⟩ = ⟨clamp(a+c), 1/2⟩, −⟨a,b⟩ = ⟨−a, 1−b⟩,
    parts ⟨max(0,a), 1/2⟩ and ⟨min(0,a), 1/2⟩, 0 = ⟨0,1/2⟩, 1 = ⟨1,1/2⟩.
    """
    grid_second = (HALF, ZERO_Q, ONE_Q)

    def __init__(self):
        self.name = "ex32"
        self.signature = Signature.MV
        self.declared = _declared(Signature.MV)

    def contains(self, x: Element) -> bool:
        if not self.pair_contains(x):
            return False
        a, b = x
        return -1 <= a <= 1 and 0 <= b <= 1

    def _second_sample(self, rng: random.Random, max_den: int) -> Fraction:
        return Fraction(rng.randint(0, max_den), max_den)

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        if op is Connective.OPLUS:
            return (clamp(args[0][0] + args[1][0]), HALF)
        if op is Connective.MINUS:
            return (-args[0][0], 1 - args[0][1])
        if op is Connective.POS:
            return (max(ZERO_Q, args[0][0]), HALF)
        if op is Connective.NEGPART:
            return (min(ZERO_Q, args[0][0]), HALF)
        if op is Connective.ZERO:
            return (ZERO_Q, HALF)
        return (ONE_Q, HALF)

    def grid_elements(self) -> List[Element]:
        """The 15-point subalgebra {−1,−1/2,0,1/2,1} × {0,1/2,1}"""
        firsts = [Fraction(k, 2) for k in range(-2, 3)]
        return [(a, b) for a in firsts for b in (ZERO_Q, HALF, ONE_Q)]
