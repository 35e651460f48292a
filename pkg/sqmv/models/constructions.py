"""
Derived models: flattenings, direct products and the term-equivalence views.
Each construction is a thin view over its components; finite views can be
tabulated with ``sqmv.models.finite.tabulate``.
"""
import logging
import random
from itertools import product
from typing import Optional, Sequence, Tuple

from sqmv.models.base import Model
from sqmv.models.elements import Element, Fresh, format_element
from sqmv.schemas.model import ClassFlags
from sqmv.syntax.terms import Connective, Signature
from sqmv.utils.errors import SignatureError, SpecError

# Set up logging
logger = logging.getLogger(__name__)


class FlatteningModel(Model):
    """
    F(A, k): every operation except minus returns k; minus is A's minus
    on A and fixes k. k is a regular fixpoint of minus in A, or a fresh
    element when A has none.
    """

    def __init__(self, base: Model, k: Element):
        if base.signature is not Signature.MV:
            raise SpecError("flattening is defined on MV-STAR models")
        self.base = base
        self.k = k
        if isinstance(k, Fresh):
            if base.is_finite and any(_is_regular_fixpoint(base, x) for x in base.elements):
                raise SpecError(f"{base.name} has a regular fixpoint of minus; a fresh k is not allowed")
            if not base.is_finite:
                raise SpecError(f"{base.name} is infinite; choose a regular fixpoint of minus as k")
        elif not base.contains(k):
            raise SpecError(f"{format_element(k)} is not an element of {base.name}")
        elif not _is_regular_fixpoint(base, k):
            raise SpecError(f"{format_element(k)} is not a regular fixpoint of minus in {base.name}")
        self.name = f"flatten:{base.name}:{format_element(k)}"
        self.signature = Signature.MV
        if base.is_finite:
            fresh = (k,) if isinstance(k, Fresh) else ()
            self.elements = tuple(base.elements) + fresh
        quasi = True if base.declared is None else base.declared.is_quasi
        self.declared = ClassFlags(signature="mv", is_quasi=quasi, is_strong=quasi, is_flat=quasi,
                                   is_classic=False, exhaustive=False)

    def contains(self, x: Element) -> bool:
        return x == self.k or self.base.contains(x)

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        if op is Connective.MINUS:
            if args[0] == self.k:
                return self.k
            return self.base.compute(op, args)
        return self.k

    def sample(self, rng: random.Random, max_den: int) -> Element:
        return self.base.sample(rng, max_den)

    def grid(self, d: int) -> Sequence[Element]:
        return self.base.grid(d)


def _is_regular_fixpoint(model: Model, x: Element) -> bool:
    zero = model.constant(Connective.ZERO)
    return model.compute(Connective.MINUS, (x,)) == x and model.compute(Connective.OPLUS, (x, zero)) == x


class ProductModel(Model):
    """Direct product with componentwise operations"""

    def __init__(self, first: Model, second: Model, name: Optional[str] = None):
        if first.signature is not second.signature:
            raise SignatureError("product components must share a signature")
        self.first = first
        self.second = second
        self.name = name or f"product:{_wrapped(first.name)},{_wrapped(second.name)}"
        self.signature = first.signature
        if first.is_finite and second.is_finite:
            self.elements = tuple(product(first.elements, second.elements))
        if first.declared is not None and second.declared is not None:
            a, b = first.declared, second.declared
            self.declared = ClassFlags(
                signature=self.signature.value, is_quasi=a.is_quasi and b.is_quasi,
                is_strong=a.is_strong and b.is_strong, is_flat=a.is_flat and b.is_flat,
                is_classic=a.is_classic and b.is_classic, exhaustive=False,
            )

    def contains(self, x: Element) -> bool:
        return (isinstance(x, tuple) and len(x) == 2
                and self.first.contains(x[0]) and self.second.contains(x[1]))

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        return (self.first.compute(op, tuple(arg[0] for arg in args)),
                self.second.compute(op, tuple(arg[1] for arg in args)))

    def sample(self, rng: random.Random, max_den: int) -> Element:
        return (self.first.sample(rng, max_den), self.second.sample(rng, max_den))

    def grid(self, d: int) -> Sequence[Element]:
        return [(x, y) for x in self.first.grid(d) for y in self.second.grid(d)]


def _wrapped(name: str) -> str:
    return f"({name})" if "," in name else name


class _View(Model):
    def __init__(self, base: Model, signature: Signature, name: str):
        self.base = base
        self.signature = signature
        self.name = name
        self.elements = base.elements
        if base.declared is not None:
            self.declared = base.declared.model_copy(update={"signature": signature.value})

    def contains(self, x: Element) -> bool:
        return self.base.contains(x)

    def sample(self, rng: random.Random, max_den: int) -> Element:
        return self.base.sample(rng, max_den)

    def grid(self, d: int) -> Sequence[Element]:
        return self.base.grid(d)


class WajsbergView(_View):
    """f(A): x → y = −x ⊕ y, ¬x = −x, parts and 1 unchanged"""

    def __init__(self, base: Model, name: Optional[str] = None):
        if base.signature is not Signature.MV:
            raise SignatureError(f"{base.name} is not an MV-STAR model")
        super().__init__(base, Signature.W, name or f"{base.name}@w")

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        base = self.base
        if op is Connective.IMPL:
            return base.compute(Connective.OPLUS, (base.compute(Connective.MINUS, (args[0],)), args[1]))
        if op is Connective.NEG:
            return base.compute(Connective.MINUS, args)
        return base.compute(op, args)


class MVView(_View):
    """g(W): x ⊕ y = ¬x → y, −x = ¬x, 0 = 1 → 1, parts and 1 unchanged"""

    def __init__(self, base: Model, name: Optional[str] = None):
        if base.signature is not Signature.W:
            raise SignatureError(f"{base.name} is not a W-STAR model")
        default = base.name[:-2] if base.name.endswith("@w") else f"{base.name}@mv"
        super().__init__(base, Signature.MV, name or default)

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        base = self.base
        if op is Connective.OPLUS:
            return base.compute(Connective.IMPL, (base.compute(Connective.NEG, (args[0],)), args[1]))
        if op is Connective.MINUS:
            return base.compute(Connective.NEG, args)
        if op is Connective.ZERO:
            one = base.compute(Connective.ONE, ())
            return base.compute(Connective.IMPL, (one, one))
        return base.compute(op, args)
