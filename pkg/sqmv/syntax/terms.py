"""
Term trees for the two signatures.
Terms are immutable, hashable dataclasses compared structurally. A term
does not carry its signature; legality is checked against a signature on
demand with ``check_signature``.
"""
from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Iterator, Optional, Tuple, Union

from sqmv.utils.errors import PathMismatch, SignatureError


class Connective(str, Enum):
    """Operation symbols shared by terms and models"""
    OPLUS = "oplus"
    MINUS = "minus"
    IMPL = "impl"
    NEG = "neg"
    POS = "pos"
    NEGPART = "negpart"
    ZERO = "zero"
    ONE = "one"

    @property
    def arity(self) -> int:
        if self in (Connective.OPLUS, Connective.IMPL):
            return 2
        if self in (Connective.ZERO, Connective.ONE):
            return 0
        return 1

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]


_SYMBOLS = {
    Connective.OPLUS: "(+)",
    Connective.MINUS: "-",
    Connective.IMPL: "->",
    Connective.NEG: "~",
    Connective.POS: "^+",
    Connective.NEGPART: "^-",
    Connective.ZERO: "0",
    Connective.ONE: "1",
}


class Signature(str, Enum):
    """MV-STAR ⟨⊕, −, ^+, ^-, 0, 1⟩ and W-STAR ⟨→, ¬, ^+, ^-, 1⟩"""
    MV = "mv"
    W = "w"

    @property
    def connectives(self) -> Tuple[Connective, ...]:
        if self is Signature.MV:
            return (Connective.OPLUS, Connective.MINUS, Connective.POS,
                    Connective.NEGPART, Connective.ZERO, Connective.ONE)
        return (Connective.IMPL, Connective.NEG, Connective.POS,
                Connective.NEGPART, Connective.ONE)

    @property
    def other(self) -> "Signature":
        return Signature.W if self is Signature.MV else Signature.MV

    @classmethod
    def parse(cls, value: Union[str, "Signature"]) -> "Signature":
        if isinstance(value, Signature):
            return value
        text = str(value).strip().lower()
        if text in ("mv", "mv*", "mv-star"):
            return cls.MV
        if text in ("w", "w*", "w-star", "wajsberg"):
            return cls.W
        raise SignatureError(f"unknown signature '{value}'")


class Term:
    """Base class of all term nodes"""
    connective: ClassVar[Optional[Connective]] = None

    @property
    def children(self) -> Tuple["Term", ...]:
        return ()

    def rebuild(self, children: Tuple["Term", ...]) -> "Term":
        return self

    def __str__(self) -> str:
        from sqmv.syntax.printer import print_term
        return print_term(self)


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    def __repr__(self) -> str:
        return f"Var({self.name!r})"


@dataclass(frozen=True, slots=True)
class Zero(Term):
    connective: ClassVar[Connective] = Connective.ZERO

    def __repr__(self) -> str:
        return "Zero()"


@dataclass(frozen=True, slots=True)
class One(Term):
    connective: ClassVar[Connective] = Connective.ONE

    def __repr__(self) -> str:
        return "One()"


@dataclass(frozen=True, slots=True)
class Unary(Term):
    arg: Term

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.arg,)

    def rebuild(self, children: Tuple[Term, ...]) -> Term:
        return type(self)(children[0])


@dataclass(frozen=True, slots=True)
class Binary(Term):
    left: Term
    right: Term

    @property
    def children(self) -> Tuple[Term, ...]:
        return (self.left, self.right)

    def rebuild(self, children: Tuple[Term, ...]) -> Term:
        return type(self)(children[0], children[1])


@dataclass(frozen=True, slots=True)
class UMinus(Unary):
    connective: ClassVar[Connective] = Connective.MINUS


@dataclass(frozen=True, slots=True)
class Neg(Unary):
    connective: ClassVar[Connective] = Connective.NEG


@dataclass(frozen=True, slots=True)
class PosPart(Unary):
    connective: ClassVar[Connective] = Connective.POS


@dataclass(frozen=True, slots=True)
class NegPart(Unary):
    connective: ClassVar[Connective] = Connective.NEGPART


@dataclass(frozen=True, slots=True)
class OPlus(Binary):
    connective: ClassVar[Connective] = Connective.OPLUS


@dataclass(frozen=True, slots=True)
class Impl(Binary):
    connective: ClassVar[Connective] = Connective.IMPL


ZERO = Zero()
ONE = One()

Path = Tuple[int, ...]


def iter_subterms(t: Term) -> Iterator[Term]:
    """Pre-order traversal of all subterms"""
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def variables(t: Term) -> Tuple[str, ...]:
    """Sorted names of the variables occurring in t"""
    return tuple(sorted({node.name for node in iter_subterms(t) if isinstance(node, Var)}))


def size(t: Term) -> int:
    return sum(1 for _ in iter_subterms(t))


def depth(t: Term) -> int:
    if not t.children:
        return 0
    return 1 + max(depth(child) for child in t.children)


def count_connective(t: Term, c: Connective) -> int:
    """Number of occurrences of connective c in t"""
    return sum(1 for node in iter_subterms(t) if node.connective is c)


def is_regular(t: Term) -> bool:
    """
    A term is regular unless it is a variable under zero or more negations.

    Args:
        t: Term in either signature

    Returns:
        bool: False exactly for ¬ᵏx / −ᵏx with x a variable
    """
    node = t
    while isinstance(node, (Neg, UMinus)):
        node = node.arg
    return not isinstance(node, Var)


def check_signature(t: Term, sig: Signature) -> Term:
    """Raise SignatureError if t uses a symbol outside sig"""
    allowed = set(sig.connectives)
    for node in iter_subterms(t):
        if node.connective is not None and node.connective not in allowed:
            raise SignatureError(
                f"connective '{node.connective.symbol}' is not part of the {sig.value} signature"
            )
    return t


def signature_of(t: Term) -> Optional[Signature]:
    """The unique signature t is legal in, or None when it is legal in both"""
    seen = {node.connective for node in iter_subterms(t) if node.connective is not None}
    mv_only = {Connective.OPLUS, Connective.MINUS, Connective.ZERO}
    w_only = {Connective.IMPL, Connective.NEG}
    if seen & mv_only and seen & w_only:
        raise SignatureError("term mixes MV-STAR and W-STAR connectives")
    if seen & mv_only:
        return Signature.MV
    if seen & w_only:
        return Signature.W
    return None


def subterm_at(t: Term, path: Path) -> Term:
    node = t
    for step in path:
        children = node.children
        if step >= len(children):
            raise PathMismatch(f"position {path} does not exist in {t}")
        node = children[step]
    return node


def replace_at(t: Term, path: Path, replacement: Term) -> Term:
    """Return t with the subterm at path replaced"""
    if not path:
        return replacement
    children = list(t.children)
    if path[0] >= len(children):
        raise PathMismatch(f"position {path} does not exist in {t}")
    children[path[0]] = replace_at(children[path[0]], path[1:], replacement)
    return t.rebuild(tuple(children))


def positions(t: Term, target: Term, prefix: Path = ()) -> Tuple[Path, ...]:
    """All positions at which target occurs in t, outermost first"""
    found = [prefix] if t == target else []
    for index, child in enumerate(t.children):
        found.extend(positions(child, target, prefix + (index,)))
    return tuple(found)


def neg_power(t: Term, k: int) -> Term:
    for _ in range(k):
        t = Neg(t)
    return t


def strip_negations(t: Term) -> Tuple[int, Term]:
    """Split ¬ᵏZ into (k, Z) with Z not a negation"""
    k = 0
    while isinstance(t, Neg):
        t = t.arg
        k += 1
    return k, t


def describe(t: Term) -> str:
    """Prefix S-expression rendering of the tree structure"""
    if isinstance(t, Var):
        return t.name
    if not t.children:
        return t.connective.symbol
    inner = " ".join(describe(child) for child in t.children)
    return f"({t.connective.symbol} {inner})"
