"""
Finite models stored as numpy operation tables.
Elements are addressed by index; binary operations are (n, n) integer
arrays, unary ones (n,) arrays and constants plain indices. Terms are
evaluated over every valuation at once by fancy-index broadcasting.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from sqmv.models.base import Model
from sqmv.models.elements import Element, format_element
from sqmv.models.standard import IntervalModel
from sqmv.syntax.terms import Connective, Signature, Term, Var, variables
from sqmv.utils.errors import ClosureError, ClassError, SignatureError, SpecError, UnboundVariable

# Set up logging
logger = logging.getLogger(__name__)


class FiniteModel(Model):
    """A model with an enumerated carrier and tabulated operations"""

    def __init__(self, name: str, signature: Signature, elements: Sequence[Element],
                 tables: Dict[Connective, np.ndarray]):
        self.name = name
        self.signature = signature
        self.elements = tuple(elements)
        self.index = {element: i for i, element in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise SpecError(f"{name}: duplicate elements in carrier")
        missing = [op.symbol for op in signature.connectives if op not in tables]
        if missing:
            raise SpecError(f"{name}: no table for {', '.join(missing)}")
        self.tables = tables
        self._flags = None

    def contains(self, x: Element) -> bool:
        try:
            return x in self.index
        except TypeError:
            return False

    def compute(self, op: Connective, args: Tuple[Element, ...]) -> Element:
        table = self.tables[op]
        if op.arity == 0:
            return self.elements[int(table)]
        return self.elements[int(table[tuple(self.index[arg] for arg in args)])]

    def evaluate_indices(self, t: Term, assignment: Dict[str, np.ndarray]) -> np.ndarray:
        """
        Evaluate t on index arrays.

        Args:
            t: Term over the model's signature
            assignment: Variable name to broadcastable index array

        Returns:
            np.ndarray: Indices of the value of t at every valuation
        """
        if isinstance(t, Var):
            if t.name not in assignment:
                raise UnboundVariable(f"variable '{t.name}' has no value")
            return assignment[t.name]
        op = t.connective
        if op not in self.tables or op not in self.signature.connectives:
            raise SignatureError(f"{self.name} has no operation '{op.symbol}'")
        table = self.tables[op]
        if op.arity == 0:
            return np.intp(table)
        if op.arity == 1:
            return table[self.evaluate_indices(t.children[0], assignment)]
        left = self.evaluate_indices(t.children[0], assignment)
        right = self.evaluate_indices(t.children[1], assignment)
        return table[left, right]


def _index_table(model: Model, op: Connective, elements: Tuple[Element, ...],
                 index: Dict[Element, int]) -> np.ndarray:
    n = len(elements)
    shape = (n,) * op.arity
    table = np.empty(shape, dtype=np.intp)
    for positions in product(range(n), repeat=op.arity):
        result = model.compute(op, tuple(elements[i] for i in positions))
        try:
            table[positions] = index[result]
        except (KeyError, TypeError):
            args = ", ".join(format_element(elements[i]) for i in positions)
            raise ClosureError(
                f"{model.name}: '{op.symbol}'({args}) = {format_element(result)} leaves the carrier"
            )
    return table


def tabulate(model: Model, name: Optional[str] = None,
             elements: Optional[Sequence[Element]] = None) -> FiniteModel:
    """
    Build operation tables for a model restricted to a finite carrier.

    Args:
        model: Any model whose operations can be computed on elements
        name: Name of the tabulated model, defaults to the source name
        elements: Carrier to restrict to, defaults to the model's own

    Returns:
        FiniteModel: The tabulated model

    Raises:
        ClosureError: If the carrier is not closed under the operations
    """
    carrier = tuple(elements if elements is not None else (model.elements or ()))
    if not carrier:
        raise SpecError(f"{model.name} has no finite carrier to tabulate")
    index = {element: i for i, element in enumerate(carrier)}
    tables = {op: _index_table(model, op, carrier, index) for op in model.signature.connectives}
    finite = FiniteModel(name or model.name, model.signature, carrier, tables)
    logger.info(f"Tabulated {finite.name} with {len(carrier)} elements")
    return finite


def chain(n: int) -> FiniteModel:
    """The (2n+1)-element subalgebra {k/n : -n ≤ k ≤ n} of the interval"""
    if n < 1:
        raise SpecError(f"chain length must be positive, got {n}")
    return tabulate(IntervalModel(), f"chain:{n}", [Fraction(k, n) for k in range(-n, n + 1)])


def export_tables(model: Model) -> str:
    """
    Render every operation table, one line per argument tuple.

    Returns:
        str: Lines of the form ``<op> <args...> = <result>``
    """
    if not model.is_finite:
        raise ClassError(f"{model.name} is infinite; tables cannot be exported")
    lines = [f"# {model.name} ({model.signature.value}, {len(model.elements)} elements)"]
    for op in model.signature.connectives:
        for args in product(model.elements, repeat=op.arity):
            labels = " ".join(format_element(arg) for arg in args)
            result = format_element(model.compute(op, args))
            lines.append(f"{op.value} {labels} = {result}" if labels else f"{op.value} = {result}")
    return "\n".join(lines) + "\n"


def table_equal(first: Model, second: Model) -> bool:
    """Exhaustive comparison of all operations of two finite models"""
    if not (first.is_finite and second.is_finite):
        raise ClassError("table comparison needs two finite models")
    if first.signature is not second.signature or set(first.elements) != set(second.elements):
        return False
    for op in first.signature.connectives:
        for args in product(first.elements, repeat=op.arity):
            if first.compute(op, args) != second.compute(op, args):
                return False
    return True


def valuation_grid(n: int, count: int) -> List[np.ndarray]:
    """Index arrays, one per variable, broadcasting to shape (n,)*count"""
    arrays = []
    for position in range(count):
        shape = [1] * count
        shape[position] = n
        arrays.append(np.arange(n, dtype=np.intp).reshape(shape))
    return arrays


def iter_chunks(model: FiniteModel, names: Sequence[str],
                chunk: int) -> Iterator[Tuple[int, Dict[str, np.ndarray], Tuple[int, ...]]]:
    """
    Split the valuation space into broadcast blocks of bounded size.

    Leading variables are fixed one assignment at a time until the rest
    fits in chunk cells; blocks come in row-major order of valuations.

    Yields:
        Offset of the block, its assignment and its shape
    """
    n = len(model.elements)
    fixed = 0
    while fixed < len(names) and n ** (len(names) - fixed) > chunk:
        fixed += 1
    free = len(names) - fixed
    free_arrays = valuation_grid(n, free)
    block = n ** free
    for offset, head in enumerate(product(range(n), repeat=fixed)):
        assignment = {name: np.intp(value) for name, value in zip(names[:fixed], head)}
        assignment.update(zip(names[fixed:], free_arrays))
        yield offset * block, assignment, (n,) * free


def first_mismatch(model: FiniteModel, lhs: Term, rhs: Term,
                   chunk: int = 2 ** 21) -> Tuple[int, Optional[Dict[str, Element]]]:
    """
    Search every valuation for one where lhs and rhs differ.

    Returns:
        Tuple of the number of valuations examined and the first failing
        valuation in row-major order over sorted variable names, or None
    """
    names = tuple(sorted(set(variables(lhs)) | set(variables(rhs))))
    n = len(model.elements)
    examined = 0
    for offset, assignment, shape in iter_chunks(model, names, chunk):
        left = np.broadcast_to(model.evaluate_indices(lhs, assignment), shape)
        right = np.broadcast_to(model.evaluate_indices(rhs, assignment), shape)
        differ = np.flatnonzero((left != right).ravel())
        if differ.size:
            position = offset + int(differ[0])
            examined += int(differ[0]) + 1
            return examined, decode_valuation(model, names, position)
        examined += int(np.prod(shape, dtype=np.int64)) if shape else 1
    return examined, None


def decode_valuation(model: FiniteModel, names: Sequence[str], position: int) -> Dict[str, Element]:
    n = len(model.elements)
    if not names:
        return {}
    digits = np.unravel_index(position, (n,) * len(names))
    return {name: model.elements[int(digit)] for name, digit in zip(names, digits)}
