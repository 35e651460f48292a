"""
Order, the congruences μ and τ, quotients and the direct embedding
Q → Q/μ × Q/τ, all computed on finite tables.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Tuple

import numpy as np

from sqmv.models.base import Model
from sqmv.models.classification import as_finite, classify
from sqmv.models.constructions import MVView, ProductModel
from sqmv.models.elements import Block, format_element
from sqmv.models.finite import FiniteModel, tabulate
from sqmv.schemas.model import CongruenceSchema, EmbeddingReport
from sqmv.syntax.abbreviations import join
from sqmv.syntax.terms import ZERO, Connective, OPlus, Signature, Var
from sqmv.utils.errors import ClassError, NotCompatible

# Set up logging
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Congruence:
    """A partition of a finite carrier given by blocks of element indices"""
    model_name: str
    name: str
    blocks: Tuple[Tuple[int, ...], ...]

    def classes(self, size: int) -> np.ndarray:
        labels = np.empty(size, dtype=np.intp)
        for number, block in enumerate(self.blocks):
            labels[list(block)] = number
        return labels

    def is_identity(self) -> bool:
        return all(len(block) == 1 for block in self.blocks)

    def schema(self, model: FiniteModel) -> CongruenceSchema:
        return CongruenceSchema(
            model=model.name, name=self.name,
            blocks=[[format_element(model.elements[i]) for i in block] for block in self.blocks],
        )


def mv_tables(model: Model) -> FiniteModel:
    """The model itself in MV-STAR, or the tabulated g-view of a W-STAR model"""
    finite = as_finite(model)
    if finite.signature is Signature.MV:
        return finite
    return tabulate(MVView(finite), f"{finite.name}@mv")


def order_matrix(model: Model) -> np.ndarray:
    """leq[i, j] iff x_i ∨ x_j = x_j ⊕ 0"""
    finite = mv_tables(model)
    n = len(finite.elements)
    x = np.arange(n, dtype=np.intp).reshape(n, 1)
    y = np.arange(n, dtype=np.intp).reshape(1, n)
    joined = finite.evaluate_indices(join(Var("x"), Var("y"), Signature.MV), {"x": x, "y": y})
    shifted = finite.evaluate_indices(OPlus(Var("y"), ZERO), {"y": y})
    return np.broadcast_to(joined, (n, n)) == np.broadcast_to(shifted, (n, n))


def regular_mask(model: Model) -> np.ndarray:
    finite = mv_tables(model)
    zero = int(finite.tables[Connective.ZERO])
    n = len(finite.elements)
    return finite.tables[Connective.OPLUS][:, zero] == np.arange(n)


def congruence_from_relation(model: Model, name: str, related: Callable[[int, int], bool]) -> Congruence:
    """
    Build the partition of a relation and check it is a congruence.

    Raises:
        NotCompatible: If the relation is not an equivalence or not
            compatible with every operation
    """
    finite = as_finite(model)
    n = len(finite.elements)
    blocks: List[List[int]] = []
    for i in range(n):
        for block in blocks:
            if related(block[0], i):
                block.append(i)
                break
        else:
            blocks.append([i])
    for block in blocks:
        for i, j in product(block, repeat=2):
            if not related(i, j):
                raise NotCompatible(f"{name} on {finite.name} is not an equivalence relation")
    congruence = Congruence(finite.name, name, tuple(tuple(block) for block in blocks))
    check_compatible(finite, congruence)
    return congruence


def check_compatible(model: FiniteModel, congruence: Congruence) -> None:
    labels = congruence.classes(len(model.elements))
    for op in model.signature.connectives:
        if op.arity == 0:
            continue
        table = model.tables[op]
        seen: Dict[Tuple[int, ...], int] = {}
        for args in product(range(len(model.elements)), repeat=op.arity):
            key = tuple(int(labels[a]) for a in args)
            value = int(labels[table[args]])
            if seen.setdefault(key, value) != value:
                shown = ", ".join(format_element(model.elements[a]) for a in args)
                raise NotCompatible(
                    f"{congruence.name} is not compatible with '{op.symbol}' at ({shown})"
                )


def mu(model: Model) -> Congruence:
    """⟨x, y⟩ ∈ μ iff x ≤ y and y ≤ x"""
    leq = order_matrix(model)
    return congruence_from_relation(model, "mu", lambda i, j: bool(leq[i, j] and leq[j, i]))


def tau(model: Model) -> Congruence:
    """⟨x, y⟩ ∈ τ iff x = y or both are regular"""
    regular = regular_mask(model)
    return congruence_from_relation(model, "tau", lambda i, j: i == j or bool(regular[i] and regular[j]))


def meet_is_identity(first: Congruence, second: Congruence, size: int) -> bool:
    a, b = first.classes(size), second.classes(size)
    pairs = set(zip(a.tolist(), b.tolist()))
    return len(pairs) == size


def quotient(model: Model, congruence: Congruence) -> FiniteModel:
    """The quotient algebra with blocks as elements"""
    finite = as_finite(model)
    labels = congruence.classes(len(finite.elements))
    representatives = np.array([block[0] for block in congruence.blocks], dtype=np.intp)
    elements = [Block(tuple(finite.elements[i] for i in block)) for block in congruence.blocks]
    tables = {}
    for op in finite.signature.connectives:
        table = finite.tables[op]
        if op.arity == 0:
            tables[op] = np.array(labels[int(table)], dtype=np.intp)
        elif op.arity == 1:
            tables[op] = labels[table[representatives]]
        else:
            tables[op] = labels[table[np.ix_(representatives, representatives)]]
    return FiniteModel(f"{finite.name}/{congruence.name}", finite.signature, elements, tables)


def embed_into_product(model: Model) -> EmbeddingReport:
    """
    Map x ↦ (x/μ, x/τ) into Q/μ × Q/τ and check what it preserves.

    Raises:
        ClassError: If the model is not a strong quasi-MV* algebra
    """
    finite = mv_tables(model)
    flags = classify(finite)
    if not flags.is_strong:
        raise ClassError(f"{finite.name} is not a strong quasi-MV* algebra")

    congruence_mu, congruence_tau = mu(finite), tau(finite)
    classic, flat = quotient(finite, congruence_mu), quotient(finite, congruence_tau)
    target = tabulate(ProductModel(classic, flat), f"{classic.name} x {flat.name}")

    n = len(finite.elements)
    mu_labels, tau_labels = congruence_mu.classes(n), congruence_tau.classes(n)
    image = [(classic.elements[int(mu_labels[i])], flat.elements[int(tau_labels[i])]) for i in range(n)]
    to_index = {element: i for i, element in enumerate(finite.elements)}

    failure = None
    for op in finite.signature.connectives:
        for args in product(finite.elements, repeat=op.arity):
            mapped = finite.compute(op, args)
            expected = target.compute(op, tuple(image[to_index[arg]] for arg in args))
            if image[to_index[mapped]] != expected:
                failure = f"'{op.symbol}' not preserved at ({', '.join(format_element(a) for a in args)})"
                break
        if failure:
            break

    report = EmbeddingReport(
        model=finite.name,
        target=target.name,
        mapping={format_element(x): format_element(image[i]) for i, x in enumerate(finite.elements)},
        is_homomorphism=failure is None,
        is_injective=len(set(image)) == n,
        is_surjective=set(image) == set(target.elements),
        failure=failure,
    )
    logger.info(f"Embedding of {finite.name}: homomorphism={report.is_homomorphism} "
                f"injective={report.is_injective} surjective={report.is_surjective}")
    return report
