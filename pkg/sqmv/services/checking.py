"""
Equation checks, entailment checks and countermodel search.
Valuations are visited in a fixed order for each strategy, and the
first failing one is reported, so results are reproducible.
"""
import logging
import random
from itertools import islice, product
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Union

import numpy as np

from sqmv.config import get_settings
from sqmv.models.base import Model
from sqmv.models.catalog import resolve_model
from sqmv.models.elements import Element, format_element
from sqmv.models.finite import FiniteModel, decode_valuation, first_mismatch, iter_chunks, tabulate
from sqmv.schemas.report import CheckReport, Verdict
from sqmv.services.designation import as_wajsberg, designated_set
from sqmv.services.evaluation import compile_term, evaluate
from sqmv.services.strategy import Strategy, StrategyKind, default_strategy
from sqmv.syntax.terms import (
    Connective, Impl, OPlus, Signature, Term, check_signature, count_connective, variables,
)
from sqmv.utils.errors import InternalInconsistency, StrategyError

# Set up logging
logger = logging.getLogger(__name__)

Valuation = Dict[str, Element]


def default_grid_denominator(terms: Sequence[Term], sig: Signature) -> int:
    """Count of the binary connective in the terms joined by it, plus one"""
    binary = Connective.OPLUS if sig is Signature.MV else Connective.IMPL
    joined = terms[0]
    for term in terms[1:]:
        joined = OPlus(joined, term) if sig is Signature.MV else Impl(joined, term)
    return count_connective(joined, binary) + 1


def _labels(valuation: Mapping[str, Element]) -> Dict[str, str]:
    return {name: format_element(value) for name, value in sorted(valuation.items())}


def iter_valuations(model: Model, names: Sequence[str], strategy: Strategy,
                    terms: Sequence[Term]) -> Iterator[Valuation]:
    """Valuations of a GRID or RANDOM strategy, in visiting order"""
    if strategy.kind is StrategyKind.GRID:
        d = strategy.denominator or default_grid_denominator(terms, model.signature)
        points = list(model.grid(d))
        limit = get_settings().grid_limit
        if len(points) ** len(names) > limit:
            logger.warning(f"Grid on {model.name} has {len(points)}^{len(names)} valuations; "
                           f"truncated to {limit}")
        for values in islice(product(points, repeat=len(names)), limit):
            yield dict(zip(names, values))
        return
    rng = random.Random(strategy.seed)
    for _ in range(strategy.count):
        yield {name: model.sample(rng, strategy.max_den) for name in names}


def _resolve(model: Union[str, Model]) -> Model:
    return resolve_model(model) if isinstance(model, str) else model


def _strategy_for(model: Model, strategy: Optional[Strategy]) -> Strategy:
    if strategy is None:
        return default_strategy(model)
    if strategy.kind is StrategyKind.EXHAUSTIVE and not model.is_finite:
        raise StrategyError(f"{model.name} is infinite; exhaustive checking is not possible")
    return strategy


def check_equation(lhs: Term, rhs: Term, model: Union[str, Model],
                   strategy: Optional[Strategy] = None) -> CheckReport:
    """
    Check an equation in a model.

    Args:
        lhs: Left-hand side
        rhs: Right-hand side
        model: Model or catalog name
        strategy: Valuation strategy, the model default when None

    Returns:
        CheckReport: VALID_EXHAUSTIVE, NO_COUNTEREXAMPLE_FOUND or COUNTERMODEL
            with the lowest-index failing valuation

    Raises:
        StrategyError: EXHAUSTIVE on an infinite model
        SignatureError: If a side is not a term of the model's signature
    """
    model = _resolve(model)
    strategy = _strategy_for(model, strategy)
    check_signature(lhs, model.signature)
    check_signature(rhs, model.signature)
    seed = strategy.seed if strategy.kind is StrategyKind.RANDOM else None
    logger.info(f"Checking {lhs} = {rhs} in {model.name} with {strategy.describe()}")

    if strategy.kind is StrategyKind.EXHAUSTIVE:
        finite = model if isinstance(model, FiniteModel) else tabulate(model)
        samples, witness = first_mismatch(finite, lhs, rhs, get_settings().table_chunk)
        if witness is None:
            return CheckReport(verdict=Verdict.VALID_EXHAUSTIVE, samples_tried=samples,
                               strategy=strategy.describe(), model=model.name)
        return _equation_countermodel(lhs, rhs, model, witness, samples, strategy, seed)

    names = tuple(sorted(set(variables(lhs)) | set(variables(rhs))))
    left, right = compile_term(lhs, model), compile_term(rhs, model)
    samples = 0
    for valuation in iter_valuations(model, names, strategy, (lhs, rhs)):
        samples += 1
        if left(valuation) != right(valuation):
            return _equation_countermodel(lhs, rhs, model, valuation, samples, strategy, seed)
    return CheckReport(verdict=Verdict.NO_COUNTEREXAMPLE_FOUND, samples_tried=samples, seed=seed,
                       strategy=strategy.describe(), model=model.name)


def _equation_countermodel(lhs: Term, rhs: Term, model: Model, witness: Valuation, samples: int,
                           strategy: Strategy, seed: Optional[int]) -> CheckReport:
    left, right = evaluate(lhs, model, witness), evaluate(rhs, model, witness)
    if left == right:
        logger.error(f"Countermodel for {lhs} = {rhs} in {model.name} does not re-check")
        raise InternalInconsistency(f"countermodel {_labels(witness)} does not separate the sides")
    return CheckReport(verdict=Verdict.COUNTERMODEL, samples_tried=samples, seed=seed,
                       witness=_labels(witness), strategy=strategy.describe(), model=model.name,
                       lhs_value=format_element(left), rhs_value=format_element(right))


def check_entailment(premises: Sequence[Term], conclusion: Term, model: Union[str, Model],
                     strategy: Optional[Strategy] = None) -> CheckReport:
    """
    Check that every valuation designating all premises designates the conclusion.

    Args:
        premises: W-STAR formulas
        conclusion: W-STAR formula
        model: Model or catalog name; MV-STAR models are read through their Wajsberg view
        strategy: Valuation strategy, the model default when None

    Returns:
        CheckReport: Verdict plus the number of valuations that designated
            every premise
    """
    model = as_wajsberg(_resolve(model))
    strategy = _strategy_for(model, strategy)
    if strategy.kind is StrategyKind.EXHAUSTIVE and not isinstance(model, FiniteModel):
        model = tabulate(model)
    for formula in (*premises, conclusion):
        check_signature(formula, Signature.W)
    seed = strategy.seed if strategy.kind is StrategyKind.RANDOM else None
    designated = designated_set(model)
    names = tuple(sorted(set().union(*(variables(t) for t in (*premises, conclusion)))))

    if strategy.kind is StrategyKind.EXHAUSTIVE:
        return _exhaustive_entailment(premises, conclusion, model, designated.mask, names, strategy)

    compiled = [compile_term(t, model) for t in premises]
    target = compile_term(conclusion, model)
    samples = hits = 0
    for valuation in iter_valuations(model, names, strategy, (*premises, conclusion)):
        samples += 1
        if all(premise(valuation) in designated for premise in compiled):
            hits += 1
            if target(valuation) not in designated:
                return _entailment_countermodel(premises, conclusion, model, valuation, samples,
                                                hits, strategy, seed)
    return CheckReport(verdict=Verdict.NO_COUNTEREXAMPLE_FOUND, samples_tried=samples, seed=seed,
                       strategy=strategy.describe(), model=model.name, premise_hits=hits)


def _exhaustive_entailment(premises: Sequence[Term], conclusion: Term, model: FiniteModel,
                           mask: np.ndarray, names: Sequence[str], strategy: Strategy) -> CheckReport:
    samples = hits = 0
    for offset, assignment, shape in iter_chunks(model, names, get_settings().table_chunk):
        holds = np.ones(shape, dtype=bool)
        for premise in premises:
            holds &= np.broadcast_to(mask[model.evaluate_indices(premise, assignment)], shape)
        target = np.broadcast_to(mask[model.evaluate_indices(conclusion, assignment)], shape)
        failing = np.flatnonzero((holds & ~target).ravel())
        if failing.size:
            first = int(failing[0])
            hits += int(holds.ravel()[: first + 1].sum())
            samples += first + 1
            witness = decode_valuation(model, names, offset + first)
            return _entailment_countermodel(premises, conclusion, model, witness, samples, hits,
                                            strategy, None)
        hits += int(holds.sum())
        samples += int(holds.size)
    return CheckReport(verdict=Verdict.VALID_EXHAUSTIVE, samples_tried=samples,
                       strategy=strategy.describe(), model=model.name, premise_hits=hits)


def _entailment_countermodel(premises: Sequence[Term], conclusion: Term, model: Model,
                             witness: Valuation, samples: int, hits: int, strategy: Strategy,
                             seed: Optional[int]) -> CheckReport:
    designated = designated_set(model)
    value = evaluate(conclusion, model, witness)
    if value in designated or not all(evaluate(p, model, witness) in designated for p in premises):
        logger.error(f"Entailment countermodel in {model.name} does not re-check")
        raise InternalInconsistency(f"countermodel {_labels(witness)} does not refute the entailment")
    return CheckReport(verdict=Verdict.COUNTERMODEL, samples_tried=samples, seed=seed,
                       witness=_labels(witness), strategy=strategy.describe(), model=model.name,
                       lhs_value=format_element(value), premise_hits=hits)


def search_countermodel(lhs: Term, rhs: Term, family: Iterable[Union[str, Model]],
                        budget: Optional[Strategy] = None) -> CheckReport:
    """
    Try each model of a family in order and return the first countermodel.

    Finite models are checked exhaustively unless a budget strategy is
    given; infinite models use the budget or the default random sampling.
    """
    total = 0
    names: List[str] = []
    for member in family:
        model = _resolve(member)
        names.append(model.name)
        strategy = budget
        if strategy is None or (strategy.kind is StrategyKind.EXHAUSTIVE and not model.is_finite):
            strategy = default_strategy(model, budget.seed if budget else None,
                                        budget.max_den if budget else None)
        report = check_equation(lhs, rhs, model, strategy)
        total += report.samples_tried
        if report.is_countermodel:
            return report
    return CheckReport(verdict=Verdict.NO_COUNTEREXAMPLE_FOUND, samples_tried=total,
                       seed=budget.seed if budget and budget.kind is StrategyKind.RANDOM else None,
                       strategy=budget.describe() if budget else "auto", model=",".join(names))


def zero_second_coordinates(valuation: Mapping[str, Element]) -> Valuation:
    """Project pair values ⟨a, b⟩ to ⟨a, 0⟩"""
    return {name: (value[0], type(value[1])(0)) if isinstance(value, tuple) else value
            for name, value in valuation.items()}


def transfer_square_witness(lhs: Term, rhs: Term, witness: Mapping[str, Element]) -> Optional[Valuation]:
    """
    A disk witness obtained from a square witness by zeroing second
    coordinates, available when both sides contain ⊕.
    """
    if count_connective(lhs, Connective.OPLUS) == 0 or count_connective(rhs, Connective.OPLUS) == 0:
        return None
    return zero_second_coordinates(witness)
