from fractions import Fraction
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sqmv.models.catalog import resolve_model
from sqmv.models.constructions import WajsbergView
from sqmv.models.finite import FiniteModel, table_equal
from sqmv.models.standard import SquareModel, SquareWajsbergModel
from sqmv.services.evaluation import evaluate
from sqmv.services.transform import (
    infer_and_translate, mv_to_w_model, mv_to_w_term, translate, w_to_mv_model, w_to_mv_term,
)
from sqmv.syntax.generate import random_term
from sqmv.syntax.parser import parse
from sqmv.syntax.terms import ONE, Connective, Impl, Neg, OPlus, PosPart, Signature, UMinus, Var
from sqmv.utils.errors import ClassError, SignatureError, TermSyntaxError
from tests.strategies import square_elements, terms, valuations

p, q = Var("p"), Var("q")


def test_sum_becomes_implication():
    assert mv_to_w_term(OPlus(p, q)) == Impl(Neg(p), q)
    assert mv_to_w_term(UMinus(p)) == Neg(p)
    assert translate(parse("0", "mv"), Signature.W) == Impl(ONE, ONE)


def test_implication_becomes_sum():
    assert w_to_mv_term(Impl(p, q)) == OPlus(UMinus(p), q)
    assert w_to_mv_term(Neg(p)) == UMinus(p)
    assert w_to_mv_term(ONE) == ONE
    assert translate(parse("(p -> q)^+", "w"), "mv") == parse("(-p (+) q)^+", "mv")


def test_translation_rejects_foreign_connectives():
    with pytest.raises(SignatureError):
        mv_to_w_term(Impl(p, q))
    with pytest.raises(SignatureError):
        w_to_mv_term(OPlus(p, q))


@settings(max_examples=200)
@given(terms(Signature.MV, max_leaves=8), valuations(square_elements()))
def test_mv_translation_on_square(t, valuation):
    square, square_w = resolve_model("square"), resolve_model("square@w")
    assert evaluate(t, square, valuation) == evaluate(mv_to_w_term(t), square_w, valuation)


@settings(max_examples=200)
@given(terms(Signature.W, max_leaves=8), valuations(square_elements()))
def test_w_translation_on_square(t, valuation):
    square, square_w = resolve_model("square"), resolve_model("square@w")
    assert evaluate(t, square_w, valuation) == evaluate(w_to_mv_term(t), square, valuation)


def test_seeded_semantic_round_trip():
    square, square_w = resolve_model("square"), resolve_model("square@w")
    rng = random.Random(5)
    for _ in range(1000):
        valuation = {name: square.sample(rng, 24) for name in ("x", "y", "z")}
        t = random_term(rng, Signature.MV, 6)
        value = evaluate(t, square, valuation)
        assert evaluate(mv_to_w_term(t), square_w, valuation) == value
        assert evaluate(w_to_mv_term(mv_to_w_term(t)), square, valuation) == value
        s = random_term(rng, Signature.W, 6)
        value = evaluate(s, square_w, valuation)
        assert evaluate(w_to_mv_term(s), square, valuation) == value
        assert evaluate(mv_to_w_term(w_to_mv_term(s)), square_w, valuation) == value


def test_infer_and_translate():
    assert infer_and_translate("p (+) q") == (Impl(Neg(p), q), Signature.W)
    assert infer_and_translate("p -> q") == (OPlus(UMinus(p), q), Signature.MV)
    assert infer_and_translate("p^+") == (PosPart(p), Signature.W)
    assert infer_and_translate("p^+", sig="w") == (PosPart(p), Signature.MV)
    assert infer_and_translate("0", target="w") == (Impl(ONE, ONE), Signature.W)


def test_infer_and_translate_errors():
    with pytest.raises(SignatureError):
        infer_and_translate("p -> q", sig="mv")
    with pytest.raises(TermSyntaxError):
        infer_and_translate("p ->")


@pytest.mark.parametrize("name", ["chain:2", "ex32-grid", "product:chain:1,flatten:chain:1:0"])
@given(data=st.data())
def test_translation_on_finite_models(name, data):
    model, view = resolve_model(name), resolve_model(f"{name}@w")
    t = data.draw(terms(Signature.MV, max_leaves=8))
    valuation = data.draw(valuations(st.sampled_from(model.elements)))
    assert evaluate(t, model, valuation) == evaluate(mv_to_w_term(t), view, valuation)


@given(terms(Signature.MV, max_leaves=8), valuations(square_elements()))
def test_semantic_round_trip(t, valuation):
    square = resolve_model("square")
    assert evaluate(w_to_mv_term(mv_to_w_term(t)), square, valuation) == evaluate(t, square, valuation)


def test_chain_round_trip():
    model = resolve_model("chain:2")
    assert table_equal(w_to_mv_model(mv_to_w_model(model)), model)


def test_half_square_grid_round_trip():
    model = resolve_model("ex32-grid@w")
    assert table_equal(mv_to_w_model(w_to_mv_model(model)), model)


def test_square_view_matches_closed_form():
    view, closed = WajsbergView(SquareModel()), SquareWajsbergModel()
    points = SquareModel().grid(4)
    for x in points:
        assert view.compute(Connective.NEG, (x,)) == closed.compute(Connective.NEG, (x,))
        for y in points:
            assert view.compute(Connective.IMPL, (x, y)) == closed.compute(Connective.IMPL, (x, y))


def test_square_inverse_view():
    square = SquareModel()
    back = w_to_mv_model(resolve_model("square@w"))
    assert not back.is_finite
    assert back.constant(Connective.ZERO) == (0, 0)
    points = square.grid(3)
    for x in points:
        for y in points:
            assert back.compute(Connective.OPLUS, (x, y)) == square.compute(Connective.OPLUS, (x, y))


def test_model_translation_checks_signature():
    with pytest.raises(SignatureError):
        mv_to_w_model(resolve_model("square@w"))
    with pytest.raises(SignatureError):
        w_to_mv_model(resolve_model("square"))


def test_model_translation_needs_strong_model():
    elements = [Fraction(0), Fraction(1)]
    identity = np.arange(2, dtype=np.intp)
    tables = {
        Connective.OPLUS: np.zeros((2, 2), dtype=np.intp),
        Connective.MINUS: identity,
        Connective.POS: identity,
        Connective.NEGPART: identity,
        Connective.ZERO: np.intp(0),
        Connective.ONE: np.intp(0),
    }
    model = FiniteModel("two", Signature.MV, elements, tables)
    with pytest.raises(ClassError):
        mv_to_w_model(model)
