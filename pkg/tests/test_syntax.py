import random

import pytest
from hypothesis import given, settings, strategies as st

from sqmv.models.catalog import resolve_model
from sqmv.services.evaluation import evaluate
from sqmv.syntax.abbreviations import Mode, expand_abbreviations, join
from sqmv.syntax.generate import random_term
from sqmv.syntax.parser import MAX_NESTING, parse, parse_biconditional
from sqmv.syntax.printer import print_term
from sqmv.syntax.schema import Schema, match_schema, substitute, substitute_term
from sqmv.syntax.terms import (
    ONE, ZERO, Connective, Impl, Neg, NegPart, OPlus, PosPart, Signature, UMinus, Var,
    count_connective, describe, is_regular, positions, replace_at, size,
    subterm_at, variables,
)
from sqmv.utils.errors import (
    MissingBinding, ModeError, PathMismatch, SignatureError, TermSyntaxError,
)
from tests.strategies import bindings, square_elements, terms, valuations

p, q, r = Var("p"), Var("q"), Var("r")


def test_parse_implication_tree():
    assert parse("(p -> 1) -> 1", "w") == Impl(Impl(p, ONE), ONE)


def test_parse_minus_of_sum():
    assert parse("-(p (+) q)", "mv") == UMinus(OPlus(p, q))


def test_negation_is_not_mv():
    with pytest.raises(SignatureError):
        parse("p (+) ~q", "mv")


def test_sum_is_not_w():
    with pytest.raises(SignatureError):
        parse("p (+) q", "w")


def test_zero_is_not_w():
    with pytest.raises(SignatureError):
        parse("p -> 0", "w")


def test_precedence():
    assert parse("-x^+ (+) y", "mv") == OPlus(UMinus(PosPart(Var("x"))), Var("y"))
    assert parse("x (+) y (+) z", "mv") == OPlus(OPlus(Var("x"), Var("y")), Var("z"))
    assert parse("p -> q -> r", "w") == Impl(p, Impl(q, r))
    assert parse("~p -> q", "w") == Impl(Neg(p), q)
    assert parse("x^+^-", "mv") == NegPart(PosPart(Var("x")))


def test_syntax_error_position():
    with pytest.raises(TermSyntaxError) as info:
        parse("x (+)", "mv")
    assert info.value.position == 5

    with pytest.raises(TermSyntaxError) as info:
        parse("x $ y", "mv")
    assert info.value.position == 2


@pytest.mark.parametrize("text", ["", "(x", "x)", "x y", "2", "p <-> q"])
def test_malformed(text):
    with pytest.raises(TermSyntaxError):
        parse(text, "w")


def test_biconditional_split():
    assert parse_biconditional("p -> q <-> ~q -> ~p", "w") == (Impl(p, q), Impl(Neg(q), Neg(p)))
    assert parse_biconditional("p -> q", "w") is None
    assert parse_biconditional("(p <-> q) -> r", "w") is None
    with pytest.raises(TermSyntaxError):
        parse_biconditional("p <-> q <-> r", "w")


def test_print_examples():
    assert print_term(Impl(p, ONE)) == "p -> 1"
    assert print_term(UMinus(p)) == "-p"
    assert print_term(PosPart(p)) == "p^+"
    assert print_term(PosPart(UMinus(p))) == "(-p)^+"
    assert print_term(Impl(Impl(p, q), r)) == "(p -> q) -> r"
    assert print_term(OPlus(p, OPlus(q, r))) == "p (+) (q (+) r)"


@settings(max_examples=300)
@given(terms(Signature.MV))
def test_mv_round_trip(t):
    assert parse(print_term(t), Signature.MV) == t


@settings(max_examples=300)
@given(terms(Signature.W))
def test_w_round_trip(t):
    assert parse(print_term(t), Signature.W) == t


@pytest.mark.parametrize("sig", [Signature.MV, Signature.W])
def test_seeded_round_trip(sig):
    rng = random.Random(11)
    for _ in range(10_000):
        t = random_term(rng, sig, 8)
        assert parse(print_term(t), sig) == t


def test_nesting_limit():
    depth = MAX_NESTING - 1
    assert parse("(" * depth + "x" + ")" * depth, "mv") == Var("x")
    with pytest.raises(TermSyntaxError) as info:
        parse("(" * MAX_NESTING + "x" + ")" * MAX_NESTING, "mv")
    assert info.value.position == MAX_NESTING


@pytest.mark.parametrize("text, sig", [
    ("-" * 150 + "x", "mv"),
    ("~" * 150 + "p", "w"),
    ("p -> " * 150 + "p", "w"),
])
def test_deep_terms_are_rejected(text, sig):
    with pytest.raises(TermSyntaxError):
        parse(text, sig)


def test_long_sums_are_not_nested():
    t = parse(" (+) ".join(["x"] * 300), "mv")
    assert count_connective(t, Connective.OPLUS) == 299


def test_join_is_expanded():
    assert parse("p \\/ q", "w") == join(p, q, Signature.W)
    assert parse("x \\/ y", "mv") == join(Var("x"), Var("y"), Signature.MV)


def test_strong_expansion():
    assert expand_abbreviations(PosPart(p), Signature.W) == Impl(Impl(p, ONE), ONE)
    assert expand_abbreviations(NegPart(p), Signature.W) == Impl(Impl(p, Neg(ONE)), Neg(ONE))
    assert expand_abbreviations(NegPart(p), Signature.MV) == OPlus(UMinus(ONE), OPlus(ONE, p))
    assert expand_abbreviations(PosPart(p), Signature.MV, Mode.PRIMITIVE) == PosPart(p)


def test_strong_expansion_needs_strong_target():
    with pytest.raises(ModeError):
        expand_abbreviations(PosPart(p), Signature.MV, Mode.STRONG, target_is_strong=False)


@given(terms(Signature.MV))
def test_strong_expansion_has_no_parts(t):
    expanded = expand_abbreviations(t, Signature.MV)
    assert count_connective(expanded, Connective.POS) == 0
    assert count_connective(expanded, Connective.NEGPART) == 0


@given(terms(Signature.MV, max_leaves=6), valuations(square_elements()))
def test_strong_expansion_agrees_on_square(t, valuation):
    square = resolve_model("square")
    assert evaluate(t, square, valuation) == evaluate(expand_abbreviations(t, Signature.MV), square, valuation)


@given(terms(Signature.W, max_leaves=6), valuations(square_elements()))
def test_strong_expansion_agrees_on_square_w(t, valuation):
    model = resolve_model("square@w")
    assert evaluate(t, model, valuation) == evaluate(expand_abbreviations(t, Signature.W), model, valuation)


@pytest.mark.parametrize("name", ["chain:2", "ex32-grid", "flatten:chain:1:0"])
@given(data=st.data())
def test_strong_expansion_agrees_on_finite_models(name, data):
    model = resolve_model(name)
    t = data.draw(terms(Signature.MV, max_leaves=6))
    valuation = data.draw(valuations(st.sampled_from(model.elements)))
    assert evaluate(t, model, valuation) == evaluate(expand_abbreviations(t, Signature.MV), model, valuation)


def test_regularity_examples():
    assert not is_regular(Neg(Neg(p)))
    assert not is_regular(p)
    assert is_regular(Impl(p, q))
    assert is_regular(ONE)
    assert is_regular(UMinus(ZERO))
    assert is_regular(PosPart(p))


@given(st.one_of(terms(Signature.MV), terms(Signature.W)))
def test_regularity_dichotomy(t):
    node, negations = t, 0
    while isinstance(node, (Neg, UMinus)):
        node, negations = node.arg, negations + 1
    negated_variable = isinstance(node, Var)
    assert is_regular(t) != negated_variable
    if negated_variable:
        assert size(t) == negations + 1


def test_count_connective():
    assert count_connective(OPlus(p, OPlus(q, r)), Connective.OPLUS) == 2
    assert count_connective(UMinus(UMinus(p)), Connective.MINUS) == 2
    assert count_connective(ONE, Connective.OPLUS) == 0


def test_positions_and_replacement():
    t = parse("(p -> q) -> ~p", "w")
    assert positions(t, p) == ((0, 0), (1, 0))
    assert subterm_at(t, (1,)) == Neg(p)
    assert replace_at(t, (1, 0), q) == parse("(p -> q) -> ~q", "w")
    with pytest.raises(PathMismatch):
        subterm_at(t, (0, 0, 0))
    assert variables(t) == ("p", "q")
    assert describe(t) == "(-> (-> p q) (~ p))"


def test_match_repeated_metavariable():
    assert match_schema(Schema(parse("p -> p", "w")), parse("q -> r", "w")) is None


def test_match_binds_subterm():
    binding = match_schema(Schema(parse("p -> 1", "w")), parse("(a -> b) -> 1", "w"))
    assert binding == {"p": parse("a -> b", "w")}


def test_match_axiom_direction():
    schema = Schema(parse("p -> ((q -> q) -> p)", "w"))
    binding = match_schema(schema, parse("x -> ((y -> y) -> x)", "w"))
    assert binding == {"p": Var("x"), "q": Var("y")}


def test_substitute_examples():
    assert substitute(Schema(parse("p -> q", "w")), {"p": ONE, "q": Neg(ONE)}) == Impl(ONE, Neg(ONE))
    assert substitute(Schema(parse("p -> 1", "w")), {"p": parse("~~r", "w")}) == parse("~~r -> 1", "w")


def test_substitute_checks_signature():
    with pytest.raises(SignatureError):
        substitute(Schema(parse("p -> p", "w")), {"p": OPlus(q, r)})


def test_substitute_needs_every_metavariable():
    with pytest.raises(MissingBinding):
        substitute(Schema(parse("p -> q", "w")), {"p": ONE})
    assert substitute_term(parse("p -> q", "w"), {"p": ONE}, strict=False) == Impl(ONE, q)


@given(terms(Signature.W), bindings(Signature.W))
def test_matching_soundness(pattern, binding):
    ground = substitute_term(pattern, binding)
    found = match_schema(Schema(pattern), ground)
    assert found is not None
    assert substitute_term(pattern, found) == ground
    assert found == {name: binding[name] for name in variables(pattern)}
