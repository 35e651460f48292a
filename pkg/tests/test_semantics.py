from fractions import Fraction
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from sqmv.corpus.loader import load_entailments, load_equations
from sqmv.models.catalog import resolve_model
from sqmv.proofkit.calculus import SQL_AXIOMS, SQL_RULES
from sqmv.proofkit.script import System
from sqmv.schemas.report import Verdict
from sqmv.services.checking import (
    check_entailment, check_equation, default_grid_denominator, search_countermodel,
    transfer_square_witness, zero_second_coordinates,
)
from sqmv.services.designation import designated_set
from sqmv.services.evaluation import evaluate
from sqmv.services.soundness import (
    audit_axioms, audit_calculus, check_axiom_designation, check_rule_preservation, sampled_flags,
)
from sqmv.services.strategy import Strategy, StrategyKind
from sqmv.syntax.generate import random_term
from sqmv.syntax.parser import parse
from sqmv.syntax.printer import print_term
from sqmv.syntax.terms import Connective, Impl, ONE, Signature, Var, count_connective, is_regular
from sqmv.utils.errors import DomainError, SignatureError, StrategyError, UnboundVariable
from tests.strategies import square_elements, terms, valuations

HALF = Fraction(1, 2)
EQUATIONS = load_equations()
ENTAILMENTS = load_entailments()


def mv(text):
    return parse(text, Signature.MV)


def w(text):
    return parse(text, Signature.W)


def test_evaluate_square():
    square = resolve_model("square")
    value = evaluate(mv("x (+) y"), square, {"x": (HALF, HALF), "y": (Fraction(1, 4), 0)})
    assert value == (Fraction(3, 4), 0)
    assert evaluate(mv("-x"), square, {"x": (HALF, HALF)}) == (-HALF, -HALF)


def test_evaluate_errors():
    square = resolve_model("square")
    with pytest.raises(UnboundVariable):
        evaluate(mv("x (+) y"), square, {"x": (0, 0)})
    with pytest.raises(DomainError):
        evaluate(mv("x"), square, {"x": (2, 0)})
    with pytest.raises(SignatureError):
        evaluate(w("x -> x"), square, {"x": (0, 0)})


def test_strategy_parse():
    assert Strategy.parse("auto") is None
    assert Strategy.parse(None) is None
    assert Strategy.parse("grid:4") == Strategy.grid(4)
    assert Strategy.parse("exhaustive").kind is StrategyKind.EXHAUSTIVE
    sampled = Strategy.parse("random:50", seed=7)
    assert (sampled.count, sampled.seed, sampled.max_den) == (50, 7, 120)
    assert Strategy.random().count == 10_000
    for text in ("grid:x", "grid:0", "random:0", "sometimes", "exhaustive:3"):
        with pytest.raises(StrategyError):
            Strategy.parse(text)


def test_default_grid_denominator():
    assert default_grid_denominator((mv("x (+) y"), mv("y (+) x")), Signature.MV) == 4
    assert default_grid_denominator((mv("x"),), Signature.MV) == 1
    assert default_grid_denominator((w("p -> q"), w("q")), Signature.W) == 3


def test_grid_witness():
    report = check_equation(mv("x (+) 0"), mv("x"), "square", Strategy.grid(4))
    assert report.is_countermodel
    assert report.witness == {"x": "<0,1/2>"}
    assert report.lhs_value == "<0,0>"
    assert report.rhs_value == "<0,1/2>"
    assert report.samples_tried == 2
    assert report.strategy == "grid:4"


def test_exhaustive_check():
    report = check_equation(mv("x (+) y"), mv("y (+) x"), "chain:2")
    assert report.verdict is Verdict.VALID_EXHAUSTIVE
    assert report.samples_tried == 25
    assert report.strategy == "exhaustive"


def test_exhaustive_countermodel():
    report = check_equation(mv("x (+) 0"), mv("x"), "ex32-grid")
    assert report.witness == {"x": "<-1,0>"}
    assert report.samples_tried == 1


def test_exhaustive_needs_finite_model():
    with pytest.raises(StrategyError):
        check_equation(mv("x"), mv("x"), "square", Strategy.exhaustive())


def test_random_check():
    report = check_equation(mv("x (+) y"), mv("y (+) x"), "square", Strategy.random(200, seed=3))
    assert report.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
    assert report.samples_tried == 200
    assert report.seed == 3


def test_random_check_is_reproducible():
    first = check_equation(mv("x (+) x"), mv("x"), "disk", Strategy.random(100, seed=5))
    second = check_equation(mv("x (+) x"), mv("x"), "disk", Strategy.random(100, seed=5))
    assert first.is_countermodel
    assert first == second


def test_check_signature():
    with pytest.raises(SignatureError):
        check_equation(w("x -> x"), w("1"), "square", Strategy.grid(2))


@pytest.mark.parametrize("equation", [e for e in EQUATIONS if e.valid], ids=lambda e: e.text)
def test_valid_equations(equation):
    for name in ("square", "disk"):
        assert not check_equation(equation.lhs, equation.rhs, name, Strategy.grid(2)).is_countermodel
        assert not check_equation(equation.lhs, equation.rhs, name, Strategy.random(100)).is_countermodel
    assert check_equation(equation.lhs, equation.rhs, "ex32-grid").verdict is Verdict.VALID_EXHAUSTIVE


@pytest.mark.parametrize("equation", [e for e in EQUATIONS if not e.valid], ids=lambda e: e.text)
def test_invalid_equations(equation):
    square = check_equation(equation.lhs, equation.rhs, "square", Strategy.grid(2))
    assert square.is_countermodel
    disk = check_equation(equation.lhs, equation.rhs, "disk", Strategy.grid(2))
    assert disk.is_countermodel
    assert disk.witness == square.witness


@pytest.mark.parametrize("equation", [e for e in EQUATIONS if not e.valid], ids=lambda e: e.text)
def test_witness_transfer(equation):
    square, disk = resolve_model("square"), resolve_model("disk")
    report = check_equation(equation.lhs, equation.rhs, square, Strategy.grid(2))
    witness = {name: square.parse_value(label) for name, label in report.witness.items()}
    transferred = transfer_square_witness(equation.lhs, equation.rhs, witness)
    if transferred is None:
        return
    assert all(disk.contains(value) for value in transferred.values())
    assert evaluate(equation.lhs, disk, transferred) != evaluate(equation.rhs, disk, transferred)


@pytest.mark.parametrize("equation", EQUATIONS, ids=lambda e: e.text)
def test_flat_models_agree(equation):
    standard = check_equation(equation.lhs, equation.rhs, "flat-standard", Strategy.grid(2))
    finite = [check_equation(equation.lhs, equation.rhs, name, Strategy.exhaustive())
              for name in ("flatten:chain:1:0", "flatten:chain:2:0")]
    assert [report.is_countermodel for report in finite] == [standard.is_countermodel] * 2
    assert all(report.verdict is not Verdict.NO_COUNTEREXAMPLE_FOUND for report in finite)


def test_transfer_needs_sums_on_both_sides():
    witness = {"x": (HALF, HALF)}
    assert transfer_square_witness(mv("x (+) 0"), mv("x"), witness) is None
    assert transfer_square_witness(mv("x (+) x"), mv("x (+) 1"), witness) == {"x": (HALF, 0)}


@given(terms(Signature.MV, max_leaves=8), valuations(square_elements()))
def test_regular_terms_ignore_second_coordinates(t, valuation):
    assume(is_regular(t))
    square = resolve_model("square")
    assert evaluate(t, square, valuation) == evaluate(t, square, zero_second_coordinates(valuation))


@given(terms(Signature.MV, max_leaves=8), valuations(square_elements()))
def test_sums_have_zero_second_coordinate(t, valuation):
    assume(count_connective(t, Connective.OPLUS) > 0)
    square = resolve_model("square")
    value = evaluate(t, square, valuation)
    assert value[1] == 0
    assert value == evaluate(t, square, zero_second_coordinates(valuation))


def test_seeded_sums_ignore_second_coordinates():
    rng = random.Random(13)
    square = resolve_model("square")
    checked = 0
    while checked < 10_000:
        t = random_term(rng, Signature.MV, 8)
        if count_connective(t, Connective.OPLUS) == 0:
            continue
        valuation = {name: square.sample(rng, 24) for name in ("x", "y", "z")}
        value = evaluate(t, square, valuation)
        assert value[1] == 0, print_term(t)
        assert value == evaluate(t, square, zero_second_coordinates(valuation)), print_term(t)
        checked += 1


def test_search_countermodel():
    report = search_countermodel(mv("x (+) 0"), mv("x"), ["chain:1", "chain:2", "flat-standard", "square"])
    assert report.is_countermodel
    assert report.model == "flat-standard"


def test_search_without_countermodel():
    report = search_countermodel(mv("x (+) y"), mv("y (+) x"), ["chain:1", "flat-standard", "square"],
                                 Strategy.grid(2))
    assert report.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
    assert report.model == "chain:1,flat-standard,square"
    assert report.samples_tried == 9 + 25 + 225


def test_designated_sets():
    square = designated_set(resolve_model("square@w"))
    assert square.kind == "closed-form"
    assert square.labels() is None
    assert (HALF, 0) in square
    assert (HALF, HALF) not in square
    assert (-HALF, 0) not in square
    assert designated_set(resolve_model("chain:1@w")).labels() == ["0", "1"]
    assert designated_set(resolve_model("chain:1")).labels() == ["0", "1"]
    assert designated_set(resolve_model("flatten:chain:1:0@w")).labels() == ["0"]


def test_designated_set_of_disk():
    disk = designated_set(resolve_model("disk"))
    assert (1, 0) in disk
    assert (0, HALF) not in disk


def test_designated_fixpoint_form():
    designated = designated_set(resolve_model("ex32@w"))
    assert designated.kind == "fixpoint"
    assert (HALF, HALF) in designated
    assert (HALF, 0) not in designated


def square_report(entailment):
    return check_entailment(entailment.premises, entailment.conclusion, "square@w", Strategy.grid(2))


@pytest.mark.parametrize("entailment", [e for e in ENTAILMENTS if e.holds], ids=lambda e: e.text)
def test_entailments_that_hold(entailment):
    assert square_report(entailment).verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
    report = check_entailment(entailment.premises, entailment.conclusion, "chain:2")
    assert report.verdict is Verdict.VALID_EXHAUSTIVE


@pytest.mark.parametrize("entailment", [e for e in ENTAILMENTS if not e.holds], ids=lambda e: e.text)
def test_entailments_that_fail(entailment):
    report = square_report(entailment)
    assert report.is_countermodel
    assert report.premise_hits >= 1


def test_modus_ponens_countermodel():
    report = check_entailment((w("p"), w("p -> q")), w("q"), "square@w", Strategy.grid(2))
    assert report.witness == {"p": "<0,0>", "q": "<0,1/2>"}
    assert report.lhs_value == "<0,1/2>"


def test_vacuous_entailment():
    report = check_entailment((w("p"), w("~1")), w("~p"), "square@w", Strategy.grid(2))
    assert report.verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
    assert report.premise_hits == 0


def test_exhaustive_entailment_witness():
    report = check_entailment((), w("p"), "chain:2")
    assert report.witness == {"p": "-1"}
    assert report.samples_tried == 1


def test_entailment_reads_mv_models_as_wajsberg():
    report = check_entailment((w("p"),), w("(q -> q) -> p"), "square", Strategy.grid(2))
    assert report.model == "square@w"
    assert report.premise_hits > 0


@pytest.mark.parametrize("name", ["square", "disk"])
def test_standard_models_pass_audit(name):
    audit = audit_axioms(name, Strategy.random(10_000, seed=7))
    assert audit.failed == []


@pytest.mark.parametrize("name", ["square@w", "disk@w"])
def test_standard_wajsberg_models_pass_audit(name):
    assert audit_axioms(name, Strategy.random(10_000, seed=7)).failed == []


@pytest.mark.parametrize("name", ["chain:2", "flatten:chain:1:0", "ex32-grid", "chain:2@w"])
def test_finite_models_pass_audit(name):
    assert audit_axioms(name).failed == []


def test_classic_audit():
    assert "MV*5" in audit_axioms("ex32-grid", groups=("classic",)).failed
    assert audit_axioms("chain:2", groups=("classic",)).failed == []


def test_sampled_flags():
    flags = sampled_flags("square", Strategy.random(200))
    assert flags.is_quasi and flags.is_strong
    assert not flags.is_flat
    assert not flags.is_classic
    assert not flags.exhaustive
    assert sampled_flags("interval", Strategy.random(200)).is_classic
    assert sampled_flags("flat-standard", Strategy.random(200)).is_flat


@pytest.mark.parametrize("axiom", list(SQL_AXIOMS))
def test_axioms_are_designated(axiom):
    report = check_axiom_designation(System.SQL, axiom, "square@w", Strategy.random(300))
    assert not report.is_countermodel
    report = check_axiom_designation(System.SQL, axiom, "chain:2@w")
    assert report.verdict is Verdict.VALID_EXHAUSTIVE


def test_axiom_designation_with_binding():
    report = check_axiom_designation(System.SQL, "Q10", "square@w", Strategy.grid(2),
                                     binding={"p": w("x -> y")})
    assert not report.is_countermodel


@pytest.mark.parametrize("rule", list(SQL_RULES))
def test_rules_preserve_designation(rule):
    report = check_rule_preservation(System.SQL, rule, "square@w", Strategy.grid(2))
    assert not report.is_countermodel
    report = check_rule_preservation(System.SQL, rule, "chain:2@w")
    assert report.verdict is Verdict.VALID_EXHAUSTIVE


@pytest.mark.parametrize("rule", ["Flat", "AReg3"])
def test_vacuous_rules_on_square(rule):
    assert check_rule_preservation(System.SQL, rule, "square@w", Strategy.grid(2)).premise_hits == 0


def test_flat_rule_on_flattening():
    report = check_rule_preservation(System.SQL, "Flat", "flatten:chain:1:0@w")
    assert report.verdict is Verdict.VALID_EXHAUSTIVE
    assert report.premise_hits > 0


def test_modus_ponens_is_not_sound_on_square():
    report = check_rule_preservation(System.LSTAR, "R1", "square@w", Strategy.grid(2))
    assert report.is_countermodel
    assert check_rule_preservation(System.LSTAR, "R1", "chain:2@w").verdict is Verdict.VALID_EXHAUSTIVE


@pytest.mark.parametrize("model", ["square@w", "chain:2@w", "ex32-grid@w"])
@settings(max_examples=150)
@given(data=st.data())
def test_regular_term_stability(model, data):
    target = resolve_model(model)
    t = data.draw(terms(Signature.W, max_leaves=8))
    assume(is_regular(t))
    if target.is_finite:
        elements = st.sampled_from(target.elements)
    else:
        elements = square_elements()
    valuation = data.draw(valuations(elements))
    guard = Impl(Impl(Var("r"), Var("r")), t)
    valuation = {**valuation, "r": valuation["x"]}
    assert evaluate(guard, target, valuation) == evaluate(t, target, valuation)


def lemma_formulas(script):
    hypotheses = tuple(f for item in script.hypotheses for f in item.formulas)
    return hypotheses, script.conclusion.formulas


def test_lemma_conclusions_follow(lemmas):
    for script in lemmas:
        hypotheses, conclusions = lemma_formulas(script)
        for conclusion in conclusions:
            assert check_entailment(hypotheses, conclusion, "chain:2").verdict is Verdict.VALID_EXHAUSTIVE
            report = check_entailment(hypotheses, conclusion, "square@w", Strategy.random(300))
            assert not report.is_countermodel, script.name


def test_hypothesis_free_conclusions_are_designated(lemmas):
    for script in lemmas:
        if script.hypotheses:
            continue
        for conclusion in script.conclusion.formulas:
            assert check_entailment((), conclusion, "square@w", Strategy.random(300)).premise_hits == 300
            assert check_entailment((), conclusion, "flatten:chain:1:0@w").verdict is Verdict.VALID_EXHAUSTIVE


def test_top_is_designated():
    assert check_entailment((), Impl(ONE, ONE), "chain:1").verdict is Verdict.VALID_EXHAUSTIVE


@pytest.mark.parametrize("sig", [Signature.MV, Signature.W])
def test_random_terms_are_reproducible(sig):
    first = [random_term(random.Random(3), sig, 4) for _ in range(5)]
    second = [random_term(random.Random(3), sig, 4) for _ in range(5)]
    assert first == second
    for t in first:
        assert parse(print_term(t), sig) == t


@pytest.mark.parametrize("model, strategy", [("chain:2@w", None), ("square@w", Strategy.random(100))])
def test_calculus_instances_are_sound(model, strategy):
    reports = audit_calculus(System.SQL, model, strategy)
    assert set(reports) == set(SQL_AXIOMS) | set(SQL_RULES)
    assert [name for name, report in reports.items() if report.is_countermodel] == []


def test_lstar_axiom_instances_on_square():
    reports = audit_calculus(System.LSTAR, "square@w", Strategy.grid(2), instances=1)
    assert reports["P4"].verdict is Verdict.NO_COUNTEREXAMPLE_FOUND
