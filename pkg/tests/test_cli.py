import json
import os

import pytest

from sqmv.cli import cli


def invoke(runner, *args):
    return runner.invoke(cli, list(args))


def test_parse(runner):
    result = invoke(runner, "parse", "x (+) -y")
    assert result.exit_code == 0
    assert result.stdout.strip() == "((+) x (- y))"


def test_parse_json(runner):
    result = invoke(runner, "parse", "--sig", "w", "--json", "(p -> 1) -> 1")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"term": "(-> (-> p 1) 1)", "printed": "(p -> 1) -> 1"}


def test_parse_error(runner):
    result = invoke(runner, "parse", "x (+)")
    assert result.exit_code == 2
    assert "TermSyntaxError" in result.stderr
    assert "position 5" in result.stderr


def test_parse_foreign_connective(runner):
    result = invoke(runner, "parse", "p -> q")
    assert result.exit_code == 2
    assert "SignatureError" in result.stderr


def test_print(runner):
    result = invoke(runner, "print", "((x) (+) (y (+) z))")
    assert result.exit_code == 0
    assert result.stdout == "x (+) (y (+) z)\n"


def test_eval(runner):
    result = invoke(runner, "eval", "x (+) y", "--assign", "x=<1/2,0>", "--assign", "y=<3/4,1/2>")
    assert result.exit_code == 0
    assert result.stdout.strip() == "<1,0>"


def test_eval_json(runner):
    result = invoke(runner, "eval", "~p", "--model", "chain:2@w", "--assign", "p=1/2", "--json")
    assert json.loads(result.stdout) == {"model": "chain:2@w", "term": "~p", "value": "-1/2"}


@pytest.mark.parametrize("args", [
    ("eval", "x (+) y", "--assign", "x=<0,0>"),
    ("eval", "x", "--assign", "x"),
    ("eval", "x", "--assign", "x=<2,0>"),
    ("eval", "x", "--model", "hexagon", "--assign", "x=0"),
])
def test_eval_errors(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_check_eq_countermodel(runner):
    result = invoke(runner, "check-eq", "--model", "square", "--strategy", "grid:4", "x (+) 0", "x")
    assert result.exit_code == 1
    assert "verdict: COUNTERMODEL" in result.stdout
    assert "witness: x=<0,1/2>" in result.stdout
    assert "lhs: <0,0>" in result.stdout


def test_check_eq_exhaustive(runner):
    result = invoke(runner, "check-eq", "--model", "chain:2", "x (+) y", "y (+) x")
    assert result.exit_code == 0
    assert "verdict: VALID_EXHAUSTIVE" in result.stdout
    assert "samples: 25" in result.stdout


def test_check_eq_json(runner):
    result = invoke(runner, "check-eq", "--strategy", "grid:4", "--json", "x (+) 0", "x")
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert report["verdict"] == "COUNTERMODEL"
    assert report["samples"] == 2
    assert "samples_tried" not in report
    assert report["witness"] == {"x": "<0,1/2>"}


def test_check_eq_random_is_reproducible(runner):
    args = ("check-eq", "--strategy", "random:50", "--seed", "7", "x (+) 0", "x")
    first, second = invoke(runner, *args), invoke(runner, *args)
    assert first.exit_code == second.exit_code == 1
    assert first.stdout == second.stdout
    assert "seed: 7" in first.stdout


@pytest.mark.parametrize("args", [
    ("check-eq", "--model", "hexagon", "x", "x"),
    ("check-eq", "--strategy", "sometimes", "x", "x"),
    ("check-eq", "--strategy", "exhaustive", "x", "x"),
    ("check-eq", "x (+)", "x"),
    ("check-eq", "x"),
    ("check-eq", "--sig", "z", "x", "x"),
])
def test_check_eq_errors(runner, args):
    assert invoke(runner, *args).exit_code == 2


def test_check_entail_countermodel(runner):
    result = invoke(runner, "check-entail", "--strategy", "grid:2", "--premise", "p", "--premise", "p -> q", "q")
    assert result.exit_code == 1
    assert "witness: p=<0,0>, q=<0,1/2>" in result.stdout
    assert "premise hits:" in result.stdout


def test_check_entail_holds(runner):
    result = invoke(runner, "check-entail", "--strategy", "grid:2", "--premise", "p",
                    "--premise", "p -> q", "(r -> r) -> q")
    assert result.exit_code == 0
    assert "verdict: NO_COUNTEREXAMPLE_FOUND" in result.stdout


def test_check_entail_finite(runner):
    result = invoke(runner, "check-entail", "--model", "chain:2@w", "--json", "p")
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert report["witness"] == {"p": "-1"}
    assert report["samples"] == 1


def test_find_countermodel(runner):
    result = invoke(runner, "find-countermodel", "x (+) 0", "x")
    assert result.exit_code == 1
    assert "model: flat-standard" in result.stdout


def test_find_countermodel_none(runner):
    result = invoke(runner, "find-countermodel", "--family", "chain:1,flat-standard,square",
                    "--strategy", "grid:2", "x (+) y", "y (+) x")
    assert result.exit_code == 0
    assert "samples: 259" in result.stdout


@pytest.mark.parametrize("text, translated", [
    ("p (+) q", "~p -> q"),
    ("p -> q", "-p (+) q"),
    ("0", "1 -> 1"),
])
def test_translate(runner, text, translated):
    result = invoke(runner, "translate", text)
    assert result.exit_code == 0
    assert result.stdout.strip() == translated


def test_translate_mixed_term(runner):
    assert invoke(runner, "translate", "--sig", "mv", "p -> q").exit_code == 2


def test_classify(runner):
    result = invoke(runner, "classify", "--model", "chain:1")
    assert result.exit_code == 0
    assert "is_classic: True" in result.stdout
    assert "is_flat: False" in result.stdout
    assert "fails flat:" in result.stdout
    assert "regular: {-1, 0, 1} classic=True" in result.stdout


def test_classify_tables(runner):
    result = invoke(runner, "classify", "--model", "chain:1", "--tables")
    assert "# chain:1 (mv, 3 elements)" in result.stdout
    assert "oplus -1 1 = 0" in result.stdout


def test_classify_json(runner):
    result = invoke(runner, "classify", "--model", "flatten:chain:1:0", "--json")
    response = json.loads(result.stdout)
    assert response["flags"]["is_flat"] is True
    assert response["flags"]["failures"]["MV*5"] == {"x": "-1"}
    assert response["size"] == 3


def test_classify_sampled(runner):
    result = invoke(runner, "classify", "--model", "flat-standard", "--strategy", "random:100")
    assert result.exit_code == 0
    assert "exhaustive: False" in result.stdout
    assert "is_flat: True" in result.stdout


def test_audit_passes(runner):
    result = invoke(runner, "audit-axioms", "--model", "chain:2")
    assert result.exit_code == 0
    assert result.stdout.strip().endswith("failed: none")


def test_audit_fails(runner):
    result = invoke(runner, "audit-axioms", "--model", "ex32-grid", "--group", "classic")
    assert result.exit_code == 1
    assert "MV*5" in result.stdout.splitlines()[-1]


def test_audit_json(runner):
    result = invoke(runner, "audit-axioms", "--model", "square", "--samples", "50", "--json")
    assert result.exit_code == 0
    audit = json.loads(result.stdout)
    assert audit["strategy"] == "random:50"
    assert all(report["samples"] == 50 for report in audit["reports"].values())


def test_check_proof(runner, fixtures_path):
    result = invoke(runner, "check-proof", os.path.join(fixtures_path, "prop4_3_05.sqlp"))
    assert result.exit_code == 0
    assert result.stdout.strip().endswith("ACCEPT (sqL*)")


def test_check_proof_rejects(runner, tmp_path):
    path = tmp_path / "bad.sqlp"
    path.write_text("system: sqL*\n1. p -> 1 ; AX Q1\n", encoding="utf-8")
    result = invoke(runner, "check-proof", str(path))
    assert result.exit_code == 1
    assert "REJECT at line 1: NoMatchingAxiomInstance" in result.stdout


def test_check_proof_json(runner, tmp_path):
    path = tmp_path / "empty.sqlp"
    path.write_text("system: L*\n", encoding="utf-8")
    result = invoke(runner, "check-proof", "--json", str(path))
    assert result.exit_code == 1
    verdict = json.loads(result.stdout)
    assert verdict["reason"] == "EmptyProof"
    assert verdict["failing_line"] == 0


@pytest.mark.parametrize("content", [None, "1. p -> 1 ; AX Q10\n"])
def test_check_proof_errors(runner, tmp_path, content):
    path = tmp_path / "script.sqlp"
    if content is not None:
        path.write_text(content, encoding="utf-8")
    result = invoke(runner, "check-proof", str(path))
    assert result.exit_code == 2
    assert "ScriptFormatError" in result.stderr


def test_lift_then_deregularize(runner, fixtures_path, tmp_path):
    lifted = invoke(runner, "lift-proof", os.path.join(fixtures_path, "lstar", "p04_top.lp"))
    assert lifted.exit_code == 0
    assert lifted.stdout == "system: sqL*\n1. p -> 1 ; AX Q10\n2. (p -> p) -> p -> 1 ; RULE Reg 1\n"

    path = tmp_path / "lifted.sqlp"
    path.write_text(lifted.stdout, encoding="utf-8")
    assert invoke(runner, "check-proof", str(path)).exit_code == 0
    result = invoke(runner, "deregularize", str(path))
    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == "3. p -> 1 ; RULE AReg1 2"


def test_lift_prefix(runner, fixtures_path):
    result = invoke(runner, "lift-proof", "--prefix", "s", os.path.join(fixtures_path, "lstar", "p04_top.lp"))
    assert "2. (s -> s) -> p -> 1 ; RULE Reg 1" in result.stdout


def test_transformer_errors(runner, fixtures_path):
    assert invoke(runner, "lift-proof", os.path.join(fixtures_path, "prop4_3_05.sqlp")).exit_code == 2
    assert invoke(runner, "deregularize", os.path.join(fixtures_path, "lstar", "p04_top.lp")).exit_code == 2


def test_models(runner):
    result = invoke(runner, "models")
    assert result.exit_code == 0
    names = result.stdout.splitlines()
    assert "square" in names
    assert "chain:<n>" in names


def test_unknown_command(runner):
    assert invoke(runner, "prove-everything").exit_code == 2


def test_classify_congruences(runner):
    result = invoke(runner, "classify", "--model", "product:chain:1,flatten:chain:1:0", "--congruences")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    mu_line = next(line for line in lines if line.startswith("mu: "))
    tau_line = next(line for line in lines if line.startswith("tau: "))
    assert mu_line.count("{") == 3
    assert tau_line.count("{") == 7
    assert "embedding: homomorphism=True injective=True surjective=False" in lines


def test_classify_congruences_json(runner):
    result = invoke(runner, "classify", "--model", "chain:1", "--congruences", "--json")
    response = json.loads(result.stdout)
    assert [congruence["name"] for congruence in response["congruences"]] == ["mu", "tau"]
    assert response["embedding"]["is_injective"] is True


def test_congruences_need_finite_model(runner):
    assert invoke(runner, "classify", "--model", "square", "--congruences", "--strategy", "random:20").exit_code == 2


def test_deeply_nested_term(runner):
    result = invoke(runner, "print", "(" * 1500 + "x" + ")" * 1500)
    assert result.exit_code == 2
    assert "TermSyntaxError" in result.stderr
    assert "nested subterms" in result.stderr


def test_recursion_limit_is_an_error(runner, monkeypatch):
    def too_deep(term):
        raise RecursionError("maximum recursion depth exceeded")

    monkeypatch.setattr("sqmv.cli.print_term", too_deep)
    result = invoke(runner, "print", "x")
    assert result.exit_code == 2
    assert "TermTooDeep" in result.stderr


@pytest.mark.parametrize("args, output", [
    (("print", "-(x^+)"), "-x^+"),
    (("parse", "-x"), "(- x)"),
    (("translate", "-p (+) q"), "~~p -> q"),
])
def test_terms_starting_with_minus(runner, args, output):
    result = invoke(runner, *args)
    assert result.exit_code == 0
    assert result.stdout.strip() == output


@pytest.mark.parametrize("lhs", ["--x", "-(-x)"])
def test_check_eq_with_leading_minus(runner, lhs):
    result = invoke(runner, "check-eq", "--model", "chain:2", "--json", lhs, "x")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["verdict"] == "VALID_EXHAUSTIVE"
