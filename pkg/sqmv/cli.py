"""
Command-line interface.

    sqmv check-eq --model square --strategy grid:4 "x (+) 0" "x"
    sqmv check-proof fixtures/prop4_3_05.sqlp

Exit status: 0 for success, a valid check or an accepted proof; 1 for a
countermodel, a failed audit or a rejected proof; 2 for usage, input and
library errors.
"""
import functools
import json
import logging
import sys
from typing import Dict, Optional, Sequence

import click

from sqmv.config import configure_logging, get_settings
from sqmv.corpus.loader import load_script, registry_for
from sqmv.models.catalog import list_models, resolve_model
from sqmv.models.classification import classify, regular_elements
from sqmv.models.congruence import embed_into_product, mu, mv_tables, tau
from sqmv.models.elements import format_element, split_top_level
from sqmv.models.finite import export_tables
from sqmv.proofkit.checker import check_proof
from sqmv.proofkit.script import format_script
from sqmv.proofkit.transformers import deregularize_proof, lift_lstar_proof
from sqmv.schemas.model import ClassificationResponse
from sqmv.schemas.proof import ProofVerdict
from sqmv.schemas.report import CheckReport
from sqmv.services.checking import check_entailment, check_equation, search_countermodel
from sqmv.services.evaluation import evaluate
from sqmv.services.soundness import audit_axioms, sampled_flags
from sqmv.services.strategy import Strategy
from sqmv.services.transform import infer_and_translate
from sqmv.syntax.parser import parse
from sqmv.syntax.printer import print_term
from sqmv.syntax.terms import Signature, describe
from sqmv.utils.errors import SqmvError, TermTooDeep

# Set up logging
logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2

# terms such as "-x" are arguments, not options
TERM_ARGUMENTS = {"ignore_unknown_options": True}


def handle_errors(command):
    """Report library errors on stderr and exit with their status"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except RecursionError:
            error = TermTooDeep("term nesting exceeds the recursion limit")
        except SqmvError as e:
            error = e
        click.echo(f"error: {error}", err=True)
        sys.exit(error.status)
    return wrapper


def model_options(default_model: str):
    """Options shared by the checking verbs"""
    def decorate(command):
        options = [
            click.option("--model", "model_name", default=default_model, show_default=True,
                         help="Catalog model name"),
            click.option("--sig", type=click.Choice(["mv", "w"]), default=None,
                         help="Signature of the input terms (default: the model's)"),
            click.option("--strategy", default="auto", show_default=True,
                         help="exhaustive | grid[:d] | random[:n] | auto"),
            click.option("--seed", type=int, default=None, help="Seed for random sampling"),
            click.option("--max-den", type=int, default=None, help="Largest denominator sampled"),
            click.option("--json", "as_json", is_flag=True, help="Emit a JSON document"),
        ]
        for option in reversed(options):
            command = option(command)
        return command
    return decorate


def _signature(sig: Optional[str], model) -> Signature:
    return Signature.parse(sig) if sig else model.signature


def _strategy(text: str, seed: Optional[int], max_den: Optional[int]) -> Optional[Strategy]:
    settings = get_settings()
    return Strategy.parse(text, settings.seed if seed is None else seed,
                          settings.max_den if max_den is None else max_den)


def emit_report(report: CheckReport, as_json: bool) -> None:
    if as_json:
        click.echo(report.to_json())
    else:
        click.echo(f"verdict: {report.verdict.value}")
        click.echo(f"model: {report.model}")
        click.echo(f"strategy: {report.strategy}")
        click.echo(f"samples: {report.samples_tried}")
        if report.seed is not None:
            click.echo(f"seed: {report.seed}")
        if report.premise_hits is not None:
            click.echo(f"premise hits: {report.premise_hits}")
        if report.witness is not None:
            click.echo("witness: " + ", ".join(f"{name}={value}" for name, value in report.witness.items()))
        if report.lhs_value is not None:
            click.echo(f"lhs: {report.lhs_value}")
        if report.rhs_value is not None:
            click.echo(f"rhs: {report.rhs_value}")
    sys.exit(EXIT_FAIL if report.is_countermodel else EXIT_OK)


def emit_verdict(verdict: ProofVerdict, as_json: bool) -> None:
    if as_json:
        click.echo(verdict.model_dump_json())
    else:
        for line in verdict.lines:
            click.echo(f"{line.number:>4} {line.status:<10} {line.detail}")
        if verdict.accepted:
            click.echo(f"ACCEPT ({verdict.system})")
        else:
            click.echo(f"REJECT at line {verdict.failing_line}: {verdict.reason}: {verdict.message}")
    sys.exit(EXIT_OK if verdict.accepted else EXIT_FAIL)


@click.group()
@click.option("--log-level", default=None, help="Logging level for stderr diagnostics")
def cli(log_level: Optional[str]):
    """Workbench for strong quasi-MV* and quasi-Wajsberg* algebras and the sqL* calculus."""
    configure_logging(log_level.upper() if log_level else None)


@cli.command("parse", context_settings=TERM_ARGUMENTS)
@click.argument("text")
@click.option("--sig", type=click.Choice(["mv", "w"]), default="mv", show_default=True)
@click.option("--json", "as_json", is_flag=True)
@handle_errors
def parse_command(text: str, sig: str, as_json: bool):
    """Parse a term and show its tree."""
    term = parse(text, sig)
    if as_json:
        click.echo(json.dumps({"term": describe(term), "printed": print_term(term)}))
    else:
        click.echo(describe(term))


@cli.command("print", context_settings=TERM_ARGUMENTS)
@click.argument("text")
@click.option("--sig", type=click.Choice(["mv", "w"]), default="mv", show_default=True)
@handle_errors
def print_command(text: str, sig: str):
    """Print a term in canonical form."""
    click.echo(print_term(parse(text, sig)))


def _assignment(model, pairs: Sequence[str]) -> Dict[str, object]:
    valuation = {}
    for pair in pairs:
        name, separator, value = pair.partition("=")
        if not separator or not name.strip():
            raise click.BadParameter(f"'{pair}': expected name=value", param_hint="--assign")
        valuation[name.strip()] = model.parse_value(value.strip())
    return valuation


@cli.command("eval", context_settings=TERM_ARGUMENTS)
@click.argument("text")
@model_options("square")
@click.option("--assign", "assignments", multiple=True, help="Variable value, name=value")
@handle_errors
def eval_command(text, model_name, sig, strategy, seed, max_den, as_json, assignments):
    """Evaluate a term under a valuation."""
    model = resolve_model(model_name)
    term = parse(text, _signature(sig, model))
    value = format_element(evaluate(term, model, _assignment(model, assignments)))
    if as_json:
        click.echo(json.dumps({"model": model.name, "term": print_term(term), "value": value}))
    else:
        click.echo(value)


@cli.command("check-eq", context_settings=TERM_ARGUMENTS)
@click.argument("lhs")
@click.argument("rhs")
@model_options("square")
@handle_errors
def check_eq_command(lhs, rhs, model_name, sig, strategy, seed, max_den, as_json):
    """Check the equation LHS = RHS in a model."""
    model = resolve_model(model_name)
    signature = _signature(sig, model)
    report = check_equation(parse(lhs, signature), parse(rhs, signature), model,
                            _strategy(strategy, seed, max_den))
    emit_report(report, as_json)


@cli.command("check-entail", context_settings=TERM_ARGUMENTS)
@click.argument("conclusion")
@click.option("--premise", "premises", multiple=True, help="Premise formula (repeatable)")
@model_options("square@w")
@handle_errors
def check_entail_command(conclusion, premises, model_name, sig, strategy, seed, max_den, as_json):
    """Check that the premises entail CONCLUSION on designated values."""
    model = resolve_model(model_name)
    report = check_entailment([parse(p, Signature.W) for p in premises], parse(conclusion, Signature.W),
                              model, _strategy(strategy, seed, max_den))
    emit_report(report, as_json)


@cli.command("find-countermodel", context_settings=TERM_ARGUMENTS)
@click.argument("lhs")
@click.argument("rhs")
@click.option("--family", default="chain:1,chain:2,flat-standard,square",
              show_default=True, help="Comma separated catalog names, tried in order")
@model_options("square")
@handle_errors
def find_countermodel_command(lhs, rhs, family, model_name, sig, strategy, seed, max_den, as_json):
    """Search a family of models for a countermodel to LHS = RHS."""
    signature = Signature.parse(sig) if sig else Signature.MV
    report = search_countermodel(parse(lhs, signature), parse(rhs, signature),
                                 split_top_level(family), _strategy(strategy, seed, max_den))
    emit_report(report, as_json)


@cli.command("translate", context_settings=TERM_ARGUMENTS)
@click.argument("text")
@click.option("--sig", type=click.Choice(["mv", "w"]), default=None,
              help="Signature of TEXT (default: inferred)")
@click.option("--to", "target", type=click.Choice(["mv", "w"]), default=None,
              help="Target signature (default: the other one)")
@handle_errors
def translate_command(text, sig, target):
    """Translate a term between the MV-STAR and W-STAR signatures."""
    translated, _ = infer_and_translate(text, sig, target)
    click.echo(print_term(translated))


@cli.command("classify")
@click.option("--model", "model_name", default="chain:1", show_default=True)
@click.option("--tables", is_flag=True, help="Print the operation tables of a finite model")
@click.option("--congruences", is_flag=True, help="Show mu, tau and the embedding into Q/mu x Q/tau")
@click.option("--strategy", default="auto", show_default=True)
@click.option("--seed", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@handle_errors
def classify_command(model_name, tables, congruences, strategy, seed, as_json):
    """Classify a model against the axiom catalogs."""
    model = resolve_model(model_name)
    if model.is_finite:
        flags = classify(model)
    else:
        flags = sampled_flags(model, _strategy(strategy, seed, None))
    response = ClassificationResponse(model=model.name, size=model.size, flags=flags)
    if congruences:
        finite = mv_tables(model)
        response.congruences = [mu(finite).schema(finite), tau(finite).schema(finite)]
        response.embedding = embed_into_product(finite)
    if as_json:
        click.echo(response.model_dump_json())
    else:
        click.echo(f"model: {model.name}")
        if model.size is not None:
            click.echo(f"size: {model.size}")
        click.echo(f"exhaustive: {flags.exhaustive}")
        for label in ("is_quasi", "is_strong", "is_flat", "is_classic"):
            click.echo(f"{label}: {getattr(flags, label)}")
        for axiom, witness in flags.failures.items():
            click.echo(f"fails {axiom}: " + ", ".join(f"{k}={v}" for k, v in witness.items()))
        if model.is_finite and flags.is_quasi:
            regular = regular_elements(model)
            click.echo(f"regular: {{{', '.join(regular.elements)}}} classic={regular.is_classic}")
        for congruence in response.congruences:
            click.echo(f"{congruence.name}: " + " ".join("{" + "|".join(block) + "}" for block in congruence.blocks))
        if response.embedding is not None:
            embedding = response.embedding
            click.echo(f"embedding: homomorphism={embedding.is_homomorphism} "
                       f"injective={embedding.is_injective} surjective={embedding.is_surjective}")
    if tables:
        click.echo(export_tables(model), nl=False)


@cli.command("audit-axioms")
@click.option("--model", "model_name", default="square", show_default=True)
@click.option("--strategy", default="auto", show_default=True)
@click.option("--samples", type=int, default=None, help="Random samples per axiom")
@click.option("--seed", type=int, default=None)
@click.option("--max-den", type=int, default=None)
@click.option("--group", "groups", multiple=True, default=("quasi", "strong"), show_default=True,
              type=click.Choice(["classic", "quasi", "strong", "flat"]))
@click.option("--json", "as_json", is_flag=True)
@handle_errors
def audit_axioms_command(model_name, strategy, samples, seed, max_den, groups, as_json):
    """Check the class axioms of the model's signature."""
    model = resolve_model(model_name)
    if samples is not None:
        strategy = f"random:{samples}"
    audit = audit_axioms(model, _strategy(strategy, seed, max_den), groups)
    if as_json:
        click.echo(audit.model_dump_json(by_alias=True))
    else:
        for name, report in audit.reports.items():
            click.echo(f"{name:<10} {report.verdict.value} ({report.samples_tried} valuations)")
        click.echo(f"failed: {', '.join(audit.failed) or 'none'}")
    sys.exit(EXIT_FAIL if audit.failed else EXIT_OK)


@cli.command("check-proof")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
@handle_errors
def check_proof_command(path, as_json):
    """Check a proof script against the lemma registry."""
    script = load_script(path)
    emit_verdict(check_proof(script, registry_for(script)), as_json)


@cli.command("lift-proof")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--prefix", default="p", show_default=True, help="Variable of the (p -> p) guard")
@handle_errors
def lift_proof_command(path, prefix):
    """Lift an L* proof of q to an sqL* proof of (p -> p) -> q."""
    click.echo(format_script(lift_lstar_proof(load_script(path), prefix)), nl=False)


@cli.command("deregularize")
@click.argument("path", type=click.Path(dir_okay=False))
@handle_errors
def deregularize_command(path):
    """Turn an sqL* proof of (p -> p) -> q into a proof of q, q regular."""
    script = load_script(path)
    click.echo(format_script(deregularize_proof(script, registry_for(script))), nl=False)


@cli.command("models")
def models_command():
    """List the catalog model names."""
    for name in list_models():
        click.echo(name)


def main(argv: Optional[Sequence[str]] = None) -> None:
    cli.main(args=argv, prog_name="sqmv")


if __name__ == "__main__":
    main()
