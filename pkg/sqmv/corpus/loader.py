"""
Fixture corpus loading.
Reads proof scripts, the lift corpus and the equation and entailment
corpora, and bootstraps the lemma registry from the certified scripts.
"""
import os
import logging
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

from sqmv.config import get_settings
from sqmv.proofkit.lemmas import EMPTY_REGISTRY, Registry
from sqmv.proofkit.registry import register_lemma
from sqmv.proofkit.script import ProofScript, parse_script
from sqmv.syntax.parser import parse
from sqmv.syntax.terms import Signature, Term
from sqmv.utils.errors import ScriptFormatError, SqmvError

# Set up logging
logger = logging.getLogger(__name__)

LEMMA_PATTERN = "prop4_3_"


class CorpusEquation(NamedTuple):
    lhs: Term
    rhs: Term
    valid: bool
    text: str


class CorpusEntailment(NamedTuple):
    premises: Tuple[Term, ...]
    conclusion: Term
    holds: bool
    text: str


def fixtures_dir(directory: Optional[str] = None) -> str:
    return directory or get_settings().fixtures_dir


def load_script(file_path: str) -> ProofScript:
    """
    Read a proof script file.

    Args:
        file_path: Path to a .sqlp or .lp file

    Returns:
        ProofScript: The parsed script, named after the file

    Raises:
        ScriptFormatError: If the file cannot be read or parsed
    """
    try:
        with open(file_path, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ScriptFormatError(f"cannot read {file_path}: {e.strerror}")
    return parse_script(text, name=os.path.basename(file_path))


def _listing(directory: str, suffix: str, prefix: str = "") -> List[str]:
    if not os.path.isdir(directory):
        logger.error(f"Fixture directory not found: {directory}")
        raise ScriptFormatError(f"fixture directory not found: {directory}")
    # Sort files to ensure consistent order
    return sorted(
        os.path.join(directory, name)
        for name in os.listdir(directory)
        if name.endswith(suffix) and name.startswith(prefix)
    )


def lemma_scripts(directory: Optional[str] = None) -> List[ProofScript]:
    """Certified lemma scripts in registration order"""
    scripts = [load_script(path) for path in _listing(fixtures_dir(directory), ".sqlp", LEMMA_PATTERN)]
    return [script for script in scripts if script.lemma]


def lift_corpus(directory: Optional[str] = None) -> List[ProofScript]:
    return [load_script(path) for path in _listing(os.path.join(fixtures_dir(directory), "lstar"), ".lp")]


def bootstrap_registry(directory: Optional[str] = None, upto: Optional[str] = None) -> Registry:
    """
    Register the lemma scripts in order.

    Args:
        directory: Fixture directory, defaults to the configured one
        upto: Stop before the lemma with this id

    Returns:
        Registry: Registry of every certified lemma before upto
    """
    registry = EMPTY_REGISTRY
    for script in lemma_scripts(directory):
        if script.lemma == upto:
            break
        logger.info(f"Registering lemma {script.lemma} from {script.name}")
        registry = register_lemma(registry, script)
    logger.info(f"Registry holds {len(registry)} lemmas")
    return registry


@lru_cache(maxsize=8)
def _cached_registry(directory: str, upto: Optional[str]) -> Registry:
    return bootstrap_registry(directory, upto)


def registry_for(script: Optional[ProofScript] = None, directory: Optional[str] = None) -> Registry:
    """The registry a script may cite: lemmas registered before its own id"""
    upto = script.lemma if script is not None else None
    return _cached_registry(fixtures_dir(directory), upto)


def _corpus_rows(file_path: str):
    with open(file_path, "r", encoding="utf-8") as f:
        for row, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if line:
                yield row, line


def load_equations(directory: Optional[str] = None, file_name: str = "equations.txt") -> List[CorpusEquation]:
    """Read ``lhs = rhs ; valid|invalid`` rows in the MV-STAR signature"""
    file_path = os.path.join(fixtures_dir(directory), file_name)
    equations = []
    for row, line in _corpus_rows(file_path):
        body, _, expectation = line.rpartition(";")
        lhs, separator, rhs = body.partition("=")
        if not separator or expectation.strip() not in ("valid", "invalid"):
            raise ScriptFormatError(f"{file_name}:{row}: expected 'lhs = rhs ; valid|invalid'")
        try:
            equations.append(CorpusEquation(parse(lhs, Signature.MV), parse(rhs, Signature.MV),
                                            expectation.strip() == "valid", body.strip()))
        except SqmvError as e:
            raise ScriptFormatError(f"{file_name}:{row}: {e.detail}")
    return equations


def load_entailments(directory: Optional[str] = None,
                     file_name: str = "entailments.txt") -> List[CorpusEntailment]:
    """Read ``p1, p2 |= q ; holds|fails`` rows in the W-STAR signature"""
    file_path = os.path.join(fixtures_dir(directory), file_name)
    entailments = []
    for row, line in _corpus_rows(file_path):
        body, _, expectation = line.rpartition(";")
        premises, separator, conclusion = body.partition("|=")
        if not separator or expectation.strip() not in ("holds", "fails"):
            raise ScriptFormatError(f"{file_name}:{row}: expected 'premises |= conclusion ; holds|fails'")
        try:
            entailments.append(CorpusEntailment(
                tuple(parse(text, Signature.W) for text in premises.split(",") if text.strip()),
                parse(conclusion, Signature.W),
                expectation.strip() == "holds",
                body.strip(),
            ))
        except SqmvError as e:
            raise ScriptFormatError(f"{file_name}:{row}: {e.detail}")
    return entailments
