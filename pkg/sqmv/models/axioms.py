"""
Equational axiom catalogs for classification and audits.

Groups:
    classic  MV*-algebra / Wajsberg* algebra axioms, with ^+, ^- and the
             join read as the defined terms
    quasi    quasi-MV* / quasi-Wajsberg* axioms with primitive ^+, ^-
    strong   the strongness equations
    flat     0 = 1
"""
from typing import List, NamedTuple, Tuple

from sqmv.syntax.abbreviations import Mode, expand_abbreviations
from sqmv.syntax.parser import parse
from sqmv.syntax.terms import Signature, Term


class Axiom(NamedTuple):
    name: str
    group: str
    lhs: str
    rhs: str


MV_AXIOMS = [
    Axiom("MV*1", "classic", "x (+) y", "y (+) x"),
    Axiom("MV*2", "classic", "(1 (+) x) (+) (y (+) (1 (+) z))", "((1 (+) x) (+) y) (+) (1 (+) z)"),
    Axiom("MV*3", "classic", "x (+) -x", "0"),
    Axiom("MV*4", "classic", "(x (+) 1) (+) 1", "1"),
    Axiom("MV*5", "classic", "x (+) 0", "x"),
    Axiom("MV*6", "classic", "-(x (+) y)", "-x (+) -y"),
    Axiom("MV*7", "classic", "--x", "x"),
    Axiom("MV*8", "classic", "x (+) y", "(x^+ (+) y^+) (+) (x^- (+) y^-)"),
    Axiom("MV*9", "classic", "(-x (+) (x (+) y))^+", "-x^+ (+) (x^+ (+) y^+)"),
    Axiom("MV*10", "classic", "x \\/ y", "y \\/ x"),
    Axiom("MV*11", "classic", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
    Axiom("MV*12", "classic", "x (+) (y \\/ z)", "(x (+) y) \\/ (x (+) z)"),
    Axiom("QMV*1", "quasi", "x (+) y", "y (+) x"),
    Axiom("QMV*2", "quasi", "(1 (+) x) (+) (y (+) (1 (+) z))", "((1 (+) x) (+) y) (+) (1 (+) z)"),
    Axiom("QMV*3", "quasi", "(x (+) 1) (+) 1", "1"),
    Axiom("QMV*4", "quasi", "(x (+) y) (+) 0", "x (+) y"),
    Axiom("QMV*5a", "quasi", "x^+ (+) 0", "(x (+) 0)^+"),
    Axiom("QMV*5b", "quasi", "(x (+) 0)^+", "1 (+) (-1 (+) x)"),
    Axiom("QMV*5c", "quasi", "x^- (+) 0", "(x (+) 0)^-"),
    Axiom("QMV*5d", "quasi", "(x (+) 0)^-", "-1 (+) (1 (+) x)"),
    Axiom("QMV*6", "quasi", "x (+) y", "(x^+ (+) y^+) (+) (x^- (+) y^-)"),
    Axiom("QMV*7", "quasi", "0", "-0"),
    Axiom("QMV*8", "quasi", "x (+) -x", "0"),
    Axiom("QMV*9", "quasi", "-(x (+) y)", "-x (+) -y"),
    Axiom("QMV*10", "quasi", "--x", "x"),
    Axiom("QMV*11", "quasi", "(-x (+) (x (+) y))^+", "-x^+ (+) (x^+ (+) y^+)"),
    Axiom("QMV*12", "quasi", "x \\/ y", "y \\/ x"),
    Axiom("QMV*13", "quasi", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
    Axiom("QMV*14", "quasi", "x (+) (y \\/ z)", "(x (+) y) \\/ (x (+) z)"),
    Axiom("strong+", "strong", "x^+", "x^+ (+) 0"),
    Axiom("strong-", "strong", "x^-", "x^- (+) 0"),
    Axiom("flat", "flat", "0", "1"),
]

W_AXIOMS = [
    Axiom("W*1", "classic", "x -> y", "~y -> ~x"),
    Axiom("W*2", "classic", "(x -> 1) -> ((y -> 1) -> z)", "(y -> 1) -> ((x -> 1) -> z)"),
    Axiom("W*3", "classic", "(1 -> x) -> 1", "1"),
    Axiom("W*4", "classic", "(y -> y) -> x", "x"),
    Axiom("W*5", "classic", "x -> y", "(y^+ -> x^-) -> (x^+ -> y^-)"),
    Axiom("W*6", "classic", "~(x -> y)", "y -> x"),
    Axiom("W*7", "classic", "~~x", "x"),
    Axiom("W*8", "classic", "(x -> (~x -> y))^+", "x^+ -> (~x^+ -> y^+)"),
    Axiom("W*9", "classic", "x \\/ y", "y \\/ x"),
    Axiom("W*10", "classic", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
    Axiom("W*11", "classic", "x -> (y \\/ z)", "(x -> y) \\/ (x -> z)"),
    Axiom("QW*1", "quasi", "x -> y", "~y -> ~x"),
    Axiom("QW*2", "quasi", "(x -> 1) -> ((y -> 1) -> z)", "(y -> 1) -> ((x -> 1) -> z)"),
    Axiom("QW*3", "quasi", "(1 -> x) -> 1", "1"),
    Axiom("QW*4", "quasi", "(z -> z) -> (x -> y)", "x -> y"),
    Axiom("QW*5a", "quasi", "(1 -> 1) -> x^+", "((1 -> 1) -> x)^+"),
    Axiom("QW*5b", "quasi", "((1 -> 1) -> x)^+", "(x -> 1) -> 1"),
    Axiom("QW*5c", "quasi", "(1 -> 1) -> x^-", "((1 -> 1) -> x)^-"),
    Axiom("QW*5d", "quasi", "((1 -> 1) -> x)^-", "(x -> ~1) -> ~1"),
    Axiom("QW*6", "quasi", "x -> y", "(y^+ -> x^-) -> (x^+ -> y^-)"),
    Axiom("QW*7", "quasi", "~(x -> y)", "y -> x"),
    Axiom("QW*8", "quasi", "~~x", "x"),
    Axiom("QW*9", "quasi", "(x -> (~x -> y))^+", "x^+ -> (~x^+ -> y^+)"),
    Axiom("QW*10", "quasi", "x \\/ y", "y \\/ x"),
    Axiom("QW*11", "quasi", "x \\/ (y \\/ z)", "(x \\/ y) \\/ z"),
    Axiom("QW*12", "quasi", "x -> (y \\/ z)", "(x -> y) \\/ (x -> z)"),
    Axiom("strong+", "strong", "x^+", "(1 -> 1) -> x^+"),
    Axiom("strong-", "strong", "x^-", "(1 -> 1) -> x^-"),
    Axiom("flat", "flat", "1 -> 1", "1"),
]


def axioms_for(sig: Signature) -> List[Axiom]:
    return MV_AXIOMS if sig is Signature.MV else W_AXIOMS


def axiom_terms(axiom: Axiom, sig: Signature) -> Tuple[Term, Term]:
    """Parse an axiom; classic axioms read ^+ and ^- as their definitions"""
    lhs, rhs = parse(axiom.lhs, sig), parse(axiom.rhs, sig)
    if axiom.group == "classic":
        lhs = expand_abbreviations(lhs, sig, Mode.STRONG)
        rhs = expand_abbreviations(rhs, sig, Mode.STRONG)
    return lhs, rhs
